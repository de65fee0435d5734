#include "omega4/syzygy.hpp"

#include <algorithm>

#include "omega4/error.hpp"

namespace omega4 {

int ProjSum::summand_dim(int s, int v) const {
  const AlgebraTable& a = *rep.alg;
  return a.dim_e(vertices[s], v);
}

ProjSum projective_sum(const AlgebraTable& a, const std::vector<int>& vertices) {
  ProjSum ps;
  ps.vertices = vertices;
  ps.rep = zero_rep(a);
  int V = a.quiver.num_vertices;
  ps.offsets.assign(vertices.size(), std::vector<int>(V + 1, 0));
  for (size_t s = 0; s < vertices.size(); ++s) {
    for (int v = 1; v <= V; ++v) ps.offsets[s][v] = ps.rep.dims[v];
    ps.rep = direct_sum(ps.rep, projective(a, vertices[s]));
  }
  return ps;
}

Cover projective_cover(const Rep& m) {
  if (m.total_dim() == 0)
    throw Error(ErrKind::Validation, "projective cover of the zero module");
  const AlgebraTable& a = *m.alg;
  int V = a.quiver.num_vertices;
  QuotRep top = top_quotient(m);

  std::vector<int> vertices;
  std::vector<Vec> generators;  // one element of M_i per summand
  for (int i = 1; i <= V; ++i) {
    for (int k = 0; k < top.rep.dims[i]; ++k) {
      Vec e(top.rep.dims[i], 0);
      e[k] = 1 % a.field.p;
      auto x = solve(top.proj.f[i], e);
      if (!x)
        throw Error(ErrKind::Validation, "internal: top projection not onto");
      vertices.push_back(i);
      generators.push_back(*x);
    }
  }

  ProjSum ps = projective_sum(a, vertices);
  ModuleMap cover = zero_map(ps.rep, m);
  for (size_t s = 0; s < vertices.size(); ++s) {
    int i = vertices[s];
    for (int v = 1; v <= V; ++v) {
      std::vector<int> paths = projective_vertex_basis(a, i, v);
      for (size_t c = 0; c < paths.size(); ++c) {
        Vec img = mat_apply(path_action(m, a.basis_paths[paths[c]]),
                            generators[s]);
        for (int r = 0; r < m.dims[v]; ++r)
          cover.f[v].at(r, ps.offsets[s][v] + static_cast<int>(c)) = img[r];
      }
    }
  }

  for (int v = 1; v <= V; ++v)
    if (rank_of(cover.f[v]) != m.dims[v])
      throw Error(ErrKind::MathCheckFailed, "cover map is not surjective");
  // Minimality: the kernel must sit inside rad(P).
  std::vector<Mat> ker = map_kernel(ps.rep, m, cover);
  std::vector<Mat> rad = radical_subspaces(ps.rep);
  for (int v = 1; v <= V; ++v)
    if (!subspace_contains(rad[v], ker[v]))
      throw Error(ErrKind::MathCheckFailed, "cover is not minimal");
  return Cover{ps, cover};
}

Rep omega(const Rep& m, Prng& rng, StripResult* strip_out, bool* certified) {
  StripResult strip = strip_projective_summands(m, rng);
  if (strip_out) *strip_out = strip;
  if (certified) *certified = *certified && strip.certified;
  if (strip.rep.total_dim() == 0) return zero_rep(*m.alg);
  Cover c = projective_cover(strip.rep);
  std::vector<Mat> ker = map_kernel(c.proj.rep, strip.rep, c.map);
  return sub_rep(c.proj.rep, ker).rep;
}

Rep cosyzygy(const Rep& m, const SymmetrizingForm& form, Prng& rng) {
  const AlgebraTable& a = *m.alg;
  if (!verify_form(a, form.lambda))
    throw Error(ErrKind::NotSymmetric,
                "cosyzygy requires a verified symmetrizing form");
  const AlgebraTable& op = a.opposite();
  Rep dual = dualize(m, op);
  Rep w = omega(dual, rng);
  if (w.total_dim() == 0) return zero_rep(a);
  return dualize(w, a);
}

std::string PeriodReport::to_string() const {
  switch (kind) {
    case Kind::Periodic:
      return std::to_string(period);
    case Kind::Projective:
      return "projective";
    case Kind::AperiodicUpToBound:
      return "aperiodic-up-to-bound(" + std::to_string(bound) + ")";
  }
  return "?";
}

PeriodReport omega_period(const Rep& m, int bound, Prng& rng,
                          const std::string& module_id) {
  if (bound < 1) throw Error(ErrKind::Validation, "period bound must be >= 1");
  PeriodReport rep;
  rep.module_id = module_id;
  rep.bound = bound;
  StripResult strip = strip_projective_summands(m, rng);
  rep.strip_log = strip.stripped;
  rep.certified = strip.certified;
  if (strip.rep.total_dim() == 0) {
    rep.kind = PeriodReport::Kind::Projective;
    return rep;
  }
  Rep base = strip.rep;
  Rep cur = base;
  for (int k = 1; k <= bound; ++k) {
    bool cert = true;
    cur = omega(cur, rng, nullptr, &cert);
    rep.certified = rep.certified && cert;
    IsoResult iso = is_isomorphic(cur, base, rng);
    rep.certified = rep.certified && iso.certified;
    if (iso.isomorphic) {
      rep.kind = PeriodReport::Kind::Periodic;
      rep.period = k;
      rep.witness = iso.witness;
      return rep;
    }
  }
  rep.kind = PeriodReport::Kind::AperiodicUpToBound;
  return rep;
}

namespace {

std::vector<int> cover_vertices_sorted(const Cover& c) {
  std::vector<int> v = c.proj.vertices;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

FourTerm four_term_sequence(const AlgebraTable& a, int i, Prng& rng,
                            int period_bound) {
  Rep s = simple(a, i);
  PeriodReport pr = omega_period(s, period_bound, rng,
                                 "S" + std::to_string(i));
  if (!(pr.kind == PeriodReport::Kind::Periodic && 4 % pr.period == 0))
    throw Error(ErrKind::PeriodHypothesis,
                "period of S" + std::to_string(i) + " is " + pr.to_string() +
                    ", which does not divide 4");

  FourTerm ft;
  ft.vertex = i;
  ft.certified = pr.certified;
  for (int ar : a.quiver.out_arrows(i))
    ft.plus_vertices.push_back(a.quiver.arrows[ar].dst);
  for (int ar : a.quiver.in_arrows(i))
    ft.minus_vertices.push_back(a.quiver.arrows[ar].src);

  Rep p_i = projective(a, i);
  int p_plus_dim = 0, p_minus_dim = 0;
  for (int v : ft.plus_vertices) p_plus_dim += a.dim_e(v);
  for (int v : ft.minus_vertices) p_minus_dim += a.dim_e(v);
  ft.term_dims = {1, p_i.total_dim(), p_minus_dim, p_plus_dim,
                  p_i.total_dim(), 1};

  // Walk the minimal resolution of S_i three steps and compare each cover
  // with the arrow-built projectives.
  Cover c0 = projective_cover(s);  // = P_i
  Rep k1 = sub_rep(c0.proj.rep, map_kernel(c0.proj.rep, s, c0.map)).rep;
  Cover c1 = projective_cover(k1);
  Rep k2 = sub_rep(c1.proj.rep, map_kernel(c1.proj.rep, k1, c1.map)).rep;
  Cover c2 = projective_cover(k2);
  Rep k3 = sub_rep(c2.proj.rep, map_kernel(c2.proj.rep, k2, c2.map)).rep;
  Cover c3 = projective_cover(k3);
  Rep k4 = sub_rep(c3.proj.rep, map_kernel(c3.proj.rep, k3, c3.map)).rep;

  ft.image_dims = {k1.total_dim(), k2.total_dim(), k3.total_dim()};

  std::vector<int> plus_sorted = ft.plus_vertices;
  std::sort(plus_sorted.begin(), plus_sorted.end());
  std::vector<int> minus_sorted = ft.minus_vertices;
  std::sort(minus_sorted.begin(), minus_sorted.end());

  bool covers_match =
      cover_vertices_sorted(c0) == std::vector<int>{i} &&
      cover_vertices_sorted(c1) == plus_sorted &&
      cover_vertices_sorted(c2) == minus_sorted &&
      cover_vertices_sorted(c3) == std::vector<int>{i};

  IsoResult closes = is_isomorphic(k4, s, rng);
  ft.certified = ft.certified && closes.certified;

  // Exactness in dimensions: each kernel is the image of the previous map.
  bool dims_exact =
      k1.total_dim() == p_i.total_dim() - 1 &&
      k2.total_dim() == p_plus_dim - k1.total_dim() &&
      k3.total_dim() == p_minus_dim - k2.total_dim() &&
      k4.total_dim() == p_i.total_dim() - k3.total_dim() &&
      k4.total_dim() == 1;

  ft.exact = covers_match && dims_exact && closes.isomorphic;

  // Im(d_k) = Omega^k(S_i): the chain was built from exactly those kernels;
  // re-derive them through the omega operator as an independent route.
  Rep w1 = omega(s, rng);
  Rep w2 = omega(w1, rng);
  Rep w3 = omega(w2, rng);
  IsoResult m1 = is_isomorphic(w1, k1, rng);
  IsoResult m2 = is_isomorphic(w2, k2, rng);
  IsoResult m3 = is_isomorphic(w3, k3, rng);
  ft.images_match = m1.isomorphic && m2.isomorphic && m3.isomorphic;
  ft.certified =
      ft.certified && m1.certified && m2.certified && m3.certified;
  return ft;
}

DimensionIdentity dimension_identity(const AlgebraTable& a, int i, Prng& rng,
                                     int period_bound) {
  Rep s = simple(a, i);
  PeriodReport pr =
      omega_period(s, period_bound, rng, "S" + std::to_string(i));
  if (!(pr.kind == PeriodReport::Kind::Periodic && 4 % pr.period == 0))
    throw Error(ErrKind::PeriodHypothesis,
                "period of S" + std::to_string(i) + " is " + pr.to_string() +
                    ", which does not divide 4");
  DimensionIdentity id;
  id.vertex = i;
  Rep w2 = omega(omega(s, rng), rng);
  id.omega2 = w2.total_dim();
  id.proj = a.dim_e(i);
  id.simple_dim = 1;
  id.proj_plus = 0;
  for (int ar : a.quiver.out_arrows(i))
    id.proj_plus += a.dim_e(a.quiver.arrows[ar].dst);
  id.proj_minus = 0;
  for (int ar : a.quiver.in_arrows(i))
    id.proj_minus += a.dim_e(a.quiver.arrows[ar].src);
  id.holds = (id.omega2 + id.proj == id.proj_plus + id.simple_dim) &&
             (id.omega2 + id.proj == id.proj_minus + id.simple_dim);
  return id;
}

namespace {

// Components of a map between projective sums, as algebra elements:
// entry (k, l) lies in e_{i_k} Lambda e_{j_l} and the map sends the l-th
// generator to the column of those elements.
std::vector<std::vector<Vec>> presentation_matrix(const ProjSum& p1,
                                                  const ProjSum& p0,
                                                  const ModuleMap& d) {
  const AlgebraTable& a = *p0.rep.alg;
  std::vector<std::vector<Vec>> x(p0.vertices.size(),
                                  std::vector<Vec>(p1.vertices.size()));
  for (size_t l = 0; l < p1.vertices.size(); ++l) {
    int jl = p1.vertices[l];
    // Generator of the l-th summand: the class of the trivial path, which
    // is the first basis element of e_{j_l} Lambda e_{j_l}.
    int gen = p1.offsets[l][jl];
    Vec img = d.f[jl].col(gen);
    for (size_t k = 0; k < p0.vertices.size(); ++k) {
      int ik = p0.vertices[k];
      std::vector<int> paths = projective_vertex_basis(a, ik, jl);
      Vec elt = a.zero_vec();
      for (size_t t = 0; t < paths.size(); ++t)
        elt[paths[t]] = img[p0.offsets[k][jl] + static_cast<int>(t)];
      x[k][l] = elt;
    }
  }
  return x;
}

// Map P^op_from -> P^op_to given by left multiplication (in the opposite
// algebra) with elt in e_to Lambda^op e_from; written into `out` at the
// given block offsets.
void add_left_mult_block(const AlgebraTable& op, const Vec& elt, int from,
                         int to, const std::vector<int>& row_off,
                         const std::vector<int>& col_off, ModuleMap& out) {
  int V = op.quiver.num_vertices;
  for (int v = 1; v <= V; ++v) {
    std::vector<int> dom = op.basis_of(from, v);
    std::vector<int> codom = op.basis_of(to, v);
    for (size_t c = 0; c < dom.size(); ++c) {
      Vec prod = op.mult(elt, op.unit(dom[c]));
      for (size_t r = 0; r < codom.size(); ++r)
        out.f[v].at(row_off[v] + static_cast<int>(r),
                    col_off[v] + static_cast<int>(c)) = prod[codom[r]];
    }
  }
}

}  // namespace

Rep tau(const Rep& m, const SymmetrizingForm& form, Prng& rng) {
  const AlgebraTable& a = *m.alg;
  if (!verify_form(a, form.lambda))
    throw Error(ErrKind::NotSymmetric,
                "tau requires a verified symmetrizing form");
  StripResult strip = strip_projective_summands(m, rng);
  if (!strip.stripped.empty())
    throw Error(ErrKind::Validation,
                "tau is only defined for modules without projective summands");
  if (m.total_dim() == 0) return zero_rep(a);

  // Minimal presentation P1 -> P0 -> M -> 0.
  Cover c0 = projective_cover(m);
  SubRep k1 = sub_rep(c0.proj.rep, map_kernel(c0.proj.rep, m, c0.map));
  if (k1.rep.total_dim() == 0) {
    // M projective would have been stripped; a zero kernel means M = P0.
    throw Error(ErrKind::Validation, "tau of a projective module");
  }
  Cover c1 = projective_cover(k1.rep);
  ModuleMap d = compose_maps(k1.incl, c1.map);  // P1 -> P0

  std::vector<std::vector<Vec>> x =
      presentation_matrix(c1.proj, c0.proj, d);

  // Transpose: apply Hom(-, Lambda); over the opposite algebra the map runs
  // P0' -> P1' with the same algebra-element matrix acting by
  // opposite-algebra left multiplication.
  const AlgebraTable& op = a.opposite();
  ProjSum p0op = projective_sum(op, c0.proj.vertices);
  ProjSum p1op = projective_sum(op, c1.proj.vertices);
  ModuleMap g = zero_map(p0op.rep, p1op.rep);
  for (size_t k = 0; k < c0.proj.vertices.size(); ++k)
    for (size_t l = 0; l < c1.proj.vertices.size(); ++l)
      add_left_mult_block(op, x[k][l], c0.proj.vertices[k],
                          c1.proj.vertices[l], p1op.offsets[l],
                          p0op.offsets[k], g);
  if (!map_commutes(p0op.rep, p1op.rep, g))
    throw Error(ErrKind::MathCheckFailed,
                "internal: transposed presentation is not a module map");

  QuotRep tr = quotient_rep(p1op.rep, map_image(p0op.rep, p1op.rep, g));
  return dualize(tr.rep, a);
}

std::vector<TauCheck> verify_tau_is_omega_squared(
    const AlgebraTable& a, const SymmetrizingForm& form,
    const std::vector<LabeledRep>& modules, Prng& rng) {
  std::vector<TauCheck> out;
  for (const LabeledRep& lm : modules) {
    TauCheck tc;
    tc.label = lm.label;
    Rep t = tau(lm.rep, form, rng);
    Rep w2 = omega(omega(lm.rep, rng), rng);
    IsoResult iso = is_isomorphic(t, w2, rng);
    tc.ok = iso.isomorphic;
    tc.certified = iso.certified;
    out.push_back(tc);
  }
  (void)a;
  return out;
}

}  // namespace omega4
