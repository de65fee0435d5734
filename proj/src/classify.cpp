#include "omega4/classify.hpp"

#include <algorithm>

#include "omega4/error.hpp"

namespace omega4 {

Lemma1Report lemma1_report(const AlgebraTable& a, Prng& rng, int period_bound) {
  if (!a.quiver.is_connected())
    throw Error(ErrKind::NotConnected,
                "the equivalence report needs a connected quiver");
  FormSearchResult form = find_symmetrizing_form(a, rng.seed);
  if (!form.form)
    throw Error(ErrKind::NotSymmetric,
                std::string("algebra is not symmetric (") +
                    (form.certified ? "certified" : "probabilistic") + ")");

  Lemma1Report rep;

  // Premise spot check: every simple must have period dividing 4.
  for (int i = 1; i <= a.quiver.num_vertices; ++i) {
    PeriodReport pr =
        omega_period(simple(a, i), period_bound, rng, "S" + std::to_string(i));
    rep.simple_periods.emplace_back(i, pr.to_string());
    rep.certified = rep.certified && pr.certified;
    bool ok = pr.kind == PeriodReport::Kind::Projective || pr.divides(4);
    if (!ok)
      throw Error(ErrKind::PeriodHypothesis,
                  "premise fails: period of S" + std::to_string(i) + " is " +
                      pr.to_string());
  }

  // (a) some simple with simple second syzygy
  for (int i = 1; i <= a.quiver.num_vertices && !rep.cond_a; ++i) {
    Rep w2 = omega(omega(simple(a, i), rng), rng);
    if (w2.total_dim() == 1) {
      for (size_t v = 1; v < w2.dims.size(); ++v)
        if (w2.dims[v] == 1)
          rep.cond_a = Lemma1Report::CondA{i, static_cast<int>(v)};
    }
  }

  // (b) an arrow alpha: i -> j with out(i) = {alpha} = in(j)
  rep.cond_b_arrow = a.quiver.condition_b_arrow();

  // (c) a vertex with |P_i| = |P_i^+| = |P_i^-|
  for (int i = 1; i <= a.quiver.num_vertices && !rep.cond_c_vertex; ++i) {
    int plus = 0, minus = 0;
    for (int ar : a.quiver.out_arrows(i)) plus += a.dim_e(a.quiver.arrows[ar].dst);
    for (int ar : a.quiver.in_arrows(i)) minus += a.dim_e(a.quiver.arrows[ar].src);
    if (a.dim_e(i) == plus && a.dim_e(i) == minus) rep.cond_c_vertex = i;
  }

  int present = (rep.cond_a ? 1 : 0) + (rep.cond_b_arrow ? 1 : 0) +
                (rep.cond_c_vertex ? 1 : 0);
  rep.equivalence_ok = (present == 0 || present == 3);

  if (present > 0) {
    const Quiver& q = a.quiver;
    if (q.num_vertices == 1 && q.arrows.size() == 1)
      rep.finite_type_conclusion = "single-loop-nakayama";
    else if (q.num_vertices == 2 && q.arrows.size() == 2 &&
             q.arrows[0].src != q.arrows[0].dst &&
             q.arrows[1].src == q.arrows[0].dst &&
             q.arrows[1].dst == q.arrows[0].src)
      rep.finite_type_conclusion = "two-vertex-cycle-nakayama";
    else
      rep.conclusion_consistent = false;
  }
  return rep;
}

FamilySpec family_i(int n, const PrimeField& f) {
  if (n < 1) throw Error(ErrKind::Validation, "family i needs n >= 1");
  FamilySpec fs;
  fs.quiver.num_vertices = 1;
  if (n == 1) return fs;  // K itself: a length-1 relation is not admissible
  fs.quiver.arrows.push_back(Arrow{"T", 1, 1});
  Path tn = Path::of_arrows(fs.quiver, std::vector<int>(n, 0));
  fs.relations.push_back(make_relation(fs.quiver, f, {{1, tn}}));
  return fs;
}

FamilySpec family_ii(int n, const PrimeField& f) {
  if (n < 1) throw Error(ErrKind::Validation, "family ii needs n >= 1");
  FamilySpec fs;
  fs.quiver.num_vertices = 2;
  fs.quiver.arrows.push_back(Arrow{"alpha", 1, 2});
  fs.quiver.arrows.push_back(Arrow{"beta", 2, 1});
  std::vector<int> abna, banb;
  for (int k = 0; k < n; ++k) {
    abna.push_back(0);
    abna.push_back(1);
    banb.push_back(1);
    banb.push_back(0);
  }
  abna.push_back(0);
  banb.push_back(1);
  fs.relations.push_back(
      make_relation(fs.quiver, f, {{1, Path::of_arrows(fs.quiver, abna)}}));
  fs.relations.push_back(
      make_relation(fs.quiver, f, {{1, Path::of_arrows(fs.quiver, banb)}}));
  return fs;
}

FamilySpec family_iii(int t, const PrimeField& f) {
  if (t < 2) throw Error(ErrKind::Validation, "family iii needs t >= 2");
  FamilySpec fs;
  fs.quiver.num_vertices = 2;
  fs.quiver.arrows.push_back(Arrow{"rho", 1, 1});
  fs.quiver.arrows.push_back(Arrow{"alpha", 1, 2});
  fs.quiver.arrows.push_back(Arrow{"beta", 2, 1});
  Path ra = Path::of_arrows(fs.quiver, {0, 1});
  Path br = Path::of_arrows(fs.quiver, {2, 0});
  Path ab = Path::of_arrows(fs.quiver, {1, 2});
  Path rt = Path::of_arrows(fs.quiver, std::vector<int>(t, 0));
  fs.relations.push_back(make_relation(fs.quiver, f, {{1, ra}}));
  fs.relations.push_back(make_relation(fs.quiver, f, {{1, br}}));
  fs.relations.push_back(
      make_relation(fs.quiver, f, {{1, ab}, {f.neg(1), rt}}));
  return fs;
}

namespace {

// sigma_c scales the coordinate of a path by the product of the chosen
// units over its arrows; applying it to the ideal of the input relations
// realizes "rescale the arrows" on the ideal side.
bool ideals_match_with_rescaling(const Quiver& q, const PrimeField& f,
                                 const std::vector<Relation>& input_rels,
                                 const std::vector<Relation>& family_rels,
                                 int cap, std::string* rescale_out) {
  IdealSubspace in = ideal_subspace(q, input_rels, f, cap);
  IdealSubspace fam = ideal_subspace(q, family_rels, f, cap);
  int narrows = static_cast<int>(q.arrows.size());
  std::vector<uint32_t> units;
  for (uint32_t c = 1; c < f.p; ++c) units.push_back(c);
  std::vector<int> pick(narrows, 0);
  while (true) {
    std::vector<uint32_t> factor(in.paths.size(), 1 % f.p);
    for (size_t w = 0; w < in.paths.size(); ++w)
      for (int ar : in.paths[w].arrows)
        factor[w] = f.mul(factor[w], units[pick[ar]]);
    Mat scaled(f, in.span.rows(), in.span.cols());
    for (int r = 0; r < in.span.rows(); ++r)
      for (int c = 0; c < in.span.cols(); ++c)
        scaled.at(r, c) = f.mul(in.span.at(r, c), factor[c]);
    if (subspace_equal(scaled, fam.span)) {
      if (rescale_out) {
        std::string s;
        for (int k = 0; k < narrows; ++k) {
          if (k) s += ",";
          s += q.arrows[k].name + "=" + std::to_string(units[pick[k]]);
        }
        *rescale_out = s;
      }
      return true;
    }
    int pos = 0;
    while (pos < narrows) {
      pick[pos] = (pick[pos] + 1) % static_cast<int>(units.size());
      if (pick[pos] != 0) break;
      ++pos;
    }
    if (pos >= narrows || narrows == 0) break;
  }
  return false;
}

// Family relations rewritten onto the input quiver through a vertex/arrow
// correspondence: loop_vertex plays the role of vertex 1.
std::vector<Relation> family_ii_relations_on(const Quiver& q,
                                             const PrimeField& f, int n,
                                             int alpha, int beta) {
  std::vector<int> abna, banb;
  for (int k = 0; k < n; ++k) {
    abna.push_back(alpha);
    abna.push_back(beta);
    banb.push_back(beta);
    banb.push_back(alpha);
  }
  abna.push_back(alpha);
  banb.push_back(beta);
  return {make_relation(q, f, {{1, Path::of_arrows(q, abna)}}),
          make_relation(q, f, {{1, Path::of_arrows(q, banb)}})};
}

std::vector<Relation> family_iii_relations_on(const Quiver& q,
                                              const PrimeField& f, int t,
                                              int rho, int alpha, int beta) {
  Path ra = Path::of_arrows(q, {rho, alpha});
  Path br = Path::of_arrows(q, {beta, rho});
  Path ab = Path::of_arrows(q, {alpha, beta});
  Path rt = Path::of_arrows(q, std::vector<int>(t, rho));
  return {make_relation(q, f, {{1, ra}}), make_relation(q, f, {{1, br}}),
          make_relation(q, f, {{1, ab}, {f.neg(1), rt}})};
}

}  // namespace

ClassifyReport classify_structural(const AlgebraTable& a) {
  ClassifyReport rep;
  const Quiver& q = a.quiver;
  const PrimeField& f = a.field;

  if (q.num_vertices == 1 && q.arrows.empty()) {
    if (a.dim() == 1) {
      rep.family = "i";
      rep.parameter = 1;
      rep.evidence = "bare vertex, dim 1";
    }
    return rep;
  }

  if (q.num_vertices == 1 && q.arrows.size() == 1) {
    int n = a.dim();
    if (n < 2) return rep;
    Path tn = Path::of_arrows(q, std::vector<int>(n, 0));
    std::vector<Relation> fam = {make_relation(q, f, {{1, tn}})};
    int cap = std::max(a.stabilization_length, n);
    std::string rescale;
    if (ideals_match_with_rescaling(q, f, a.relations, fam, cap, &rescale)) {
      rep.family = "i";
      rep.parameter = n;
      rep.evidence = "ideal = <" + q.arrows[0].name + "^" + std::to_string(n) +
                     "> with rescaling " + rescale;
    }
    return rep;
  }

  if (q.num_vertices == 2 && q.arrows.size() == 2) {
    int a12 = -1, a21 = -1;
    for (int k = 0; k < 2; ++k) {
      if (q.arrows[k].src == 1 && q.arrows[k].dst == 2) a12 = k;
      if (q.arrows[k].src == 2 && q.arrows[k].dst == 1) a21 = k;
    }
    if (a12 < 0 || a21 < 0) return rep;
    int d1 = a.dim_e(1), d2 = a.dim_e(2);
    if (d1 != d2 || d1 < 3 || d1 % 2 == 0) return rep;
    int n = (d1 - 1) / 2;
    std::vector<Relation> fam = family_ii_relations_on(q, f, n, a12, a21);
    int cap = std::max(a.stabilization_length, 2 * n + 1);
    std::string rescale;
    if (ideals_match_with_rescaling(q, f, a.relations, fam, cap, &rescale)) {
      rep.family = "ii";
      rep.parameter = n;
      rep.evidence = "ideal matches <(ab)^n a, (ba)^n b>, n=" +
                     std::to_string(n) + ", rescaling " + rescale;
    }
    return rep;
  }

  if (q.num_vertices == 2 && q.arrows.size() == 3) {
    int rho = -1, nloops = 0;
    for (int k = 0; k < 3; ++k)
      if (q.arrows[k].src == q.arrows[k].dst) {
        rho = k;
        ++nloops;
      }
    if (nloops != 1) return rep;
    int v1 = q.arrows[rho].src;  // loop vertex plays the role of vertex 1
    int v2 = 3 - v1;
    int alpha = -1, beta = -1;
    for (int k = 0; k < 3; ++k) {
      if (k == rho) continue;
      if (q.arrows[k].src == v1 && q.arrows[k].dst == v2) alpha = k;
      if (q.arrows[k].src == v2 && q.arrows[k].dst == v1) beta = k;
    }
    if (alpha < 0 || beta < 0) return rep;
    int t = a.dim_e(v1) - 2;
    if (t < 2 || a.dim_e(v2) != 3) return rep;
    std::vector<Relation> fam =
        family_iii_relations_on(q, f, t, rho, alpha, beta);
    int cap = std::max(a.stabilization_length, t + 1);
    std::string rescale;
    if (ideals_match_with_rescaling(q, f, a.relations, fam, cap, &rescale)) {
      rep.family = "iii";
      rep.parameter = t;
      rep.evidence = "ideal matches <ra, br, ab - r^t>, t=" +
                     std::to_string(t) + " at loop vertex " +
                     std::to_string(v1) + ", rescaling " + rescale;
    }
    return rep;
  }

  return rep;
}

namespace {

Path alternating_cycle(const Quiver& q, int first, int second, int pairs) {
  std::vector<int> seq;
  for (int k = 0; k < pairs; ++k) {
    seq.push_back(first);
    seq.push_back(second);
  }
  return Path::of_arrows(q, seq);
}

void add_check(VerifyFamilyReport& rep, const std::string& name, bool pass,
               const std::string& detail = "") {
  rep.checks.push_back(CheckLine{name, pass, detail});
  rep.all_pass = rep.all_pass && pass;
}

}  // namespace

VerifyFamilyReport verify_family(const AlgebraTable& a,
                                 const ClassifyReport& expected, Prng& rng,
                                 const CensusOptions& census_opt) {
  VerifyFamilyReport rep;
  rep.classified = expected;
  if (expected.family == "none") {
    add_check(rep, "classified", false, "no family matched");
    return rep;
  }
  add_check(rep, "classified", true,
            "family " + expected.family + ", parameter " +
                std::to_string(expected.parameter));

  FormSearchResult form = find_symmetrizing_form(a, rng.seed);
  add_check(rep, "symmetrizing-form", form.form.has_value(),
            form.form ? form.form->method
                      : (form.certified ? "absent (certified)"
                                        : "absent (probabilistic)"));
  rep.certified = rep.certified && form.certified;

  if (a.quiver.arrows.empty())
    add_check(rep, "no-sink-or-source", true, "no arrows, vacuous");
  else
    add_check(rep, "no-sink-or-source", !a.quiver.has_sink_or_source());
  PropertyBResult pb = check_property_b(a);
  add_check(rep, "socle-bigrade-disjoint", pb.holds,
            pb.holds ? ""
                     : "socle meets e" + std::to_string(pb.witness->i) +
                           " Lambda e" + std::to_string(pb.witness->j));
  PropertyCResult pc = check_property_c(a);
  add_check(rep, "socle-rotations-closed", pc.holds,
            pc.holds ? "" : std::to_string(pc.violations.size()) + " violations");

  const Quiver& q = a.quiver;
  auto expect_period = [&](int vertex, const std::string& want) {
    PeriodReport pr = omega_period(simple(a, vertex), census_opt.period_bound,
                                   rng, "S" + std::to_string(vertex));
    rep.certified = rep.certified && pr.certified;
    add_check(rep, "period-S" + std::to_string(vertex), pr.to_string() == want,
              "got " + pr.to_string() + ", want " + want);
  };

  if (expected.family == "i") {
    int n = expected.parameter;
    if (n == 1) {
      add_check(rep, "dim", a.dim() == 1);
      add_check(rep, "no-nonprojective-modules", true,
                "simple module is projective");
    } else {
      Path socpath = Path::of_arrows(q, std::vector<int>(n - 1, 0));
      Mat want = row_space(
          Mat::from_rows(a.field, {a.expand_path(socpath)}, a.dim()));
      add_check(rep, "socle-span",
                subspace_equal(socle_of_projective(a, 1), want),
                "soc(P) = <T^" + std::to_string(n - 1) + ">");
      expect_period(1, n == 2 ? "1" : "2");
    }
  } else if (expected.family == "ii") {
    int n = expected.parameter;
    int a12 = q.arrows[0].src == 1 ? 0 : 1;
    int a21 = 1 - a12;
    Path c1 = alternating_cycle(q, a12, a21, n);  // (alpha beta)^n at vertex 1
    Path c2 = alternating_cycle(q, a21, a12, n);  // (beta alpha)^n at vertex 2
    Mat w1 = row_space(Mat::from_rows(a.field, {a.expand_path(c1)}, a.dim()));
    Mat w2 = row_space(Mat::from_rows(a.field, {a.expand_path(c2)}, a.dim()));
    add_check(rep, "socle-span-P1",
              subspace_equal(socle_of_projective(a, 1), w1),
              "soc(P1) = <(alpha beta)^n>");
    add_check(rep, "socle-span-P2",
              subspace_equal(socle_of_projective(a, 2), w2),
              "soc(P2) = <(beta alpha)^n>");
    expect_period(1, "4");
    expect_period(2, "4");
    Rep w2s = omega(omega(simple(a, 1), rng), rng);
    IsoResult iso = is_isomorphic(w2s, simple(a, 2), rng);
    rep.certified = rep.certified && iso.certified;
    add_check(rep, "omega2-S1-is-S2", iso.isomorphic);
  } else if (expected.family == "iii") {
    int t = expected.parameter;
    int rho = -1;
    for (int k = 0; k < 3; ++k)
      if (q.arrows[k].src == q.arrows[k].dst) rho = k;
    int v1 = q.arrows[rho].src, v2 = 3 - v1;
    int alpha = -1, beta = -1;
    for (int k = 0; k < 3; ++k) {
      if (k == rho) continue;
      if (q.arrows[k].src == v1) alpha = k;
      if (q.arrows[k].src == v2) beta = k;
    }
    Path ba = Path::of_arrows(q, {beta, alpha});
    Path rt = Path::of_arrows(q, std::vector<int>(t, rho));
    Mat wantb =
        row_space(Mat::from_rows(a.field, {a.expand_path(ba)}, a.dim()));
    Mat wantr =
        row_space(Mat::from_rows(a.field, {a.expand_path(rt)}, a.dim()));
    add_check(rep, "socle-span-loop-vertex",
              subspace_equal(socle_of_projective(a, v1), wantr),
              "soc at loop vertex spanned by rho^t");
    add_check(rep, "socle-span-other-vertex",
              subspace_equal(socle_of_projective(a, v2), wantb),
              "soc at the other vertex spanned by beta alpha");
    HeartResult h = heart(a, v2, rng);
    IsoResult hiso = is_isomorphic(h.rep, simple(a, v1), rng);
    rep.certified = rep.certified && hiso.certified;
    add_check(rep, "heart-P2-is-S1", hiso.isomorphic,
              "heart dims " + std::to_string(h.rep.total_dim()));
    expect_period(v1, "4");
    expect_period(v2, "4");
    Rep w2s = omega(omega(simple(a, v2), rng), rng);
    add_check(rep, "omega2-S2-dim-t", w2s.total_dim() == t,
              "dim " + std::to_string(w2s.total_dim()));
    add_check(rep, "omega2-S2-not-simple", w2s.total_dim() != 1);
  }

  Census census = indecomposable_census(a, census_opt, rng);
  rep.census_count = static_cast<int>(census.entries.size());
  rep.census_nonprojective = census.non_projective_count();
  rep.census_exhaustive = census.exhaustive;
  rep.certified = rep.certified && census.certified;
  PeriodsDivideResult pd = all_periods_divide_4(census);
  add_check(rep, "census-periods-divide-4", pd.ok,
            pd.ok ? std::to_string(rep.census_nonprojective) +
                        " non-projective indecomposables"
                  : pd.exceptions.front());
  if ((expected.family == "i" || expected.family == "ii") &&
      census.exhaustive && census.max_total_dim >= a.dim()) {
    int loewy_sum = 0;
    for (int i = 1; i <= q.num_vertices; ++i) {
      Rep p = projective(a, i);
      for (int k = 1;; ++k) {
        std::vector<Mat> sub = radical_power_subspaces(p, k);
        int cur = 0;
        for (size_t v = 1; v < sub.size(); ++v) cur += sub[v].rows();
        if (cur == 0) { loewy_sum += k; break; }
      }
    }
    add_check(rep, "nakayama-count", rep.census_count == loewy_sum,
              "census " + std::to_string(rep.census_count) + ", sum of Loewy lengths " +
                  std::to_string(loewy_sum));
  }
  if (form.form) {
    ClosureResult cl = omega_closure_check(a, census, *form.form, rng);
    add_check(rep, "census-omega-closed", cl.closed || cl.boundary_flagged,
              cl.closed ? "closed"
                        : (cl.boundary_flagged ? "open boundary above bound"
                                               : cl.notes.front()));
  }
  return rep;
}

}  // namespace omega4
