#include "omega4/algebra.hpp"

#include <algorithm>
#include <random>

#include "omega4/error.hpp"

namespace omega4 {

namespace {

std::vector<int> path_key(const Path& p) {
  std::vector<int> k;
  k.reserve(p.arrows.size() + 1);
  k.push_back(p.src);
  k.insert(k.end(), p.arrows.begin(), p.arrows.end());
  return k;
}

struct PathSet {
  std::vector<Path> paths;  // grouped by length: all trivial, all length 1, ...
  std::map<std::vector<int>, int> index;
  std::vector<int> band_start;  // band_start[l] = first index of length l

  int length_of(int idx) const { return paths[idx].length(); }
  int band_begin(int l) const {
    return l < static_cast<int>(band_start.size()) ? band_start[l]
                                                   : static_cast<int>(paths.size());
  }
  int band_end(int l) const { return band_begin(l + 1); }
};

PathSet enumerate_paths(const Quiver& q, int cap, int budget) {
  PathSet ps;
  ps.band_start.push_back(0);
  for (int v = 1; v <= q.num_vertices; ++v) {
    ps.index[path_key(Path::trivial(v))] = static_cast<int>(ps.paths.size());
    ps.paths.push_back(Path::trivial(v));
  }
  for (int len = 1; len <= cap; ++len) {
    int begin = ps.band_start.back();
    int end = static_cast<int>(ps.paths.size());
    ps.band_start.push_back(end);
    for (int i = begin; i < end; ++i) {
      Path base = ps.paths[i];
      for (int a : q.out_arrows(base.dst)) {
        Path ext = base;
        ext.arrows.push_back(a);
        ext.dst = q.arrows[a].dst;
        ps.index[path_key(ext)] = static_cast<int>(ps.paths.size());
        ps.paths.push_back(ext);
        if (static_cast<int>(ps.paths.size()) > budget)
          throw Error(ErrKind::CapExceeded,
                      "path budget exceeded while saturating the ideal (" +
                          std::to_string(budget) + " paths)");
      }
    }
    if (static_cast<int>(ps.paths.size()) == ps.band_start.back()) break;
  }
  while (static_cast<int>(ps.band_start.size()) <= cap + 1)
    ps.band_start.push_back(static_cast<int>(ps.paths.size()));
  return ps;
}

// Rows spanning the truncation of the ideal <rels> to paths of length <= cap.
std::vector<Vec> generator_rows(const Quiver& q,
                                const std::vector<Relation>& rels,
                                const PrimeField& f, const PathSet& ps,
                                int cap) {
  std::vector<Vec> rows;
  for (const Relation& r : rels) {
    int minlen = r.min_length();
    for (const Path& u : ps.paths) {
      if (u.dst != r.src || u.length() + minlen > cap) continue;
      for (const Path& v : ps.paths) {
        if (v.src != r.dst || u.length() + minlen + v.length() > cap) continue;
        Vec row(ps.paths.size(), 0);
        for (const auto& [c, p] : r.terms) {
          if (u.length() + p.length() + v.length() > cap) continue;
          Path w = compose(q, compose(q, u, p), v);
          int idx = ps.index.at(path_key(w));
          row[idx] = f.add(row[idx], c);
        }
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

IdealSubspace ideal_subspace(const Quiver& q, const std::vector<Relation>& rels,
                             const PrimeField& f, int cap, int path_budget) {
  PathSet ps = enumerate_paths(q, cap, path_budget);
  auto rows = generator_rows(q, rels, f, ps, cap);
  Mat m = Mat::from_rows(f, rows, static_cast<int>(ps.paths.size()));
  return IdealSubspace{ps.paths, row_space(m)};
}

AlgebraTable build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                           const PrimeField& f, int max_len, int path_budget) {
  q.validate();
  for (const Relation& r : rels) r.validate(q, f);
  if (max_len < 2)
    throw Error(ErrKind::Validation, "max_len must be at least 2");

  for (int cap = 1; cap <= max_len; ++cap) {
    PathSet ps = enumerate_paths(q, cap, path_budget);
    // Columns sorted longest-first so pivots land on the longest path of
    // each row and normal forms only involve shorter paths.
    int n = static_cast<int>(ps.paths.size());
    std::vector<int> colOrder(n);
    for (int i = 0; i < n; ++i) colOrder[i] = i;
    std::stable_sort(colOrder.begin(), colOrder.end(), [&](int a, int b) {
      return ps.length_of(a) > ps.length_of(b);
    });
    std::vector<int> colOf(n);
    for (int c = 0; c < n; ++c) colOf[colOrder[c]] = c;

    auto rows = generator_rows(q, rels, f, ps, cap);
    Mat gen(f, static_cast<int>(rows.size()), n);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int i = 0; i < n; ++i) gen.at(static_cast<int>(r), colOf[i]) = rows[r][i];
    Rref e = rref(gen);

    std::vector<int> pivot_row_of(n, -1);
    for (int r = 0; r < e.rank; ++r) pivot_row_of[e.pivots[r]] = r;

    // Zero class <=> the path's column is a pivot whose row has no other
    // nonzero entry.
    auto class_is_zero = [&](int path_idx) {
      int col = colOf[path_idx];
      int r = pivot_row_of[col];
      if (r < 0) return false;
      for (int c = 0; c < n; ++c)
        if (c != col && e.m.at(r, c) != 0) return false;
      return true;
    };

    bool stabilized = true;
    for (int i = ps.band_begin(cap); i < ps.band_end(cap); ++i)
      if (!class_is_zero(i)) { stabilized = false; break; }
    if (!stabilized) continue;

    // Quotient basis: the non-pivot paths, shortest first.
    AlgebraTable table;
    table.field = f;
    table.quiver = q;
    table.relations = rels;
    table.stabilization_length = cap;

    std::vector<int> basis_path_idx;
    for (int i = 0; i < n; ++i)
      if (pivot_row_of[colOf[i]] < 0) basis_path_idx.push_back(i);
    std::stable_sort(basis_path_idx.begin(), basis_path_idx.end(),
                     [&](int a, int b) {
                       if (ps.length_of(a) != ps.length_of(b))
                         return ps.length_of(a) < ps.length_of(b);
                       return a < b;
                     });
    std::vector<int> basis_index_of(n, -1);
    for (size_t b = 0; b < basis_path_idx.size(); ++b) {
      basis_index_of[basis_path_idx[b]] = static_cast<int>(b);
      table.basis_paths.push_back(ps.paths[basis_path_idx[b]]);
      table.bigrade.emplace_back(ps.paths[basis_path_idx[b]].src,
                                 ps.paths[basis_path_idx[b]].dst);
    }

    table.idempotent.assign(q.num_vertices + 1, -1);
    for (int v = 1; v <= q.num_vertices; ++v) {
      int pi = ps.index.at(path_key(Path::trivial(v)));
      if (basis_index_of[pi] < 0)
        throw Error(ErrKind::Degenerate,
                    "relations force idempotent e" + std::to_string(v) +
                        " to vanish");
      table.idempotent[v] = basis_index_of[pi];
    }

    int dim = static_cast<int>(table.basis_paths.size());
    table.all_paths_ = ps.paths;
    table.path_class_.resize(n);
    for (int i = 0; i < n; ++i) {
      Vec cls(dim, 0);
      int col = colOf[i];
      int r = pivot_row_of[col];
      if (r < 0) {
        cls[basis_index_of[i]] = 1 % f.p;
      } else {
        for (int c = 0; c < n; ++c) {
          if (c == col || e.m.at(r, c) == 0) continue;
          int pidx = colOrder[c];
          int b = basis_index_of[pidx];
          if (b < 0)
            throw Error(ErrKind::Validation,
                        "internal: reduction hit a reducible path");
          cls[b] = f.neg(e.m.at(r, c));
        }
      }
      table.path_class_[i] = std::move(cls);
      table.path_index_[path_key(ps.paths[i])] = i;
    }

    table.finish_tables();
    return table;
  }

  throw Error(ErrKind::NotAdmissible,
              "ideal did not stabilize below length cap " +
                  std::to_string(max_len) +
                  "; the quotient is not visibly finite dimensional");
}

void AlgebraTable::finish_tables() {
  int n = dim();
  prod_.assign(n, std::vector<Vec>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (bigrade[u].second != bigrade[v].first) {
        prod_[u][v] = zero_vec();
        continue;
      }
      Path w = compose(quiver, basis_paths[u], basis_paths[v]);
      prod_[u][v] = expand_path(w);
    }
  for (loewy_length = 0; loewy_length <= stabilization_length; ++loewy_length)
    if (radical_power(*this, loewy_length).rows() == 0) break;
}

int AlgebraTable::dim_e(int i) const {
  int d = 0;
  for (const auto& [s, t] : bigrade)
    if (s == i) ++d;
  return d;
}

int AlgebraTable::dim_e(int i, int j) const {
  int d = 0;
  for (const auto& [s, t] : bigrade)
    if (s == i && t == j) ++d;
  return d;
}

std::vector<int> AlgebraTable::basis_of(int i, int j) const {
  std::vector<int> idx;
  for (int b = 0; b < dim(); ++b)
    if (bigrade[b].first == i && bigrade[b].second == j) idx.push_back(b);
  return idx;
}

Vec AlgebraTable::unit(int basis_index) const {
  Vec v = zero_vec();
  v[basis_index] = 1 % field.p;
  return v;
}

Vec AlgebraTable::idempotent_vec(int vertex) const {
  if (vertex < 1 || vertex > quiver.num_vertices)
    throw Error(ErrKind::Validation, "unknown vertex");
  return unit(idempotent[vertex]);
}

Vec AlgebraTable::one() const {
  Vec v = zero_vec();
  for (int i = 1; i <= quiver.num_vertices; ++i) v[idempotent[i]] = 1 % field.p;
  return v;
}

Vec AlgebraTable::mult(const Vec& a, const Vec& b) const {
  Vec r = zero_vec();
  for (int u = 0; u < dim(); ++u) {
    if (a[u] == 0) continue;
    for (int v = 0; v < dim(); ++v) {
      if (b[v] == 0) continue;
      uint32_t c = field.mul(a[u], b[v]);
      const Vec& pw = prod_[u][v];
      for (int w = 0; w < dim(); ++w)
        if (pw[w] != 0) r[w] = field.add(r[w], field.mul(c, pw[w]));
    }
  }
  return r;
}

Mat AlgebraTable::right_mult_matrix(const Vec& a) const {
  Mat m(field, dim(), dim());
  for (int u = 0; u < dim(); ++u) {
    Vec img = mult(unit(u), a);
    for (int w = 0; w < dim(); ++w) m.at(w, u) = img[w];
  }
  return m;
}

Mat AlgebraTable::left_mult_matrix(const Vec& a) const {
  Mat m(field, dim(), dim());
  for (int u = 0; u < dim(); ++u) {
    Vec img = mult(a, unit(u));
    for (int w = 0; w < dim(); ++w) m.at(w, u) = img[w];
  }
  return m;
}

bool AlgebraTable::has_path_class(const Path& p) const {
  return path_index_.count(path_key(p)) > 0;
}

Vec AlgebraTable::expand_path(const Path& p) const {
  auto it = path_index_.find(path_key(p));
  if (it != path_index_.end()) return path_class_[it->second];
  if (p.length() >= stabilization_length) return zero_vec();
  throw Error(ErrKind::Validation, "path not enumerated: " +
                                       path_to_string(quiver, p));
}

const AlgebraTable& AlgebraTable::opposite() const {
  if (op_cache_) return *op_cache_;
  auto op = std::make_shared<AlgebraTable>();
  op->field = field;
  op->quiver.num_vertices = quiver.num_vertices;
  for (const Arrow& a : quiver.arrows)
    op->quiver.arrows.push_back(Arrow{a.name, a.dst, a.src});
  for (const Relation& r : relations)
    op->relations.push_back(reverse_relation(r));
  for (const Path& p : basis_paths) op->basis_paths.push_back(reverse_path(p));
  for (const auto& [s, t] : bigrade) op->bigrade.emplace_back(t, s);
  op->idempotent = idempotent;
  op->stabilization_length = stabilization_length;
  op->loewy_length = loewy_length;
  int n = dim();
  op->prod_.assign(n, std::vector<Vec>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) op->prod_[u][v] = prod_[v][u];
  for (size_t i = 0; i < all_paths_.size(); ++i) {
    Path rp = reverse_path(all_paths_[i]);
    op->all_paths_.push_back(rp);
    op->path_class_.push_back(path_class_[i]);
    op->path_index_[path_key(rp)] = static_cast<int>(i);
  }
  op_cache_ = op;
  return *op_cache_;
}

Mat radical_power(const AlgebraTable& a, int k) {
  if (k < 0) throw Error(ErrKind::Validation, "radical power must be >= 0");
  if (k == 0) return Mat::identity(a.field, a.dim());
  std::vector<Vec> rows;
  for (size_t i = 0; i < a.all_paths().size(); ++i)
    if (a.all_paths()[i].length() >= k && !vec_is_zero(a.path_class(static_cast<int>(i))))
      rows.push_back(a.path_class(static_cast<int>(i)));
  return row_space(Mat::from_rows(a.field, rows, a.dim()));
}

Mat socle_of_projective(const AlgebraTable& a, int i) {
  if (i < 1 || i > a.quiver.num_vertices)
    throw Error(ErrKind::Validation, "unknown vertex");
  std::vector<int> domain;
  for (int b = 0; b < a.dim(); ++b)
    if (a.bigrade[b].first == i) domain.push_back(b);
  int d = static_cast<int>(domain.size());
  // Stack x -> x*alpha over all arrows, restricted to e_i Lambda.
  Mat stacked(a.field, 0, d);
  bool first = true;
  for (size_t ar = 0; ar < a.quiver.arrows.size(); ++ar) {
    Path ap = Path::of_arrows(a.quiver, {static_cast<int>(ar)});
    Mat full = a.right_mult_matrix(a.expand_path(ap));
    Mat restr(a.field, a.dim(), d);
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < a.dim(); ++r) restr.at(r, c) = full.at(r, domain[c]);
    stacked = first ? restr : vstack(stacked, restr);
    first = false;
  }
  std::vector<Vec> rows;
  if (first) {
    // No arrows at all: the socle is everything at this vertex.
    for (int c = 0; c < d; ++c) {
      Vec v(a.dim(), 0);
      v[domain[c]] = 1 % a.field.p;
      rows.push_back(v);
    }
  } else {
    for (const Vec& k : kernel_basis(stacked)) {
      Vec v(a.dim(), 0);
      for (int c = 0; c < d; ++c) v[domain[c]] = k[c];
      rows.push_back(v);
    }
  }
  return row_space(Mat::from_rows(a.field, rows, a.dim()));
}

Mat socle_of_algebra(const AlgebraTable& a) {
  Mat s(a.field, 0, a.dim());
  for (int i = 1; i <= a.quiver.num_vertices; ++i)
    s = vstack(s, socle_of_projective(a, i));
  return row_space(s);
}

bool verify_form(const AlgebraTable& a, const Vec& lambda) {
  const PrimeField& f = a.field;
  int n = a.dim();
  auto pair_value = [&](int u, int v) {
    const Vec& p = a.basis_product(u, v);
    uint64_t acc = 0;
    for (int w = 0; w < n; ++w) acc += static_cast<uint64_t>(p[w]) * lambda[w];
    return static_cast<uint32_t>(acc % f.p);
  };
  Mat gram(f, n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) gram.at(u, v) = pair_value(u, v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (gram.at(u, v) != gram.at(v, u)) return false;
  return rank_of(gram) == n;
}

FormSearchResult find_symmetrizing_form(const AlgebraTable& a, uint64_t seed) {
  const PrimeField& f = a.field;
  int n = a.dim();

  // Solution space of lambda(ab) = lambda(ba) over all basis pairs.
  std::vector<Vec> constraint_rows;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Vec row(n, 0);
      bool nonzero = false;
      for (int w = 0; w < n; ++w) {
        row[w] = f.sub(a.basis_product(u, v)[w], a.basis_product(v, u)[w]);
        if (row[w] != 0) nonzero = true;
      }
      if (nonzero) constraint_rows.push_back(std::move(row));
    }
  std::vector<Vec> w_basis =
      kernel_basis(Mat::from_rows(f, constraint_rows, n));
  int wdim = static_cast<int>(w_basis.size());

  FormSearchResult res;
  res.seed = seed;

  // Structured candidate: indicator of the socle's pivot coordinates.
  Mat soc = socle_of_algebra(a);
  {
    Rref e = rref(soc);
    Vec cand(n, 0);
    for (int piv : e.pivots) cand[piv] = 1 % f.p;
    if (verify_form(a, cand)) {
      res.form = SymmetrizingForm{cand, "structured", 0};
      return res;
    }
  }

  auto combo = [&](const Vec& coeffs) {
    Vec lam(n, 0);
    for (int k = 0; k < wdim; ++k) {
      if (coeffs[k] == 0) continue;
      for (int i = 0; i < n; ++i)
        lam[i] = f.add(lam[i], f.mul(coeffs[k], w_basis[k][i]));
    }
    return lam;
  };

  double total = 1;
  for (int k = 0; k < wdim; ++k) total *= f.p;
  if (total <= 1e6) {
    Vec coeffs(wdim, 0);
    uint64_t count = static_cast<uint64_t>(total);
    for (uint64_t t = 1; t < count; ++t) {
      // base-p odometer
      int pos = 0;
      while (true) {
        coeffs[pos] = (coeffs[pos] + 1) % f.p;
        if (coeffs[pos] != 0) break;
        ++pos;
      }
      Vec lam = combo(coeffs);
      if (verify_form(a, lam)) {
        res.form = SymmetrizingForm{lam, "exhaustive", 0};
        return res;
      }
    }
    res.certified = true;  // exhausted the whole solution space
    return res;
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < 64; ++t) {
    Vec coeffs(wdim);
    for (int k = 0; k < wdim; ++k)
      coeffs[k] = static_cast<uint32_t>(rng() % f.p);
    Vec lam = combo(coeffs);
    if (verify_form(a, lam)) {
      res.form = SymmetrizingForm{lam, "random", seed};
      return res;
    }
  }
  res.certified = false;
  return res;
}

PropertyBResult check_property_b(const AlgebraTable& a) {
  PropertyBResult r;
  for (int i = 1; i <= a.quiver.num_vertices; ++i) {
    Mat soc = socle_of_projective(a, i);
    for (int j = 1; j <= a.quiver.num_vertices; ++j) {
      if (i == j) continue;
      std::vector<Vec> rows;
      for (int b : a.basis_of(i, j)) rows.push_back(a.unit(b));
      Mat piece = Mat::from_rows(a.field, rows, a.dim());
      Mat inter = subspace_intersect(soc, piece);
      if (inter.rows() > 0) {
        r.holds = false;
        r.witness = PropertyBWitness{i, j, inter.row(0)};
        return r;
      }
    }
  }
  return r;
}

PropertyCResult check_property_c(const AlgebraTable& a) {
  PropertyCResult r;
  Mat soc = socle_of_algebra(a);
  for (size_t i = 0; i < a.all_paths().size(); ++i) {
    const Path& w = a.all_paths()[i];
    const Vec& cls = a.path_class(static_cast<int>(i));
    if (vec_is_zero(cls) || !subspace_member(soc, cls)) continue;
    if (w.src != w.dst) {
      r.holds = false;
      r.violations.push_back(PropertyCViolation{w, w, "not-cyclic"});
      continue;
    }
    for (int k = 1; k < w.length(); ++k) {
      Path rot = rotate_path(a.quiver, w, k);
      Vec rc = a.expand_path(rot);
      if (vec_is_zero(rc)) {
        r.holds = false;
        r.violations.push_back(PropertyCViolation{w, rot, "rotation-zero"});
      } else if (!subspace_member(soc, rc)) {
        r.holds = false;
        r.violations.push_back(
            PropertyCViolation{w, rot, "rotation-not-in-socle"});
      }
    }
  }
  return r;
}

bool same_algebra(const AlgebraTable& a, const AlgebraTable& b) {
  if (&a == &b) return true;
  if (a.field.p != b.field.p) return false;
  if (a.quiver.num_vertices != b.quiver.num_vertices) return false;
  if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
  for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
    const Arrow &x = a.quiver.arrows[i], &y = b.quiver.arrows[i];
    if (x.name != y.name || x.src != y.src || x.dst != y.dst) return false;
  }
  if (a.basis_paths.size() != b.basis_paths.size()) return false;
  for (size_t i = 0; i < a.basis_paths.size(); ++i)
    if (!(a.basis_paths[i] == b.basis_paths[i])) return false;
  return true;
}

}  // namespace omega4
