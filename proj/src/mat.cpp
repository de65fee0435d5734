#include "omega4/mat.hpp"

#include <algorithm>

namespace omega4 {

Mat Mat::identity(PrimeField f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % f.p;
  return m;
}

Mat Mat::from_rows(PrimeField f, const std::vector<Vec>& rows, int cols) {
  Mat m(f, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error(ErrKind::Validation, "row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Mat::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](uint32_t x) { return x == 0; });
}

static void check_same_field(const Mat& a, const Mat& b) {
  if (a.field().p != b.field().p)
    throw Error(ErrKind::Validation, "field mismatch");
}

Mat mat_mul(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrKind::Validation, "matrix product shape mismatch");
  const PrimeField& f = a.field();
  Mat r(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrKind::Validation, "matrix sum shape mismatch");
  Mat r(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
  return r;
}

Mat mat_scale(const Mat& a, uint32_t c) {
  Mat r(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.field().mul(a.at(i, j), c);
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols())
    throw Error(ErrKind::Validation, "vstack column mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows())
    throw Error(ErrKind::Validation, "hstack row mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Vec mat_apply(const Mat& a, const Vec& x) {
  if (static_cast<int>(x.size()) != a.cols())
    throw Error(ErrKind::Validation, "mat_apply length mismatch");
  const PrimeField& f = a.field();
  Vec r(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    uint64_t acc = 0;
    for (int j = 0; j < a.cols(); ++j)
      acc += static_cast<uint64_t>(a.at(i, j)) * x[j];
    r[i] = static_cast<uint32_t>(acc % f.p);
  }
  return r;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

Rref rref(const Mat& a) {
  const PrimeField& f = a.field();
  Mat m = a;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint32_t s = f.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      uint32_t t = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Mat out(f, r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  // Keep the full row count only in rank; zero rows carry no information.
  return Rref{out, pivots, r};
}

std::vector<Vec> kernel_basis(const Mat& a) {
  const PrimeField& f = a.field();
  Rref e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(a.cols(), 0);
    v[c] = 1 % f.p;
    for (int i = 0; i < e.rank; ++i)
      v[e.pivots[i]] = f.neg(e.m.at(i, c));
    basis.push_back(v);
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(ErrKind::Validation, "solve: rhs length mismatch");
  const PrimeField& f = a.field();
  Mat aug(f, a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Rref e = rref(aug);
  Vec x(a.cols(), 0);
  for (int i = 0; i < e.rank; ++i) {
    int p = e.pivots[i];
    if (p == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[p] = e.m.at(i, a.cols());
  }
  return x;
}

std::optional<Mat> solve_mat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw Error(ErrKind::Validation, "solve_mat: row mismatch");
  Mat x(a.field(), a.cols(), b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    auto xc = solve(a, b.col(c));
    if (!xc) return std::nullopt;
    for (int r = 0; r < a.cols(); ++r) x.at(r, c) = (*xc)[r];
  }
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Rref e = rref(hstack(a, Mat::identity(a.field(), a.rows())));
  if (e.rank < a.rows()) return std::nullopt;
  for (int i = 0; i < a.rows(); ++i)
    if (e.pivots[i] != i) return std::nullopt;
  Mat inv(a.field(), a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) inv.at(i, j) = e.m.at(i, a.rows() + j);
  return inv;
}

int rank_of(const Mat& a) { return rref(a).rank; }

Mat row_space(const Mat& gens) {
  Rref e = rref(gens);
  return e.m;
}

Mat subspace_sum(const Mat& u, const Mat& w) {
  return row_space(vstack(u, w));
}

Mat subspace_intersect(const Mat& u, const Mat& w) {
  // Zassenhaus: RREF of [U | U; W | 0]; rows with zero left block span U∩W.
  check_same_field(u, w);
  if (u.cols() != w.cols())
    throw Error(ErrKind::Validation, "intersect: ambient dimension mismatch");
  const PrimeField& f = u.field();
  int n = u.cols();
  Mat big(f, u.rows() + w.rows(), 2 * n);
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < n; ++j) {
      big.at(i, j) = u.at(i, j);
      big.at(i, n + j) = u.at(i, j);
    }
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < n; ++j) big.at(u.rows() + i, j) = w.at(i, j);
  Rref e = rref(big);
  std::vector<Vec> inter;
  for (int i = 0; i < e.rank; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (e.m.at(i, j) != 0) left_zero = false;
    if (left_zero) {
      Vec v(n);
      for (int j = 0; j < n; ++j) v[j] = e.m.at(i, n + j);
      if (!vec_is_zero(v)) inter.push_back(v);
    }
  }
  return row_space(Mat::from_rows(f, inter, n));
}

bool subspace_member(const Mat& u, const Vec& v) {
  if (static_cast<int>(v.size()) != u.cols())
    throw Error(ErrKind::Validation, "member: ambient dimension mismatch");
  Mat stacked = vstack(u, Mat::from_rows(u.field(), {v}, u.cols()));
  return rank_of(stacked) == rank_of(u);
}

bool subspace_contains(const Mat& u, const Mat& w) {
  return rank_of(vstack(u, w)) == rank_of(u);
}

bool subspace_equal(const Mat& u, const Mat& w) {
  return row_space(u) == row_space(w);
}

QuotientWithSection subspace_quotient(const Mat& u, int ambient_dim) {
  if (u.cols() != ambient_dim)
    throw Error(ErrKind::Validation, "quotient: ambient dimension mismatch");
  const PrimeField& f = u.field();
  Rref e = rref(u);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> comp;
  for (int c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  Mat section(f, static_cast<int>(comp.size()), ambient_dim);
  Mat proj(f, static_cast<int>(comp.size()), ambient_dim);
  for (size_t k = 0; k < comp.size(); ++k) {
    section.at(static_cast<int>(k), comp[k]) = 1 % f.p;
    // x - sum_i x_{p_i} R_i, restricted to complement coordinates.
    proj.at(static_cast<int>(k), comp[k]) = 1 % f.p;
    for (int i = 0; i < e.rank; ++i)
      proj.at(static_cast<int>(k), e.pivots[i]) = f.neg(e.m.at(i, comp[k]));
  }
  return QuotientWithSection{section, proj};
}

}  // namespace omega4
