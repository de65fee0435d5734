#pragma once

#include <optional>
#include <vector>

#include "omega4/field.hpp"

namespace omega4 {

using Vec = std::vector<uint32_t>;

/// Dense row-major matrix over F_p. 0-row / 0-column matrices are legal.
class Mat {
 public:
  Mat() = default;
  Mat(PrimeField f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0)
      throw Error(ErrKind::Validation, "negative matrix dimension");
  }

  static Mat identity(PrimeField f, int n);
  static Mat from_rows(PrimeField f, const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return f_; }

  uint32_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  uint32_t at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  Vec col(int c) const;

  bool is_zero() const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_.p == o.f_.p && a_ == o.a_;
  }

 private:
  PrimeField f_;
  int rows_ = 0, cols_ = 0;
  std::vector<uint32_t> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, uint32_t c);
Mat transpose(const Mat& a);
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x);  // a * x, column-vector convention

bool vec_is_zero(const Vec& a);

struct Rref {
  Mat m;                    // reduced row-echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column indices, increasing
  int rank = 0;
};

Rref rref(const Mat& a);

/// Basis of the right null space {x : a x = 0}; size = cols - rank.
std::vector<Vec> kernel_basis(const Mat& a);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Solve a X = b for all columns of b at once; nullopt if any column fails.
std::optional<Mat> solve_mat(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& a);
int rank_of(const Mat& a);

// Subspaces of F_p^n are handed around as matrices whose rows span them.
// row_space() puts them in RREF, which is the canonical representative.
Mat row_space(const Mat& gens);
Mat subspace_sum(const Mat& u, const Mat& w);
Mat subspace_intersect(const Mat& u, const Mat& w);  // Zassenhaus
bool subspace_member(const Mat& u, const Vec& v);
bool subspace_contains(const Mat& u, const Mat& w);
bool subspace_equal(const Mat& u, const Mat& w);

/// Complement-coordinate description of F^n / span(u).
struct QuotientWithSection {
  Mat section;     // rows: standard basis vectors spanning a complement
  Mat projection;  // (n - dim u) x n; kills span(u), identity on section
};

QuotientWithSection subspace_quotient(const Mat& u, int ambient_dim);

}  // namespace omega4
