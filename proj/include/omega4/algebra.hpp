#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omega4/mat.hpp"
#include "omega4/quiver.hpp"

namespace omega4 {

/// Linear functional on Lambda with lambda(ab) = lambda(ba) and invertible
/// Gram matrix G[u][v] = lambda(b_u b_v). Existence certifies the algebra
/// is symmetric.
struct SymmetrizingForm {
  Vec lambda;          // values on the basis
  std::string method;  // "structured" | "exhaustive" | "random"
  uint64_t seed = 0;   // only meaningful for method == "random"
};

struct FormSearchResult {
  std::optional<SymmetrizingForm> form;
  bool certified = true;  // a "not symmetric" verdict backed by exhaustion
  uint64_t seed = 0;
};

/// Finite-dimensional quotient of a path algebra, with a monomial-spanned
/// basis of irreducible paths, full structure constants and the vertex
/// bigrading. Immutable after construction.
class AlgebraTable {
 public:
  PrimeField field;
  Quiver quiver;
  std::vector<Relation> relations;

  // Basis data. basis_paths is sorted by (length, enumeration order); each
  // element lies in e_i Lambda e_j for (i, j) = bigrade.
  std::vector<Path> basis_paths;
  std::vector<std::pair<int, int>> bigrade;
  std::vector<int> idempotent;  // vertex (1-based) -> basis index

  int stabilization_length = 0;  // paths of this length all vanish
  int loewy_length = 0;          // least m with rad^m = 0

  int dim() const { return static_cast<int>(basis_paths.size()); }
  int dim_e(int i) const;         // dim e_i Lambda
  int dim_e(int i, int j) const;  // dim e_i Lambda e_j
  std::vector<int> basis_of(int i, int j) const;  // basis indices in e_iΛe_j

  Vec zero_vec() const { return Vec(dim(), 0); }
  Vec unit(int basis_index) const;
  Vec idempotent_vec(int vertex) const;
  Vec one() const;  // sum of all idempotents

  const Vec& basis_product(int u, int v) const { return prod_[u][v]; }
  Vec mult(const Vec& a, const Vec& b) const;
  Mat right_mult_matrix(const Vec& a) const;  // x -> x a on coordinates
  Mat left_mult_matrix(const Vec& a) const;   // x -> a x

  /// Coordinates of the class of an arbitrary path (zero above the cap).
  Vec expand_path(const Path& p) const;
  bool has_path_class(const Path& p) const;

  /// Every enumerated path of length <= stabilization_length, with classes.
  const std::vector<Path>& all_paths() const { return all_paths_; }
  const Vec& path_class(int path_index) const { return path_class_[path_index]; }

  /// The opposite algebra (paths reversed, products transposed); cached.
  const AlgebraTable& opposite() const;

  friend AlgebraTable build_algebra(const Quiver& q,
                                    const std::vector<Relation>& rels,
                                    const PrimeField& f, int max_len,
                                    int path_budget);

 private:
  std::vector<std::vector<Vec>> prod_;
  std::vector<Path> all_paths_;
  std::vector<Vec> path_class_;
  std::map<std::vector<int>, int> path_index_;  // key: [src, arrow ids...]
  mutable std::shared_ptr<const AlgebraTable> op_cache_;

  void finish_tables();
};

/// Quotient KQ/I by bounded ideal saturation. Lengths are capped at
/// max_len; the basis is returned once every path of some length l <= cap
/// has zero class (so rad^l = 0 is certified). Throws NotAdmissible when
/// no such l exists below the cap.
AlgebraTable build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                           const PrimeField& f, int max_len = 40,
                           int path_budget = 200000);

/// Span of truncated products u*r*v inside the space of paths of length
/// <= cap; rows are coordinates over the path list (enumeration order).
struct IdealSubspace {
  std::vector<Path> paths;  // all paths of length <= cap
  Mat span;                 // RREF rows over path coordinates
};
IdealSubspace ideal_subspace(const Quiver& q, const std::vector<Relation>& rels,
                             const PrimeField& f, int cap,
                             int path_budget = 200000);

/// Basis of rad^k as rows over the algebra's coordinates. rad^0 = Lambda.
Mat radical_power(const AlgebraTable& a, int k);

/// Basis of {x in e_i Lambda : x rad = 0}, rows over full coordinates.
Mat socle_of_projective(const AlgebraTable& a, int i);

/// Right socle of Lambda = sum over vertices of socle_of_projective.
Mat socle_of_algebra(const AlgebraTable& a);

FormSearchResult find_symmetrizing_form(const AlgebraTable& a,
                                        uint64_t seed = 12345);
bool verify_form(const AlgebraTable& a, const Vec& lambda);

struct PropertyBWitness {
  int i = 0, j = 0;
  Vec vec;  // nonzero element of soc(e_i Lambda) ∩ e_i Lambda e_j
};
struct PropertyBResult {
  bool holds = true;
  std::optional<PropertyBWitness> witness;
};
/// soc(e_i Lambda) ∩ e_i Lambda e_j = 0 for all i != j.
PropertyBResult check_property_b(const AlgebraTable& a);

struct PropertyCViolation {
  Path omega;
  Path rotation;
  std::string reason;  // "not-cyclic" | "rotation-zero" | "rotation-not-in-socle"
};
struct PropertyCResult {
  bool holds = true;
  std::vector<PropertyCViolation> violations;
};
/// Every nonzero monomial class in soc(Lambda) is a cyclic path whose
/// rotations are all nonzero and again in the socle.
PropertyCResult check_property_c(const AlgebraTable& a);

bool same_algebra(const AlgebraTable& a, const AlgebraTable& b);

}  // namespace omega4
