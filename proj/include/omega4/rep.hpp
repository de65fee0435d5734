#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega4/algebra.hpp"
#include "omega4/rng.hpp"

namespace omega4 {

/// Right module over a bound quiver algebra, stored as one space per vertex
/// and one matrix per arrow. For an arrow a: i -> j the matrix has shape
/// dims[j] x dims[i] and sends column vectors at i to column vectors at j;
/// every operation in the project follows this single convention.
struct Rep {
  const AlgebraTable* alg = nullptr;
  std::vector<int> dims;    // 1-based; dims[0] unused
  std::vector<Mat> action;  // per arrow, declaration order

  int total_dim() const;
  int dim_at(int v) const { return dims[v]; }
  bool is_zero() const { return total_dim() == 0; }
};

/// Checks shapes, relation annihilation and nilpotency at the stabilization
/// length before handing the representation back.
Rep make_rep(const AlgebraTable& a, std::vector<int> dims,
             std::vector<Mat> action);
Rep zero_rep(const AlgebraTable& a);

Rep simple(const AlgebraTable& a, int i);
Rep projective(const AlgebraTable& a, int i);
/// Algebra-basis indices carried by P_i at vertex j (paths i -> j, basis order).
std::vector<int> projective_vertex_basis(const AlgebraTable& a, int i, int j);

Rep direct_sum(const Rep& m, const Rep& n);
Rep direct_sum_all(const AlgebraTable& a, const std::vector<Rep>& parts);

/// Matrix of the right action of a path on M (shape dims[dst] x dims[src]).
Mat path_action(const Rep& m, const Path& p);

struct ModuleMap {
  std::vector<Mat> f;  // per vertex, shape dims_N[v] x dims_M[v]
};

ModuleMap zero_map(const Rep& m, const Rep& n);
ModuleMap identity_map(const Rep& m);
bool map_commutes(const Rep& m, const Rep& n, const ModuleMap& h);
ModuleMap compose_maps(const ModuleMap& g, const ModuleMap& h);  // g after h
ModuleMap map_add(const ModuleMap& a, const ModuleMap& b);
ModuleMap map_scale(const ModuleMap& a, uint32_t c);
int map_rank(const ModuleMap& h);
bool map_is_zero(const ModuleMap& h);
bool map_is_invertible(const Rep& m, const Rep& n, const ModuleMap& h);
std::optional<ModuleMap> map_inverse(const Rep& m, const Rep& n,
                                     const ModuleMap& h);

/// Per-vertex kernel / image subspaces (rows over module coordinates).
std::vector<Mat> map_kernel(const Rep& m, const Rep& n, const ModuleMap& h);
std::vector<Mat> map_image(const Rep& m, const Rep& n, const ModuleMap& h);

struct SubRep {
  Rep rep;
  ModuleMap incl;           // rep -> ambient
  std::vector<Mat> bases;   // per vertex, rows over ambient coordinates
};
SubRep sub_rep(const Rep& m, const std::vector<Mat>& bases);

struct QuotRep {
  Rep rep;
  ModuleMap proj;  // ambient -> rep
};
QuotRep quotient_rep(const Rep& m, const std::vector<Mat>& sub_bases);

std::vector<Mat> radical_subspaces(const Rep& m);
std::vector<Mat> radical_power_subspaces(const Rep& m, int k);
std::vector<Mat> socle_subspaces(const Rep& m);

SubRep radical_subrep(const Rep& m);
QuotRep top_quotient(const Rep& m);
SubRep socle_subrep(const Rep& m);

std::vector<int> top_dims(const Rep& m);  // multiplicity of S_i in top(m)

std::vector<ModuleMap> hom_space(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

struct IsoResult {
  bool isomorphic = false;
  std::optional<ModuleMap> witness;
  bool certified = true;
};
IsoResult is_isomorphic(const Rep& m, const Rep& n, Prng& rng);

struct SplitResult {
  std::vector<Rep> parts;  // indecomposable summands
  bool certified = true;
};
SplitResult fitting_split(const Rep& m, Prng& rng);

/// Dimension count: m is projective iff dim m equals the dimension of the
/// projective cover of its top.
bool is_projective_rep(const Rep& m);

struct StripResult {
  Rep rep;  // direct sum of the non-projective summands
  std::vector<std::string> stripped;  // log, one entry per removed summand
  bool certified = true;
};
StripResult strip_projective_summands(const Rep& m, Prng& rng);

struct HeartResult {
  Rep rep;
  ModuleMap quotient_map;  // rad(P_i) -> heart
};
/// rad(P_i)/soc(P_i); undefined (error) when P_i is simple.
HeartResult heart(const AlgebraTable& a, int i, Prng& rng);

/// K-linear dual as a module over the opposite algebra (and back). `target`
/// must be the opposite table of m's algebra.
Rep dualize(const Rep& m, const AlgebraTable& target);

/// Left-to-right module transport through the symmetrizing form's
/// identification of the algebra with its dual; requires a verified form on
/// `target` (the symmetric side).
Rep transport_via_form(const SymmetrizingForm& form, const Rep& m,
                       const AlgebraTable& target);

bool has_uniserial_projectives(const AlgebraTable& a);
struct LabeledRep {
  std::string label;
  Rep rep;
};
/// The uniserial quotients P_i / rad^k, k = 1..LoewyLength(P_i): for a
/// Nakayama algebra this is the complete list of indecomposables.
std::vector<LabeledRep> projective_radical_quotients(const AlgebraTable& a);

}  // namespace omega4
