#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "omega4/rep.hpp"

namespace omega4 {

/// Finite direct sum of indecomposable projectives with a fixed block
/// layout, kept alongside the plain Rep so maps in and out of it can be
/// decomposed summand by summand.
struct ProjSum {
  std::vector<int> vertices;  // vertex of each summand, in order
  Rep rep;
  std::vector<std::vector<int>> offsets;  // offsets[s][v]: column offset

  int summand_dim(int s, int v) const;
};

ProjSum projective_sum(const AlgebraTable& a, const std::vector<int>& vertices);

struct Cover {
  ProjSum proj;
  ModuleMap map;  // proj.rep -> m, surjective with kernel inside rad(proj)
};

/// Minimal projective cover, built from the top's multiplicities.
Cover projective_cover(const Rep& m);

/// Kernel of a minimal projective cover, after stripping projective
/// summands. Omega of a projective is zero.
Rep omega(const Rep& m, Prng& rng, StripResult* strip_out = nullptr,
          bool* certified = nullptr);

/// D . Omega . D over the opposite algebra; requires a verified
/// symmetrizing form (selfinjectivity witness) so that this is inverse to
/// omega on the stable category.
Rep cosyzygy(const Rep& m, const SymmetrizingForm& form, Prng& rng);

struct PeriodReport {
  enum class Kind { Periodic, Projective, AperiodicUpToBound };
  std::string module_id;
  Kind kind = Kind::AperiodicUpToBound;
  int period = 0;  // meaningful for Kind::Periodic
  int bound = 0;
  std::optional<ModuleMap> witness;  // iso Omega^period(M) -> M when kept
  bool certified = true;
  std::vector<std::string> strip_log;

  bool divides(int n) const {
    return kind == Kind::Periodic && period > 0 && n % period == 0;
  }
  std::string to_string() const;
};

PeriodReport omega_period(const Rep& m, int bound, Prng& rng,
                          const std::string& module_id = "M");

/// The chain 0 -> S_i -> P_i -> P_i^- -> P_i^+ -> P_i -> S_i -> 0 with
/// Im(d_k) = Omega^k(S_i); only defined when period(S_i) divides 4.
struct FourTerm {
  int vertex = 0;
  std::array<int, 6> term_dims{};  // S_i, P_i, P_i^-, P_i^+, P_i, S_i
  std::vector<int> minus_vertices;  // summands of P_i^-, arrow order
  std::vector<int> plus_vertices;   // summands of P_i^+, arrow order
  std::array<int, 3> image_dims{};  // dims of Omega^1,2,3(S_i)
  bool exact = false;
  bool images_match = false;
  bool certified = true;
};

FourTerm four_term_sequence(const AlgebraTable& a, int i, Prng& rng,
                            int period_bound = 12);

struct DimensionIdentity {
  int vertex = 0;
  int omega2 = 0, proj = 0, proj_plus = 0, proj_minus = 0, simple_dim = 1;
  bool holds = false;
};

/// |Omega^2(S_i)| + |P_i| = |P_i^+| + |S_i| = |P_i^-| + |S_i|.
DimensionIdentity dimension_identity(const AlgebraTable& a, int i, Prng& rng,
                                     int period_bound = 12);

/// Auslander-Reiten translate D Tr via a minimal projective presentation
/// and the transpose over the opposite algebra.
Rep tau(const Rep& m, const SymmetrizingForm& form, Prng& rng);

struct TauCheck {
  std::string label;
  bool ok = false;
  bool certified = true;
};

std::vector<TauCheck> verify_tau_is_omega_squared(
    const AlgebraTable& a, const SymmetrizingForm& form,
    const std::vector<LabeledRep>& modules, Prng& rng);

}  // namespace omega4
