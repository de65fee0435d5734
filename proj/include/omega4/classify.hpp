#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega4/census.hpp"

namespace omega4 {

/// Equivalence report for the three conditions on a connected symmetric
/// algebra whose simples all have syzygy period dividing 4:
///   (a) some simple S_i with Omega^2(S_i) simple,
///   (b) an arrow alpha: i -> j with out(i) = {alpha} = in(j),
///   (c) a vertex i with |P_i| = |P_i^+| = |P_i^-|.
struct Lemma1Report {
  struct CondA {
    int i = 0, j = 0;  // Omega^2(S_i) = S_j
  };
  std::optional<CondA> cond_a;
  std::optional<int> cond_b_arrow;   // arrow index
  std::optional<int> cond_c_vertex;
  bool equivalence_ok = false;       // all three present or all three absent
  // When the conditions hold the quiver must be a single loop or a
  // two-vertex cycle and the algebra is Nakayama of finite type.
  std::optional<std::string> finite_type_conclusion;
  bool conclusion_consistent = true;
  std::vector<std::pair<int, std::string>> simple_periods;
  bool certified = true;
};

Lemma1Report lemma1_report(const AlgebraTable& a, Prng& rng,
                           int period_bound = 12);

struct FamilySpec {
  Quiver quiver;
  std::vector<Relation> relations;
};

/// K[T]/(T^n), one vertex with one loop; n = 1 is the bare vertex since a
/// length-1 relation would not be admissible.
FamilySpec family_i(int n, const PrimeField& f);
/// Two vertices, arrows alpha: 1 -> 2 and beta: 2 -> 1, ideal generated by
/// (alpha beta)^n alpha and (beta alpha)^n beta.
FamilySpec family_ii(int n, const PrimeField& f);
/// Loop rho at vertex 1 plus the 2-cycle, ideal generated by rho alpha,
/// beta rho and alpha beta - rho^t (t >= 2).
FamilySpec family_iii(int t, const PrimeField& f);

struct ClassifyReport {
  std::string family = "none";  // "i" | "ii" | "iii" | "none"
  int parameter = 0;
  std::string evidence;
};

/// Matches the quiver against the three family shapes, extracts the
/// parameter from dimensions, and verifies the relation ideal equals the
/// generated family's ideal after rescaling arrows by units.
ClassifyReport classify_structural(const AlgebraTable& a);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyFamilyReport {
  ClassifyReport classified;
  std::vector<CheckLine> checks;
  bool all_pass = true;
  bool certified = true;
  int census_count = 0;
  int census_nonprojective = 0;
  bool census_exhaustive = true;
};

/// Runs the whole battery for a classified algebra: symmetrizing form, the
/// socle properties, per-family socle spans, the heart for family iii,
/// expected simple periods, and the census-based period check.
VerifyFamilyReport verify_family(const AlgebraTable& a,
                                 const ClassifyReport& expected, Prng& rng,
                                 const CensusOptions& census_opt);

}  // namespace omega4
