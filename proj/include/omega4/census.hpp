#pragma once

#include <functional>
#include <string>
#include <vector>

#include "omega4/syzygy.hpp"

namespace omega4 {

/// Streams every matrix assignment over F_p on the given dimension vector
/// that satisfies the defining relations (and nilpotency at the
/// stabilization length), in a fixed deterministic order. Arrow matrices
/// are filled one arrow at a time, entries column-major; every constraint
/// whose arrows are all filled is checked before descending, which prunes
/// most of the raw p^entries space. Returns the number of valid modules.
/// Throws CapExceeded when the raw assignment count exceeds `budget`.
uint64_t enumerate_reps(const AlgebraTable& a, const std::vector<int>& dims,
                        double budget,
                        const std::function<void(const Rep&)>& callback);

/// Raw assignment count p^(total matrix entries) for a dimension vector.
double raw_assignment_count(const AlgebraTable& a, const std::vector<int>& dims);

struct CensusOptions {
  int max_total_dim = -1;      // <= 0 means dim Lambda
  double budget = 16777216.0;  // max raw assignments per dimension vector
  int period_bound = 12;
};

struct CensusEntry {
  std::string id;
  std::vector<int> dims;  // 1-based, dims[0] = 0
  Rep rep;                // first representative in enumeration order
  PeriodReport period;
  bool projective = false;
};

struct Census {
  int max_total_dim = 0;
  uint32_t p = 2;
  std::vector<CensusEntry> entries;
  bool exhaustive = true;  // every dimension vector <= D fully enumerated
  std::vector<std::vector<int>> skipped_dimvecs;
  bool certified = true;   // all iso/indecomposability verdicts certified

  int non_projective_count() const;
};

/// Enumerate all dimension vectors with total <= D, filter indecomposables,
/// dedup up to isomorphism, and compute each entry's period. Results do not
/// depend on the seed: representatives are fixed by enumeration order.
Census indecomposable_census(const AlgebraTable& a, const CensusOptions& opt,
                             Prng& rng);

struct ClosureResult {
  bool closed = true;
  bool boundary_flagged = false;  // some syzygy leaves the dimension bound
  std::vector<std::string> notes;
};

/// Checks that omega and cosyzygy of every non-projective entry land back
/// on census entries.
ClosureResult omega_closure_check(const AlgebraTable& a, const Census& c,
                                  const SymmetrizingForm& form, Prng& rng);

struct PeriodsDivideResult {
  bool ok = true;
  std::vector<std::string> exceptions;
};

PeriodsDivideResult all_periods_divide_4(const Census& c);

}  // namespace omega4
