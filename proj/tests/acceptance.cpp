// Acceptance suite: every release-gating property of the workbench, one
// numbered criterion per section, each printing a single PASS/FAIL line.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <vector>

#include "omega4/census.hpp"
#include "omega4/classify.hpp"
#include "omega4/cli.hpp"

using namespace omega4;

namespace {

struct Instance {
  std::string family;
  int param;
  uint32_t p;
};

std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (uint32_t p : {2u, 3u, 5u}) {
    for (int n = 2; n <= 5; ++n) out.push_back({"i", n, p});
    for (int n = 1; n <= 4; ++n) out.push_back({"ii", n, p});
    for (int t = 2; t <= 5; ++t) out.push_back({"iii", t, p});
  }
  return out;
}

AlgebraTable build_instance(const Instance& in) {
  PrimeField f(in.p);
  FamilySpec fs = in.family == "i"     ? family_i(in.param, f)
                  : in.family == "ii"  ? family_ii(in.param, f)
                                       : family_iii(in.param, f);
  return build_algebra(fs.quiver, fs.relations, f);
}

std::string tag(const Instance& in) {
  return in.family + "(" + std::to_string(in.param) + ")@p" +
         std::to_string(in.p);
}

int failures = 0;

void verdict(int criterion, bool pass, const std::string& label,
             const std::string& detail) {
  std::cout << "ACCEPT " << criterion << " " << (pass ? "PASS" : "FAIL") << " "
            << label;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

// ---------------------------------------------------------------------------
// 1. The three conditions are pairwise equivalent over the whole corpus:
//    all true for families i and ii, all false for family iii.
void criterion1() {
  Prng rng;
  bool ok = true;
  std::string detail;
  int count = 0;
  for (const Instance& in : corpus()) {
    AlgebraTable a = build_instance(in);
    Lemma1Report r = lemma1_report(a, rng);
    bool expect_true = in.family != "iii";
    bool all3 = r.cond_a && r.cond_b_arrow && r.cond_c_vertex;
    bool none3 = !r.cond_a && !r.cond_b_arrow && !r.cond_c_vertex;
    bool here = r.equivalence_ok && r.conclusion_consistent &&
                (expect_true ? all3 : none3);
    if (!here && ok) {
      ok = false;
      detail = "first failure at " + tag(in);
    }
    ++count;
  }
  verdict(1, ok, "lemma1-equivalence",
          ok ? std::to_string(count) + " algebras" : detail);
}

// ---------------------------------------------------------------------------
// 2. Four-term exactness and the dimension identity
//    |Omega^2(S_i)| + |P_i| = |P_i^+| + |S_i| = |P_i^-| + |S_i|
//    for every simple whose period divides 4.
void criterion2() {
  Prng rng;
  bool ok = true;
  std::string detail;
  int chains = 0;
  for (const Instance& in : corpus()) {
    AlgebraTable a = build_instance(in);
    for (int i = 1; i <= a.quiver.num_vertices; ++i) {
      PeriodReport pr = omega_period(simple(a, i), 12, rng);
      if (!(pr.kind == PeriodReport::Kind::Periodic && 4 % pr.period == 0))
        continue;
      FourTerm ft = four_term_sequence(a, i, rng);
      DimensionIdentity id = dimension_identity(a, i, rng);
      bool here = ft.exact && ft.images_match && id.holds;
      if (!here && ok) {
        ok = false;
        detail = "vertex " + std::to_string(i) + " of " + tag(in);
      }
      ++chains;
    }
  }
  verdict(2, ok, "exact-sequence-identity",
          ok ? std::to_string(chains) + " chains" : detail);
}

// ---------------------------------------------------------------------------
// 3. Exact period values per family, with the second-syzygy claims.
void criterion3() {
  Prng rng;
  bool ok = true;
  std::string detail;
  auto fail_at = [&](const Instance& in, const std::string& what) {
    if (ok) {
      ok = false;
      detail = what + " at " + tag(in);
    }
  };
  for (const Instance& in : corpus()) {
    AlgebraTable a = build_instance(in);
    if (in.family == "i") {
      PeriodReport r = omega_period(simple(a, 1), 12, rng);
      int want = in.param == 2 ? 1 : 2;
      if (!(r.kind == PeriodReport::Kind::Periodic && r.period == want))
        fail_at(in, "period(S)");
    } else if (in.family == "ii") {
      for (int i : {1, 2}) {
        PeriodReport r = omega_period(simple(a, i), 12, rng);
        if (!(r.kind == PeriodReport::Kind::Periodic && r.period == 4))
          fail_at(in, "period(S" + std::to_string(i) + ")");
      }
      Rep w2 = omega(omega(simple(a, 1), rng), rng);
      if (!is_isomorphic(w2, simple(a, 2), rng).isomorphic)
        fail_at(in, "omega2(S1) vs S2");
    } else {
      for (int i : {1, 2}) {
        PeriodReport r = omega_period(simple(a, i), 12, rng);
        if (!(r.kind == PeriodReport::Kind::Periodic && r.period == 4))
          fail_at(in, "period(S" + std::to_string(i) + ")");
      }
      Rep w2 = omega(omega(simple(a, 2), rng), rng);
      if (w2.total_dim() != in.param || w2.total_dim() == 1)
        fail_at(in, "omega2(S2) dimension");
    }
  }
  verdict(3, ok, "period-values", ok ? "" : detail);
}

// ---------------------------------------------------------------------------
// 4. Socle spans and the heart: soc(e_1 L) = <(alpha beta)^n> for family ii,
//    soc(e_2 L) = <beta alpha> and heart(P_2) = S_1 for family iii.
void criterion4() {
  Prng rng;
  bool ok = true;
  std::string detail;
  auto fail_at = [&](const Instance& in, const std::string& what) {
    if (ok) {
      ok = false;
      detail = what + " at " + tag(in);
    }
  };
  for (const Instance& in : corpus()) {
    if (in.family == "i") continue;
    AlgebraTable a = build_instance(in);
    const Quiver& q = a.quiver;
    if (in.family == "ii") {
      int n = in.param;
      std::vector<int> c1, c2;
      for (int k = 0; k < n; ++k) {
        c1.push_back(0);
        c1.push_back(1);
        c2.push_back(1);
        c2.push_back(0);
      }
      Mat w1 = row_space(Mat::from_rows(
          a.field, {a.expand_path(Path::of_arrows(q, c1))}, a.dim()));
      Mat w2 = row_space(Mat::from_rows(
          a.field, {a.expand_path(Path::of_arrows(q, c2))}, a.dim()));
      if (!subspace_equal(socle_of_projective(a, 1), w1))
        fail_at(in, "soc(P1)");
      if (!subspace_equal(socle_of_projective(a, 2), w2))
        fail_at(in, "soc(P2)");
    } else {
      Path ba = Path::of_arrows(q, {2, 1});
      Mat want = row_space(
          Mat::from_rows(a.field, {a.expand_path(ba)}, a.dim()));
      if (!subspace_equal(socle_of_projective(a, 2), want))
        fail_at(in, "soc(P2)");
      HeartResult h = heart(a, 2, rng);
      if (!is_isomorphic(h.rep, simple(a, 1), rng).isomorphic)
        fail_at(in, "heart(P2)");
    }
  }
  verdict(4, ok, "socle-and-heart", ok ? "" : detail);
}

// ---------------------------------------------------------------------------
// 5. tau = omega^2 on every non-projective indecomposable we can reach:
//    the complete uniserial list for the Nakayama families i and ii (all
//    parameters, all primes), and the brute-force census for family iii
//    within the enumeration budget.
void criterion5() {
  Prng rng;
  bool ok = true;
  std::string detail;
  int checked = 0;
  auto check_modules = [&](const AlgebraTable& a,
                           const std::vector<LabeledRep>& mods,
                           const Instance& in) {
    FormSearchResult form = find_symmetrizing_form(a);
    if (!form.form) {
      if (ok) {
        ok = false;
        detail = "no symmetrizing form at " + tag(in);
      }
      return;
    }
    for (const LabeledRep& lm : mods) {
      if (is_projective_rep(lm.rep)) continue;
      Rep t = tau(lm.rep, *form.form, rng);
      Rep w2 = omega(omega(lm.rep, rng), rng);
      if (!is_isomorphic(t, w2, rng).isomorphic) {
        if (ok) {
          ok = false;
          detail = lm.label + " at " + tag(in);
        }
      }
      ++checked;
    }
  };
  for (const Instance& in : corpus()) {
    AlgebraTable a = build_instance(in);
    if (in.family != "iii") {
      check_modules(a, projective_radical_quotients(a), in);
    } else if (in.p == 5) {
      // enumeration over F_5 is out of budget; the syzygy orbits of the
      // simples are still reachable directly
      std::vector<LabeledRep> mods;
      for (int i : {1, 2}) {
        Rep cur = simple(a, i);
        for (int k = 0; k < 4; ++k) {
          mods.push_back({"omega^" + std::to_string(k) + "(S" +
                              std::to_string(i) + ")",
                          cur});
          cur = omega(cur, rng);
        }
      }
      check_modules(a, mods, in);
    } else {
      CensusOptions opt;
      opt.max_total_dim = in.p == 2 ? std::min(a.dim(), 5) : 4;
      opt.budget = std::pow(2.0, 24);
      Census c = indecomposable_census(a, opt, rng);
      std::vector<LabeledRep> mods;
      for (const CensusEntry& e : c.entries) mods.push_back({e.id, e.rep});
      check_modules(a, mods, in);
    }
  }
  verdict(5, ok, "tau-is-omega-squared",
          ok ? std::to_string(checked) + " modules" : detail);
}

// ---------------------------------------------------------------------------
// 6. The two pinned finite-type censuses, under 60 seconds.
void criterion6() {
  auto start = std::chrono::steady_clock::now();
  Prng rng;
  bool ok = true;
  std::string detail;

  {
    PrimeField f(2);
    FamilySpec fs = family_ii(1, f);
    AlgebraTable a = build_algebra(fs.quiver, fs.relations, f);
    CensusOptions opt;
    opt.max_total_dim = 3;
    Census c = indecomposable_census(a, opt, rng);
    FormSearchResult form = find_symmetrizing_form(a);
    bool here = c.entries.size() == 6 && c.non_projective_count() == 4 &&
                c.exhaustive && all_periods_divide_4(c).ok && form.form &&
                omega_closure_check(a, c, *form.form, rng).closed;
    if (!here) {
      ok = false;
      detail = "family ii n=1: count " + std::to_string(c.entries.size());
    }
  }
  {
    PrimeField f(2);
    FamilySpec fs = family_i(3, f);
    AlgebraTable a = build_algebra(fs.quiver, fs.relations, f);
    CensusOptions opt;
    opt.max_total_dim = 3;
    Census c = indecomposable_census(a, opt, rng);
    int proj = 0, period2 = 0;
    for (const CensusEntry& e : c.entries) {
      if (e.projective) ++proj;
      else if (e.period.kind == PeriodReport::Kind::Periodic &&
               e.period.period == 2)
        ++period2;
    }
    if (!(c.entries.size() == 3 && proj == 1 && period2 == 2)) {
      ok = false;
      detail = "family i n=3: count " + std::to_string(c.entries.size());
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  if (secs >= 60.0) {
    ok = false;
    detail = "runtime " + std::to_string(secs) + "s";
  }
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << secs << "s";
  verdict(6, ok, "finite-type-census", ok ? d.str() : detail);
}

// ---------------------------------------------------------------------------
// 7. Census vs. the independent uniserial oracle on the Nakayama families:
//    within the reachable dimension bound the two module lists agree.
void criterion7() {
  Prng rng;
  bool ok = true;
  std::string detail;
  int compared = 0;
  for (const Instance& in : corpus()) {
    if (in.family == "iii") continue;
    AlgebraTable a = build_instance(in);
    if (!has_uniserial_projectives(a)) {
      ok = false;
      detail = tag(in) + " not uniserial";
      break;
    }
    double budget = std::pow(2.0, 22);
    // largest bound whose dimension vectors all fit in the budget
    int feasible = 0;
    for (int d = 1; d <= a.dim(); ++d) {
      bool fits = true;
      std::vector<int> dims(a.quiver.num_vertices + 1, 0);
      std::function<bool(int, int)> any_over = [&](int v, int rem) {
        if (v > a.quiver.num_vertices)
          return raw_assignment_count(a, dims) > budget;
        for (int x = 0; x <= rem; ++x) {
          dims[v] = x;
          if (any_over(v + 1, rem - x)) { dims[v] = 0; return true; }
        }
        dims[v] = 0;
        return false;
      };
      fits = !any_over(1, d);
      if (fits) feasible = d;
      else break;
    }
    if (feasible == 0) continue;
    CensusOptions opt;
    opt.max_total_dim = feasible;
    opt.budget = budget;
    Census c = indecomposable_census(a, opt, rng);
    std::vector<LabeledRep> oracle;
    for (const LabeledRep& q : projective_radical_quotients(a))
      if (q.rep.total_dim() <= feasible) oracle.push_back(q);
    bool here = c.exhaustive && c.entries.size() == oracle.size();
    if (here) {
      for (const LabeledRep& q : oracle) {
        bool found = false;
        for (const CensusEntry& e : c.entries)
          if (is_isomorphic(q.rep, e.rep, rng).isomorphic) {
            found = true;
            break;
          }
        if (!found) here = false;
      }
    }
    if (!here && ok) {
      ok = false;
      detail = tag(in) + " (census " + std::to_string(c.entries.size()) +
               " vs oracle " + std::to_string(oracle.size()) + " at D=" +
               std::to_string(feasible) + ")";
    }
    ++compared;
  }
  verdict(7, ok, "census-vs-uniserial-oracle",
          ok ? std::to_string(compared) + " instances" : detail);
}

// ---------------------------------------------------------------------------
// 8. Negative controls: the one-arrow algebra is certified not symmetric
//    and fails the socle-bigrading property; a never-stabilizing ideal
//    exits with code 3.
void criterion8() {
  bool ok = true;
  std::string detail;

  Quiver q;
  q.num_vertices = 2;
  q.arrows = {Arrow{"a", 1, 2}};
  AlgebraTable a2 = build_algebra(q, {}, PrimeField(2));
  FormSearchResult form = find_symmetrizing_form(a2);
  if (form.form || !form.certified) {
    ok = false;
    detail = "one-arrow algebra not refuted";
  }
  PropertyBResult pb = check_property_b(a2);
  if (pb.holds || !pb.witness || pb.witness->i != 1 || pb.witness->j != 2) {
    ok = false;
    detail = "socle-bigrading not violated where expected";
  }

  std::ostringstream out, err;
  int code = run_cli({"check", std::string(FIXTURES_DIR) +
                                   "/loop_no_relations.alg"},
                     out, err);
  if (code != 3) {
    ok = false;
    detail = "non-stabilizing ideal exited with " + std::to_string(code);
  }
  verdict(8, ok, "negative-controls", ok ? "" : detail);
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::cout << "SUMMARY " << (8 - failures) << "/8 criteria passed in "
            << static_cast<int>(secs) << "s" << std::endl;
  return failures == 0 ? 0 : 1;
}
