#include "omega4/census.hpp"

#include <algorithm>

#include "omega4/error.hpp"

namespace omega4 {

double raw_assignment_count(const AlgebraTable& a, const std::vector<int>& dims) {
  double total = 1;
  for (const Arrow& ar : a.quiver.arrows) {
    int entries = dims[ar.dst] * dims[ar.src];
    for (int t = 0; t < entries; ++t) {
      total *= a.field.p;
      if (total > 1e18) return total;
    }
  }
  return total;
}

namespace {

// A constraint is a parallel linear combination of paths that must act as
// zero; defining relations and the nilpotency paths both take this shape.
struct Constraint {
  std::vector<std::pair<uint32_t, Path>> terms;
  int src = 0, dst = 0;
};

int max_arrow_used(const Constraint& c) {
  int m = -1;
  for (const auto& [coef, p] : c.terms)
    for (int ar : p.arrows) m = std::max(m, ar);
  return m;
}

bool constraint_holds(const Rep& partial, const Constraint& c) {
  const AlgebraTable& a = *partial.alg;
  Mat acc(a.field, partial.dims[c.dst], partial.dims[c.src]);
  for (const auto& [coef, p] : c.terms)
    acc = mat_add(acc, mat_scale(path_action(partial, p), coef));
  return acc.is_zero();
}

struct Enumerator {
  const AlgebraTable& a;
  const std::vector<int>& dims;
  const std::function<void(const Rep&)>& cb;
  std::vector<std::vector<Constraint>> schedule;  // per arrow
  Rep work;
  uint64_t count = 0;

  Enumerator(const AlgebraTable& alg, const std::vector<int>& d,
             const std::function<void(const Rep&)>& f)
      : a(alg), dims(d), cb(f) {
    schedule.resize(a.quiver.arrows.size());
    std::vector<Constraint> constraints;
    for (const Relation& r : a.relations)
      constraints.push_back(Constraint{r.terms, r.src, r.dst});
    for (const Path& w : a.all_paths())
      if (w.length() == a.stabilization_length)
        constraints.push_back(
            Constraint{{{1 % a.field.p, w}}, w.src, w.dst});
    for (Constraint& c : constraints) {
      int m = max_arrow_used(c);
      if (m >= 0) schedule[m].push_back(std::move(c));
      // Arrow-free constraints cannot occur: relations have length >= 2.
    }
    work.alg = &a;
    work.dims = dims;
    for (const Arrow& ar : a.quiver.arrows)
      work.action.emplace_back(a.field, dims[ar.dst], dims[ar.src]);
  }

  void fill_arrow(size_t k) {
    if (k == a.quiver.arrows.size()) {
      ++count;
      cb(work);
      return;
    }
    Mat& mat = work.action[k];
    int entries = mat.rows() * mat.cols();
    // Column-major odometer over all assignments of this arrow's matrix.
    auto entry_at = [&](int t) -> uint32_t& {
      return mat.at(t % std::max(mat.rows(), 1), t / std::max(mat.rows(), 1));
    };
    std::vector<int> digits(entries, 0);
    while (true) {
      bool ok = true;
      for (const Constraint& c : schedule[k])
        if (!constraint_holds(work, c)) { ok = false; break; }
      if (ok) fill_arrow(k + 1);
      int pos = 0;
      while (pos < entries) {
        digits[pos] = (digits[pos] + 1) % static_cast<int>(a.field.p);
        entry_at(pos) = static_cast<uint32_t>(digits[pos]);
        if (digits[pos] != 0) break;
        ++pos;
      }
      if (pos >= entries) break;
    }
    for (int t = 0; t < entries; ++t) entry_at(t) = 0;
  }
};

}  // namespace

uint64_t enumerate_reps(const AlgebraTable& a, const std::vector<int>& dims,
                        double budget,
                        const std::function<void(const Rep&)>& callback) {
  if (static_cast<int>(dims.size()) != a.quiver.num_vertices + 1)
    throw Error(ErrKind::Validation, "enumerate_reps: dims size mismatch");
  double raw = raw_assignment_count(a, dims);
  if (raw > budget)
    throw Error(ErrKind::CapExceeded,
                "dimension vector needs " + std::to_string(raw) +
                    " raw assignments, over the budget of " +
                    std::to_string(budget));
  Enumerator e(a, dims, callback);
  e.fill_arrow(0);
  return e.count;
}

namespace {

// Isomorphism-invariant fingerprint used to bucket candidates before the
// expensive pairwise test.
struct Fingerprint {
  std::vector<int> data;
  bool operator==(const Fingerprint& o) const { return data == o.data; }
};

Fingerprint fingerprint_of(const Rep& m) {
  Fingerprint fp;
  for (size_t v = 1; v < m.dims.size(); ++v) fp.data.push_back(m.dims[v]);
  for (int k = 1;; ++k) {
    std::vector<Mat> sub = radical_power_subspaces(m, k);
    int total = 0;
    for (size_t v = 1; v < sub.size(); ++v) {
      fp.data.push_back(sub[v].rows());
      total += sub[v].rows();
    }
    if (total == 0) break;
  }
  std::vector<Mat> soc = socle_subspaces(m);
  for (size_t v = 1; v < soc.size(); ++v) fp.data.push_back(soc[v].rows());
  fp.data.push_back(hom_dim(m, m));
  return fp;
}

std::vector<std::vector<int>> dimension_vectors(int num_vertices, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(num_vertices + 1, 0);
  std::function<void(int, int)> rec = [&](int v, int remaining) {
    if (v > num_vertices) {
      int total = 0;
      for (int x : cur) total += x;
      if (total > 0) out.push_back(cur);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      cur[v] = d;
      rec(v + 1, remaining - d);
    }
    cur[v] = 0;
  };
  rec(1, max_total);
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int ta = 0, tb = 0;
                     for (int x : a) ta += x;
                     for (int x : b) tb += x;
                     if (ta != tb) return ta < tb;
                     return a < b;
                   });
  return out;
}

}  // namespace

int Census::non_projective_count() const {
  int n = 0;
  for (const CensusEntry& e : entries)
    if (!e.projective) ++n;
  return n;
}

Census indecomposable_census(const AlgebraTable& a, const CensusOptions& opt,
                             Prng& rng) {
  Census census;
  census.p = a.field.p;
  census.max_total_dim = opt.max_total_dim > 0 ? opt.max_total_dim : a.dim();

  struct Seen {
    Fingerprint fp;
    Rep rep;
  };
  std::vector<Seen> seen;

  for (const std::vector<int>& dims :
       dimension_vectors(a.quiver.num_vertices, census.max_total_dim)) {
    if (raw_assignment_count(a, dims) > opt.budget) {
      census.exhaustive = false;
      census.skipped_dimvecs.push_back(dims);
      continue;
    }
    enumerate_reps(a, dims, opt.budget, [&](const Rep& candidate) {
      Rep cand = candidate;  // own a copy; the enumerator reuses its buffer
      Fingerprint fp = fingerprint_of(cand);
      for (const Seen& s : seen) {
        if (!(s.fp == fp)) continue;
        IsoResult iso = is_isomorphic(cand, s.rep, rng);
        census.certified = census.certified && iso.certified;
        if (iso.isomorphic) return;
      }
      SplitResult split = fitting_split(cand, rng);
      census.certified = census.certified && split.certified;
      if (split.parts.size() == 1) {
        CensusEntry entry;
        entry.id = "M" + std::to_string(census.entries.size());
        entry.dims = cand.dims;
        entry.rep = cand;
        entry.projective = is_projective_rep(cand);
        entry.period = omega_period(cand, opt.period_bound, rng, entry.id);
        census.certified = census.certified && entry.period.certified;
        census.entries.push_back(std::move(entry));
      }
      seen.push_back(Seen{fp, cand});
    });
  }
  return census;
}

ClosureResult omega_closure_check(const AlgebraTable& a, const Census& c,
                                  const SymmetrizingForm& form, Prng& rng) {
  (void)a;
  ClosureResult res;
  auto find_match = [&](const Rep& m) -> int {
    for (size_t i = 0; i < c.entries.size(); ++i) {
      IsoResult iso = is_isomorphic(m, c.entries[i].rep, rng);
      if (iso.isomorphic) return static_cast<int>(i);
    }
    return -1;
  };
  for (const CensusEntry& e : c.entries) {
    if (e.projective) continue;
    Rep w = omega(e.rep, rng);
    Rep wi = cosyzygy(e.rep, form, rng);
    for (const auto& [name, img] : {std::pair<std::string, const Rep*>{
                                        "omega", &w},
                                    {"cosyzygy", &wi}}) {
      int match = find_match(*img);
      if (match >= 0) continue;
      res.closed = false;
      if (img->total_dim() > c.max_total_dim) {
        res.boundary_flagged = true;
        res.notes.push_back(name + "(" + e.id + ") has dimension " +
                            std::to_string(img->total_dim()) +
                            ", above the census bound");
      } else {
        res.notes.push_back(name + "(" + e.id +
                            ") not found in the census despite fitting the "
                            "bound");
      }
    }
  }
  return res;
}

PeriodsDivideResult all_periods_divide_4(const Census& c) {
  PeriodsDivideResult r;
  for (const CensusEntry& e : c.entries) {
    if (e.projective) continue;
    if (!e.period.divides(4)) {
      r.ok = false;
      r.exceptions.push_back(e.id + ": period " + e.period.to_string());
    }
  }
  return r;
}

}  // namespace omega4
