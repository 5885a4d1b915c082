#pragma once

// Simplex weights and the two scalarizations: the weighted sum
// sum_i xi_i f_i and the weighted max max_i xi_i f_i, plus the weight
// recovery formula for strictly positive objective values and randomized
// structural probes (weak-dominance and quasiconvexity spot checks).

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "paretoscope/problem.hpp"

namespace paretoscope {

inline constexpr double kInteriorEps = 1e-12;
inline constexpr double kZeroEps = 1e-9;

struct Weight {
  std::vector<double> coords;
  bool is_interior = false;
  std::vector<int> lattice;  // grid composition k (sum N) when grid-born
};

inline Weight make_weight(std::vector<double> coords) {
  if (coords.size() < 2) throw std::invalid_argument("weight needs at least 2 coordinates");
  double sum = 0.0;
  for (double c : coords) {
    if (c < 0.0) throw std::invalid_argument("weight coordinates must be nonnegative");
    if (!std::isfinite(c)) throw std::invalid_argument("weight coordinates must be finite");
    sum += c;
  }
  if (!(sum > 0.0)) throw std::invalid_argument("weight coordinates must not all vanish");
  Weight w;
  w.coords = std::move(coords);
  for (double& c : w.coords) c /= sum;
  w.is_interior = true;
  for (double c : w.coords)
    if (c <= kInteriorEps) w.is_interior = false;
  return w;
}

// All compositions k of N into m nonnegative parts, ascending
// lexicographically in (k_1, ..., k_m); coordinates are k_i / N.
inline std::vector<Weight> simplex_grid(int m, int N) {
  if (m < 2) throw std::invalid_argument("simplex_grid: m must be at least 2");
  if (N < 1) throw std::invalid_argument("simplex_grid: N must be at least 1");
  std::vector<Weight> grid;
  std::vector<int> k(m, 0);
  // recursive enumeration with explicit stack over positions
  std::vector<double> coords(m);
  auto emit = [&]() {
    for (int i = 0; i < m; ++i) coords[i] = static_cast<double>(k[i]) / N;
    Weight w = make_weight(coords);
    w.lattice = k;
    grid.push_back(std::move(w));
  };
  // iterate: first m-1 entries free, last absorbs the remainder
  std::vector<int> pos(m - 1, 0);
  for (;;) {
    int used = 0;
    bool ok = true;
    for (int i = 0; i < m - 1; ++i) {
      k[i] = pos[i];
      used += pos[i];
      if (used > N) { ok = false; break; }
    }
    if (ok) {
      k[m - 1] = N - used;
      emit();
    }
    // lexicographic increment with early pruning
    int i = m - 2;
    for (;;) {
      if (i < 0) return grid;
      ++pos[i];
      int prefix = 0;
      for (int j = 0; j <= i; ++j) prefix += pos[j];
      if (prefix <= N) break;
      pos[i] = 0;
      --i;
    }
  }
}

inline double weighted_sum(const VectorProblem& pb, const Weight& w,
                           const std::vector<double>& x) {
  std::vector<double> f = pb.evaluate(x);
  if (f.size() != w.coords.size())
    throw std::invalid_argument("weighted_sum: weight dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w.coords[i] * f[i];
  return s;
}

inline double weighted_max(const VectorProblem& pb, const Weight& w,
                           const std::vector<double>& x) {
  std::vector<double> f = pb.evaluate(x);
  if (f.size() != w.coords.size())
    throw std::invalid_argument("weighted_max: weight dimension mismatch");
  double s = -kInf;
  for (std::size_t i = 0; i < f.size(); ++i) s = std::max(s, w.coords[i] * f[i]);
  return s;
}

inline double scalarize(const VectorProblem& pb, ScalarizationKind kind, const Weight& w,
                        const std::vector<double>& x) {
  return kind == ScalarizationKind::WeightedSum ? weighted_sum(pb, w, x)
                                                : weighted_max(pb, w, x);
}

// For f with nonnegative entries, the weight whose weighted max picks x out:
// xi_i proportional to 1/f_i when all entries are strictly positive, else the
// unit vector at the first (near-)zero entry.
inline Weight recover_weight(const std::vector<double>& f) {
  if (f.size() < 2) throw std::invalid_argument("recover_weight: need at least 2 values");
  for (double v : f)
    if (v < 0.0)
      throw std::invalid_argument("recover_weight: requires nonnegative objective values");
  bool all_positive = true;
  std::size_t zero_at = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] <= kZeroEps) {
      all_positive = false;
      zero_at = i;
      break;
    }
  }
  std::vector<double> coords(f.size(), 0.0);
  if (all_positive) {
    double denom = 0.0;
    for (double v : f) denom += 1.0 / v;
    for (std::size_t i = 0; i < f.size(); ++i) coords[i] = (1.0 / f[i]) / denom;
  } else {
    coords[zero_at] = 1.0;
  }
  return make_weight(std::move(coords));
}

inline OracleValue oracle_eval(const VectorProblem& pb, const Weight& w,
                               double window_radius) {
  return oracle_eval(pb, w.coords, window_radius);
}

// ---- randomized probes ---------------------------------------------------

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<double> sample_box(std::mt19937_64& rng, int n, double radius) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = (2.0 * uniform01(rng) - 1.0) * radius;
  return x;
}

namespace detail {

// Sampling region for probes: the window, clipped to box constraints so box
// problems do not waste draws on infeasible space. Returns false when the
// clipped region is empty.
inline bool probe_region(const FeasibleSet& fs, int n, double radius,
                         std::vector<double>& lo, std::vector<double>& hi) {
  lo.assign(n, -radius);
  hi.assign(n, radius);
  if (fs.kind == FeasibleSet::Kind::Box) {
    for (int i = 0; i < n; ++i) {
      lo[i] = std::max(lo[i], fs.lower[i]);
      hi[i] = std::min(hi[i], fs.upper[i]);
      if (!(lo[i] <= hi[i])) return false;
    }
  }
  return true;
}

inline std::vector<double> sample_region(std::mt19937_64& rng, const std::vector<double>& lo,
                                         const std::vector<double>& hi) {
  std::vector<double> x(lo.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = lo[i] + (hi[i] - lo[i]) * uniform01(rng);
  return x;
}

} // namespace detail

struct WeakParetoResult {
  bool dominated = false;
  std::vector<double> dominator;  // strict improver in every criterion, if found
  long trials_completed = 0;
};

// Spot check: search the window for a feasible y strictly better than x in
// every criterion. Failure to find one is evidence, not proof.
inline WeakParetoResult is_weak_pareto(const VectorProblem& pb, const std::vector<double>& x,
                                       long trials, std::uint64_t seed,
                                       double window_radius = 4.0, double tol = 1e-9) {
  if (!pb.feasible.contains(x, 1e-9))
    throw std::invalid_argument("is_weak_pareto: point is not feasible");
  std::vector<double> fx = pb.evaluate(x);
  std::mt19937_64 rng(seed);
  WeakParetoResult res;
  std::vector<double> lo, hi;
  if (!detail::probe_region(pb.feasible, pb.n, window_radius, lo, hi)) return res;
  long attempts_cap = trials * 64;
  for (long a = 0; a < attempts_cap && res.trials_completed < trials; ++a) {
    std::vector<double> y = detail::sample_region(rng, lo, hi);
    if (!pb.feasible.contains(y, 0.0)) continue;
    std::vector<double> fy;
    try {
      fy = pb.evaluate(y);
    } catch (const EvalError&) {
      continue;
    }
    ++res.trials_completed;
    bool strictly_better = true;
    for (std::size_t i = 0; i < fx.size(); ++i) {
      if (!(fy[i] < fx[i] - tol)) {
        strictly_better = false;
        break;
      }
    }
    if (strictly_better) {
      res.dominated = true;
      res.dominator = std::move(y);
      return res;
    }
  }
  return res;
}

struct QcxCounterexample {
  std::vector<double> x, y;
  double t = 0.0;
};

struct QcxProbeResult {
  bool passed = true;
  long trials_completed = 0;
  std::optional<QcxCounterexample> counterexample;
};

// Random segment test of quasiconvexity on the feasible set within the
// window: g(x + t(y-x)) must not exceed max(g(x), g(y)) by more than slack.
inline QcxProbeResult quasiconvexity_probe(const Expr& g, const FeasibleSet& fs, long trials,
                                           std::uint64_t seed, double window_radius = 4.0,
                                           double slack = 1e-9) {
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(fs.witness.size());
  QcxProbeResult res;
  std::vector<double> lo, hi;
  if (!detail::probe_region(fs, n, window_radius, lo, hi)) return res;
  long attempts_cap = trials * 256;
  for (long a = 0; a < attempts_cap && res.trials_completed < trials; ++a) {
    std::vector<double> x = detail::sample_region(rng, lo, hi);
    std::vector<double> y = detail::sample_region(rng, lo, hi);
    double t = uniform01(rng);
    if (t <= 0.0 || t >= 1.0) continue;
    if (!fs.contains(x, 0.0) || !fs.contains(y, 0.0)) continue;
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] + t * (y[i] - x[i]);
    if (!fs.contains(z, 1e-12)) continue;
    double gx, gy, gz;
    try {
      gx = g.eval(x);
      gy = g.eval(y);
      gz = g.eval(z);
    } catch (const EvalError&) {
      continue;
    }
    ++res.trials_completed;
    if (gz > std::max(gx, gy) + slack) {
      res.passed = false;
      res.counterexample = QcxCounterexample{std::move(x), std::move(y), t};
      return res;
    }
  }
  return res;
}

} // namespace paretoscope
