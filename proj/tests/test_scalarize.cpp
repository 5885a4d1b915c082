#include "doctest.h"

#include <cmath>
#include <set>

#include "paretoscope/builtins.hpp"
#include "paretoscope/scalarize.hpp"

using namespace paretoscope;

namespace {

long long choose(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST_CASE("make_weight normalizes and flags the interior") {
  Weight w = make_weight({2.0, 2.0});
  CHECK(w.coords[0] == doctest::Approx(0.5));
  CHECK(w.coords[1] == doctest::Approx(0.5));
  CHECK(w.is_interior);

  Weight v = make_weight({1.0, 0.0});
  CHECK(v.coords[0] == doctest::Approx(1.0));
  CHECK_FALSE(v.is_interior);

  CHECK_THROWS_AS(make_weight({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_weight({1.0, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_weight({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("simplex grid size and order") {
  for (int m : {2, 3, 4}) {
    for (int N : {1, 4, 9}) {
      std::vector<Weight> g = simplex_grid(m, N);
      CHECK(static_cast<long long>(g.size()) == choose(N + m - 1, m - 1));
      for (const Weight& w : g) {
        REQUIRE(static_cast<int>(w.coords.size()) == m);
        REQUIRE(static_cast<int>(w.lattice.size()) == m);
        int s = 0;
        double cs = 0.0;
        for (int i = 0; i < m; ++i) {
          s += w.lattice[i];
          cs += w.coords[i];
          CHECK(w.coords[i] == doctest::Approx(w.lattice[i] / double(N)));
        }
        CHECK(s == N);
        CHECK(cs == doctest::Approx(1.0));
      }
      for (std::size_t i = 1; i < g.size(); ++i)
        CHECK(g[i - 1].lattice < g[i].lattice);
    }
  }
  CHECK(simplex_grid(2, 4).size() == 5);
  CHECK(simplex_grid(3, 4).size() == 15);
}

TEST_CASE("interior flags on the grid") {
  std::vector<Weight> g = simplex_grid(2, 4);
  CHECK_FALSE(g.front().is_interior); // (0,4)
  CHECK_FALSE(g.back().is_interior);  // (4,0)
  CHECK(g[1].is_interior);
  CHECK(g[2].is_interior);
  CHECK(g[3].is_interior);
}

TEST_CASE("weighted sum and weighted max") {
  VectorProblem pb = builtin("nonconvex_quartic");
  Weight w = make_weight({0.25, 0.75});
  std::vector<double> x = {2.0, 3.0};
  std::vector<double> f = pb.evaluate(x); // (10, 1)
  CHECK(weighted_sum(pb, w, x) == doctest::Approx(0.25 * 10.0 + 0.75 * 1.0));
  CHECK(weighted_max(pb, w, x) == doctest::Approx(std::max(0.25 * 10.0, 0.75 * 1.0)));
  CHECK(scalarize(pb, ScalarizationKind::WeightedSum, w, x) ==
        doctest::Approx(weighted_sum(pb, w, x)));
  CHECK(scalarize(pb, ScalarizationKind::WeightedMax, w, x) ==
        doctest::Approx(weighted_max(pb, w, x)));
}

TEST_CASE("recover_weight equalizes positive objective vectors") {
  std::mt19937_64 rng(17);
  for (int m : {2, 3, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> f(m);
      for (double& v : f) v = 1e-3 + 10.0 * uniform01(rng);
      std::vector<double> xi = recover_weight(f).coords;
      double sum = 0.0;
      for (double v : xi) {
        CHECK(v > 0.0);
        sum += v;
      }
      CHECK(std::fabs(sum - 1.0) < 1e-12);
      // all products equal: xi_i f_i = 1 / sum_j (1/f_j)
      double inv_sum = 0.0;
      for (double v : f) inv_sum += 1.0 / v;
      double expect = 1.0 / inv_sum;
      for (int i = 0; i < m; ++i)
        CHECK(std::fabs(xi[i] * f[i] - expect) <= 1e-12 * (1.0 + expect));
    }
  }
}

TEST_CASE("recover_weight at a vanishing coordinate") {
  std::vector<double> xi = recover_weight({0.0, 3.0}).coords;
  CHECK(xi[0] == doctest::Approx(1.0));
  CHECK(xi[1] == doctest::Approx(0.0));
  std::vector<double> xj = recover_weight({5.0, 1e-12}).coords;
  CHECK(xj[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(recover_weight({-1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("weak Pareto probe accepts known solutions and rejects dominated points") {
  VectorProblem pb = builtin("rectangle_identity");
  // origin corner: nothing in the rectangle strictly improves both coordinates
  WeakParetoResult at_corner = is_weak_pareto(pb, {-1.0, 0.0}, 400, 5);
  CHECK_FALSE(at_corner.dominated);
  CHECK(at_corner.trials_completed == 400);
  // interior point is strictly dominated
  WeakParetoResult inside = is_weak_pareto(pb, {-0.25, 0.75}, 400, 5);
  CHECK(inside.dominated);
  REQUIRE(inside.dominator.size() == 2);
  CHECK(inside.dominator[0] < -0.25);
  CHECK(inside.dominator[1] < 0.75);
  CHECK_THROWS_AS(is_weak_pareto(pb, {3.0, 3.0}, 10, 5), std::invalid_argument);
}

TEST_CASE("quasiconvexity probe passes quasiconvex pieces and flags violations") {
  VectorProblem wb = builtin("warburton_quasiconvex");
  for (const Expr& g : wb.objectives) {
    QcxProbeResult r = quasiconvexity_probe(g, wb.feasible, 500, 11);
    CHECK(r.passed);
    CHECK(r.trials_completed == 500);
  }
  // x1^4 - 2*x2 restricted to the plane is not quasiconvex? It is convex, use a
  // genuinely non-quasiconvex function instead: -x1^2 has sublevel sets
  // {|x1| >= c}, which are disconnected on a symmetric box.
  Expr bad = Expr::parse("-x1^2");
  FeasibleSet box = FeasibleSet::box({-2.0, -2.0}, {2.0, 2.0}, {0.0, 0.0});
  QcxProbeResult r = quasiconvexity_probe(bad, box, 2000, 11);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample.has_value());
  const QcxCounterexample& ce = *r.counterexample;
  std::vector<double> z(ce.x.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = ce.x[i] + ce.t * (ce.y[i] - ce.x[i]);
  CHECK(bad.eval(z) > std::max(bad.eval(ce.x), bad.eval(ce.y)));
}

TEST_CASE("uniform01 is deterministic and in range") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    double u = uniform01(a);
    double v = uniform01(b);
    CHECK(u == v);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("sample_box stays in the box") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> x = sample_box(rng, 3, 7.5);
    REQUIRE(x.size() == 3);
    for (double c : x) {
      CHECK(c >= -7.5);
      CHECK(c <= 7.5);
    }
  }
}
