#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cadlag/oracles.hpp"
#include "cadlag/paths.hpp"
#include "cadlag/stieltjes.hpp"
#include "cadlag/witnesses.hpp"

using namespace cadlag;

namespace {

std::vector<double> probe_grid(const CadlagStep& x) {
  std::vector<double> grid;
  const auto& bk = x.breakpoints();
  for (std::size_t i = 0; i < bk.size(); ++i) {
    grid.push_back(bk[i]);
    double end = i + 1 < bk.size() ? bk[i + 1] : x.horizon();
    if (end > bk[i]) grid.push_back(0.5 * (bk[i] + end));
  }
  grid.push_back(x.horizon());
  return grid;
}

}  // namespace

TEST_CASE("eval is right-continuous with the endpoint convention") {
  CadlagStep x = CadlagStep::indicator(0.5, 1.0);
  CHECK(x.eval(0.49) == 0.0);
  CHECK(x.eval(0.5) == 1.0);
  CHECK(x.eval(1.0) == 1.0);
  CHECK_THROWS_AS(x.eval(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(x.eval(1.01), std::invalid_argument);
}

TEST_CASE("constructor validates and prunes zero jumps") {
  CHECK_THROWS_AS(CadlagStep(1.0, {0.1}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(CadlagStep(1.0, {0.0, 0.5, 0.5}, {0.0, 1.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CadlagStep(1.0, {0.0, 1.5}, {0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CadlagStep(-1.0, {0.0}, {0.0}), std::invalid_argument);

  CadlagStep pruned(1.0, {0.0, 0.25, 0.5}, {1.0, 1.0, 2.0});
  CHECK(pruned.segment_count() == 2);
  CHECK(pruned.breakpoints() == std::vector<double>{0.0, 0.5});
}

TEST_CASE("sup norm") {
  CHECK(sup_norm(CadlagStep::constant(3.0, 1.0)) == 3.0);
  CHECK(sup_norm(CadlagStep(1.0, {0.0, 0.3, 0.6}, {0.0, 5.0, -7.0})) == 7.0);

  CadlagStep x = random_step_path(11, 1000, 4.0, 1.0);
  double grid_max = 0.0;
  for (double t : probe_grid(x)) grid_max = std::max(grid_max, std::abs(x.eval(t)));
  CHECK(sup_norm(x) == grid_max);
}

TEST_CASE("total variation matches the partition supremum") {
  CHECK(total_variation(CadlagStep::constant(3.0, 1.0)) == 3.0);
  CHECK(total_variation(
            CadlagStep(1.0, {0.0, 0.25, 0.5, 0.75}, {0.0, 1.0, 0.0, 1.0})) ==
        3.0);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    CadlagStep v = random_step_path(seed, 1 + seed % 8, 2.0, 1.0);
    CHECK(total_variation(v) ==
          doctest::Approx(oracles::total_variation_bruteforce(v)).epsilon(1e-12));
  }
}

TEST_CASE("total variation of an integrator") {
  CHECK(total_variation(IntegratorPath::identity(1.0)) == 1.0);
  CHECK(total_variation(IntegratorPath({0.0, 0.5, 1.0}, {0.0, 1.0, 0.0})) == 2.0);
}

TEST_CASE("restrict keeps values and breakpoints left of the cut") {
  CadlagStep x = CadlagStep::indicator(0.5, 1.0);
  CHECK(restrict_path(x, 1.0) == x);
  CHECK(restrict_path(x, 0.25) == CadlagStep::constant(0.0, 0.25));
  CHECK_THROWS_AS(restrict_path(x, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(restrict_path(x, 1.5), std::invalid_argument);

  CadlagStep r = random_step_path(3, 16, 2.0, 1.0);
  CadlagStep cut = restrict_path(r, 0.6);
  for (double t : probe_grid(cut)) CHECK(cut.eval(t) == r.eval(t));
}

TEST_CASE("tilde embedding re-bases time with a zero prefix") {
  CHECK(extend_tilde(CadlagStep::constant(0.0, 1.0), 1.0) ==
        CadlagStep::constant(0.0, 3.0));
  CHECK(extend_tilde(CadlagStep::constant(1.0, 1.0), 1.0) ==
        CadlagStep::indicator(1.0, 3.0));

  CadlagStep x = random_step_path(5, 9, 2.0, 1.0);
  CadlagStep t = extend_tilde(x, 0.5);
  CHECK(t.horizon() == 2.0);
  CHECK(t.eval(0.0) == 0.0);
  CHECK(t.eval(0.49) == 0.0);
  CHECK(t.eval(1.7) == x.eval(1.0));
  CHECK(t.eval(2.0) == x.eval(1.0));
  for (double u : probe_grid(x))
    if (u < 1.0) CHECK(t.eval(0.5 + u) == x.eval(u));
  CHECK(sup_norm(t) == sup_norm(x));
}

TEST_CASE("linear combinations merge breakpoints and prune") {
  CadlagStep x = random_step_path(7, 7, 2.0, 1.0);
  CHECK(linear_combine(x, x, 1.0, -1.0) == CadlagStep::constant(0.0, 1.0));

  CadlagStep a = CadlagStep::indicator(0.3, 1.0);
  CadlagStep b = CadlagStep::indicator(0.7, 1.0);
  CadlagStep sum = linear_combine(a, b, 1.0, 1.0);
  CHECK(sum.breakpoints() == std::vector<double>{0.0, 0.3, 0.7});
  CHECK(sum.values() == std::vector<double>{0.0, 1.0, 2.0});
  CHECK_THROWS_AS(linear_combine(a, CadlagStep::constant(0.0, 2.0), 1.0, 1.0),
                  std::invalid_argument);

  CadlagStep y = random_step_path(8, 5, 2.0, 1.0);
  CadlagStep combo = linear_combine(x, y, 2.0, -0.5);
  for (double t : probe_grid(combo))
    CHECK(combo.eval(t) ==
          doctest::Approx(2.0 * x.eval(t) - 0.5 * y.eval(t)).epsilon(1e-12));

  CadlagStep z = random_step_path(9, 4, 2.0, 1.0);
  CadlagStep left = linear_combine(linear_combine(x, y, 1.0, 1.0), z, 1.0, 1.0);
  CadlagStep right = linear_combine(x, linear_combine(y, z, 1.0, 1.0), 1.0, 1.0);
  CHECK(sup_distance(left, right) <= 1e-12);
  CHECK(sup_distance(linear_combine(x, y, 1.0, 1.0),
                     linear_combine(y, x, 1.0, 1.0)) == 0.0);
}

TEST_CASE("integrator extension is constant and variation preserving") {
  IntegratorPath a = IntegratorPath::identity(1.0);
  CHECK(extend_integrator(a, 1.0) == a);
  IntegratorPath wide = extend_integrator(a, 2.0);
  CHECK(wide.fn().nodes() == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(wide.fn().values() == std::vector<double>{0.0, 1.0, 1.0});
  CHECK_THROWS_AS(extend_integrator(a, 0.5), std::invalid_argument);

  for (std::uint64_t seed = 20; seed < 40; ++seed) {
    CadlagStep density = random_step_path(seed, 6, 2.0, 1.0);
    IntegratorPath p = primitive_of_density(density);
    CHECK(extend_integrator(p, 3.0).total_variation() == p.total_variation());
  }
}

TEST_CASE("variation dominates the initial value and every jump") {
  for (std::uint64_t seed = 50; seed < 70; ++seed) {
    CadlagStep x = random_step_path(seed, 10, 3.0, 1.0);
    double tv = total_variation(x);
    CHECK(tv >= std::abs(x.values().front()));
    for (std::size_t i = 1; i < x.values().size(); ++i)
      CHECK(tv >= std::abs(x.values()[i] - x.values()[i - 1]));
  }
}

TEST_CASE("integrator requires A(0) = 0 and piecewise-linear sanity") {
  CHECK_THROWS_AS(IntegratorPath({0.0, 1.0}, {0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinear({0.5, 1.0}, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinear({0.0}, {0.0}), std::invalid_argument);

  PiecewiseLinear f({0.0, 0.5, 1.0}, {0.0, 1.0, -1.0});
  CHECK(f.eval(0.25) == doctest::Approx(0.5));
  CHECK(f.eval(0.5) == 1.0);
  CHECK(f.eval(1.0) == -1.0);
  CHECK(f.sup_norm() == 1.0);
  CHECK(f.total_variation() == 3.0);
}
