#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cadlag/catalog.hpp"
#include "cadlag/convergence.hpp"
#include "cadlag/oracles.hpp"
#include "cadlag/witnesses.hpp"

using namespace cadlag;

namespace {

PathSequence spike_sequence(double horizon = 1.0) {
  return {[horizon](int n) { return figure1_spikes(n + 2, horizon); },
          CadlagStep::constant(0.0, horizon)};
}

std::vector<IntegratorSequence> small_catalog(double horizon) {
  std::vector<IntegratorSequence> catalog;
  catalog.push_back(
      constant_integrator_sequence("identity", IntegratorPath::identity(horizon)));
  for (auto& e : hat_primitive_entries(horizon, 2)) catalog.push_back(std::move(e));
  return catalog;
}

}  // namespace

TEST_CASE("witness check accepts exact witnesses and the spike family") {
  CadlagStep x0 = CadlagStep::indicator(0.25, 1.0);
  PathSequence constant = constant_path_sequence(x0);
  WitnessFamily exact{0.5, [x0](int) { return x0; }, x0};
  CHECK(s_witness_check(constant, exact, 32, 0.05).pass);

  PathSequence spikes = spike_sequence();
  WitnessFamily self{0.5, spikes.terms, CadlagStep::constant(0.0, 1.0)};
  ConvergenceReport r =
      s_witness_check(spikes, self, 128, 0.1, default_test_family(1.0, 3));
  CHECK(r.pass);
  CHECK(r.mode == "s-witness");
  CHECK(r.epsilon == 0.5);
}

TEST_CASE("witness check reports the closeness violation index") {
  PathSequence growing{
      [](int n) { return CadlagStep::indicator(0.5, 1.0, n); },
      CadlagStep::constant(0.0, 1.0)};
  WitnessFamily zeros{2.0, [](int) { return CadlagStep::constant(0.0, 1.0); },
                      CadlagStep::constant(0.0, 1.0)};
  ConvergenceReport r = s_witness_check(growing, zeros, 16, 0.05);
  CHECK_FALSE(r.pass);
  CHECK(r.witness->object == "eq1");
  CHECK(r.witness->index == 3);  // first n with n > eps = 2
}

TEST_CASE("dual test on constant, spike and misdeclared-limit sequences") {
  CadlagStep x0 = CadlagStep::indicator(0.25, 1.0);
  CHECK(s_dual_test(constant_path_sequence(x0), small_catalog(1.0), 32, 0.05).pass);

  ConvergenceReport spikes_pass =
      s_dual_test(spike_sequence(), small_catalog(1.0), 64, 0.05);
  CHECK(spikes_pass.pass);

  // true S-limit is the half indicator, zero is declared instead
  PathSequence wrong{
      [](int n) { return CadlagStep::indicator(0.5 - 1.0 / (n + 2.0), 1.0); },
      CadlagStep::constant(0.0, 1.0)};
  ConvergenceReport r = s_dual_test(wrong, small_catalog(1.0), 64, 0.05);
  CHECK_FALSE(r.pass);
  for (const MarginCurve& c : r.curves)
    if (c.id == "identity")
      CHECK(c.margins.back() ==
            doctest::Approx(0.5 + 1.0 / 66.0).epsilon(1e-12));
}

TEST_CASE("dual test rejects a catalog entry that is not tau-convergent") {
  IntegratorSequence drifting{"drifting",
                              [](int) { return IntegratorPath::identity(1.0); },
                              IntegratorPath::zero(1.0)};
  CHECK_THROWS_AS(
      s_dual_test(spike_sequence(), {drifting}, 32, 0.05),
      std::invalid_argument);
}

TEST_CASE("seminorms and their uniform convergence") {
  std::vector<IntegratorPath> family{IntegratorPath::identity(1.0)};
  CHECK(sigma_seminorm(CadlagStep::constant(0.0, 1.0), family) == 0.0);
  CHECK(sigma_seminorm(CadlagStep::constant(1.0, 1.0), family) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rho_endpoint(CadlagStep::indicator(0.5, 1.0, -2.0)) == 2.0);
  CHECK_THROWS_AS(sigma_seminorm(CadlagStep::constant(0.0, 1.0), {}),
                  std::invalid_argument);

  std::vector<IntegratorPath> ten;
  for (int k = 1; k <= 10; ++k)
    ten.push_back(primitive_of_density(random_step_path(k, 5, 2.0, 1.0)));
  CadlagStep x = random_step_path(77, 9, 2.0, 1.0);
  double by_hand = 0.0;
  for (const IntegratorPath& a : ten)
    by_hand = std::max(by_hand, std::abs(integrate_x_dA(x, a)));
  CHECK(sigma_seminorm(x, ten) == by_hand);

  CHECK(uniform_seminorm_convergence(constant_path_sequence(x), ten, 32, 0.05)
            .pass);

  std::vector<IntegratorPath> hats;
  for (auto& e : hat_primitive_entries(1.0, 3)) hats.push_back(e.limit);
  CHECK(uniform_seminorm_convergence(spike_sequence(), hats, 64, 0.05).pass);

  PathSequence ones{[](int) { return CadlagStep::constant(1.0, 1.0); },
                    CadlagStep::constant(0.0, 1.0)};
  ConvergenceReport fail = uniform_seminorm_convergence(ones, family, 16, 0.05);
  CHECK_FALSE(fail.pass);
  CHECK(fail.witness->margin == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("compactness bounds and growth flags") {
  std::vector<CadlagStep> shrinking, growing, teeth;
  for (int n = 1; n <= 50; ++n) {
    shrinking.push_back(CadlagStep::indicator(1.0 / (n + 1), 1.0));
    growing.push_back(CadlagStep::constant(n, 1.0));
    teeth.push_back(sawtooth_path(n, 0.0, 1.0, 1.0));
  }
  std::vector<std::pair<double, double>> bands{{0.25, 0.75}};
  CompactnessReport ok = relative_s_compactness(shrinking, bands, {0.5}, {0.5});
  CHECK(ok.sup_norm.full == 1.0);
  CHECK_FALSE(ok.sup_norm.flag);
  CHECK(ok.upcrossings[0].bound.full <= 1.0);
  CHECK(ok.bounded_i());
  CHECK(ok.bounded_ii());
  CHECK(ok.bounded_iii());

  CompactnessReport blow = relative_s_compactness(growing, bands, {0.5}, {0.5});
  CHECK(blow.sup_norm.flag);
  CHECK_FALSE(blow.bounded_i());
  CHECK_FALSE(blow.bounded_ii());

  CompactnessReport saw = relative_s_compactness(teeth, bands, {0.5}, {0.5});
  CHECK(saw.upcrossings[0].bound.flag);
  CHECK(saw.oscillations[0].bound.flag);
  CHECK(saw.bounded_i() == saw.bounded_ii());
  CHECK_FALSE(saw.bounded_i());
  CHECK_THROWS_AS(relative_s_compactness(teeth, {}, {0.5}, {0.5}),
                  std::invalid_argument);
}

TEST_CASE("J1 brackets on pinned pairs") {
  CadlagStep x = CadlagStep::indicator(0.5, 1.0);
  DistanceBounds same = j1_distance_bounds(x, x);
  CHECK(same.lower == 0.0);
  CHECK(same.upper == 0.0);

  CadlagStep y = CadlagStep::indicator(0.6, 1.0);
  DistanceBounds shift = j1_distance_bounds(x, y);
  CHECK(shift.lower <= doctest::Approx(0.1));
  CHECK(shift.upper >= shift.lower);
  CHECK(shift.upper == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(shift.lower == doctest::Approx(0.1).epsilon(1e-12));

  DistanceBounds spike =
      j1_distance_bounds(figure1_spikes(16, 1.0), CadlagStep::constant(0.0, 1.0));
  CHECK(spike.lower >= 1.0 - 1e-12);
  CHECK_THROWS_AS(j1_distance_bounds(x, CadlagStep::constant(0.0, 2.0)),
                  std::invalid_argument);
}

TEST_CASE("J1 brackets against the lattice time-change oracle") {
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    CadlagStep x = random_step_path(seed, 3, 1.0, 1.0);
    CadlagStep y = random_step_path(seed + 61, 3, 1.0, 1.0);
    DistanceBounds b = j1_distance_bounds(x, y);
    double oracle = oracles::j1_grid_search(x, y, 6);
    CHECK(b.lower <= oracle + 1e-9);
    CHECK(b.lower <= b.upper + 1e-12);

    DistanceBounds swapped = j1_distance_bounds(y, x);
    CHECK(b.lower == doctest::Approx(swapped.lower).epsilon(1e-12));
    CHECK(b.upper == doctest::Approx(swapped.upper).epsilon(1e-12));
  }
}

TEST_CASE("uniform implies J1 implies mJ1 on the bound level") {
  for (std::uint64_t seed = 540; seed < 560; ++seed) {
    CadlagStep x = random_step_path(seed, 6, 2.0, 1.0);
    CadlagStep y = random_step_path(seed + 7, 5, 2.0, 1.0);
    DistanceBounds j1 = j1_distance_bounds(x, y);
    DistanceBounds mj1 = mj1_distance_bounds(x, y, 1.0);
    CHECK(j1.upper <= sup_distance(x, y) + 1e-12);
    CHECK(mj1.upper <= j1.upper + 1e-12);
    CHECK(mj1.lower <= mj1.upper + 1e-12);
  }
}

TEST_CASE("drifting jump converges in mJ1 but not in J1") {
  CadlagStep ones = CadlagStep::constant(1.0, 1.0);
  for (int n : {2, 8, 32, 64}) {
    DistanceBounds mj1 = mj1_distance_bounds(figure2_jumps(n, 1.0), ones, 1.0);
    CHECK(mj1.upper == doctest::Approx(1.0 / n).epsilon(1e-9));
    DistanceBounds j1 = j1_distance_bounds(figure2_jumps(n, 1.0), ones);
    CHECK(j1.lower >= 1.0 - 1e-12);
  }

  PathSequence jumps{[](int n) { return figure2_jumps(n, 1.0); }, ones};
  CHECK(mj1_convergence_test(jumps, 64, 0.05, 1.0).pass);
  ConvergenceReport j1r = j1_convergence_test(jumps, 64, 0.05);
  CHECK_FALSE(j1r.pass);
  CHECK(j1r.witness->margin >= 1.0 - 1e-12);
  CHECK(uniform_convergence_test(jumps, 16, 0.05).pass == false);
}

TEST_CASE("mJ1 modulus on pinned families") {
  CHECK(mj1_compactness_modulus({CadlagStep::constant(3.0, 1.0)}, 0.5) == 0.0);
  CHECK(mj1_compactness_modulus({CadlagStep::indicator(0.5, 1.0)}, 0.4) == 0.0);

  CadlagStep doubled(1.0, {0.0, 0.5, 0.55}, {0.0, 1.0, 0.0});
  CHECK(mj1_compactness_modulus({doubled}, 0.1) == 1.0);
  CHECK(mj1_compactness_modulus({doubled}, 0.04) == 0.0);

  // origin-adjacent pair through the x(0-) = 0 convention
  CadlagStep early(1.0, {0.0, 0.05}, {1.0, 2.0});
  CHECK(mj1_compactness_modulus({early}, 0.2) == 1.0);
  CHECK_THROWS_AS(mj1_compactness_modulus({early}, 0.0), std::invalid_argument);
}

TEST_CASE("S lower semicontinuity of the sup norm on passing sequences") {
  PathSequence spikes = spike_sequence();
  ConvergenceReport r = s_dual_test(spikes, small_catalog(1.0), 64, 0.05);
  REQUIRE(r.pass);
  double tail_min = std::numeric_limits<double>::infinity();
  for (int n = 32; n <= 64; ++n)
    tail_min = std::min(tail_min, sup_norm(spikes.terms(n)));
  CHECK(sup_norm(spikes.limit) <= tail_min + 0.05);
}

TEST_CASE("J1 convergence implies the dual S test passes") {
  for (int variant = 0; variant < 20; ++variant) {
    double a = 0.5 + 0.1 * (variant % 5);
    double u = 0.2 + 0.03 * (variant % 7);
    double d = 0.05 + 0.02 * (variant % 4);
    bool drift_time = variant % 2 == 0;
    PathSequence seq{[a, u, d, drift_time](int n) {
                       return drift_time
                                  ? CadlagStep::indicator(u + d / (n + 1.0), 1.0, a)
                                  : CadlagStep::indicator(u, 1.0,
                                                          a + 1.0 / (n + 1.0));
                     },
                     CadlagStep::indicator(u, 1.0, a)};
    ConvergenceReport j1 = j1_convergence_test(seq, 32, 0.1);
    REQUIRE(j1.pass);
    ConvergenceReport dual =
        s_dual_test(seq, default_dual_catalog(seq, 32, 0.1), 32, 0.1);
    CHECK(dual.pass);
  }
}

TEST_CASE("infinite-horizon battery over a horizon grid") {
  auto catalog_factory = [](double t) {
    std::vector<IntegratorSequence> cat;
    cat.push_back(
        constant_integrator_sequence("identity", IntegratorPath::identity(t)));
    return cat;
  };

  PathSequence constant = constant_path_sequence(CadlagStep::indicator(0.5, 8.0));
  CHECK(infinite_horizon_s_test(constant, {1.0, 2.0, 4.0}, catalog_factory, 16,
                                0.05)
            .pass);

  PathSequence growing{[](int n) { return CadlagStep::constant(n, 8.0); },
                       CadlagStep::constant(0.0, 8.0)};
  ConvergenceReport r =
      infinite_horizon_s_test(growing, {1.0, 2.0, 4.0}, catalog_factory, 16, 0.05);
  CHECK_FALSE(r.pass);
  CHECK(r.witness->object.rfind("T=1.0", 0) == 0);
  CHECK_THROWS_AS(
      infinite_horizon_s_test(constant, {}, catalog_factory, 16, 0.05),
      std::invalid_argument);
}

TEST_CASE("componentwise verdicts reduce to the scalar test") {
  auto catalog = small_catalog(1.0);
  PathSequence scalar = spike_sequence();
  ConvergenceReport scalar_r = s_dual_test(scalar, catalog, 32, 0.05);

  ConvergenceReport one_dim = multidim_s_test(
      [](int n) { return MultiPath({figure1_spikes(n + 2, 1.0)}); },
      MultiPath({CadlagStep::constant(0.0, 1.0)}), catalog, 32, 0.05);
  CHECK(one_dim.pass == scalar_r.pass);

  MultiPath limit2(std::vector<CadlagStep>{CadlagStep::constant(0.0, 1.0),
                                           CadlagStep::constant(0.0, 1.0)});
  ConvergenceReport mixed = multidim_s_test(
      [](int n) {
        return MultiPath({figure1_spikes(n + 2, 1.0), CadlagStep::constant(n, 1.0)});
      },
      limit2, catalog, 32, 0.05);
  CHECK_FALSE(mixed.pass);
  CHECK(mixed.witness->object.rfind("component 2", 0) == 0);
}

TEST_CASE("a-posteriori wrapper: rate tester, equality tester, alternation") {
  // endpoint gap 2/n on odd indices, 0.5/n on even ones; the rate tester
  // demands |x_i(T)| <= 1/i along the reindexed subsequence
  PathSequence mixed_rate{
      [](int n) {
        double gap = (n % 2 == 1 ? 2.0 : 0.5) / n;
        return CadlagStep::constant(gap, 1.0);
      },
      CadlagStep::constant(0.0, 1.0)};
  SequenceTester rate = [](const PathSequence& seq, int depth) {
    for (int i = 1; i <= depth; ++i)
      if (std::abs(seq.terms(i).end_value()) > 1.0 / i) return false;
    return true;
  };
  CHECK_FALSE(rate(mixed_rate, 16));
  ConvergenceReport wrapped = kvpk_a_posteriori(rate, mixed_rate, 8, 16, 42);
  CHECK(wrapped.pass);

  PathSequence constant = constant_path_sequence(CadlagStep::constant(1.0, 1.0));
  SequenceTester equal = [](const PathSequence& seq, int depth) {
    for (int i = 1; i <= depth; ++i)
      if (!(seq.terms(i) == seq.limit)) return false;
    return true;
  };
  CHECK(kvpk_a_posteriori(equal, constant, 8, 8, 42).pass);

  PathSequence alternating{
      [](int n) {
        return CadlagStep::constant(n % 2 == 0 ? 0.0 : 1.0, 1.0);
      },
      CadlagStep::constant(0.0, 1.0)};
  SequenceTester close = [](const PathSequence& seq, int depth) {
    for (int i = 1; i <= depth; ++i)
      if (sup_distance(seq.terms(i), seq.limit) >= 0.5) return false;
    return true;
  };
  ConvergenceReport refuted = kvpk_a_posteriori(close, alternating, 8, 8, 42);
  CHECK_FALSE(refuted.pass);
  CHECK(refuted.witness->object.find("stride 2 offset 1") != std::string::npos);
}
