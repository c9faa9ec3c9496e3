#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cadlag/convergence.hpp"
#include "cadlag/functionals.hpp"
#include "cadlag/witnesses.hpp"

using namespace cadlag;

TEST_CASE("up-crossing witness certificates on sawtooths") {
  CadlagStep five = sawtooth_path(5, -0.5, 1.5, 1.0);
  UpcrossingWitness w = lemma_upcrossing_witness(five, 0.0, 1.0);
  CHECK(w.crossings == 5);
  CHECK(w.integral >= 1.0 - 1e-9);
  CHECK(w.variation == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w.sup == doctest::Approx(0.25).epsilon(1e-12));

  CadlagStep two = sawtooth_path(2, -0.25, 0.75, 1.0);
  UpcrossingWitness w2 = lemma_upcrossing_witness(two, 0.0, 0.5);
  CHECK(w2.crossings == 2);
  CHECK(w2.integral >= 0.5 - 1e-9);
  CHECK(w2.variation == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w2.sup == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(lemma_upcrossing_witness(CadlagStep::indicator(0.5, 1.0), 0.25, 0.75),
                  std::invalid_argument);
  CHECK_THROWS_AS(lemma_upcrossing_witness(five, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("witness identities hold on random crossing paths") {
  int found = 0;
  std::uint64_t seed = 900;
  while (found < 25) {
    CadlagStep x = random_step_path(seed++, 14, 2.0, 1.0);
    if (upcrossings(x, 0.0, 1.0) < 2) continue;
    ++found;
    UpcrossingWitness w = lemma_upcrossing_witness(x, 0.0, 1.0);
    CHECK(w.integral >= 1.0 - 1e-9);
    CHECK(std::abs(w.variation - 2.0) <= 1e-9);
    CHECK(std::abs(w.sup - 1.0 / (w.crossings - 1)) <= 1e-9);
  }
}

TEST_CASE("unboundedness refuter certificates") {
  for (int n : {1, 2, 4, 9, 16, 25}) {
    auto [a, integral] = unboundedness_refuter(CadlagStep::constant(n, 1.0),
                                               static_cast<double>(n));
    double root = std::sqrt(static_cast<double>(n));
    CHECK(a.total_variation() == 1.0 / root);
    CHECK(integral == doctest::Approx(root).epsilon(1e-12));
  }

  CadlagStep block(1.0, {0.0, 0.5, 0.75}, {0.0, 4.0, 0.0});
  auto [a, integral] = unboundedness_refuter(block, 4.0);
  CHECK(integral >= 1.0);
  CHECK(a.total_variation() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(unboundedness_refuter(block, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(unboundedness_refuter(block, 0.0), std::invalid_argument);

  // negative attaining value is handled through the magnitude
  CadlagStep low(1.0, {0.0, 0.25}, {0.0, -9.0});
  auto [neg_a, neg_integral] = unboundedness_refuter(low, 9.0);
  CHECK(neg_integral == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(neg_a.total_variation() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("spike family shape and endpoints") {
  CadlagStep s4 = figure1_spikes(4, 1.0);
  CHECK(s4.breakpoints() == std::vector<double>{0.0, 0.25, 0.5});
  CHECK(s4.values() == std::vector<double>{0.0, 1.0, 0.0});
  CHECK_THROWS_AS(figure1_spikes(2, 1.0), std::invalid_argument);
  for (int n = 3; n < 40; ++n) CHECK(figure1_spikes(n, 1.0).end_value() == 0.0);
}

TEST_CASE("drifting jump family and its crossing bounds") {
  CadlagStep j2 = figure2_jumps(2, 1.0);
  CHECK(j2.breakpoints() == std::vector<double>{0.0, 0.5});
  CHECK(j2.values() == std::vector<double>{0.0, 1.0});
  CHECK(figure2_jumps(1, 1.0).breakpoints() == std::vector<double>{0.0, 1.0});
  CHECK_THROWS_AS(figure2_jumps(0, 1.0), std::invalid_argument);

  for (int n = 1; n < 40; ++n) {
    CadlagStep x = figure2_jumps(n, 1.0);
    CHECK(upcrossings(x, 0.25, 0.75) <= 1);
    CHECK(upcrossings(x, 0.1, 0.9) <= 1);
  }
}

TEST_CASE("seeded path generator is deterministic and honest about bounds") {
  CHECK(random_step_path(123, 9, 2.0, 1.0) == random_step_path(123, 9, 2.0, 1.0));
  CHECK(random_step_path(7, 1, 2.0, 1.0).segment_count() == 1);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    CadlagStep x = random_step_path(seed, 1 + seed % 10, 2.0, 1.0);
    double tv = total_variation(x);
    CHECK(tv >= std::abs(x.values().front()) - 1e-15);
    for (std::size_t i = 1; i < x.values().size(); ++i)
      CHECK(tv + 1e-15 >= std::abs(x.values()[i] - x.values()[i - 1]));
    CHECK(sup_norm(x) <= 2.0);
  }
}

TEST_CASE("refuters drive the dual test to refute a bounded limit claim") {
  PathSequence seq{[](int n) { return CadlagStep::constant(n, 1.0); },
                   CadlagStep::constant(0.0, 1.0)};
  std::vector<IntegratorSequence> catalog;
  catalog.push_back(IntegratorSequence{
      "refuter",
      [](int n) {
        return unboundedness_refuter(CadlagStep::constant(n, 1.0),
                                     static_cast<double>(n))
            .first;
      },
      IntegratorPath::zero(1.0)});
  ConvergenceReport r = s_dual_test(seq, catalog, 32, 0.25);
  CHECK_FALSE(r.pass);
}
