#include "cadlag/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cadlag/functionals.hpp"

namespace cadlag {

namespace {

// Greedy alternating scan, returning the segment indices realizing the
// crossing times t_1 < ... < t_{2N}.
std::vector<std::size_t> crossing_segments(const CadlagStep& x, double a,
                                           double b) {
  std::vector<std::size_t> picks;
  bool want_below = true;
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    double v = x.values()[i];
    if (want_below ? v < a : v > b) {
      picks.push_back(i);
      want_below = !want_below;
    }
  }
  if (picks.size() % 2 == 1) picks.pop_back();
  return picks;
}

// End of the constancy interval [s_i, s_{i+1}) containing segment i.
double segment_end(const CadlagStep& x, std::size_t i) {
  return i + 1 < x.breakpoints().size() ? x.breakpoints()[i + 1] : x.horizon();
}

}  // namespace

UpcrossingWitness lemma_upcrossing_witness(const CadlagStep& x, double a,
                                           double b) {
  if (!(a < b)) throw std::invalid_argument("witness requires a < b");
  std::vector<std::size_t> picks = crossing_segments(x, a, b);
  const int n = static_cast<int>(picks.size() / 2);
  if (n < 2)
    throw std::invalid_argument(
        "up-crossing witness requires at least two crossings");

  std::vector<double> times;
  times.reserve(picks.size());
  for (std::size_t seg : picks) times.push_back(x.breakpoints()[seg]);

  // Density windows at t_1 .. t_{2N-2}; window i carries weight
  // h_i = 1 / (delta_i (N - 1)) with the sign pattern -,+,-,+,... The weight
  // is computed from the rounded window endpoints so each window's area is
  // exactly 1 / (N - 1) up to a final rounding.
  std::vector<double> bk{0.0}, vals{0.0};
  auto push_window = [&](double start, double delta, double sign) {
    double end = start + delta;
    double h = sign / ((end - start) * (n - 1));
    if (start > bk.back()) {
      bk.push_back(start);
      vals.push_back(h);
    } else {
      vals.back() = h;  // window starting at time 0
    }
    bk.push_back(end);
    vals.push_back(0.0);
  };
  for (int i = 1; i <= n - 1; ++i) {
    double down_t = times[2 * i - 2];
    double up_t = times[2 * i - 1];
    double next_t = times[2 * i];
    double delta = 0.5 * std::min(std::min(up_t - down_t, next_t - up_t),
                                  std::min(segment_end(x, picks[2 * i - 2]) - down_t,
                                           segment_end(x, picks[2 * i - 1]) - up_t));
    push_window(down_t, delta, -1.0);
    push_window(up_t, delta, 1.0);
  }
  CadlagStep density(x.horizon(), std::move(bk), std::move(vals));

  UpcrossingWitness w{primitive_of_density(density), a, b, n, 0.0, 0.0, 0.0};
  w.integral = integrate_x_dA(x, w.integrator);
  w.variation = w.integrator.total_variation();
  w.sup = w.integrator.sup_norm();
  return w;
}

std::pair<IntegratorPath, double> unboundedness_refuter(const CadlagStep& x,
                                                        double level) {
  if (!(level > 0.0)) throw std::invalid_argument("level must be positive");
  const double a = sup_norm(x);
  if (!(a >= level))
    throw std::invalid_argument("path sup-norm is below the requested level");

  std::size_t seg = 0;
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    if (std::abs(x.values()[i]) == a) {
      seg = i;
      break;
    }
  }
  double t = x.breakpoints()[seg];
  double end = segment_end(x, seg);

  // Mass 1/sqrt(a) spread over the full constancy segment; the node value is
  // stored directly so the variation equals 1/sqrt(a) without rounding.
  double mass = 1.0 / std::sqrt(a);
  std::vector<double> nodes, vals;
  if (t > 0.0) {
    nodes = {0.0, t, end};
    vals = {0.0, 0.0, mass};
  } else {
    nodes = {0.0, end};
    vals = {0.0, mass};
  }
  if (end < x.horizon()) {
    nodes.push_back(x.horizon());
    vals.push_back(mass);
  }
  IntegratorPath integrator(std::move(nodes), std::move(vals));
  double integral = integrate_x_dA(x, integrator);
  return {integrator, std::abs(integral)};
}

CadlagStep figure1_spikes(int n, double horizon) {
  if (n < 3) throw std::invalid_argument("spike index must be >= 3");
  double half = horizon / 2.0;
  return CadlagStep(horizon, {0.0, half - horizon / n, half}, {0.0, 1.0, 0.0});
}

CadlagStep figure2_jumps(int n, double horizon) {
  if (n < 1) throw std::invalid_argument("jump index must be >= 1");
  return CadlagStep::indicator(horizon / n, horizon);
}

CadlagStep sawtooth_path(int teeth, double low, double high, double horizon) {
  if (teeth < 1) throw std::invalid_argument("sawtooth needs at least one tooth");
  if (!(low < high)) throw std::invalid_argument("sawtooth requires low < high");
  const int segments = 2 * teeth;
  std::vector<double> bk, vals;
  bk.reserve(segments);
  vals.reserve(segments);
  for (int i = 0; i < segments; ++i) {
    bk.push_back(horizon * i / segments);
    vals.push_back(i % 2 == 0 ? low : high);
  }
  return CadlagStep(horizon, std::move(bk), std::move(vals));
}

CadlagStep random_step_path(std::uint64_t seed, int segments, double value_scale,
                            double horizon) {
  if (segments < 1) throw std::invalid_argument("segments must be >= 1");
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<double> bk{0.0};
  while (static_cast<int>(bk.size()) < segments) {
    double t = uniform01() * horizon;
    if (t > 0.0 && t < horizon) bk.push_back(t);
  }
  std::sort(bk.begin(), bk.end());
  bk.erase(std::unique(bk.begin(), bk.end()), bk.end());

  std::vector<double> vals;
  vals.reserve(bk.size());
  for (std::size_t i = 0; i < bk.size(); ++i) {
    double v = (2.0 * uniform01() - 1.0) * value_scale;
    while (!vals.empty() && v == vals.back())
      v = (2.0 * uniform01() - 1.0) * value_scale;
    vals.push_back(v);
  }
  return CadlagStep(horizon, std::move(bk), std::move(vals));
}

}  // namespace cadlag
