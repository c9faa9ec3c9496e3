#include "cadlag/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace cadlag {

// On a step function the suprema over continuous time are attained at segment
// values, so both counters scan the value list. Greedy optimality is certified
// against brute-force enumeration in the test suite.

int upcrossings(const CadlagStep& x, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("upcrossings requires a < b");
  int count = 0;
  bool below_seen = false;
  for (double v : x.values()) {
    if (!below_seen) {
      if (v < a) below_seen = true;
    } else if (v > b) {
      ++count;
      below_seen = false;
    }
  }
  return count;
}

int oscillations(const CadlagStep& x, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("oscillations requires eta > 0");
  // Complete a pair as soon as the value range since the last completion
  // exceeds eta; the completing segment is reused as the next start, which
  // the non-strict chaining of pair times allows.
  int count = 0;
  double lo = x.values().front();
  double hi = lo;
  for (std::size_t i = 1; i < x.values().size(); ++i) {
    double v = x.values()[i];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (hi - lo > eta) {
      ++count;
      lo = hi = v;
    }
  }
  return count;
}

Quantization quantize(const CadlagStep& x, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("quantize requires eps > 0");
  Quantization q{eps, CadlagStep::constant(x.start_value(), x.horizon()), {0.0},
                 0, {{x.start_value(), 0.0}}};

  std::vector<double> skel_times{0.0};
  std::vector<double> skel_values{x.start_value()};
  double ref = x.start_value();
  // If the threshold is first exceeded exactly at a breakpoint the infimum is
  // attained there by right-continuity.
  for (std::size_t i = 1; i < x.values().size(); ++i) {
    if (std::abs(x.values()[i] - ref) > eps) {
      double tau = x.breakpoints()[i];
      double value = x.values()[i];
      q.stopping_times.push_back(tau);
      q.jump_decomposition.emplace_back(value - ref, tau);
      skel_times.push_back(tau);
      skel_values.push_back(value);
      ref = value;
      ++q.jump_count;
    }
  }
  q.skeleton =
      CadlagStep(x.horizon(), std::move(skel_times), std::move(skel_values));
  return q;
}

std::pair<int, int> quantization_bound_check(const CadlagStep& x, double eps) {
  int m = quantize(x, eps).jump_count;
  int n = oscillations(x, eps / 2.0);
  if (m > n)
    throw std::logic_error(
        "quantization jump count exceeded the oscillation bound");
  return {m, n};
}

}  // namespace cadlag
