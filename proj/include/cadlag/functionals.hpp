#pragma once

#include <utility>
#include <vector>

#include "cadlag/paths.hpp"

namespace cadlag {

/// Epsilon-skeleton of a step path: the piecewise-constant function that
/// resamples x at the stopping times where it has moved by more than eps
/// since the previous stopping time.
struct Quantization {
  double eps = 0.0;
  CadlagStep skeleton;
  /// tau_0 = 0 < tau_1 < ... < tau_M <= T.
  std::vector<double> stopping_times;
  /// M = number of stopping times after tau_0.
  int jump_count = 0;
  /// (z_k, tau_k) with z_0 = x(0) and z_k = x(tau_k) - x(tau_{k-1}), so the
  /// skeleton is the telescoping sum of z_k * 1_{[tau_k, T]}.
  std::vector<std::pair<double, double>> jump_decomposition;
};

/// Number of up-crossings of the band (a, b): the largest k admitting times
/// t_1 < ... < t_{2k} with x(t_{2i-1}) < a and x(t_{2i}) > b. Comparisons are
/// strict and carry no tolerance slack.
int upcrossings(const CadlagStep& x, double a, double b);

/// Number of eta-oscillations: the largest k admitting times
/// t_1 < t_2 <= t_3 < t_4 <= ... <= t_{2k-1} < t_{2k} with
/// |x(t_{2i}) - x(t_{2i-1})| > eta. Consecutive pairs may share an endpoint.
int oscillations(const CadlagStep& x, double eta);

/// Stopping-time quantization; satisfies ||x - skeleton||_inf <= eps.
Quantization quantize(const CadlagStep& x, double eps);

/// (M^eps(x), N_{eps/2}(x)); the first never exceeds the second.
std::pair<int, int> quantization_bound_check(const CadlagStep& x, double eps);

}  // namespace cadlag
