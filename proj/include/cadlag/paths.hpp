#pragma once

#include <cstddef>
#include <vector>

namespace cadlag {

/// Global comparison tolerance for floating-point assertions made by
/// higher-level oracles. Breakpoint times are stored exactly and are always
/// compared with ==.
inline constexpr double kCmpTol = 1e-9;

/// Right-continuous step function on [0, T] with finitely many jumps.
///
/// Stored as strictly increasing breakpoints 0 = s_0 < s_1 < ... < s_m <= T
/// and segment values c_0 ... c_m, so x(t) = c_i on [s_i, s_{i+1}) and
/// x(T) = c_m. Zero-size jumps are pruned on construction, which makes the
/// stored jump count canonical. Instances are immutable values.
class CadlagStep {
 public:
  CadlagStep(double horizon, std::vector<double> breakpoints,
             std::vector<double> values);

  static CadlagStep constant(double value, double horizon);
  /// a * 1_{[from, T]}. For from == 0 this is the constant a.
  static CadlagStep indicator(double from, double horizon, double scale = 1.0);

  double horizon() const { return horizon_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t segment_count() const { return values_.size(); }

  /// Value at t in [0, T]; right-continuous, x(T) is the last segment value.
  double eval(double t) const;
  /// Index i of the segment [s_i, s_{i+1}) containing t.
  std::size_t segment_index(double t) const;

  double start_value() const { return values_.front(); }
  double end_value() const { return values_.back(); }

  bool operator==(const CadlagStep& other) const = default;

 private:
  double horizon_;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Continuous piecewise-linear function on [0, T]: nodes
/// 0 = u_0 < ... < u_p = T with values interpolated linearly in between.
/// Total variation is exact since the function is monotone between nodes.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<double> nodes, std::vector<double> values);

  static PiecewiseLinear constant(double value, double horizon);

  double horizon() const { return nodes_.back(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }

  double eval(double t) const;
  double sup_norm() const;
  double total_variation() const;

  PiecewiseLinear scaled(double factor) const;

  bool operator==(const PiecewiseLinear& other) const = default;

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
};

/// Continuous finite-variation integrator with A(0) = 0, the class against
/// which step paths are integrated. A strong type over PiecewiseLinear; test
/// functions that do not vanish at 0 stay plain PiecewiseLinear.
class IntegratorPath {
 public:
  IntegratorPath(std::vector<double> nodes, std::vector<double> values);
  explicit IntegratorPath(PiecewiseLinear fn);

  static IntegratorPath zero(double horizon);
  /// A(t) = t.
  static IntegratorPath identity(double horizon);

  const PiecewiseLinear& fn() const { return fn_; }
  double horizon() const { return fn_.horizon(); }
  double eval(double t) const { return fn_.eval(t); }
  double sup_norm() const { return fn_.sup_norm(); }
  double total_variation() const { return fn_.total_variation(); }

  IntegratorPath scaled(double factor) const;

  bool operator==(const IntegratorPath& other) const = default;

 private:
  PiecewiseLinear fn_;
};

/// Path with values in R^d, identified with d scalar paths on one horizon.
class MultiPath {
 public:
  explicit MultiPath(std::vector<CadlagStep> components);

  std::size_t dimension() const { return components_.size(); }
  double horizon() const;
  const CadlagStep& component(std::size_t i) const { return components_.at(i); }
  const std::vector<CadlagStep>& components() const { return components_; }

 private:
  std::vector<CadlagStep> components_;
};

// --- elementary operations on step paths ---

double sup_norm(const CadlagStep& x);
/// |v(0)| + sum of |jump| -- the total variation on [0, T], which for a step
/// function includes the initial value term.
double total_variation(const CadlagStep& v);
double total_variation(const IntegratorPath& a);

/// Restriction x^{T'} to [0, T'], 0 < T' <= T.
CadlagStep restrict_path(const CadlagStep& x, double new_horizon);

/// Embedding used by the modified J1 metric: zero on [0, eps), the original
/// path shifted by eps, then frozen at x(T) for another eps. Time is re-based
/// so the result lives on [0, T + 2 eps] with the original origin at eps.
CadlagStep extend_tilde(const CadlagStep& x, double eps);

/// Pointwise alpha * x + beta * y; breakpoints merged, zero jumps pruned.
CadlagStep linear_combine(const CadlagStep& x, const CadlagStep& y,
                          double alpha, double beta);

/// Extension of an integrator constant after its horizon; variation unchanged.
IntegratorPath extend_integrator(const IntegratorPath& a, double new_horizon);

/// Merged breakpoints of two step paths on one horizon.
std::vector<double> merged_breakpoints(const CadlagStep& x, const CadlagStep& y);

/// Exact sup |x - y| over [0, T] (both step functions, same horizon).
double sup_distance(const CadlagStep& x, const CadlagStep& y);

/// Exact sup |f - g| for piecewise-linear functions on one horizon.
double sup_distance(const PiecewiseLinear& f, const PiecewiseLinear& g);

}  // namespace cadlag
