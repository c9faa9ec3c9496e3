#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cadlag/paths.hpp"
#include "cadlag/report.hpp"

namespace cadlag {

/// Signed measure dv induced by a step path v: an atom of mass v(0) at t = 0
/// plus one atom per jump. The atom at zero is forced by the total-variation
/// convention |v(0)| + sum |jumps| and by integration by parts with A(0) = 0.
struct StieltjesMeasure {
  explicit StieltjesMeasure(const CadlagStep& v);

  /// (time, mass) pairs, times increasing; zero masses are dropped.
  std::vector<std::pair<double, double>> atoms;
  double end_value = 0.0;

  double total_mass() const;      ///< signed, equals v(T)
  double total_abs_mass() const;  ///< equals total_variation(v)
};

/// Integral of a continuous piecewise-linear test function against dv:
/// f(0) v(0) + sum over jumps f(s) (v(s) - v(s-)). Exact for step paths.
double integrate_f_dv(const PiecewiseLinear& f, const CadlagStep& v);

/// Integral of a step path against a continuous finite-variation integrator,
/// evaluated exactly on the common refinement of breakpoints and nodes.
double integrate_x_dA(const CadlagStep& x, const IntegratorPath& a);
double integrate_x_dA(const CadlagStep& x, const PiecewiseLinear& a);

/// integral(v dA) + integral(A dv) - v(T) A(T); zero up to rounding.
double integration_by_parts_residual(const CadlagStep& v,
                                     const IntegratorPath& a);

/// A_f(t) = integral of the step density f over [0, t]; A_f(0) = 0 and the
/// total variation of A_f equals the integral of |f|.
IntegratorPath primitive_of_density(const CadlagStep& f);

/// Indexed family of integrators with a declared limit (index 0).
struct IntegratorSequence {
  std::string id;
  std::function<IntegratorPath(int)> terms;  ///< n >= 1
  IntegratorPath limit;
  int depth = std::numeric_limits<int>::max();
};

IntegratorSequence constant_integrator_sequence(std::string id,
                                                IntegratorPath a);

/// Mixed-topology convergence of integrators: uniform convergence to the
/// limit together with a uniformly bounded variation. The variation side is
/// judged by the half-versus-full growth flag.
ConvergenceReport tau_convergence_test(const IntegratorSequence& seq,
                                       int depth, double tol);

/// Constant function 1 plus the hat functions centered at the dyadic points
/// k T / 2^level -- a uniformly dense test family for weak-* checks.
std::vector<PiecewiseLinear> default_test_family(double horizon,
                                                 int level = 6);

/// Weak-* convergence of the measures dv_n to dv_0: for every test function
/// the integral margins must vanish with depth, and the variations must stay
/// bounded (no growth flag).
ConvergenceReport weak_star_test(const std::function<CadlagStep(int)>& terms,
                                 const CadlagStep& limit,
                                 const std::vector<PiecewiseLinear>& test_family,
                                 int depth, double tol);

}  // namespace cadlag
