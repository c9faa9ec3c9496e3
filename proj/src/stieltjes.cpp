#include "cadlag/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cadlag {

StieltjesMeasure::StieltjesMeasure(const CadlagStep& v)
    : end_value(v.end_value()) {
  if (v.start_value() != 0.0) atoms.emplace_back(0.0, v.start_value());
  for (std::size_t i = 1; i < v.values().size(); ++i)
    atoms.emplace_back(v.breakpoints()[i], v.values()[i] - v.values()[i - 1]);
}

double StieltjesMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& [t, mass] : atoms) m += mass;
  return m;
}

double StieltjesMeasure::total_abs_mass() const {
  double m = 0.0;
  for (const auto& [t, mass] : atoms) m += std::abs(mass);
  return m;
}

double integrate_f_dv(const PiecewiseLinear& f, const CadlagStep& v) {
  if (f.horizon() != v.horizon())
    throw std::invalid_argument("horizon mismatch");
  double sum = 0.0;
  for (const auto& [t, mass] : StieltjesMeasure(v).atoms)
    sum += f.eval(t) * mass;
  return sum;
}

double integrate_x_dA(const CadlagStep& x, const PiecewiseLinear& a) {
  if (x.horizon() != a.horizon())
    throw std::invalid_argument("horizon mismatch");
  // On each cell of the common refinement x is constant and a is linear, so
  // the cell contributes x * (a(right) - a(left)). The boundary points carry
  // no dA mass because a is continuous.
  std::vector<double> cells;
  cells.reserve(x.breakpoints().size() + a.nodes().size());
  std::merge(x.breakpoints().begin(), x.breakpoints().end(), a.nodes().begin(),
             a.nodes().end(), std::back_inserter(cells));
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i)
    sum += x.eval(cells[i]) * (a.eval(cells[i + 1]) - a.eval(cells[i]));
  return sum;
}

double integrate_x_dA(const CadlagStep& x, const IntegratorPath& a) {
  return integrate_x_dA(x, a.fn());
}

double integration_by_parts_residual(const CadlagStep& v,
                                     const IntegratorPath& a) {
  if (v.horizon() != a.horizon())
    throw std::invalid_argument("horizon mismatch");
  double v_da = integrate_x_dA(v, a);
  double a_dv = integrate_f_dv(a.fn(), v);
  return v_da + a_dv - v.end_value() * a.eval(a.horizon());
}

IntegratorPath primitive_of_density(const CadlagStep& f) {
  std::vector<double> nodes = f.breakpoints();
  if (nodes.back() != f.horizon()) nodes.push_back(f.horizon());
  std::vector<double> vals{0.0};
  vals.reserve(nodes.size());
  for (std::size_t i = 1; i < nodes.size(); ++i)
    vals.push_back(vals.back() +
                   f.values()[i - 1] * (nodes[i] - nodes[i - 1]));
  return IntegratorPath(std::move(nodes), std::move(vals));
}

IntegratorSequence constant_integrator_sequence(std::string id,
                                                IntegratorPath a) {
  IntegratorSequence seq{std::move(id), {}, a};
  seq.terms = [a](int) { return a; };
  return seq;
}

ConvergenceReport tau_convergence_test(const IntegratorSequence& seq,
                                       int depth, double tol) {
  if (depth < 2) throw std::invalid_argument("tau test requires depth >= 2");
  depth = std::min(depth, seq.depth);

  std::vector<double> sup_margins, variations;
  sup_margins.reserve(depth);
  variations.reserve(depth);
  for (int n = 1; n <= depth; ++n) {
    IntegratorPath a = seq.terms(n);
    sup_margins.push_back(sup_distance(a.fn(), seq.limit.fn()));
    variations.push_back(a.total_variation());
  }

  GrowthBound var = growth_bound(variations);
  TailSummary tail = analyze_margins(sup_margins, tol);

  ConvergenceReport r;
  r.mode = "tau";
  r.depth = depth;
  r.tolerance = tol;
  r.curves.push_back({"uniform", std::move(sup_margins)});
  r.curves.push_back({"variation", std::move(variations)});
  r.variation_bound = var.full;
  if (!tail.ok) {
    r.witness = FailWitness{tail.witness_index, "uniform", tail.witness_margin};
    return r;
  }
  if (var.flag) {
    auto it = std::max_element(r.curves[1].margins.begin(),
                               r.curves[1].margins.end());
    r.witness = FailWitness{
        static_cast<int>(it - r.curves[1].margins.begin()) + 1, "variation",
        *it};
    return r;
  }
  r.pass = true;
  r.pass_from = tail.pass_from;
  return r;
}

std::vector<PiecewiseLinear> default_test_family(double horizon, int level) {
  if (level < 1 || level > 10)
    throw std::invalid_argument("test-family level must be in 1..10");
  std::vector<PiecewiseLinear> family;
  family.push_back(PiecewiseLinear::constant(1.0, horizon));
  const int cells = 1 << level;
  const double w = horizon / cells;
  for (int k = 0; k <= cells; ++k) {
    // Hat with peak 1 at k w, support width w on each side, truncated at the
    // boundary. The first and last nodes are pinned to 0 and horizon exactly.
    std::vector<double> nodes, vals;
    const double peak = (k == cells) ? horizon : k * w;
    if (k > 0) {
      nodes.push_back(0.0);
      vals.push_back(0.0);
      if (k > 1) {
        nodes.push_back(peak - w);
        vals.push_back(0.0);
      }
    }
    nodes.push_back(peak);
    vals.push_back(1.0);
    if (k < cells) {
      nodes.push_back(k == cells - 1 ? horizon : peak + w);
      vals.push_back(0.0);
      if (k < cells - 1) {
        nodes.push_back(horizon);
        vals.push_back(0.0);
      }
    }
    family.emplace_back(std::move(nodes), std::move(vals));
  }
  return family;
}

ConvergenceReport weak_star_test(const std::function<CadlagStep(int)>& terms,
                                 const CadlagStep& limit,
                                 const std::vector<PiecewiseLinear>& test_family,
                                 int depth, double tol) {
  if (test_family.empty())
    throw std::invalid_argument("weak-* test needs a nonempty test family");

  std::vector<CadlagStep> cached;
  cached.reserve(depth);
  std::vector<double> variations;
  variations.reserve(depth);
  for (int n = 1; n <= depth; ++n) {
    cached.push_back(terms(n));
    variations.push_back(total_variation(cached.back()));
  }

  ConvergenceReport r;
  r.mode = "weak-star";
  r.depth = depth;
  r.tolerance = tol;

  GrowthBound var = growth_bound(variations);
  r.variation_bound = var.full;

  std::vector<double> limits_of_f;
  limits_of_f.reserve(test_family.size());
  for (const PiecewiseLinear& f : test_family)
    limits_of_f.push_back(integrate_f_dv(f, limit));

  for (std::size_t fi = 0; fi < test_family.size(); ++fi) {
    std::vector<double> margins;
    margins.reserve(depth);
    for (int n = 1; n <= depth; ++n)
      margins.push_back(
          std::abs(integrate_f_dv(test_family[fi], cached[n - 1]) -
                   limits_of_f[fi]));
    TailSummary tail = analyze_margins(margins, tol);
    std::string id = "f" + std::to_string(fi);
    r.curves.push_back({id, std::move(margins)});
    if (!tail.ok && !r.witness)
      r.witness = FailWitness{tail.witness_index, id, tail.witness_margin};
    if (tail.ok)
      r.pass_from = std::max(r.pass_from, tail.pass_from);
  }
  r.curves.push_back({"variation", std::move(variations)});

  // An unbounded variation is the structural failure and outranks any
  // integral-margin witness.
  if (var.flag) {
    auto& vm = r.curves.back().margins;
    auto it = std::max_element(vm.begin(), vm.end());
    r.witness = FailWitness{static_cast<int>(it - vm.begin()) + 1, "variation",
                            *it};
    r.pass_from = -1;
    return r;
  }
  if (r.witness) {
    r.pass_from = -1;
    return r;
  }
  r.pass = true;
  return r;
}

}  // namespace cadlag
