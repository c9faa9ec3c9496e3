#include "cadlag/paths.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cadlag {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_finite(const std::vector<double>& xs, const char* what) {
  for (double v : xs)
    require(std::isfinite(v), std::string(what) + " must be finite");
}

}  // namespace

CadlagStep::CadlagStep(double horizon, std::vector<double> breakpoints,
                       std::vector<double> values)
    : horizon_(horizon) {
  require(std::isfinite(horizon) && horizon > 0.0, "horizon must be positive");
  require(!breakpoints.empty(), "path needs at least one segment");
  require(breakpoints.size() == values.size(),
          "breakpoints and values must have equal length");
  require(breakpoints.front() == 0.0, "first breakpoint must be 0");
  check_finite(breakpoints, "breakpoints");
  check_finite(values, "values");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    require(breakpoints[i - 1] < breakpoints[i],
            "breakpoints must be strictly increasing");
  require(breakpoints.back() <= horizon, "breakpoints must lie in [0, T]");

  // Prune zero-size jumps so the stored jump count is canonical.
  breakpoints_.reserve(breakpoints.size());
  values_.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] == values_.back()) continue;
    breakpoints_.push_back(breakpoints[i]);
    values_.push_back(values[i]);
  }
}

CadlagStep CadlagStep::constant(double value, double horizon) {
  return CadlagStep(horizon, {0.0}, {value});
}

CadlagStep CadlagStep::indicator(double from, double horizon, double scale) {
  require(from >= 0.0 && from <= horizon, "indicator start outside [0, T]");
  if (from == 0.0 || scale == 0.0) return constant(scale, horizon);
  return CadlagStep(horizon, {0.0, from}, {0.0, scale});
}

std::size_t CadlagStep::segment_index(double t) const {
  require(t >= 0.0 && t <= horizon_, "time outside [0, T]");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

double CadlagStep::eval(double t) const { return values_[segment_index(t)]; }

PiecewiseLinear::PiecewiseLinear(std::vector<double> nodes,
                                 std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  require(nodes_.size() >= 2, "piecewise-linear function needs >= 2 nodes");
  require(nodes_.size() == values_.size(),
          "nodes and values must have equal length");
  require(nodes_.front() == 0.0, "first node must be 0");
  check_finite(nodes_, "nodes");
  check_finite(values_, "values");
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    require(nodes_[i - 1] < nodes_[i], "nodes must be strictly increasing");
  require(nodes_.back() > 0.0, "horizon must be positive");
}

PiecewiseLinear PiecewiseLinear::constant(double value, double horizon) {
  return PiecewiseLinear({0.0, horizon}, {value, value});
}

double PiecewiseLinear::eval(double t) const {
  require(t >= 0.0 && t <= horizon(), "time outside [0, T]");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
  if (i == nodes_.size()) return values_.back();
  --i;
  if (t == nodes_[i]) return values_[i];
  double w = (t - nodes_[i]) / (nodes_[i + 1] - nodes_[i]);
  return values_[i] + w * (values_[i + 1] - values_[i]);
}

double PiecewiseLinear::sup_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double PiecewiseLinear::total_variation() const {
  double tv = 0.0;
  for (std::size_t i = 1; i < values_.size(); ++i)
    tv += std::abs(values_[i] - values_[i - 1]);
  return tv;
}

PiecewiseLinear PiecewiseLinear::scaled(double factor) const {
  std::vector<double> vals = values_;
  for (double& v : vals) v *= factor;
  return PiecewiseLinear(nodes_, std::move(vals));
}

IntegratorPath::IntegratorPath(std::vector<double> nodes,
                               std::vector<double> values)
    : fn_(std::move(nodes), std::move(values)) {
  require(fn_.values().front() == 0.0, "integrator must satisfy A(0) = 0");
}

IntegratorPath::IntegratorPath(PiecewiseLinear fn) : fn_(std::move(fn)) {
  require(fn_.values().front() == 0.0, "integrator must satisfy A(0) = 0");
}

IntegratorPath IntegratorPath::zero(double horizon) {
  return IntegratorPath({0.0, horizon}, {0.0, 0.0});
}

IntegratorPath IntegratorPath::identity(double horizon) {
  return IntegratorPath({0.0, horizon}, {0.0, horizon});
}

IntegratorPath IntegratorPath::scaled(double factor) const {
  return IntegratorPath(fn_.scaled(factor));
}

MultiPath::MultiPath(std::vector<CadlagStep> components)
    : components_(std::move(components)) {
  require(!components_.empty(), "multipath needs at least one component");
  for (const CadlagStep& c : components_)
    require(c.horizon() == components_.front().horizon(),
            "multipath components must share one horizon");
}

double MultiPath::horizon() const { return components_.front().horizon(); }

double sup_norm(const CadlagStep& x) {
  double m = 0.0;
  for (double v : x.values()) m = std::max(m, std::abs(v));
  return m;
}

double total_variation(const CadlagStep& v) {
  const auto& vals = v.values();
  double tv = std::abs(vals.front());
  for (std::size_t i = 1; i < vals.size(); ++i)
    tv += std::abs(vals[i] - vals[i - 1]);
  return tv;
}

double total_variation(const IntegratorPath& a) { return a.total_variation(); }

CadlagStep restrict_path(const CadlagStep& x, double new_horizon) {
  require(new_horizon > 0.0 && new_horizon <= x.horizon(),
          "restriction horizon must lie in (0, T]");
  std::size_t keep = x.segment_index(new_horizon) + 1;
  std::vector<double> bk(x.breakpoints().begin(),
                         x.breakpoints().begin() + keep);
  std::vector<double> vals(x.values().begin(), x.values().begin() + keep);
  return CadlagStep(new_horizon, std::move(bk), std::move(vals));
}

CadlagStep extend_tilde(const CadlagStep& x, double eps) {
  require(eps > 0.0, "tilde margin must be positive");
  std::vector<double> bk{0.0};
  std::vector<double> vals{0.0};
  for (std::size_t i = 0; i < x.breakpoints().size(); ++i) {
    bk.push_back(eps + x.breakpoints()[i]);
    vals.push_back(x.values()[i]);
  }
  return CadlagStep(x.horizon() + 2.0 * eps, std::move(bk), std::move(vals));
}

std::vector<double> merged_breakpoints(const CadlagStep& x,
                                       const CadlagStep& y) {
  std::vector<double> merged;
  merged.reserve(x.breakpoints().size() + y.breakpoints().size());
  std::merge(x.breakpoints().begin(), x.breakpoints().end(),
             y.breakpoints().begin(), y.breakpoints().end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

CadlagStep linear_combine(const CadlagStep& x, const CadlagStep& y,
                          double alpha, double beta) {
  require(x.horizon() == y.horizon(), "horizon mismatch");
  std::vector<double> bk = merged_breakpoints(x, y);
  std::vector<double> vals;
  vals.reserve(bk.size());
  for (double t : bk) vals.push_back(alpha * x.eval(t) + beta * y.eval(t));
  return CadlagStep(x.horizon(), std::move(bk), std::move(vals));
}

IntegratorPath extend_integrator(const IntegratorPath& a, double new_horizon) {
  require(new_horizon >= a.horizon(),
          "extension horizon must be >= current horizon");
  if (new_horizon == a.horizon()) return a;
  std::vector<double> nodes = a.fn().nodes();
  std::vector<double> vals = a.fn().values();
  nodes.push_back(new_horizon);
  vals.push_back(vals.back());
  return IntegratorPath(std::move(nodes), std::move(vals));
}

double sup_distance(const CadlagStep& x, const CadlagStep& y) {
  require(x.horizon() == y.horizon(), "horizon mismatch");
  double m = 0.0;
  for (double t : merged_breakpoints(x, y))
    m = std::max(m, std::abs(x.eval(t) - y.eval(t)));
  return m;
}

double sup_distance(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  require(f.horizon() == g.horizon(), "horizon mismatch");
  std::vector<double> merged;
  std::merge(f.nodes().begin(), f.nodes().end(), g.nodes().begin(),
             g.nodes().end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  double m = 0.0;
  for (double t : merged) m = std::max(m, std::abs(f.eval(t) - g.eval(t)));
  return m;
}

}  // namespace cadlag
