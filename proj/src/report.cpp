#include "cadlag/report.hpp"

#include <algorithm>
#include <cmath>

namespace cadlag {

TailSummary analyze_margins(const std::vector<double>& margins, double tol) {
  TailSummary s;
  if (margins.empty()) return s;
  const int depth = static_cast<int>(margins.size());
  const double last = margins.back();

  if (!(last < tol)) {
    s.witness_index = depth;
    s.witness_margin = last;
    return s;
  }
  const int window = (depth + 3) / 4;
  for (int i = depth - window; i < depth - 1; ++i) {
    if (margins[i + 1] > margins[i] + tol) {
      s.witness_index = i + 2;
      s.witness_margin = margins[i + 1];
      return s;
    }
  }
  s.ok = true;
  int from = depth;
  while (from > 1 && margins[from - 2] < tol) --from;
  s.pass_from = from;
  return s;
}

GrowthBound growth_bound(const std::vector<double>& values) {
  GrowthBound g;
  if (values.empty()) return g;
  const std::size_t half_count = (values.size() + 1) / 2;
  for (std::size_t i = 0; i < values.size(); ++i) {
    g.full = std::max(g.full, values[i]);
    if (i < half_count) g.half = std::max(g.half, values[i]);
  }
  g.flag = g.full > 1.5 * g.half + 1e-12;
  return g;
}

ConvergenceReport make_pass(std::string mode, int depth, double tol) {
  ConvergenceReport r;
  r.pass = true;
  r.mode = std::move(mode);
  r.depth = depth;
  r.tolerance = tol;
  return r;
}

ConvergenceReport make_fail(std::string mode, int depth, double tol,
                            FailWitness witness) {
  ConvergenceReport r;
  r.pass = false;
  r.mode = std::move(mode);
  r.depth = depth;
  r.tolerance = tol;
  r.witness = std::move(witness);
  return r;
}

bool CompactnessReport::bounded_i() const {
  if (sup_norm.flag) return false;
  return std::none_of(upcrossings.begin(), upcrossings.end(),
                      [](const LevelRow& r) { return r.bound.flag; });
}

bool CompactnessReport::bounded_ii() const {
  if (sup_norm.flag) return false;
  return std::none_of(oscillations.begin(), oscillations.end(),
                      [](const EtaRow& r) { return r.bound.flag; });
}

bool CompactnessReport::bounded_iii() const {
  return std::none_of(quantizations.begin(), quantizations.end(),
                      [](const EpsRow& r) { return r.variation.flag; });
}

}  // namespace cadlag
