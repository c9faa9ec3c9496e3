#include "cadlag/catalog.hpp"

#include <cmath>
#include <string>

#include "cadlag/functionals.hpp"
#include "cadlag/witnesses.hpp"

namespace cadlag {

IntegratorPath hat_primitive_integrator(double center, double width,
                                        double horizon) {
  // Primitive of the unit hat centered at `center` with half-width `width`:
  // quadratic in truth; a piecewise-linear chord interpolant keeps the
  // integrator exactly representable. Eight chords per side are plenty for a
  // separating family.
  const int chords = 8;
  std::vector<double> nodes{0.0};
  std::vector<double> vals{0.0};
  double lo = std::max(0.0, center - width);
  double hi = std::min(horizon, center + width);
  auto hat = [&](double t) {
    double d = std::abs(t - center);
    return d >= width ? 0.0 : 1.0 - d / width;
  };
  if (lo > 0.0) {
    nodes.push_back(lo);
    vals.push_back(0.0);
  }
  double prev_t = lo, prev_v = hat(lo), acc = 0.0;
  for (int k = 1; k <= 2 * chords; ++k) {
    double t = lo + (hi - lo) * k / (2 * chords);
    double v = hat(t);
    acc += 0.5 * (prev_v + v) * (t - prev_t);
    if (t > nodes.back()) {
      nodes.push_back(t);
      vals.push_back(acc);
    }
    prev_t = t;
    prev_v = v;
  }
  if (nodes.back() < horizon) {
    nodes.push_back(horizon);
    vals.push_back(acc);
  } else {
    nodes.back() = horizon;
  }
  return IntegratorPath(std::move(nodes), std::move(vals));
}

std::vector<IntegratorSequence> hat_primitive_entries(double horizon,
                                                      int levels) {
  std::vector<IntegratorSequence> out;
  for (int level = 1; level <= levels; ++level) {
    int cells = 1 << level;
    double w = horizon / cells;
    for (int k = 1; k < cells; ++k) {
      std::string id = "hat-primitive L" + std::to_string(level) + " k" +
                       std::to_string(k);
      out.push_back(constant_integrator_sequence(
          id, hat_primitive_integrator(k * w, w, horizon)));
    }
  }
  return out;
}

std::vector<IntegratorSequence> lemma_witness_entries(
    const PathSequence& seq, const std::vector<std::pair<double, double>>& levels,
    int depth, double tol) {
  std::vector<IntegratorSequence> out;
  const int eff_depth = std::min(depth, seq.depth);
  for (auto [a, b] : levels) {
    bool admissible = true;
    for (int n = 1; n <= eff_depth && admissible; ++n)
      admissible = upcrossings(seq.terms(n), a, b) >= 2;
    if (!admissible) continue;

    auto terms = seq.terms;
    IntegratorSequence entry{
        "lemma-witness a=" + std::to_string(a) + " b=" + std::to_string(b),
        [terms, a, b](int n) {
          return lemma_upcrossing_witness(terms(n), a, b).integrator;
        },
        IntegratorPath::zero(seq.limit.horizon())};
    if (tau_convergence_test(entry, eff_depth, tol).pass)
      out.push_back(std::move(entry));
  }
  return out;
}

std::vector<IntegratorSequence> refuter_entries(const PathSequence& seq,
                                                int depth, double tol) {
  std::vector<IntegratorSequence> out;
  const int eff_depth = std::min(depth, seq.depth);
  for (int n = 1; n <= eff_depth; ++n)
    if (!(sup_norm(seq.terms(n)) > 0.0)) return out;

  auto terms = seq.terms;
  IntegratorSequence entry{
      "refuter",
      [terms](int n) {
        CadlagStep x = terms(n);
        return unboundedness_refuter(x, sup_norm(x)).first;
      },
      IntegratorPath::zero(seq.limit.horizon())};
  if (tau_convergence_test(entry, eff_depth, tol).pass)
    out.push_back(std::move(entry));
  return out;
}

std::vector<IntegratorSequence> default_dual_catalog(const PathSequence& seq,
                                                     int depth, double tol,
                                                     const CatalogConfig& cfg) {
  const double horizon = seq.limit.horizon();
  std::vector<IntegratorSequence> catalog;
  catalog.push_back(
      constant_integrator_sequence("identity", IntegratorPath::identity(horizon)));
  for (auto& e : hat_primitive_entries(horizon, cfg.hat_levels))
    catalog.push_back(std::move(e));
  if (cfg.adaptive) {
    for (auto& e : lemma_witness_entries(seq, cfg.level_grid, depth, tol))
      catalog.push_back(std::move(e));
    for (auto& e : refuter_entries(seq, depth, tol))
      catalog.push_back(std::move(e));
  }
  return catalog;
}

CatalogFactory default_catalog_factory(const PathSequence& seq, int depth,
                                       double tol, CatalogConfig cfg) {
  auto terms = seq.terms;
  CadlagStep limit = seq.limit;
  int seq_depth = seq.depth;
  return [terms, limit, seq_depth, depth, tol, cfg](double horizon) {
    PathSequence restricted{
        [terms, horizon](int n) { return restrict_path(terms(n), horizon); },
        restrict_path(limit, horizon), seq_depth};
    return default_dual_catalog(restricted, depth, tol, cfg);
  };
}

}  // namespace cadlag
