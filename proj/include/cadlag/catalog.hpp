#pragma once

#include <utility>
#include <vector>

#include "cadlag/convergence.hpp"
#include "cadlag/stieltjes.hpp"

namespace cadlag {

/// Knobs for the default dual-test catalog.
struct CatalogConfig {
  int hat_levels = 6;  ///< hat-primitive entries at dyadic levels 1..hat_levels
  std::vector<std::pair<double, double>> level_grid{
      {0.25, 0.75}, {-0.75, -0.25}, {-0.5, 0.5}};
  bool adaptive = true;  ///< derive up-crossing / unboundedness entries from
                         ///< the sequence when they are tau-admissible
};

/// Piecewise-linear primitive of the unit hat density centered at `center`
/// with half-width `width`.
IntegratorPath hat_primitive_integrator(double center, double width,
                                        double horizon);

/// Primitives of the dyadic hat densities at levels 1..levels, as constant
/// integrator sequences.
std::vector<IntegratorSequence> hat_primitive_entries(double horizon,
                                                      int levels);

/// Entry built from the up-crossing witnesses of the sequence itself; present
/// only when every term has at least two crossings of (a, b) and the witness
/// sup norms vanish fast enough to be tau-convergent at (depth, tol).
std::vector<IntegratorSequence> lemma_witness_entries(
    const PathSequence& seq, const std::vector<std::pair<double, double>>& levels,
    int depth, double tol);

/// Entry built from the unboundedness refuters of the sequence itself;
/// present only when the terms' sup norms grow enough for the refuter
/// variations to vanish at (depth, tol).
std::vector<IntegratorSequence> refuter_entries(const PathSequence& seq,
                                                int depth, double tol);

/// Identity integrator, hat primitives, and -- when admissible -- the
/// sequence-adapted separating entries. Every returned entry passes the tau
/// test at (depth, tol).
std::vector<IntegratorSequence> default_dual_catalog(const PathSequence& seq,
                                                     int depth, double tol,
                                                     const CatalogConfig& cfg = {});

/// Factory form of the default catalog for infinite-horizon runs.
CatalogFactory default_catalog_factory(const PathSequence& seq, int depth,
                                       double tol, CatalogConfig cfg = {});

}  // namespace cadlag
