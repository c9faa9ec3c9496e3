#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cadlag/paths.hpp"
#include "cadlag/report.hpp"
#include "cadlag/stieltjes.hpp"

namespace cadlag {

/// Indexed family of step paths with a declared candidate limit.
struct PathSequence {
  std::function<CadlagStep(int)> terms;  ///< n >= 1
  CadlagStep limit;
  int depth = std::numeric_limits<int>::max();
};

PathSequence constant_path_sequence(CadlagStep x);

/// Finite-variation companions v_{n,eps} certifying S-convergence: uniformly
/// eps-close to the paths and weakly-* convergent.
struct WitnessFamily {
  double eps = 0.0;
  std::function<CadlagStep(int)> witnesses;  ///< n >= 1
  CadlagStep limit_witness;
};

/// Witness family built from the eps-quantization skeletons of the sequence.
WitnessFamily quantization_witnesses(const PathSequence& seq, double eps);

// --- S-convergence oracles ---

/// Sufficient-evidence oracle: verifies a given witness family, i.e. the
/// eps-closeness of every witness up to `depth` and the weak-* convergence of
/// the witnesses against `test_family` (defaults when empty).
ConvergenceReport s_witness_check(const PathSequence& seq,
                                  const WitnessFamily& fam, int depth,
                                  double tol,
                                  const std::vector<PiecewiseLinear>&
                                      test_family = {});

/// Necessary-condition battery: endpoint convergence plus Stieltjes-integral
/// convergence along every tau-convergent integrator sequence in the catalog.
/// A FAIL disproves S-convergence; a PASS is finite-depth evidence only,
/// since the full characterization quantifies over all tau-convergent
/// sequences. Catalog entries failing their own tau test are a configuration
/// error.
ConvergenceReport s_dual_test(const PathSequence& seq,
                              const std::vector<IntegratorSequence>& catalog,
                              int depth, double tol);

/// Seminorm sup_{A in family} |integral x dA| over a finite integrator family.
double sigma_seminorm(const CadlagStep& x,
                      const std::vector<IntegratorPath>& family);

/// Endpoint seminorm |x(T)|.
double rho_endpoint(const CadlagStep& x);

/// Margins sigma_seminorm(x_n - x_0, family) must vanish with depth; finite
/// families stand in for relatively tau-compact integrator sets.
ConvergenceReport uniform_seminorm_convergence(
    const PathSequence& seq, const std::vector<IntegratorPath>& family,
    int depth, double tol);

/// Numeric relative-compactness bounds for a finite family of paths on the
/// supplied level / eta / eps grids, with growth flags comparing the bound
/// over the first half of the family against the whole of it.
CompactnessReport relative_s_compactness(
    const std::vector<CadlagStep>& paths,
    const std::vector<std::pair<double, double>>& level_grid,
    const std::vector<double>& eta_grid, const std::vector<double>& eps_grid);

// --- J1 / mJ1 machinery ---

struct DistanceBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bracket for the Skorokhod J1 distance
/// inf_lambda max(||lambda - id||, ||x o lambda - y||). The upper bound is
/// the exact cost of the best time change found by dynamic programming over
/// monotone breakpoint alignments (plus the identity); the lower bound
/// combines origin/endpoint pinning, value-range separation and the
/// jump-mismatch argument. Always lower <= d <= upper; never "the distance".
DistanceBounds j1_distance_bounds(const CadlagStep& x, const CadlagStep& y,
                                  int grid = 8);

/// J1 bracket after the tilde embedding with margin eps.
DistanceBounds mj1_distance_bounds(const CadlagStep& x, const CadlagStep& y,
                                   double eps, int grid = 8);

/// sup over 0- <= s < t < u <= T, u - s < delta of
/// min(|x(t) - x(s)|, |x(u) - x(t)|), maximized over the family, with the
/// conventions x(0-) = 0 and u - (0-) = u. Exact over breakpoint-induced
/// candidate triples.
double mj1_compactness_modulus(const std::vector<CadlagStep>& paths,
                               double delta);

// --- sequence-level wrappers ---

/// Uniform-convergence margins ||x_n - x_0||.
ConvergenceReport uniform_convergence_test(const PathSequence& seq, int depth,
                                           double tol);

/// J1 / mJ1 verdicts from the bound brackets: PASS when upper bounds vanish,
/// with the lower bound at depth reported as the witness margin on FAIL.
ConvergenceReport j1_convergence_test(const PathSequence& seq, int depth,
                                      double tol, int grid = 8);
ConvergenceReport mj1_convergence_test(const PathSequence& seq, int depth,
                                       double tol, double eps, int grid = 8);

/// Builds the catalog of integrator sequences used for a dual test at a given
/// horizon; see catalog.hpp for the default construction.
using CatalogFactory =
    std::function<std::vector<IntegratorSequence>(double horizon)>;

/// S test on [0, infinity): the dual test must pass for the restriction to
/// every horizon in `t_grid`. Terms must live on a horizon covering the grid.
ConvergenceReport infinite_horizon_s_test(const PathSequence& seq,
                                          const std::vector<double>& t_grid,
                                          const CatalogFactory& catalog,
                                          int depth, double tol);

/// Componentwise dual test for R^d-valued paths; FAIL names the component.
ConvergenceReport multidim_s_test(const std::function<MultiPath(int)>& terms,
                                  const MultiPath& limit,
                                  const std::vector<IntegratorSequence>& catalog,
                                  int depth, double tol);

/// A-posteriori convergence at desk scale: for every sampled subsequence
/// (arithmetic progressions with strides 1..5 and seeded random index sets),
/// search one level deep for a refinement on which the a-priori tester
/// passes. A FAIL exhibits a subsequence with no passing refinement; this is
/// a falsification tool, not a proof of convergence.
using SequenceTester = std::function<bool(const PathSequence&, int depth)>;

ConvergenceReport kvpk_a_posteriori(const SequenceTester& tester,
                                    const PathSequence& seq,
                                    int subsequence_samples, int depth,
                                    unsigned long long seed);

}  // namespace cadlag
