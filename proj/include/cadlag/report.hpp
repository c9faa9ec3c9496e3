#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cadlag {

/// Margin-vs-index curve for one tested condition; margins[i] belongs to
/// sequence index i + 1.
struct MarginCurve {
  std::string id;
  std::vector<double> margins;
};

/// Result of the finite-depth "margins vanish" check: below tol at the final
/// index and non-increasing (within tol slack) over the last quarter of
/// indices. A PASS is a finite-depth numerical verdict, not a proof.
struct TailSummary {
  bool ok = false;
  int pass_from = -1;      ///< first index from which all margins stay < tol
  int witness_index = -1;  ///< violating index when !ok
  double witness_margin = 0.0;
};

TailSummary analyze_margins(const std::vector<double>& margins, double tol);

/// Largest value over the first half of an indexed family versus the whole of
/// it; a jump beyond factor 1.5 flags divergence of the underlying bound.
struct GrowthBound {
  double half = 0.0;
  double full = 0.0;
  bool flag = false;
};

GrowthBound growth_bound(const std::vector<double>& values);

struct FailWitness {
  int index = -1;
  std::string object;
  double margin = 0.0;
};

/// Structured verdict of a convergence oracle. FAIL always carries a witness;
/// PASS always carries the depth and tolerance it was established at.
struct ConvergenceReport {
  bool pass = false;
  std::string mode;
  int depth = 0;
  double tolerance = 0.0;
  /// Embedding or witness epsilon when the mode has one, else unset.
  std::optional<double> epsilon;
  std::vector<MarginCurve> curves;
  std::optional<FailWitness> witness;
  int pass_from = -1;
  std::optional<double> variation_bound;
  std::string detail;
};

ConvergenceReport make_pass(std::string mode, int depth, double tol);
ConvergenceReport make_fail(std::string mode, int depth, double tol,
                            FailWitness witness);

/// Numeric relative-compactness bounds for a finite indexed family, per the
/// three equivalent criteria: sup-norm plus up-crossing bounds, sup-norm plus
/// oscillation bounds, and skeleton variation bounds per epsilon.
struct CompactnessReport {
  int family_size = 0;
  GrowthBound sup_norm;

  struct LevelRow {
    double a = 0.0, b = 0.0;
    GrowthBound bound;
  };
  std::vector<LevelRow> upcrossings;

  struct EtaRow {
    double eta = 0.0;
    GrowthBound bound;
  };
  std::vector<EtaRow> oscillations;

  struct EpsRow {
    double eps = 0.0;
    double max_uniform_error = 0.0;  ///< sup over the family of ||x - v_eps||
    GrowthBound variation;
  };
  std::vector<EpsRow> quantizations;

  bool bounded_i() const;    ///< no sup-norm or up-crossing growth flag
  bool bounded_ii() const;   ///< no sup-norm or oscillation growth flag
  bool bounded_iii() const;  ///< no skeleton-variation growth flag
};

}  // namespace cadlag
