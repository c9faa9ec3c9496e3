#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cadlag {

/// Tolerances and knobs for the verification suite. The defaults are the
/// pinned contract; `demo --tol` tightens or loosens all of them at once,
/// which is expected to break the checks that rely on finite-depth
/// tau-admissibility (documented in the README).
struct DemoConfig {
  std::uint64_t seed = 7;
  int depth = 64;
  double tol_identity = 1e-9;    ///< certificate / residual identities
  double tol_converge = 0.05;    ///< generic finite-depth convergence margin
  double tol_separation = 1e-6;  ///< topology-separation margins at depth
  double mj1_eps = 1.0;
  std::string out_dir;  ///< empty: run checks without writing artifacts
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct DemoResult {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
  double total_seconds = 0.0;
};

/// Deterministic artifact bundle (relative path -> content) for a seed.
std::map<std::string, std::string> build_artifact_bundle(const DemoConfig& cfg);

/// Runs the ten verification criteria, writing the artifact bundle when
/// `out_dir` is set. Criterion 10 re-derives the bundle and requires byte
/// identity plus the overall runtime budget.
DemoResult run_demo(const DemoConfig& cfg);

}  // namespace cadlag
