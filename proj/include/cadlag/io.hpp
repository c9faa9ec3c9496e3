#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cadlag/paths.hpp"
#include "cadlag/report.hpp"

namespace cadlag {

/// Filesystem failures distinct from parse/usage errors; the CLI maps these
/// to their own exit code.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// Path files: {"horizon": T, "breakpoints": [...], "values": [...]}.
// Integrators: {"nodes": [...], "values": [...]} with the horizon given by
// the last node. Values round-trip exactly (shortest decimal form).
json to_json(const CadlagStep& x);
json to_json(const PiecewiseLinear& f);
json to_json(const IntegratorPath& a);
json to_json(const MultiPath& x);

CadlagStep path_from_json(const json& j);
PiecewiseLinear piecewise_linear_from_json(const json& j);
IntegratorPath integrator_from_json(const json& j);
MultiPath multipath_from_json(const json& j);

json to_json(const ConvergenceReport& r);
json to_json(const CompactnessReport& r);

/// CSV alternative for paths: a "horizon,<T>" header followed by t,value
/// rows, one per segment.
std::string path_to_csv(const CadlagStep& x);
CadlagStep path_from_csv(const std::string& text);

/// Margin summary rows: curve id, index, margin.
std::string report_margins_csv(const ConvergenceReport& r);
std::string compactness_csv(const CompactnessReport& r);

/// Line chart of margin-vs-index curves; fixed-precision output so repeated
/// runs are byte-identical.
std::string margins_svg(const ConvergenceReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

CadlagStep load_path(const std::string& path);        ///< by .json / .csv suffix
IntegratorPath load_integrator(const std::string& path);
MultiPath load_multipath(const std::string& path);

}  // namespace cadlag
