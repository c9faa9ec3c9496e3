#include <cstdlib>
#include <memory>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cadlag/catalog.hpp"
#include "cadlag/convergence.hpp"
#include "cadlag/demo.hpp"
#include "cadlag/functionals.hpp"
#include "cadlag/io.hpp"
#include "cadlag/witnesses.hpp"

namespace {

using namespace cadlag;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFail = 3;
constexpr int kExitIo = 4;

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  return out;
}

std::vector<std::pair<double, double>> parse_level_pairs(const std::string& csv) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("levels must be a:b pairs");
    out.emplace_back(std::stod(item.substr(0, colon)),
                     std::stod(item.substr(colon + 1)));
  }
  return out;
}

struct SequenceSpec {
  std::string family;  // catalog id, or empty for explicit files
  std::vector<std::string> files;
  std::string limit_file;
  double horizon = 1.0;
};

PathSequence resolve_sequence(const SequenceSpec& spec) {
  if (spec.family == "figure1_spikes") {
    double T = spec.horizon;
    return {[T](int n) { return figure1_spikes(n + 2, T); },
            CadlagStep::constant(0.0, T)};
  }
  if (spec.family == "figure2_jumps") {
    double T = spec.horizon;
    return {[T](int n) { return figure2_jumps(n, T); },
            CadlagStep::constant(1.0, T)};
  }
  if (!spec.family.empty())
    throw std::invalid_argument("unknown catalog family: " + spec.family);
  if (spec.files.empty() || spec.limit_file.empty())
    throw std::invalid_argument(
        "sequence needs a catalog family or --files plus --limit");
  auto paths = std::make_shared<std::vector<CadlagStep>>();
  for (const std::string& f : spec.files) paths->push_back(load_path(f));
  CadlagStep limit = load_path(spec.limit_file);
  PathSequence seq{[paths](int n) { return paths->at(n - 1); }, limit,
                   static_cast<int>(paths->size())};
  return seq;
}

std::vector<IntegratorSequence> resolve_catalog(const std::string& names,
                                                const std::vector<std::string>& files,
                                                const std::string& limit_file,
                                                const PathSequence& seq,
                                                int depth, double tol) {
  std::vector<IntegratorSequence> catalog;
  const double T = seq.limit.horizon();
  if (!files.empty()) {
    if (limit_file.empty())
      throw std::invalid_argument("--catalog-files needs --catalog-limit");
    auto terms = std::make_shared<std::vector<IntegratorPath>>();
    for (const std::string& f : files) terms->push_back(load_integrator(f));
    // indices past the last file stay at the last file
    catalog.push_back(IntegratorSequence{
        "files",
        [terms](int n) {
          return terms->at(std::min<std::size_t>(n - 1, terms->size() - 1));
        },
        load_integrator(limit_file)});
    return catalog;
  }
  std::stringstream ss(names);
  std::string item;
  CatalogConfig cfg;
  while (std::getline(ss, item, ',')) {
    if (item == "auto") {
      return default_dual_catalog(seq, depth, tol, cfg);
    } else if (item == "identity") {
      catalog.push_back(
          constant_integrator_sequence("identity", IntegratorPath::identity(T)));
    } else if (item == "hats") {
      for (auto& e : hat_primitive_entries(T, cfg.hat_levels))
        catalog.push_back(std::move(e));
    } else if (item == "lemma_witness") {
      for (auto& e : lemma_witness_entries(seq, cfg.level_grid, depth, tol))
        catalog.push_back(std::move(e));
    } else if (item == "refuter") {
      for (auto& e : refuter_entries(seq, depth, tol))
        catalog.push_back(std::move(e));
    } else {
      throw std::invalid_argument("unknown catalog entry: " + item);
    }
  }
  if (catalog.empty())
    throw std::invalid_argument("catalog resolved to no entries");
  return catalog;
}

void emit_report(const ConvergenceReport& report, const std::string& out,
                 const std::string& format) {
  json j = to_json(report);
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::stringstream ss(format);
  std::string fmt;
  while (std::getline(ss, fmt, ',')) {
    if (fmt == "json")
      write_text_file(out + ".json", j.dump(2) + "\n");
    else if (fmt == "csv")
      write_text_file(out + ".csv", report_margins_csv(report));
    else if (fmt == "svg")
      write_text_file(out + ".svg", margins_svg(report));
    else
      throw std::invalid_argument("unknown output format: " + fmt);
  }
}

int cmd_analyze(const std::string& file, const std::string& levels,
                const std::string& etas, const std::string& eps,
                const std::string& out) {
  CadlagStep x = load_path(file);
  json report{{"file", file},
              {"horizon", x.horizon()},
              {"segments", x.segment_count()},
              {"sup_norm", sup_norm(x)},
              {"total_variation", total_variation(x)}};

  json crossings = json::array();
  for (auto [a, b] : parse_level_pairs(levels))
    crossings.push_back(json{{"a", a}, {"b", b}, {"count", upcrossings(x, a, b)}});
  report["upcrossings"] = crossings;

  json oscs = json::array();
  for (double eta : parse_doubles(etas))
    oscs.push_back(json{{"eta", eta}, {"count", oscillations(x, eta)}});
  report["oscillations"] = oscs;

  json quants = json::array();
  for (double e : parse_doubles(eps)) {
    Quantization q = quantize(x, e);
    quants.push_back(json{{"eps", e},
                          {"jump_count", q.jump_count},
                          {"stopping_times", q.stopping_times},
                          {"skeleton_variation", total_variation(q.skeleton)},
                          {"uniform_error", sup_distance(x, q.skeleton)}});
  }
  report["quantizations"] = quants;

  if (out.empty())
    std::cout << report.dump(2) << "\n";
  else
    write_text_file(out, report.dump(2) + "\n");
  return kExitPass;
}

int cmd_converge(const SequenceSpec& spec, const std::string& mode,
                 const std::string& catalog_names,
                 const std::vector<std::string>& catalog_files,
                 const std::string& catalog_limit, int depth, double tol,
                 double mj1_eps, double witness_eps, int grid, int level,
                 const std::string& t_grid, const std::string& out,
                 const std::string& format) {
  ConvergenceReport report;
  if (mode == "multidim") {
    if (spec.files.empty() || spec.limit_file.empty())
      throw std::invalid_argument("multidim mode needs --files and --limit");
    auto paths = std::make_shared<std::vector<MultiPath>>();
    for (const std::string& f : spec.files) paths->push_back(load_multipath(f));
    MultiPath limit = load_multipath(spec.limit_file);
    PathSequence first_component{
        [paths](int n) { return paths->at(n - 1).component(0); },
        limit.component(0), static_cast<int>(paths->size())};
    auto catalog =
        resolve_catalog(catalog_names, catalog_files, catalog_limit,
                        first_component, std::min<int>(depth, paths->size()), tol);
    report = multidim_s_test(
        [paths](int n) { return paths->at(n - 1); }, limit, catalog,
        std::min<int>(depth, paths->size()), tol);
  } else {
    PathSequence seq = resolve_sequence(spec);
    int eff_depth = std::min(depth, seq.depth);
    if (mode == "s-dual") {
      report = s_dual_test(seq,
                           resolve_catalog(catalog_names, catalog_files,
                                           catalog_limit, seq, eff_depth, tol),
                           eff_depth, tol);
    } else if (mode == "s-witness") {
      report = s_witness_check(seq, quantization_witnesses(seq, witness_eps),
                               eff_depth, tol,
                               default_test_family(seq.limit.horizon(), level));
    } else if (mode == "j1") {
      report = j1_convergence_test(seq, eff_depth, tol, grid);
    } else if (mode == "mj1") {
      report = mj1_convergence_test(seq, eff_depth, tol, mj1_eps, grid);
    } else if (mode == "uniform") {
      report = uniform_convergence_test(seq, eff_depth, tol);
    } else if (mode == "inf-horizon") {
      std::vector<double> ts = parse_doubles(t_grid);
      report = infinite_horizon_s_test(
          seq, ts, default_catalog_factory(seq, eff_depth, tol), eff_depth, tol);
    } else {
      throw std::invalid_argument("unknown mode: " + mode);
    }
  }
  emit_report(report, out, format);
  return report.pass ? kExitPass : kExitFail;
}

int cmd_compact(const SequenceSpec& spec, int count, const std::string& levels,
                const std::string& etas, const std::string& eps,
                const std::string& out) {
  std::vector<CadlagStep> paths;
  if (!spec.files.empty()) {
    for (const std::string& f : spec.files) paths.push_back(load_path(f));
  } else {
    PathSequence seq = resolve_sequence(spec);
    for (int n = 1; n <= count; ++n) paths.push_back(seq.terms(n));
  }
  CompactnessReport rep = relative_s_compactness(
      paths, parse_level_pairs(levels), parse_doubles(etas), parse_doubles(eps));
  json j = to_json(rep);
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_text_file(out, j.dump(2) + "\n");
  bool bounded = rep.bounded_i() && rep.bounded_ii() && rep.bounded_iii();
  return bounded ? kExitPass : kExitFail;
}

int cmd_demo(DemoConfig cfg) {
  DemoResult result = run_demo(cfg);
  for (const CriterionResult& r : result.criteria) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name
              << " -- " << r.detail << "  (" << r.seconds << " s)\n";
  }
  std::cout << (result.all_pass ? "all criteria passed"
                                : "some criteria FAILED")
            << " in " << result.total_seconds << " s\n";
  return result.all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of cadlag step paths: functionals, Stieltjes "
               "integration and convergence oracles for the S, J1 and mJ1 "
               "topologies"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "path functionals of one file");
  std::string an_file, an_levels = "-0.5:0.5,0.25:0.75", an_etas = "0.25,0.5,1";
  std::string an_eps = "0.25,0.5,1", an_out;
  analyze->add_option("file", an_file, "path file (.json or .csv)")->required();
  analyze->add_option("--levels", an_levels, "a:b pairs, comma separated");
  analyze->add_option("--etas", an_etas, "oscillation thresholds");
  analyze->add_option("--eps", an_eps, "quantization thresholds");
  analyze->add_option("--out", an_out, "write the report here instead of stdout");

  // converge
  auto* converge = app.add_subcommand("converge", "convergence oracles");
  SequenceSpec cv_spec;
  std::string cv_mode = "s-dual", cv_catalog = "auto", cv_tgrid = "1,2,4";
  std::string cv_out, cv_format = "json", cv_catalog_limit;
  std::vector<std::string> cv_catalog_files;
  int cv_depth = 64, cv_grid = 8, cv_level = 6;
  double cv_tol = 0.05, cv_mj1_eps = 1.0, cv_witness_eps = 1.0;
  converge->add_option("family", cv_spec.family,
                       "catalog family (figure1_spikes, figure2_jumps)");
  converge->add_option("--files", cv_spec.files, "explicit per-index path files");
  converge->add_option("--limit", cv_spec.limit_file, "limit path file");
  converge->add_option("--horizon", cv_spec.horizon, "family horizon");
  converge->add_option("--mode", cv_mode,
                       "s-dual|s-witness|j1|mj1|uniform|inf-horizon|multidim");
  converge->add_option("--catalog", cv_catalog,
                       "auto or comma list of identity,hats,lemma_witness,refuter");
  converge->add_option("--catalog-files", cv_catalog_files,
                       "explicit per-index integrator files");
  converge->add_option("--catalog-limit", cv_catalog_limit,
                       "limit integrator file for --catalog-files");
  converge->add_option("--depth", cv_depth, "evaluation depth")
      ->check(CLI::Range(8, 1 << 20));
  converge->add_option("--tol", cv_tol, "margin tolerance")
      ->check(CLI::PositiveNumber);
  converge->add_option("--eps", cv_mj1_eps, "mJ1 embedding margin");
  converge->add_option("--witness-eps", cv_witness_eps,
                       "epsilon for the quantization witness family");
  converge->add_option("--grid", cv_grid, "time-change search effort");
  converge->add_option("--level", cv_level, "weak-* test family level")
      ->check(CLI::Range(1, 10));
  converge->add_option("--t-grid", cv_tgrid, "horizons for inf-horizon mode");
  converge->add_option("--out", cv_out, "output file stem");
  converge->add_option("--format", cv_format, "json,csv,svg");

  // compact
  auto* compact = app.add_subcommand("compact", "relative-compactness bounds");
  SequenceSpec cp_spec;
  std::string cp_levels = "0.25:0.75,-0.5:0.5", cp_etas = "0.3,0.7";
  std::string cp_eps = "0.25,1", cp_out;
  int cp_count = 50;
  compact->add_option("family", cp_spec.family, "catalog family");
  compact->add_option("--files", cp_spec.files, "explicit path files");
  compact->add_option("--horizon", cp_spec.horizon, "family horizon");
  compact->add_option("--count", cp_count, "family size when using a catalog id");
  compact->add_option("--levels", cp_levels, "a:b pairs");
  compact->add_option("--etas", cp_etas, "oscillation thresholds");
  compact->add_option("--eps", cp_eps, "quantization thresholds");
  compact->add_option("--out", cp_out, "write the report here");

  // demo
  auto* demo = app.add_subcommand("demo", "full verification suite and bundle");
  DemoConfig demo_cfg;
  const char* env_out = std::getenv("CADLAG_OUT_DIR");
  demo_cfg.out_dir = env_out ? env_out : "cadlag_demo";
  double demo_tol = 0.0;
  demo->add_option("--seed", demo_cfg.seed, "bundle seed");
  demo->add_option("--depth", demo_cfg.depth, "sequence depth")
      ->check(CLI::Range(8, 4096));
  demo->add_option("--out", demo_cfg.out_dir, "bundle directory");
  demo->add_option("--tol", demo_tol,
                   "override every tolerance at once (expect documented "
                   "failures at extreme values)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(an_file, an_levels, an_etas, an_eps, an_out);
    if (*converge)
      return cmd_converge(cv_spec, cv_mode, cv_catalog, cv_catalog_files,
                          cv_catalog_limit, cv_depth, cv_tol, cv_mj1_eps,
                          cv_witness_eps, cv_grid, cv_level, cv_tgrid, cv_out,
                          cv_format);
    if (*compact)
      return cmd_compact(cp_spec, cp_count, cp_levels, cp_etas, cp_eps, cp_out);
    if (*demo) {
      if (demo_tol > 0.0) {
        demo_cfg.tol_identity = demo_tol;
        demo_cfg.tol_converge = demo_tol;
        demo_cfg.tol_separation = demo_tol;
      }
      return cmd_demo(demo_cfg);
    }
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
