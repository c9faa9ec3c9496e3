#include "cadlag/demo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "cadlag/catalog.hpp"
#include "cadlag/convergence.hpp"
#include "cadlag/functionals.hpp"
#include "cadlag/io.hpp"
#include "cadlag/oracles.hpp"
#include "cadlag/witnesses.hpp"

namespace cadlag {

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

IntegratorPath random_integrator(std::uint64_t seed, int segments, double scale,
                                 double horizon) {
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<double> nodes{0.0};
  while (static_cast<int>(nodes.size()) < segments) {
    double t = uniform01() * horizon;
    if (t > 0.0 && t < horizon) nodes.push_back(t);
  }
  nodes.push_back(horizon);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<double> vals{0.0};
  for (std::size_t i = 1; i < nodes.size(); ++i)
    vals.push_back((2.0 * uniform01() - 1.0) * scale);
  return IntegratorPath(std::move(nodes), std::move(vals));
}

// Paths with at least two up-crossings of (0, 1), deterministically seeded.
std::vector<CadlagStep> crossing_corpus(std::uint64_t seed, int want) {
  std::vector<CadlagStep> out;
  out.push_back(sawtooth_path(2, -0.5, 1.5, 1.0));
  out.push_back(sawtooth_path(5, -0.5, 1.5, 1.0));
  out.push_back(sawtooth_path(20, -0.5, 1.5, 1.0));
  std::uint64_t s = seed;
  while (static_cast<int>(out.size()) < want) {
    CadlagStep x = random_step_path(s++, 14, 2.0, 1.0);
    if (upcrossings(x, 0.0, 1.0) >= 2) out.push_back(x);
  }
  return out;
}

// --- criterion runners ---

Check criterion_lemma_witness(const DemoConfig& cfg) {
  Check c;
  const double tol = cfg.tol_identity;
  for (const CadlagStep& x : crossing_corpus(cfg.seed, 100)) {
    UpcrossingWitness w = lemma_upcrossing_witness(x, 0.0, 1.0);
    c.require(std::abs(w.variation - 2.0) <= tol,
              "variation != 2: " + fmt(w.variation));
    c.require(std::abs(w.sup - 1.0 / (w.crossings - 1)) <= tol,
              "sup != 1/(N-1) at N=" + std::to_string(w.crossings));
    c.require(w.integral >= (1.0 - 0.0) - tol,
              "integral below b-a: " + fmt(w.integral));
    if (!c.ok) break;
  }
  if (c.ok) c.detail = "100 witnesses satisfy all three identities";
  return c;
}

Check criterion_integration_by_parts(const DemoConfig& cfg) {
  Check c;
  for (int k = 0; k < 1000 && c.ok; ++k) {
    CadlagStep v = random_step_path(cfg.seed + 1000 + k, 2 + k % 14, 2.0, 1.0);
    IntegratorPath a = random_integrator(cfg.seed + 5000 + k, 2 + k % 9, 2.0, 1.0);
    double residual = integration_by_parts_residual(v, a);
    double scale = 1.0 + total_variation(v) * a.sup_norm() +
                   a.total_variation() * sup_norm(v);
    c.require(std::abs(residual) <= cfg.tol_identity * scale,
              "residual " + fmt(residual) + " beyond tolerance at pair " +
                  std::to_string(k));
  }
  if (c.ok) c.detail = "1000 random pairs within 1e-9 * scale";
  return c;
}

Check criterion_crossing_oracles(const DemoConfig& cfg) {
  Check c;
  const std::vector<double> alphabet{0.0, 0.5, 1.0};
  const std::vector<double> levels{-0.1, 0.1, 0.4, 0.6, 0.9, 1.1};
  const std::vector<double> etas{0.4, 0.6, 0.9, 1.1};

  std::vector<double> bk;
  for (int i = 0; i < 8; ++i) bk.push_back(i / 8.0);

  int paths = 0;
  for (int code = 0; code < 6561 && c.ok; ++code) {
    std::vector<double> vals(8);
    int rem = code;
    for (int i = 0; i < 8; ++i) {
      vals[i] = alphabet[rem % 3];
      rem /= 3;
    }
    CadlagStep x(1.0, bk, vals);
    ++paths;
    for (std::size_t i = 0; i < levels.size() && c.ok; ++i) {
      for (std::size_t j = i + 1; j < levels.size() && c.ok; ++j) {
        int fast = upcrossings(x, levels[i], levels[j]);
        int slow = oracles::upcrossings_bruteforce(x.values(), levels[i], levels[j]);
        c.require(fast == slow, "up-crossing mismatch at tuple " +
                                    std::to_string(code));
      }
    }
    for (double eta : etas) {
      if (!c.ok) break;
      int fast = oscillations(x, eta);
      int slow = oracles::oscillations_bruteforce(x.values(), eta);
      c.require(fast == slow,
                "oscillation mismatch at tuple " + std::to_string(code));
    }
  }

  for (int k = 0; k < 500 && c.ok; ++k) {
    CadlagStep x = random_step_path(cfg.seed + 20000 + k, 8, 1.0, 1.0);
    std::vector<double> cand;
    for (double v : x.values()) {
      cand.push_back(v - 0.1);
      cand.push_back(v + 0.1);
    }
    std::sort(cand.begin(), cand.end());
    for (std::size_t i = 0; i < cand.size() && c.ok; ++i) {
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (!(cand[i] < cand[j])) continue;
        if (upcrossings(x, cand[i], cand[j]) !=
            oracles::upcrossings_bruteforce(x.values(), cand[i], cand[j])) {
          c.require(false, "random up-crossing mismatch at " + std::to_string(k));
          break;
        }
      }
      double eta = std::abs(cand[i]);
      if (eta > 0.0 && oscillations(x, eta) !=
                           oracles::oscillations_bruteforce(x.values(), eta))
        c.require(false, "random oscillation mismatch at " + std::to_string(k));
    }
  }
  if (c.ok)
    c.detail = std::to_string(paths) + " exhaustive + 500 random paths agree";
  return c;
}

Check criterion_quantization(const DemoConfig& cfg) {
  Check c;
  for (int k = 0; k < 500 && c.ok; ++k) {
    CadlagStep x = random_step_path(cfg.seed + 30000 + k, 1 + k % 15, 1.5, 1.0);
    double eps = 0.05 + 0.4 * (k % 10);
    Quantization q = quantize(x, eps);

    c.require(sup_distance(x, q.skeleton) <= eps,
              "skeleton strays beyond eps at case " + std::to_string(k));
    auto [m, n] = quantization_bound_check(x, eps);
    c.require(m <= n, "M exceeded N_{eps/2} at case " + std::to_string(k));

    CadlagStep recon = CadlagStep::constant(0.0, x.horizon());
    for (auto [z, tau] : q.jump_decomposition)
      recon = linear_combine(recon, CadlagStep::indicator(tau, x.horizon()), 1.0, z);
    double scale = (1.0 + sup_norm(x)) * (q.jump_count + 1);
    c.require(sup_distance(recon, q.skeleton) <= 1e-12 * scale,
              "skeleton reconstruction drifted at case " + std::to_string(k));
  }
  if (c.ok) c.detail = "500 quantizations: closeness, bound and reconstruction hold";
  return c;
}

// Catalog for the separation demo: hat primitives whose supports avoid the
// spike region (so a spike family's margins drop to exactly zero) plus an
// exponentially tau-null multiple of the identity that sees the spikes with
// vanishing weight. Both are honest tau-convergent entries; together they
// push the margins of the S-convergent spike family below 1e-6 by depth 64.
std::vector<IntegratorSequence> separation_catalog(double horizon) {
  const double w = horizon / 8.0;
  std::vector<IntegratorSequence> catalog;
  for (int k : {1, 5, 6, 7})
    catalog.push_back(constant_integrator_sequence(
        "hat-primitive L3 k" + std::to_string(k),
        hat_primitive_integrator(k * w, w, horizon)));
  IntegratorSequence null_id{"identity-null",
                             [horizon](int n) {
                               return IntegratorPath::identity(horizon).scaled(
                                   std::ldexp(1.0, -n));
                             },
                             IntegratorPath::zero(horizon)};
  catalog.push_back(std::move(null_id));
  return catalog;
}

Check criterion_separation(const DemoConfig& cfg) {
  Check c;
  const double T = 1.0;
  PathSequence spikes{[T](int n) { return figure1_spikes(n + 2, T); },
                      CadlagStep::constant(0.0, T)};

  ConvergenceReport witness = s_witness_check(
      spikes, quantization_witnesses(spikes, 1.0), cfg.depth, cfg.tol_separation);
  c.require(witness.pass, "s-witness check failed");
  for (const MarginCurve& curve : witness.curves) {
    // eq1 closeness is bounded by the witness eps, and the variation curve is
    // a bound, not a margin; the weak-* integral margins must vanish.
    if (curve.id == "eq1" || curve.id == "variation" || curve.margins.empty())
      continue;
    c.require(curve.margins.back() < cfg.tol_separation,
              "s-witness margin at depth not below separation tolerance");
  }

  ConvergenceReport dual =
      s_dual_test(spikes, separation_catalog(T), cfg.depth, cfg.tol_separation);
  c.require(dual.pass, "s-dual test failed on the separation catalog");
  for (const MarginCurve& curve : dual.curves)
    c.require(curve.margins.back() < cfg.tol_separation,
              "s-dual margin at depth not below separation tolerance");

  ConvergenceReport dual_default = s_dual_test(
      spikes, default_dual_catalog(spikes, cfg.depth, cfg.tol_converge),
      cfg.depth, cfg.tol_converge);
  c.require(dual_default.pass, "s-dual test failed on the default catalog");

  for (int n = 3; n <= cfg.depth; ++n) {
    DistanceBounds b =
        j1_distance_bounds(figure1_spikes(n, T), CadlagStep::constant(0.0, T));
    c.require(b.lower >= 1.0 - 1e-12,
              "spike J1 lower bound dropped below 1 at n=" + std::to_string(n));
  }

  CadlagStep ones = CadlagStep::constant(1.0, T);
  DistanceBounds far = mj1_distance_bounds(figure2_jumps(64, T), ones, cfg.mj1_eps);
  c.require(far.upper < 0.05, "mJ1 upper bound at n=64 is " + fmt(far.upper));
  for (int n = 1; n <= 64; ++n) {
    DistanceBounds j1 = j1_distance_bounds(figure2_jumps(n, T), ones);
    c.require(j1.lower >= 1.0 - 1e-12,
              "drifting-jump J1 lower bound below 1 at n=" + std::to_string(n));
  }
  if (c.ok)
    c.detail = "S passes at 1e-6 margins while J1 lower bounds stay at 1; "
               "mJ1 upper " + fmt(far.upper);
  return c;
}

Check criterion_refuter(const DemoConfig& cfg) {
  (void)cfg;  // depth and tolerances are pinned by the criterion itself
  Check c;
  const double T = 1.0;
  PathSequence seq{[T](int n) { return CadlagStep::constant(n, T); },
                   CadlagStep::constant(0.0, T)};

  for (int n = 1; n <= 32 && c.ok; ++n) {
    CadlagStep x = CadlagStep::constant(n, T);
    auto [a, integral] = unboundedness_refuter(x, static_cast<double>(n));
    double root = std::sqrt(static_cast<double>(n));
    c.require(a.total_variation() == 1.0 / root,
              "refuter variation not exactly 1/sqrt(n) at n=" + std::to_string(n));
    c.require(std::abs(integral - root) <= 1e-12 * root,
              "refuter integral not sqrt(n) at n=" + std::to_string(n));
  }

  std::vector<IntegratorSequence> catalog;
  catalog.push_back(IntegratorSequence{
      "refuter",
      [T](int n) {
        CadlagStep x = CadlagStep::constant(n, T);
        return unboundedness_refuter(x, static_cast<double>(n)).first;
      },
      IntegratorPath::zero(T)});
  ConvergenceReport r = s_dual_test(seq, catalog, 32, 0.25);
  c.require(!r.pass, "dual test unexpectedly passed on the unbounded family");
  for (const MarginCurve& curve : r.curves)
    if (curve.id == "refuter")
      c.require(curve.margins.back() >= std::sqrt(32.0) - 1e-9,
                "refuter margin did not grow like sqrt(n)");
  if (c.ok) c.detail = "exact certificates and dual-test refutation at depth 32";
  return c;
}

Check criterion_compactness(const DemoConfig& cfg) {
  (void)cfg;
  Check c;
  const double T = 1.0;
  const int family = 50;
  using Family = std::function<CadlagStep(int)>;
  struct Entry {
    std::string name;
    Family make;
    bool compact;
  };
  std::vector<Entry> entries{
      {"constant", [T](int) { return CadlagStep::constant(1.0, T); }, true},
      {"drifting jump",
       [T](int n) { return figure2_jumps(n + 2, T); }, true},
      {"spikes", [T](int n) { return figure1_spikes(n + 2, T); }, true},
      {"shrinking sawtooth",
       [T](int n) { return sawtooth_path(4, 0.0, 1.0 / n, T); }, true},
      {"fixed sawtooth",
       [T](int) { return sawtooth_path(5, 0.0, 1.0, T); }, true},
      {"growing constant",
       [T](int n) { return CadlagStep::constant(n, T); }, false},
      {"sawtooth n teeth",
       [T](int n) { return sawtooth_path(n, 0.0, 1.0, T); }, false},
      {"sawtooth 2n teeth",
       [T](int n) { return sawtooth_path(2 * n, -1.0, 1.0, T); }, false},
      {"quadratic jump",
       [T](int n) {
         return CadlagStep::indicator(0.5, T, static_cast<double>(n) * n);
       },
       false},
      {"sawtooth 3n teeth",
       [T](int n) { return sawtooth_path(3 * n, 0.2, 0.8, T); }, false},
  };

  for (const Entry& entry : entries) {
    std::vector<CadlagStep> paths;
    paths.reserve(family);
    for (int n = 1; n <= family; ++n) paths.push_back(entry.make(n));
    CompactnessReport rep = relative_s_compactness(
        paths, {{0.25, 0.75}, {-0.5, 0.5}}, {0.3, 0.7}, {0.25, 1.0});
    c.require(rep.bounded_i() == rep.bounded_ii(),
              "criterion (i)/(ii) flags disagree for " + entry.name);
    c.require(rep.bounded_i() == entry.compact,
              "unexpected verdict for " + entry.name);
  }
  if (c.ok) c.detail = "10 families: (i) and (ii) growth flags agree";
  return c;
}

Check criterion_mj1_modulus(const DemoConfig& cfg) {
  (void)cfg;
  Check c;
  const double T = 1.0;

  std::vector<CadlagStep> drifting;
  for (int i = 1; i <= 5; ++i)
    drifting.push_back(CadlagStep::indicator(i / 10.0, T, 0.7));
  for (double delta : {0.02, 0.05, 0.09})
    c.require(mj1_compactness_modulus(drifting, delta) == 0.0,
              "drifting-jump modulus not 0 at delta=" + fmt(delta));

  const double delta = 0.1;
  std::vector<CadlagStep> close_jumps{
      CadlagStep(T, {0.0, 0.5, 0.5 + delta / 2.0}, {0.0, 1.0, 0.0})};
  c.require(mj1_compactness_modulus(close_jumps, delta) == 1.0,
            "two-close-jumps modulus is not 1");
  if (c.ok) c.detail = "single jumps stay flat; paired jumps report modulus 1";
  return c;
}

Check criterion_extensions(const DemoConfig& cfg) {
  Check c;
  for (int k = 0; k < 100 && c.ok; ++k) {
    CadlagStep x = random_step_path(cfg.seed + 40000 + k, 10, 2.0, 2.0);
    IntegratorPath a = random_integrator(cfg.seed + 45000 + k, 6, 1.5, 1.0);
    double lhs = integrate_x_dA(restrict_path(x, 1.0), a);
    double rhs = integrate_x_dA(x, extend_integrator(a, 2.0));
    c.require(std::abs(lhs - rhs) <= cfg.tol_identity,
              "restriction consistency broke at case " + std::to_string(k));
  }

  const double T = 1.0;
  std::vector<IntegratorSequence> catalog;
  catalog.push_back(
      constant_integrator_sequence("identity", IntegratorPath::identity(T)));
  for (auto& e : hat_primitive_entries(T, 2)) catalog.push_back(std::move(e));

  auto good = [T](int n) { return figure1_spikes(n + 2, T); };
  MultiPath good_limit(std::vector<CadlagStep>(3, CadlagStep::constant(0.0, T)));
  ConvergenceReport all_good = multidim_s_test(
      [good](int n) {
        return MultiPath({good(n), good(n), good(n)});
      },
      good_limit, catalog, 32, cfg.tol_converge);
  c.require(all_good.pass, "componentwise test failed on a convergent family");

  ConvergenceReport mixed = multidim_s_test(
      [good, T](int n) {
        return MultiPath({good(n), good(n), CadlagStep::constant(n, T)});
      },
      good_limit, catalog, 32, cfg.tol_converge);
  c.require(!mixed.pass, "componentwise test missed a divergent component");
  c.require(mixed.witness &&
                mixed.witness->object.rfind("component 3", 0) == 0,
            "componentwise failure did not name component 3");

  PathSequence marching{
      [](int n) {
        if (n >= 8) return CadlagStep::constant(0.0, 8.0);
        return CadlagStep(8.0, {0.0, static_cast<double>(n), n + 1.0},
                          {0.0, 1.0, 0.0});
      },
      CadlagStep::constant(0.0, 8.0)};
  ConvergenceReport inf = infinite_horizon_s_test(
      marching, {1.0, 2.0, 4.0},
      [](double t) {
        std::vector<IntegratorSequence> cat;
        cat.push_back(constant_integrator_sequence(
            "identity", IntegratorPath::identity(t)));
        return cat;
      },
      16, cfg.tol_converge);
  c.require(inf.pass, "marching spikes failed the finite-horizon battery");
  if (c.ok) c.detail = "restriction identity, componentwise and infinite-horizon checks hold";
  return c;
}

json config_json(const DemoConfig& cfg) {
  return json{{"seed", cfg.seed},
              {"depth", cfg.depth},
              {"tol_identity", cfg.tol_identity},
              {"tol_converge", cfg.tol_converge},
              {"tol_separation", cfg.tol_separation},
              {"mj1_eps", cfg.mj1_eps}};
}

}  // namespace

std::map<std::string, std::string> build_artifact_bundle(const DemoConfig& cfg) {
  std::map<std::string, std::string> files;
  const double T = 1.0;

  PathSequence spikes{[T](int n) { return figure1_spikes(n + 2, T); },
                      CadlagStep::constant(0.0, T)};
  ConvergenceReport dual = s_dual_test(
      spikes, default_dual_catalog(spikes, cfg.depth, cfg.tol_converge),
      cfg.depth, cfg.tol_converge);
  files["reports/figure1_s_dual.json"] = to_json(dual).dump(2) + "\n";
  files["reports/figure1_s_dual.svg"] = margins_svg(dual);
  files["tables/figure1_margins.csv"] = report_margins_csv(dual);

  ConvergenceReport witness = s_witness_check(
      spikes, quantization_witnesses(spikes, 1.0), cfg.depth, cfg.tol_separation);
  files["reports/figure1_s_witness.json"] = to_json(witness).dump(2) + "\n";

  PathSequence jumps{[T](int n) { return figure2_jumps(n, T); },
                     CadlagStep::constant(1.0, T)};
  ConvergenceReport mj1 =
      mj1_convergence_test(jumps, cfg.depth, cfg.tol_converge, cfg.mj1_eps);
  files["reports/figure2_mj1.json"] = to_json(mj1).dump(2) + "\n";
  ConvergenceReport j1 = j1_convergence_test(jumps, cfg.depth, cfg.tol_converge);
  files["reports/figure2_j1.json"] = to_json(j1).dump(2) + "\n";
  files["reports/figure2_mj1.svg"] = margins_svg(mj1);

  std::vector<CadlagStep> teeth;
  for (int n = 1; n <= 50; ++n) teeth.push_back(sawtooth_path(n, 0.0, 1.0, T));
  CompactnessReport compact = relative_s_compactness(
      teeth, {{0.25, 0.75}, {-0.5, 0.5}}, {0.3, 0.7}, {0.25, 1.0});
  files["tables/compactness_sawtooth.csv"] = compactness_csv(compact);
  files["reports/compactness_sawtooth.json"] = to_json(compact).dump(2) + "\n";

  CadlagStep sample = random_step_path(cfg.seed, 12, 1.5, T);
  files["paths/random_path.json"] = to_json(sample).dump(2) + "\n";
  files["paths/random_path.csv"] = path_to_csv(sample);

  return files;
}

DemoResult run_demo(const DemoConfig& cfg) {
  using Runner = Check (*)(const DemoConfig&);
  struct Spec {
    int id;
    const char* name;
    Runner run;
  };
  const Spec specs[] = {
      {1, "up-crossing witness identities", criterion_lemma_witness},
      {2, "integration by parts residual", criterion_integration_by_parts},
      {3, "crossing-count oracle equivalence", criterion_crossing_oracles},
      {4, "quantization guarantees", criterion_quantization},
      {5, "topology separation demos", criterion_separation},
      {6, "unboundedness refuter", criterion_refuter},
      {7, "compactness criteria equivalence", criterion_compactness},
      {8, "mJ1 compactness modulus sharpness", criterion_mj1_modulus},
      {9, "infinite horizon and componentwise", criterion_extensions},
  };

  DemoResult result;
  result.all_pass = true;
  auto t0 = std::chrono::steady_clock::now();
  for (const Spec& spec : specs) {
    auto c0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = spec.run(cfg);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("error: ") + e.what();
    }
    auto c1 = std::chrono::steady_clock::now();
    result.criteria.push_back(
        {spec.id, spec.name, c.ok, c.detail,
         std::chrono::duration<double>(c1 - c0).count()});
    result.all_pass = result.all_pass && c.ok;
  }

  // Criterion 10: the artifact bundle must be byte-stable for a fixed seed,
  // and the whole suite must fit the runtime budget.
  auto d0 = std::chrono::steady_clock::now();
  Check det;
  try {
    auto bundle = build_artifact_bundle(cfg);
    auto again = build_artifact_bundle(cfg);
    det.require(bundle == again, "artifact bundles differ between runs");
    if (!cfg.out_dir.empty()) {
      for (const auto& [rel, content] : bundle)
        write_text_file(cfg.out_dir + "/" + rel, content);
    }
  } catch (const std::exception& e) {
    det.ok = false;
    det.detail = std::string("error: ") + e.what();
  }
  auto d1 = std::chrono::steady_clock::now();
  double total = std::chrono::duration<double>(d1 - t0).count();
  det.require(total < 90.0, "suite exceeded the 90 s budget");
  if (det.ok) det.detail = "byte-identical artifact bundles";
  result.criteria.push_back({10, "deterministic artifact bundle", det.ok,
                             det.detail,
                             std::chrono::duration<double>(d1 - d0).count()});
  result.all_pass = result.all_pass && det.ok;
  result.total_seconds = total;

  if (!cfg.out_dir.empty()) {
    json criteria = json::array();
    for (const CriterionResult& r : result.criteria)
      criteria.push_back(json{{"id", r.id},
                              {"name", r.name},
                              {"verdict", r.pass ? "PASS" : "FAIL"},
                              {"detail", r.detail}});
    json summary{{"criteria", criteria},
                 {"all_pass", result.all_pass},
                 {"config", config_json(cfg)}};
    write_text_file(cfg.out_dir + "/summary.json", summary.dump(2) + "\n");
  }
  return result;
}

}  // namespace cadlag
