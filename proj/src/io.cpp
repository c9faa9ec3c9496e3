#include "cadlag/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cadlag {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<double> doubles_from(const json& j, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key).get<std::vector<double>>();
}

}  // namespace

json to_json(const CadlagStep& x) {
  return json{{"horizon", x.horizon()},
              {"breakpoints", x.breakpoints()},
              {"values", x.values()}};
}

json to_json(const PiecewiseLinear& f) {
  return json{{"nodes", f.nodes()}, {"values", f.values()}};
}

json to_json(const IntegratorPath& a) { return to_json(a.fn()); }

json to_json(const MultiPath& x) {
  json components = json::array();
  for (const CadlagStep& c : x.components()) components.push_back(to_json(c));
  return json{{"dimension", x.dimension()}, {"components", components}};
}

CadlagStep path_from_json(const json& j) {
  if (!j.contains("horizon"))
    throw std::invalid_argument("path file needs a 'horizon' field");
  return CadlagStep(j.at("horizon").get<double>(),
                    doubles_from(j, "breakpoints"), doubles_from(j, "values"));
}

PiecewiseLinear piecewise_linear_from_json(const json& j) {
  return PiecewiseLinear(doubles_from(j, "nodes"), doubles_from(j, "values"));
}

IntegratorPath integrator_from_json(const json& j) {
  return IntegratorPath(piecewise_linear_from_json(j));
}

MultiPath multipath_from_json(const json& j) {
  std::vector<CadlagStep> components;
  for (const json& c : j.at("components")) components.push_back(path_from_json(c));
  return MultiPath(std::move(components));
}

json to_json(const ConvergenceReport& r) {
  json out{{"verdict", r.pass ? "PASS" : "FAIL"},
           {"mode", r.mode},
           {"depth", r.depth},
           {"tolerance", r.tolerance}};
  if (r.epsilon) out["epsilon"] = *r.epsilon;
  if (r.pass_from >= 0) out["pass_from"] = r.pass_from;
  if (r.variation_bound) out["variation_bound"] = *r.variation_bound;
  if (r.witness)
    out["witness"] = json{{"index", r.witness->index},
                          {"object", r.witness->object},
                          {"margin", r.witness->margin}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  json curves = json::object();
  for (const MarginCurve& c : r.curves) curves[c.id] = c.margins;
  out["curves"] = curves;
  return out;
}

namespace {

json to_json(const GrowthBound& g) {
  return json{{"half", g.half}, {"full", g.full}, {"growth_flag", g.flag}};
}

}  // namespace

json to_json(const CompactnessReport& r) {
  json up = json::array();
  for (const auto& row : r.upcrossings)
    up.push_back(json{{"a", row.a}, {"b", row.b}, {"bound", to_json(row.bound)}});
  json osc = json::array();
  for (const auto& row : r.oscillations)
    osc.push_back(json{{"eta", row.eta}, {"bound", to_json(row.bound)}});
  json quant = json::array();
  for (const auto& row : r.quantizations)
    quant.push_back(json{{"eps", row.eps},
                         {"max_uniform_error", row.max_uniform_error},
                         {"variation", to_json(row.variation)}});
  return json{{"family_size", r.family_size},
              {"sup_norm", to_json(r.sup_norm)},
              {"upcrossings", up},
              {"oscillations", osc},
              {"quantizations", quant},
              {"criterion_i_bounded", r.bounded_i()},
              {"criterion_ii_bounded", r.bounded_ii()},
              {"criterion_iii_bounded", r.bounded_iii()}};
}

std::string path_to_csv(const CadlagStep& x) {
  std::string out = "horizon," + shortest(x.horizon()) + "\n";
  for (std::size_t i = 0; i < x.values().size(); ++i)
    out += shortest(x.breakpoints()[i]) + "," + shortest(x.values()[i]) + "\n";
  return out;
}

CadlagStep path_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  double horizon = 0.0;
  std::vector<double> bk, vals;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("csv rows must be 'a,b'");
    std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    if (first) {
      if (a != "horizon")
        throw std::invalid_argument("csv must start with a horizon row");
      horizon = std::stod(b);
      first = false;
    } else {
      bk.push_back(std::stod(a));
      vals.push_back(std::stod(b));
    }
  }
  return CadlagStep(horizon, std::move(bk), std::move(vals));
}

std::string report_margins_csv(const ConvergenceReport& r) {
  std::string out = "curve,index,margin\n";
  for (const MarginCurve& c : r.curves)
    for (std::size_t i = 0; i < c.margins.size(); ++i)
      out += c.id + "," + std::to_string(i + 1) + "," + shortest(c.margins[i]) +
             "\n";
  return out;
}

std::string compactness_csv(const CompactnessReport& r) {
  std::string out = "criterion,parameter,half,full,growth_flag\n";
  auto row = [&out](const std::string& crit, const std::string& param,
                    const GrowthBound& g) {
    out += crit + "," + param + "," + shortest(g.half) + "," + shortest(g.full) +
           "," + (g.flag ? "1" : "0") + "\n";
  };
  row("sup_norm", "", r.sup_norm);
  for (const auto& lvl : r.upcrossings)
    row("upcrossings", shortest(lvl.a) + ":" + shortest(lvl.b), lvl.bound);
  for (const auto& eta : r.oscillations)
    row("oscillations", shortest(eta.eta), eta.bound);
  for (const auto& eps : r.quantizations)
    row("quantization_variation", shortest(eps.eps), eps.variation);
  return out;
}

std::string margins_svg(const ConvergenceReport& r) {
  const int width = 640, height = 400, pad = 40;
  double max_margin = 1e-300;
  std::size_t max_len = 1;
  for (const MarginCurve& c : r.curves) {
    max_len = std::max(max_len, c.margins.size());
    for (double m : c.margins) max_margin = std::max(max_margin, m);
  }

  char buf[256];
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
      "viewBox=\"0 0 640 400\">\n";
  svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%d\" y=\"20\" font-size=\"13\">%s margins vs index "
                "(max %.3g)</text>\n",
                pad, r.mode.c_str(), max_margin);
  svg += buf;

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b"};
  int ci = 0;
  for (const MarginCurve& c : r.curves) {
    std::string points;
    for (std::size_t i = 0; i < c.margins.size(); ++i) {
      double fx = pad + (width - 2.0 * pad) * (max_len > 1 ? static_cast<double>(i) / (max_len - 1) : 0.0);
      double fy = height - pad -
                  (height - 2.0 * pad) * (c.margins[i] / max_margin);
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", fx, fy);
      points += buf;
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += colors[ci % 6];
    svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    ++ci;
  }
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" "
                "stroke=\"black\"/>\n",
                pad, height - pad, width - pad, height - pad);
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" "
                "stroke=\"black\"/>\n",
                pad, pad, pad, height - pad);
  svg += buf;
  svg += "</svg>\n";
  return svg;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

CadlagStep load_path(const std::string& path) {
  std::string text = read_text_file(path);
  if (ends_with(path, ".csv")) return path_from_csv(text);
  return path_from_json(json::parse(text));
}

IntegratorPath load_integrator(const std::string& path) {
  return integrator_from_json(json::parse(read_text_file(path)));
}

MultiPath load_multipath(const std::string& path) {
  return multipath_from_json(json::parse(read_text_file(path)));
}

}  // namespace cadlag
