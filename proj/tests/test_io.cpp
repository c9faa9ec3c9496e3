#include <doctest.h>

#include <filesystem>

#include "cadlag/convergence.hpp"
#include "cadlag/io.hpp"
#include "cadlag/witnesses.hpp"

using namespace cadlag;

TEST_CASE("path JSON and CSV round-trip exactly") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CadlagStep x = random_step_path(seed, 1 + seed % 12, 3.0, 1.0);
    CHECK(path_from_json(json::parse(to_json(x).dump())) == x);
    CHECK(path_from_csv(path_to_csv(x)) == x);
  }
  CadlagStep edge(3.0, {0.0, 1.0 / 3.0, 3.0}, {0.1, -0.2, 0.30000000000000004});
  CHECK(path_from_json(json::parse(to_json(edge).dump())) == edge);
  CHECK(path_from_csv(path_to_csv(edge)) == edge);
}

TEST_CASE("integrator and multipath round-trips") {
  IntegratorPath a = primitive_of_density(random_step_path(5, 7, 2.0, 1.0));
  CHECK(integrator_from_json(json::parse(to_json(a).dump())) == a);

  MultiPath m({random_step_path(1, 4, 1.0, 1.0), random_step_path(2, 6, 1.0, 1.0)});
  MultiPath back = multipath_from_json(json::parse(to_json(m).dump()));
  CHECK(back.dimension() == 2);
  CHECK(back.component(0) == m.component(0));
  CHECK(back.component(1) == m.component(1));
}

TEST_CASE("malformed files raise parse errors") {
  CHECK_THROWS_AS(path_from_json(json::parse("{\"values\": [1]}")),
                  std::invalid_argument);
  CHECK_THROWS_AS(path_from_csv("0,1\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_path("/nonexistent/path.json"), IoError);
}

TEST_CASE("reports serialize with verdict, curves and witness") {
  PathSequence jumps{[](int n) { return figure2_jumps(n, 1.0); },
                     CadlagStep::constant(1.0, 1.0)};
  ConvergenceReport r = j1_convergence_test(jumps, 16, 0.05);
  json j = to_json(r);
  CHECK(j.at("verdict") == "FAIL");
  CHECK(j.at("mode") == "j1");
  CHECK(j.at("depth") == 16);
  CHECK(j.contains("witness"));
  CHECK(j.at("curves").contains("upper"));
  CHECK(j.at("curves").contains("lower"));

  std::string csv = report_margins_csv(r);
  CHECK(csv.rfind("curve,index,margin\n", 0) == 0);
  std::string svg = margins_svg(r);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("file IO surfaces filesystem failures with IoError") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "cadlag_io_test";
  fs::create_directories(dir);
  std::string file = (dir / "x.json").string();
  CadlagStep x = random_step_path(9, 5, 1.0, 1.0);
  write_text_file(file, to_json(x).dump() + "\n");
  CHECK(load_path(file) == x);
  fs::remove_all(dir);
  CHECK_THROWS_AS(read_text_file(file), IoError);
}
