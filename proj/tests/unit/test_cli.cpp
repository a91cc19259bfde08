#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "molsens/cli.hpp"

using namespace molsens;
using namespace molsens::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("efficient report") {
  const Run r = run({"efficient", data_path("example5.molp")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "VS = {v1, v2, v3, v4, v5}"));
  CHECK(has(r.out, "chain: S_1^5"));
  CHECK(has(r.out, "[v4, v5] (6, 7) -> (4, 8)"));
}

TEST_CASE("sensitivity report") {
  const Run r = run({"sensitivity", data_path("example5.molp")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "Î = ]-108.435°, 90.000°["));
  CHECK(has(r.out, "g1 = c5 = (1, -2)"));
  CHECK(has(r.out, "g2 = c6 = (1, 4)"));
  CHECK(has(r.out, "theta1(1) = -18.435°, theta2(5) = 180.000°"));
}

TEST_CASE("cone, vertices, classify, equiv") {
  const Run cone = run({"cone", data_path("example5.molp")});
  CHECK(cone.code == 0);
  CHECK(has(cone.out, "k1 = 5, phi1 = -63.435°"));
  CHECK(has(cone.out, "k2 = 6, phi2 = 75.964°"));
  CHECK(has(cone.out, "width = 139.399°"));

  const Run vs = run({"vertices", data_path("example5.molp")});
  CHECK(has(vs.out, "v1 = (4, 1)"));
  CHECK(has(vs.out, "v9 = (1, 2)"));

  CHECK(has(run({"classify", data_path("example5.molp")}).out, "class: (1, 5)"));

  const Run eq = run({"equiv", data_path("example5.molp"), data_path("tolp5.molp")});
  CHECK(eq.code == 0);
  CHECK(has(eq.out, "equivalent: true"));
  CHECK(has(run({"equiv", data_path("example5.molp"), data_path("square.molp")}).out, "equivalent: false"));
}

TEST_CASE("member") {
  const Run r = run({"member", data_path("example5.molp"), "--k", "3", "--angles", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 -2\n1 4\n2.23606797749979 0\n");
  CHECK(run({"member", data_path("example5.molp"), "--k", "3", "--angles", "90"}).code == 3);
  CHECK(run({"member", data_path("example5.molp"), "--k", "3", "--angles", "-106"}).code == 3);
  CHECK(run({"member", data_path("example5.molp"), "--k", "3", "--angles", "zero"}).code == 2);
}

TEST_CASE("classes census") {
  const Run r = run({"classes", data_path("example5.molp")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "labels = 81"));
  CHECK(has(r.out, "(8, 6)  S_8^6"));
  CHECK_FALSE(has(r.out, "CHECK FAILED"));
}

TEST_CASE("json output uses radians") {
  const Run r = run({"--json", "sensitivity", data_path("example5.molp")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["tolerance"]["lo"].get<double>() == doctest::Approx(radians(-108.43494882)));
  CHECK(j["tolerance"]["hi"].get<double>() == doctest::Approx(kPi / 2));
  CHECK(j["chain"]["start"] == 1);
  CHECK(j["chain"]["count"] == 5);
  CHECK(j["k1"] == 5);

  const auto eff = nlohmann::json::parse(run({"efficient", "--json", data_path("example5.molp")}).out);
  CHECK(eff["vs"] == nlohmann::json::array({1, 2, 3, 4, 5}));
}

TEST_CASE("verify on shipped problem files") {
  for (const auto& entry : std::filesystem::directory_iterator(MOLSENS_DATA_DIR)) {
    if (entry.path().extension() != ".molp") continue;
    CAPTURE(entry.path().string());
    CHECK(run({"verify", entry.path().string()}).code == 0);
  }
  const Run trials = run({"verify", "--trials", "20", "--seed", "5"});
  CHECK(trials.code == 0);
  CHECK(has(trials.out, "mismatches: 0"));
}

TEST_CASE("malformed fixtures map to exit statuses") {
  const std::pair<const char*, int> cases[] = {
      {"zero_gradient.molp", 3}, {"empty_region.molp", 3},    {"unbounded_region.molp", 3},
      {"wide_cone.molp", 3},     {"too_few_objectives.molp", 3}, {"bad_number.molp", 2},
      {"missing_flag.molp", 2},  {"truncated.molp", 2},       {"zero_denominator.molp", 2},
  };
  for (const auto& [name, code] : cases) {
    CAPTURE(name);
    const Run r = run({"efficient", data_path(std::string("fixtures/") + name)});
    CHECK(r.code == code);
    CHECK_FALSE(r.err.empty());
  }
  CHECK(has(run({"efficient", data_path("fixtures/zero_gradient.molp")}).err, "gradient 2"));
  CHECK(has(run({"efficient", data_path("fixtures/bad_number.molp")}).err, "line 2"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"efficient"}).code == 2);
  CHECK(run({"efficient", "/nonexistent.molp"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"--epsilon", "-1", "vertices", data_path("square.molp")}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"plot", data_path("example5.molp"), "--out", "/nonexistent/dir/x.svg"}).code == 2);
}

TEST_CASE("plot writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "molsens_cli_plot.svg";
  const Run r = run({"plot", data_path("example5.molp"), "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::file_size(path) > 500);
  std::filesystem::remove(path);
}

TEST_CASE("epsilon flag reaches the geometry") {
  // A loose tolerance merges the two highest vertices of the example into a tie.
  const Run tight = run({"efficient", data_path("example5.molp")});
  const Run loose = run({"--epsilon", "0.2", "efficient", data_path("example5.molp")});
  CHECK(tight.code == 0);
  CHECK(loose.out != tight.out);
}
