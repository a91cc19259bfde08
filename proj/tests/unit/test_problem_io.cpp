#include <doctest.h>

#include <filesystem>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "molsens/errors.hpp"
#include "molsens/problem_io.hpp"

using namespace molsens;
using namespace molsens::testing;

TEST_CASE("parse_number") {
  CHECK(parse_number("3") == 3.0);
  CHECK(parse_number("-2.5") == -2.5);
  CHECK(parse_number("+1e-3") == 1e-3);
  CHECK(parse_number("4/3") == 4.0 / 3.0);
  CHECK(parse_number("-3/4") == -0.75);
  CHECK_THROWS_AS(parse_number("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number("inf"), std::invalid_argument);
}

TEST_CASE("format_number round trips") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> any(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double v = any(rng);
    CHECK(parse_number(format_number(v)) == v);
  }
  CHECK(format_number(4.0) == "4");
  CHECK(format_number(0.1) == "0.1");
  CHECK(parse_number(format_number(std::numeric_limits<double>::denorm_min())) ==
        std::numeric_limits<double>::denorm_min());
}

TEST_CASE("example file") {
  const ProblemFile f = read_problem_file(data_path("example5.molp"));
  CHECK(f.constraints.size() == 9);
  CHECK(f.nonneg);
  REQUIRE(f.gradients.size() == 6);
  CHECK(f.gradients[0].x == 4.0 / 3.0);
  CHECK(f.gradients[2].y == -0.75);
  CHECK(f.constraints == example_constraints());
}

TEST_CASE("every shipped problem file survives a write and re-read") {
  for (const auto& entry : std::filesystem::directory_iterator(MOLSENS_DATA_DIR)) {
    if (entry.path().extension() != ".molp") continue;
    CAPTURE(entry.path().string());
    const ProblemFile f = read_problem_file(entry.path());
    CHECK(parse_problem_text(serialize_problem(f)) == f);
  }
}

TEST_CASE("random problems survive a write and re-read") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> any(-100.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    ProblemFile f;
    f.nonneg = i % 2 == 0;
    for (int r = 0; r < 1 + i % 7; ++r) f.constraints.push_back({any(rng), any(rng), any(rng)});
    for (int k = 0; k < i % 5; ++k) f.gradients.push_back({any(rng), any(rng)});
    CHECK(parse_problem_text(serialize_problem(f)) == f);
  }
}

TEST_CASE("comments and blank lines") {
  const ProblemFile f = parse_problem_text("# header\n\n1 2  # m K\n 1 1 2\nnonneg 1\n1 0\n\n0 1 # last\n");
  CHECK(f.constraints.size() == 1);
  CHECK(f.gradients.size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_problem_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{9999};
  };
  CHECK(line_of("1 2\n1 1 x\nnonneg 1\n1 0\n0 1\n") == 2);
  CHECK(line_of("1 2\n1 1 1\nnonneg 2\n1 0\n0 1\n") == 3);
  CHECK(line_of("1 2\n1 1 1\nnonneg 1\n1 0\n") == 4);
  CHECK(line_of("1 2\n1 1 1\nnonneg 1\n1 0\n0 1\n5 5\n") == 6);
  CHECK(line_of("1 2\n1 1\nnonneg 1\n1 0\n0 1\n") == 2);
  CHECK(line_of("-1 2\n") == 1);
  CHECK(line_of("") == 0);
}

TEST_CASE("missing file is an IoError") {
  CHECK_THROWS_AS(read_problem_file("/nonexistent/problem.molp"), IoError);
}
