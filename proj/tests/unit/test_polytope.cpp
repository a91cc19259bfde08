#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "molsens/errors.hpp"
#include "molsens/polytope.hpp"

using namespace molsens;
using namespace molsens::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("no GeometryError thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("corrected example rows hold every listed vertex and bind each edge") {
  const auto vs = example_vertices();
  const auto rows = example_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t tight = 0;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const double lhs = rows[i].a1 * vs[j].x + rows[i].a2 * vs[j].y;
      CHECK(lhs <= rows[i].b);
      if (lhs == rows[i].b) {
        ++tight;
        CHECK((j == i || j == (i + 1) % vs.size()));
      }
    }
    CHECK(tight == 2);
  }
}

TEST_CASE("rows as printed exclude listed vertices") {
  // (1,0) <= 0, (2,1) <= 4, (3,3) <= 7 as printed: each cuts off a listed vertex.
  const Vec2 v1{4, 1};
  CHECK(1 * v1.x + 0 * v1.y > 0);
  CHECK(2 * v1.x + 1 * v1.y > 4);
  CHECK(3 * v1.x + 3 * v1.y > 7);
}

TEST_CASE("enumerate_vertices reproduces the nine example vertices in order") {
  const Polygon p = example_polygon();
  const auto expected = example_vertices();
  REQUIRE(p.size() == 9);
  for (std::size_t j = 1; j <= 9; ++j) {
    CHECK(p.vertex(j).x == expected[j - 1].x);
    CHECK(p.vertex(j).y == expected[j - 1].y);
  }
  CHECK(p.signed_area() == doctest::Approx(shoelace(expected)));
}

TEST_CASE("enumerate_vertices on the unit square and the simplex") {
  const Polygon sq = unit_square();
  REQUIRE(sq.size() == 4);
  CHECK(sq.vertex(1) == Vec2{0, 0});
  CHECK(sq.vertex(2) == Vec2{1, 0});
  CHECK(sq.vertex(3) == Vec2{1, 1});
  CHECK(sq.vertex(4) == Vec2{0, 1});

  const Polygon tri = triangle();
  REQUIRE(tri.size() == 3);
  CHECK(tri.vertex(1) == Vec2{0, 0});
  CHECK(tri.vertex(2) == Vec2{1, 0});
  CHECK(tri.vertex(3) == Vec2{0, 1});
}

TEST_CASE("enumerate_vertices merges collinear and duplicate rows") {
  const std::vector<HalfPlane> rows{{1, 0, 1}, {2, 0, 2}, {0, 1, 1}, {1, 1, 2}, {1, 1, 3}};
  const Polygon p = enumerate_vertices(rows, true);
  CHECK(p.size() == 4);
}

TEST_CASE("enumerate_vertices error kinds") {
  const std::vector<HalfPlane> empty{{1, 0, 1}, {-1, 0, -2}};
  CHECK(kind_of([&] { enumerate_vertices(empty, true); }) == ErrorKind::EmptyRegion);

  const std::vector<HalfPlane> open{{-1, 1, 1}};
  CHECK(kind_of([&] { enumerate_vertices(open, true); }) == ErrorKind::UnboundedRegion);

  const std::vector<HalfPlane> segment{{1, 0, 1}, {-1, 0, -1}, {0, 1, 1}};
  CHECK(kind_of([&] { enumerate_vertices(segment, true); }) == ErrorKind::DegenerateRegion);

  const std::vector<HalfPlane> point{{1, 1, 0}};
  CHECK(kind_of([&] { enumerate_vertices(point, true); }) == ErrorKind::DegenerateRegion);

  const std::vector<HalfPlane> zero_row{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
  CHECK(kind_of([&] { enumerate_vertices(zero_row, true); }) == ErrorKind::InvalidConstraint);

  CHECK(kind_of([&] { enumerate_vertices(std::vector<HalfPlane>{}, true); }) == ErrorKind::InvalidConstraint);
}

TEST_CASE("empty region message names a witness") {
  const std::vector<HalfPlane> rows{{0, 1, 5}, {1, 0, 1}, {-1, 0, -2}};
  try {
    enumerate_vertices(rows, true);
    FAIL("expected EmptyRegion");
  } catch (const GeometryError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("constraint 2") != std::string::npos);
    CHECK(msg.find("constraint 3") != std::string::npos);
  }
}

TEST_CASE("Polygon constructor rejects bad rings") {
  CHECK(kind_of([] { Polygon({{0, 0}, {1, 0}}); }) == ErrorKind::InvalidPolygon);
  CHECK(kind_of([] { Polygon({{0, 0}, {0, 1}, {1, 0}}); }) == ErrorKind::InvalidPolygon);       // clockwise
  CHECK(kind_of([] { Polygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}); }) == ErrorKind::InvalidPolygon);  // collinear
  CHECK(kind_of([] { Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}); }) == ErrorKind::InvalidPolygon);  // duplicate
}

TEST_CASE("Polygon constructor requires the canonical start") {
  CHECK(kind_of([] { Polygon({{1, 1}, {0, 1}, {0, 0}, {1, 0}}); }) == ErrorKind::InvalidPolygon);
  CHECK_NOTHROW(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

TEST_CASE("wrap_index") {
  const Polygon p = example_polygon();
  CHECK(wrap_index(p, 10) == 1);
  CHECK(wrap_index(p, 9) == 9);
  CHECK(wrap_index(p, 23) == 5);
  CHECK(wrap_index(p, 0) == 9);
  CHECK(p.wrap(-1) == 8);
  CHECK(kind_of([&] { wrap_index(p, -1); }) == ErrorKind::InvalidArgument);
  for (long long j = 1; j <= 40; ++j) CHECK(wrap_index(p, j + 9) == wrap_index(p, j));
}

TEST_CASE("edge_angles on the example and the square") {
  const Polygon p = example_polygon();
  const EdgeAngles a1 = edge_angles(p, 1);
  CHECK(degrees(a1.theta1) == doctest::Approx(-18.435).epsilon(1e-4));
  CHECK(a1.r1 == doctest::Approx(std::sqrt(10.0)));
  CHECK(degrees(edge_angles(p, 5).theta2) == doctest::Approx(180.0).epsilon(1e-6));
  CHECK(edge_angles(p, 5).r2 == doctest::Approx(2.0));
  CHECK(degrees(edge_angles(unit_square(), 1).theta2) == doctest::Approx(0.0));

  for (std::size_t j = 1; j <= p.size(); ++j) {
    const EdgeAngles ea = edge_angles(p, j);
    CHECK(ea.theta2 > ea.theta1);
    CHECK(ea.theta2 - ea.theta1 < kPi);
    CHECK(ea.theta2 - ea.theta1 == doctest::Approx(exterior_angle(p, j)));
  }
}

TEST_CASE("exterior angles of the example sum to one turn") {
  const Polygon p = example_polygon();
  const double expected[] = {63.435, 18.435, 53.130, 36.870, 26.565, 45.0, 45.0, 26.565, 45.0};
  double total = 0.0;
  for (std::size_t j = 1; j <= 9; ++j) {
    CHECK(degrees(exterior_angle(p, j)) == doctest::Approx(expected[j - 1]).epsilon(1e-4));
    total += exterior_angle(p, j);
  }
  CHECK(total == doctest::Approx(kTwoPi));
}

TEST_CASE("boundary_curve") {
  const Polygon p = example_polygon();
  const auto s15 = boundary_curve(p, {1, 5});
  REQUIRE(s15.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(s15[i].from == i + 1);
    CHECK(s15[i].to == i + 2);
  }
  CHECK(boundary_curve(p, {3, 1}).empty());
  CHECK(chain_vertices(p, {3, 1}) == std::vector<std::size_t>{3});

  const auto s84 = boundary_curve(p, {8, 4});
  REQUIRE(s84.size() == 3);
  CHECK(s84[0].from == 8);
  CHECK(s84[0].to == 9);
  CHECK(s84[1].from == 9);
  CHECK(s84[1].to == 1);
  CHECK(s84[2].from == 1);
  CHECK(s84[2].to == 2);
}

TEST_CASE("full chain visits every vertex once and leaves out one closing edge") {
  const Polygon p = example_polygon();
  for (std::size_t j0 = 1; j0 <= 9; ++j0) {
    const auto segs = boundary_curve(p, {j0, 9});
    REQUIRE(segs.size() == 8);
    std::vector<std::size_t> seen{segs.front().from};
    for (const Segment& s : segs) seen.push_back(s.to);
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    CHECK(seen.size() == 9);
    CHECK(wrap_index(p, static_cast<long long>(segs.back().to) + 1) == j0);
  }
}

TEST_CASE("validate_chain") {
  const Polygon p = example_polygon();
  CHECK_NOTHROW(validate_chain(p, {9, 9}));
  CHECK(kind_of([&] { validate_chain(p, {0, 1}); }) == ErrorKind::InvalidChain);
  CHECK(kind_of([&] { validate_chain(p, {10, 1}); }) == ErrorKind::InvalidChain);
  CHECK(kind_of([&] { validate_chain(p, {1, 0}); }) == ErrorKind::InvalidChain);
  CHECK(kind_of([&] { validate_chain(p, {1, 10}); }) == ErrorKind::InvalidChain);
}

TEST_CASE("point_on_chain") {
  const Polygon p = example_polygon();
  CHECK(point_on_chain(p, {1, 5}, {5, 2}));
  CHECK_FALSE(point_on_chain(p, {1, 5}, {0, 4}));
  CHECK(point_on_chain(p, {1, 5}, {4, 1}));
  CHECK(point_on_chain(p, {3, 1}, {7, 5}));
  CHECK_FALSE(point_on_chain(p, {3, 1}, {6.5, 4}));
  CHECK_FALSE(point_on_chain(p, {1, 5}, {4, 4}));  // interior point
}

TEST_CASE("chain_name") {
  CHECK(chain_name({1, 5}) == "S_1^5");
  CHECK(chain_name({8, 4}) == "S_8^4");
}

TEST_CASE("contains and centroid") {
  const Polygon p = example_polygon();
  CHECK(p.contains(p.centroid()));
  CHECK(p.contains({4, 1}));
  CHECK_FALSE(p.contains({0, 0}));
  CHECK(unit_square().centroid().x == doctest::Approx(0.5));
}
