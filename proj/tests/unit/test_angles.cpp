#include <doctest.h>

#include <random>

#include "independent.hpp"
#include "molsens/angles.hpp"
#include "molsens/errors.hpp"

using namespace molsens;
using namespace molsens::testing;

TEST_CASE("to_polar on the extreme generators") {
  const PolarVector p5 = to_polar({1, -2});
  CHECK(p5.r == doctest::Approx(std::sqrt(5.0)));
  CHECK(degrees(p5.phi) == doctest::Approx(-63.435).epsilon(1e-5));
  const PolarVector p6 = to_polar({1, 4});
  CHECK(p6.r == doctest::Approx(std::sqrt(17.0)));
  CHECK(degrees(p6.phi) == doctest::Approx(75.964).epsilon(1e-5));
  const PolarVector px = to_polar({1, 0});
  CHECK(px.r == 1.0);
  CHECK(px.phi == 0.0);
}

TEST_CASE("to_polar branch selection") {
  CHECK(degrees(to_polar({1, -2}, kPi).phi) == doctest::Approx(296.565).epsilon(1e-5));
  CHECK(degrees(to_polar({-1, 0}).phi) == doctest::Approx(-180.0));
  CHECK(degrees(to_polar({-1, 0}, 0.1).phi) == doctest::Approx(180.0));
  CHECK_THROWS_AS(to_polar({0, 0}), GeometryError);
}

TEST_CASE("reduce_angle lands in the half-open window") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> any(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = any(rng);
    const double c = any(rng);
    const double r = reduce_angle(a, c);
    CHECK(r >= c - kPi);
    CHECK(r < c + kPi);
    CHECK(std::abs(angle_gap(r, a)) < 1e-9);
  }
}

TEST_CASE("rotate") {
  const Vec2 q = rotate({1, 0}, kPi / 2);
  CHECK(q.x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(q.y == doctest::Approx(1.0));
  CHECK(rotate({1, -2}, 0.0) == Vec2{1, -2});

  const Vec2 r = rotate({1, -2}, radians(139.398705354995));
  CHECK(norm(r) == doctest::Approx(std::sqrt(5.0)));
  CHECK(cross(r, Vec2{1, 4}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dot(r, Vec2{1, 4}) > 0.0);
}

TEST_CASE("decompose examples") {
  const Vec2 c5{1, -2};
  const Vec2 c6{1, 4};
  const Decomposition one = decompose(c5, c6, 1.0);
  CHECK(one.alpha == doctest::Approx(1.0));
  CHECK(one.theta == doctest::Approx(0.0));

  const Decomposition zero = decompose(c5, c6, 0.0);
  CHECK(zero.alpha == doctest::Approx(std::sqrt(17.0) / std::sqrt(5.0)));
  CHECK(degrees(zero.theta) == doctest::Approx(139.399).epsilon(1e-5));

  const Decomposition mid = decompose({1, 0}, {0, 1}, 0.5);
  CHECK(mid.alpha == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(degrees(mid.theta) == doctest::Approx(45.0));
}

TEST_CASE("decompose errors") {
  CHECK_THROWS_AS(decompose({1, 0}, {-1, 0}, 0.5), GeometryError);
  try {
    decompose({1, 0}, {-1, 0}, 0.5);
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::DegenerateCombination);
  }
  CHECK_THROWS_AS(decompose({0, 0}, {1, 0}, 0.5), GeometryError);
  CHECK_THROWS_AS(decompose({1, 0}, {0, 1}, 1.5), GeometryError);
}

TEST_CASE("decompose agrees with the arccos form where it applies") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> sep(1e-3, kPi - 1e-3);
  std::uniform_real_distribution<double> len(0.2, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const double a = ang(rng);
    const Vec2 c1 = len(rng) * direction(a);
    const Vec2 c2 = len(rng) * direction(a + sep(rng));
    const double delta = unit(rng);
    const Vec2 d = delta * c1 + (1 - delta) * c2;
    if (d.y < 0.0) continue;
    ++compared;
    const double theta = decompose(c1, c2, delta).theta;
    CHECK(std::abs(angle_gap(theta, arccos_theta(c1, c2, delta))) <= 1e-9);
  }
  CHECK(compared > 3000);
}

TEST_CASE("interval_contains") {
  const AngularInterval iv = make_interval(radians(-108.435), radians(90.0));
  CHECK(interval_contains(iv, 0.0));
  CHECK_FALSE(interval_contains(iv, radians(90.0)));
  CHECK(interval_contains(iv, radians(89.999)));
  CHECK_FALSE(interval_contains(iv, radians(-108.435)));
  CHECK(interval_contains(iv, radians(-108.435 + 360.0 + 0.001)));
  CHECK_FALSE(interval_contains(iv, radians(180.0)));

  const AngularInterval closed = make_interval(0.0, 1.0, false, false);
  CHECK(interval_contains(closed, 0.0));
  CHECK(interval_contains(closed, 1.0));
  CHECK(interval_contains(closed, 1.0 + kTwoPi));
}

TEST_CASE("make_interval validation") {
  CHECK_THROWS_AS(make_interval(1.0, 0.0), GeometryError);
  CHECK_THROWS_AS(make_interval(0.0, 7.0), GeometryError);
  CHECK_NOTHROW(make_interval(0.0, kTwoPi, true, true));
  CHECK_THROWS_AS(make_interval(0.0, kTwoPi, false, true), GeometryError);
  const AngularInterval iv = make_interval(-1.0, 3.0);
  CHECK(iv.width() == 4.0);
  CHECK(iv.midpoint() == 1.0);
}

TEST_CASE("PolarVector round trip") {
  const PolarVector p{2.0, radians(30.0)};
  const Vec2 v = p.to_cartesian();
  CHECK(v.x == doctest::Approx(std::sqrt(3.0)));
  CHECK(v.y == doctest::Approx(1.0));
}
