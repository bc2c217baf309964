// Copyright 2026 The Postulatum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "postulatum/euclidean.hpp"

namespace {

using namespace postulatum;
using namespace postulatum::eu;

constexpr double kPi = std::numbers::pi;

EuLine horizontal(double y) { return line_through({0.0, y}, {1.0, y}); }

// y = slope * x + intercept
EuLine graph_line(double slope, double intercept) {
  return line_through({0.0, intercept}, {1.0, slope + intercept});
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("expected a GeometryError");
  return ErrorKind::kParseError;
}

double residual(const EuLine& l, const EuPoint& p) { return std::abs(l.signed_distance(p)); }

TEST_CASE("line_through builds canonical lines") {
  const EuLine x_axis = line_through({0, 0}, {1, 0});
  CHECK(x_axis.normal() == Vec2{0.0, 1.0});
  CHECK(x_axis.offset() == 0.0);

  const EuLine diag = line_through({0, 0}, {1, 1});
  CHECK(residual(diag, {2.0, 2.0}) <= 1e-12);
  CHECK(std::abs(diag.normal().x - std::sqrt(0.5)) <= 1e-15);
  CHECK(std::abs(diag.normal().y + std::sqrt(0.5)) <= 1e-15);

  CHECK(kind_of([] { line_through({0, 0}, {0, 0}); }) == ErrorKind::kDegenerateInput);
}

TEST_CASE("line_through is symmetric and contains its points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const EuPoint a{u(rng), u(rng)};
    const EuPoint b{u(rng), u(rng)};
    const EuLine l = line_through(a, b);
    CHECK(l == line_through(b, a));
    CHECK(residual(l, a) <= 1e-12 * (1.0 + a.norm()));
    CHECK(residual(l, b) <= 1e-12 * (1.0 + b.norm()));
    CHECK(std::abs(l.normal().norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("circle_from") {
  CHECK(circle_from({0, 0}, {1, 0}).radius() == 1.0);
  CHECK(circle_from({1, 1}, {4, 5}).radius() == 5.0);
  CHECK(kind_of([] { circle_from({2, 3}, {2, 3}); }) == ErrorKind::kDegenerateInput);
}

TEST_CASE("intersect_lines") {
  const auto axes = intersect_lines(horizontal(0.0), line_through({0, 0}, {0, 1}));
  REQUIRE(axes.point);
  CHECK(axes.point->x == doctest::Approx(0.0));
  CHECK(axes.point->y == doctest::Approx(0.0));

  const auto par = intersect_lines(horizontal(0.0), horizontal(1.0));
  CHECK_FALSE(par.point);
  CHECK_FALSE(par.coincident);

  const auto same = intersect_lines(horizontal(2.0), line_through({5, 2}, {-3, 2}));
  CHECK_FALSE(same.point);
  CHECK(same.coincident);

  const auto cross_pt = intersect_lines(graph_line(1, 0), graph_line(-1, 2));
  REQUIRE(cross_pt.point);
  CHECK(std::abs(cross_pt.point->x - 1.0) <= 1e-12);
  CHECK(std::abs(cross_pt.point->y - 1.0) <= 1e-12);
}

TEST_CASE("parallel pairs never intersect, other pairs do") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  for (int i = 0; i < 2000; ++i) {
    const EuPoint p{u(rng), u(rng)};
    const double t = ang(rng);
    const Vec2 d{std::cos(t), std::sin(t)};
    const EuLine a = line_through(p, p + d);
    const double shift = u(rng);
    const EuPoint q = p + perp(d) * (std::abs(shift) + 0.1) + d * u(rng);
    const EuLine b = line_through(q, q + d * 3.0);
    CHECK(is_parallel(a, b));
    CHECK_FALSE(intersect_lines(a, b).point);

    const double t2 = t + 0.05 + 3.0 * (ang(rng) / kPi);
    const EuLine c = line_through(q, q + Vec2{std::cos(t2), std::sin(t2)});
    CHECK_FALSE(is_parallel(a, c));
    const auto x = intersect_lines(a, c);
    REQUIRE(x.point);
    CHECK(residual(a, *x.point) <= 1e-10 * (1.0 + x.point->norm()));
    CHECK(residual(c, *x.point) <= 1e-10 * (1.0 + x.point->norm()));
  }
}

TEST_CASE("intersect_line_circle") {
  const EuCircle unit({0, 0}, 1.0);
  const auto two = intersect_line_circle(horizontal(0.0), unit);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Vec2{-1.0, 0.0});
  CHECK(two[1] == Vec2{1.0, 0.0});
  CHECK(intersect_line_circle(horizontal(2.0), unit).empty());
  const auto tangent = intersect_line_circle(horizontal(1.0), unit);
  REQUIRE(tangent.size() == 1);
  CHECK(std::abs(tangent[0].x) <= 1e-15);
  CHECK(tangent[0].y == 1.0);
}

TEST_CASE("intersect_circles") {
  const EuCircle c0({0, 0}, 1.0);
  const auto eq = intersect_circles(c0, EuCircle({1, 0}, 1.0));
  REQUIRE(eq.size() == 2);
  CHECK(eq[0].x == doctest::Approx(0.5));
  CHECK(eq[0].y == doctest::Approx(-std::sqrt(3.0) / 2.0));
  CHECK(eq[1].y == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(intersect_circles(c0, EuCircle({3, 0}, 1.0)).empty());
  CHECK(kind_of([&] { intersect_circles(c0, c0); }) == ErrorKind::kCoincidentCircles);
}

TEST_CASE("unit circles meet twice exactly when 0 < d < 2") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  const EuCircle c0({0, 0}, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double d = u(rng);
    const double t = ang(rng);
    const EuCircle c1({d * std::cos(t), d * std::sin(t)}, 1.0);
    if (d <= 1e-12) continue;
    const auto pts = intersect_circles(c0, c1);
    if (d < 2.0 - 1e-12) {
      CHECK(pts.size() == 2);
    } else if (d > 2.0 + 1e-12) {
      CHECK(pts.empty());
    }
    for (const EuPoint& p : pts) {
      CHECK(std::abs(distance(p, c0.center()) - 1.0) <= 1e-10);
      CHECK(std::abs(distance(p, c1.center()) - 1.0) <= 1e-10);
    }
  }
  CHECK(intersect_circles(c0, EuCircle({2.0, 0.0}, 1.0)).size() == 1);
}

TEST_CASE("angle_at") {
  CHECK(angle_at({1, 0}, {0, 0}, {0, 1}).radians == doctest::Approx(kPi / 2.0));
  CHECK(angle_at({1, 0}, {0, 0}, {1, 1}).radians == doctest::Approx(kPi / 4.0));
  CHECK(kind_of([] { angle_at({0, 0}, {0, 0}, {1, 1}); }) == ErrorKind::kDegenerateInput);
}

TEST_CASE("angle_at is symmetric and invariant under rigid motions") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int i = 0; i < 5000; ++i) {
    const EuPoint a{u(rng), u(rng)}, v{u(rng), u(rng)}, b{u(rng), u(rng)};
    if (distance(a, v) < 1e-3 || distance(b, v) < 1e-3) continue;
    const double base = angle_at(a, v, b).radians;
    CHECK(base == angle_at(b, v, a).radians);
    CHECK(base >= 0.0);
    CHECK(base <= kPi);

    const double t = ang(rng);
    const Vec2 shift{u(rng), u(rng)};
    auto move = [&](const EuPoint& p) {
      return EuPoint{std::cos(t) * p.x - std::sin(t) * p.y, std::sin(t) * p.x + std::cos(t) * p.y} +
             shift;
    };
    CHECK(std::abs(angle_at(move(a), move(v), move(b)).radians - base) <= 1e-10);
  }
}

TEST_CASE("alternate_angles") {
  const auto par = alternate_angles(horizontal(0.0), horizontal(1.0), graph_line(1.0, 0.0));
  CHECK(par.first.radians == doctest::Approx(kPi / 4.0));
  CHECK(par.second.radians == doctest::Approx(kPi / 4.0));

  // b: y = 0 and a: y = x + 1 cut by c: x = 0 at distinct points.
  const auto skew =
      alternate_angles(horizontal(0.0), graph_line(1.0, 1.0), line_through({0, 0}, {0, 1}));
  CHECK(skew.first.radians == doctest::Approx(kPi / 2.0));
  CHECK(skew.second.radians == doctest::Approx(kPi / 4.0));

  CHECK(kind_of([] {
          alternate_angles(horizontal(0.0), horizontal(0.0), graph_line(1.0, 0.0));
        }) == ErrorKind::kNotATransversal);
  // Concurrent lines: c meets a and b at the same point.
  CHECK(kind_of([] {
          alternate_angles(horizontal(0.0), graph_line(1.0, 0.0), line_through({0, 0}, {0, 1}));
        }) == ErrorKind::kNotATransversal);
  CHECK(kind_of([] {
          alternate_angles(horizontal(0.0), horizontal(1.0), horizontal(2.0));
        }) == ErrorKind::kNotATransversal);
}

TEST_CASE("alternate angles with parallel lines are equal") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  for (int i = 0; i < 3000; ++i) {
    const EuPoint p{u(rng), u(rng)};
    const double t = ang(rng);
    const Vec2 d{std::cos(t), std::sin(t)};
    const EuLine b = line_through(p, p + d);
    const EuPoint q = p + perp(d) * (std::abs(u(rng)) + 0.2);
    const EuLine a = line_through(q, q + d);
    const double s = t + 0.1 + 2.9 * ang(rng) / kPi;
    const EuLine c = line_through(p, p + Vec2{std::cos(s), std::sin(s)});
    const auto alt = alternate_angles(b, a, c);
    CHECK(std::abs(alt.first.radians - alt.second.radians) <= 1e-10);
    const auto sums = interior_angle_sums(b, a, c);
    CHECK(std::abs(sums.left - kPi) <= 1e-10);
    CHECK(std::abs(sums.right - kPi) <= 1e-10);
  }
}

TEST_CASE("interior angle sums add to two straight angles") {
  const auto sums =
      interior_angle_sums(horizontal(0.0), graph_line(-0.1, 1.0), line_through({0, 0}, {0, 1}));
  CHECK(sums.left + sums.right == doctest::Approx(2.0 * kPi));
  // c runs upward, so its right-hand side is x > 0, where a and b meet.
  CHECK(sums.right < kPi);
}

TEST_CASE("is_parallel") {
  CHECK(is_parallel(horizontal(0.0), horizontal(1.0)));
  CHECK_FALSE(is_parallel(horizontal(0.0), graph_line(1.0, 0.0)));
  CHECK_FALSE(is_parallel(horizontal(0.0), horizontal(0.0)));
}

TEST_CASE("rays and circles") {
  const EuRay r = ray_through({0, 0}, {0, 3});
  const EuPoint p = intersect_ray_circle(r, EuCircle({0, 0}, 2.0));
  CHECK(p.x == doctest::Approx(0.0));
  CHECK(p.y == doctest::Approx(2.0));
  CHECK(kind_of([] { ray_through({1, 1}, {1, 1}); }) == ErrorKind::kDegenerateInput);
  CHECK(kind_of([&] { intersect_ray_circle(r, EuCircle({5, 0}, 1.0)); }) ==
        ErrorKind::kDegenerateInput);
}

}  // namespace
