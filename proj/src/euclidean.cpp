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

#include "postulatum/euclidean.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace postulatum::eu {
namespace {

void require_finite(const EuPoint& p, const char* what) {
  if (!p.finite()) {
    throw GeometryError(ErrorKind::kDegenerateInput, std::string(what) + " is not finite");
  }
}

void sort_points(std::vector<EuPoint>& pts) { std::sort(pts.begin(), pts.end(), lex_less); }

// Unit direction of `line` pointing to the given side of the transversal.
Vec2 side_direction(const EuLine& line, const Vec2& side) {
  const Vec2 d = line.direction();
  return dot(d, side) >= 0.0 ? d : -d;
}

}  // namespace

EuLine EuLine::from_normal(Vec2 normal, double offset) {
  const double len = normal.norm();
  if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(offset)) {
    throw GeometryError(ErrorKind::kDegenerateInput, "line normal must be finite and non-zero");
  }
  normal = normal / len;
  offset /= len;
  if (normal.x < 0.0 || (normal.x == 0.0 && normal.y < 0.0)) {
    normal = -normal;
    offset = -offset;
  }
  // Normalize signed zeros so equal lines compare equal.
  if (normal.x == 0.0) normal.x = 0.0;
  if (normal.y == 0.0) normal.y = 0.0;
  if (offset == 0.0) offset = 0.0;
  return EuLine(normal, offset);
}

EuRay::EuRay(EuPoint origin, Vec2 direction) : origin_(origin) {
  require_finite(origin, "ray origin");
  const double len = direction.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw GeometryError(ErrorKind::kDegenerateInput, "ray direction must be non-zero");
  }
  direction_ = direction / len;
}

EuSegment::EuSegment(EuPoint start, EuPoint end, const Tolerance& tol) : start_(start), end_(end) {
  require_finite(start, "segment start");
  require_finite(end, "segment end");
  if (distance(start, end) <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "segment endpoints coincide");
  }
}

EuCircle::EuCircle(EuPoint center, double radius, const Tolerance& tol)
    : center_(center), radius_(radius) {
  require_finite(center, "circle center");
  if (!(radius > tol.degenerate) || !std::isfinite(radius)) {
    throw GeometryError(ErrorKind::kDegenerateInput, "circle radius must be positive");
  }
}

EuLine line_through(const EuPoint& a, const EuPoint& b, const Tolerance& tol) {
  require_finite(a, "point");
  require_finite(b, "point");
  if (distance(a, b) <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "line through coincident points");
  }
  // perp(b - a) and perp(a - b) differ only in sign, and the midpoint is
  // symmetric in a and b, so the canonical result does not depend on order.
  const Vec2 n = perp(b - a);
  const double len = n.norm();
  const Vec2 unit = n / len;
  const EuPoint mid = (a + b) * 0.5;
  return EuLine::from_normal(unit, dot(unit, mid));
}

EuCircle circle_from(const EuPoint& center, const EuPoint& through, const Tolerance& tol) {
  require_finite(center, "circle center");
  require_finite(through, "circle point");
  const double r = distance(center, through);
  if (r <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "circle through its own center");
  }
  return EuCircle(center, r, tol);
}

LineIntersection intersect_lines(const EuLine& l1, const EuLine& l2, const Tolerance& tol) {
  const Vec2& n1 = l1.normal();
  const Vec2& n2 = l2.normal();
  const double det = cross(n1, n2);
  if (std::abs(det) <= tol.degenerate) {
    const double aligned = dot(n1, n2) >= 0.0 ? l2.offset() : -l2.offset();
    return {std::nullopt, std::abs(l1.offset() - aligned) <= tol.degenerate};
  }
  const double x = (l1.offset() * n2.y - n1.y * l2.offset()) / det;
  const double y = (n1.x * l2.offset() - l1.offset() * n2.x) / det;
  return {EuPoint{x, y}, false};
}

std::vector<EuPoint> intersect_line_circle(const EuLine& line, const EuCircle& circle,
                                           const Tolerance& tol) {
  const double h = line.signed_distance(circle.center());
  const double r = circle.radius();
  const EuPoint foot = line.foot(circle.center());
  if (std::abs(std::abs(h) - r) <= tol.degenerate) return {foot};
  if (std::abs(h) > r) return {};
  const double half = std::sqrt((r - h) * (r + h));
  const Vec2 d = line.direction();
  std::vector<EuPoint> pts{foot - d * half, foot + d * half};
  sort_points(pts);
  return pts;
}

std::vector<EuPoint> intersect_circles(const EuCircle& c1, const EuCircle& c2,
                                       const Tolerance& tol) {
  const Vec2 delta = c2.center() - c1.center();
  const double d = delta.norm();
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  if (d <= tol.degenerate) {
    if (std::abs(r1 - r2) <= tol.degenerate) {
      throw GeometryError(ErrorKind::kCoincidentCircles, "circles coincide");
    }
    return {};
  }
  const Vec2 u = delta / d;
  const bool outer_tangent = std::abs(d - (r1 + r2)) <= tol.degenerate;
  const bool inner_tangent = std::abs(d - std::abs(r1 - r2)) <= tol.degenerate;
  if (outer_tangent || inner_tangent) {
    // Tangency point lies on the line of centers.
    const double along = (outer_tangent || r1 >= r2) ? r1 : -r1;
    return {c1.center() + u * along};
  }
  if (d > r1 + r2 || d < std::abs(r1 - r2)) return {};
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
  const EuPoint base = c1.center() + u * a;
  std::vector<EuPoint> pts{base + perp(u) * h, base - perp(u) * h};
  sort_points(pts);
  return pts;
}

AngleValue angle_between(const Vec2& u, const Vec2& v) {
  return {std::atan2(std::abs(cross(u, v)), dot(u, v))};
}

AngleValue angle_at(const EuPoint& a, const EuPoint& v, const EuPoint& b, const Tolerance& tol) {
  const Vec2 u = a - v;
  const Vec2 w = b - v;
  if (u.norm() <= tol.degenerate || w.norm() <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "angle with an undefined ray");
  }
  return angle_between(u, w);
}

TransversalCrossings transversal_crossings(const EuLine& b, const EuLine& a, const EuLine& c,
                                           const Tolerance& tol) {
  if (a == b || intersect_lines(a, b, tol).coincident) {
    throw GeometryError(ErrorKind::kNotATransversal, "lines are not pairwise distinct");
  }
  const LineIntersection xb = intersect_lines(b, c, tol);
  const LineIntersection xa = intersect_lines(a, c, tol);
  if (!xb.point || !xa.point) {
    throw GeometryError(ErrorKind::kNotATransversal, "transversal does not cross both lines");
  }
  if (distance(*xa.point, *xb.point) <= tol.degenerate) {
    throw GeometryError(ErrorKind::kNotATransversal, "transversal meets both lines at one point");
  }
  const Vec2 forward = c.direction();
  TransversalCrossings out;
  out.forward = forward;
  out.b_first = dot(*xb.point, forward) <= dot(*xa.point, forward);
  out.first = out.b_first ? *xb.point : *xa.point;
  out.second = out.b_first ? *xa.point : *xb.point;
  return out;
}

AlternateAngles alternate_angles(const EuLine& b, const EuLine& a, const EuLine& c,
                                 const Tolerance& tol) {
  const TransversalCrossings x = transversal_crossings(b, a, c, tol);
  const EuLine& first_line = x.b_first ? b : a;
  const EuLine& second_line = x.b_first ? a : b;
  const Vec2 left = perp(x.forward);
  const Vec2 right = -left;
  return {angle_between(x.forward, side_direction(first_line, right)),
          angle_between(-x.forward, side_direction(second_line, left))};
}

InteriorAngleSums interior_angle_sums(const EuLine& b, const EuLine& a, const EuLine& c,
                                      const Tolerance& tol) {
  const TransversalCrossings x = transversal_crossings(b, a, c, tol);
  const EuLine& first_line = x.b_first ? b : a;
  const EuLine& second_line = x.b_first ? a : b;
  const Vec2 left = perp(x.forward);
  InteriorAngleSums sums;
  for (const Vec2 side : {left, -left}) {
    const double s = angle_between(x.forward, side_direction(first_line, side)).radians +
                     angle_between(-x.forward, side_direction(second_line, side)).radians;
    (side == left ? sums.left : sums.right) = s;
  }
  return sums;
}

bool is_parallel(const EuLine& a, const EuLine& b, const Tolerance& tol) {
  const LineIntersection x = intersect_lines(a, b, tol);
  return !x.point && !x.coincident;
}

EuRay ray_through(const EuPoint& origin, const EuPoint& through, const Tolerance& tol) {
  if (distance(origin, through) <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "ray through its own origin");
  }
  return EuRay(origin, through - origin);
}

EuPoint intersect_ray_circle(const EuRay& ray, const EuCircle& circle, const Tolerance& tol) {
  // |o + t d - c|^2 = r^2 with |d| = 1.
  const Vec2 oc = ray.origin() - circle.center();
  const double half_b = dot(oc, ray.direction());
  const double c = oc.squared_norm() - circle.radius() * circle.radius();
  const double disc = half_b * half_b - c;
  if (disc < -tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "ray misses the circle");
  }
  const double t = -half_b + std::sqrt(std::max(0.0, disc));
  if (t < -tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "circle lies behind the ray");
  }
  return ray.at(std::max(0.0, t));
}

}  // namespace postulatum::eu
