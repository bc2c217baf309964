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

// Euclidean plane primitives: straightedge lines, compass circles, their
// intersections, undirected angles, and the transversal predicates used to
// state parallelism criteria.

#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "postulatum/error.hpp"
#include "postulatum/vec2.hpp"

namespace postulatum::eu {

// Absolute tolerances shared by every kernel operation. `degenerate` decides
// coincidence and parallelism; `residual` bounds post-condition errors.
struct Tolerance {
  double degenerate = 1e-12;
  double residual = 1e-10;
};

inline constexpr Tolerance kDefaultTolerance{};

using EuPoint = Vec2;

// Undirected angle in [0, pi].
struct AngleValue {
  double radians = 0.0;

  static constexpr double kStraight = std::numbers::pi;
  static constexpr double kRight = std::numbers::pi / 2.0;

  constexpr auto operator<=>(const AngleValue&) const = default;
};

// The line { p : normal . p = offset } with a unit normal. The stored normal
// is the lexicographically larger of (n, -n), so a line has exactly one
// representation.
class EuLine {
 public:
  // Normalizes `normal` and canonicalizes the sign. Throws DegenerateInput
  // for a zero or non-finite normal.
  static EuLine from_normal(Vec2 normal, double offset);

  const Vec2& normal() const { return normal_; }
  double offset() const { return offset_; }

  // Canonical direction: the normal turned a quarter counter-clockwise.
  Vec2 direction() const { return perp(normal_); }

  double signed_distance(const EuPoint& p) const { return dot(normal_, p) - offset_; }
  EuPoint foot(const EuPoint& p) const { return p - normal_ * signed_distance(p); }

  bool operator==(const EuLine&) const = default;

 private:
  EuLine(Vec2 normal, double offset) : normal_(normal), offset_(offset) {}

  Vec2 normal_;
  double offset_;
};

class EuRay {
 public:
  // `direction` is normalized; throws DegenerateInput when it vanishes.
  EuRay(EuPoint origin, Vec2 direction);

  const EuPoint& origin() const { return origin_; }
  const Vec2& direction() const { return direction_; }
  EuPoint at(double t) const { return origin_ + direction_ * t; }

  bool operator==(const EuRay&) const = default;

 private:
  EuPoint origin_;
  Vec2 direction_;
};

class EuSegment {
 public:
  EuSegment(EuPoint start, EuPoint end, const Tolerance& tol = kDefaultTolerance);

  const EuPoint& start() const { return start_; }
  const EuPoint& end() const { return end_; }

  bool operator==(const EuSegment&) const = default;

 private:
  EuPoint start_;
  EuPoint end_;
};

class EuCircle {
 public:
  EuCircle(EuPoint center, double radius, const Tolerance& tol = kDefaultTolerance);

  const EuPoint& center() const { return center_; }
  double radius() const { return radius_; }

  bool operator==(const EuCircle&) const = default;

 private:
  EuPoint center_;
  double radius_;
};

struct LineIntersection {
  std::optional<EuPoint> point;
  // Set when the lines are the same line; `point` is then empty.
  bool coincident = false;
};

// First Postulate, extended to the whole line.
EuLine line_through(const EuPoint& a, const EuPoint& b, const Tolerance& tol = kDefaultTolerance);

// Third Postulate: circle with `center` passing through `through`.
EuCircle circle_from(const EuPoint& center, const EuPoint& through,
                     const Tolerance& tol = kDefaultTolerance);

LineIntersection intersect_lines(const EuLine& l1, const EuLine& l2,
                                 const Tolerance& tol = kDefaultTolerance);

// Zero, one (tangency) or two points, sorted lexicographically.
std::vector<EuPoint> intersect_line_circle(const EuLine& line, const EuCircle& circle,
                                           const Tolerance& tol = kDefaultTolerance);

// Zero, one or two points, sorted lexicographically. Throws CoincidentCircles.
std::vector<EuPoint> intersect_circles(const EuCircle& c1, const EuCircle& c2,
                                       const Tolerance& tol = kDefaultTolerance);

// Undirected angle between rays VA and VB.
AngleValue angle_at(const EuPoint& a, const EuPoint& v, const EuPoint& b,
                    const Tolerance& tol = kDefaultTolerance);

// Angle between two direction vectors; both must be non-zero.
AngleValue angle_between(const Vec2& u, const Vec2& v);

// Where a transversal c crosses lines b and a. The crossings are ordered
// along c's canonical direction; `forward` is that direction.
struct TransversalCrossings {
  EuPoint first;
  EuPoint second;
  bool b_first = true;
  Vec2 forward;
};

// Throws NotATransversal when c misses a or b, meets both at one point, or
// the three lines are not pairwise distinct.
TransversalCrossings transversal_crossings(const EuLine& b, const EuLine& a, const EuLine& c,
                                           const Tolerance& tol = kDefaultTolerance);

struct AlternateAngles {
  AngleValue first;   // right of c at the first crossing
  AngleValue second;  // left of c at the second crossing
};

// Alternate interior angles made by transversal c with a and b.
AlternateAngles alternate_angles(const EuLine& b, const EuLine& a, const EuLine& c,
                                 const Tolerance& tol = kDefaultTolerance);

// Sums of the two interior angles on each side of c.
struct InteriorAngleSums {
  double right = 0.0;
  double left = 0.0;
};

InteriorAngleSums interior_angle_sums(const EuLine& b, const EuLine& a, const EuLine& c,
                                      const Tolerance& tol = kDefaultTolerance);

// Distinct and non-intersecting. Coincident lines are not parallel.
bool is_parallel(const EuLine& a, const EuLine& b, const Tolerance& tol = kDefaultTolerance);

// Euclidean ray from `origin` through `through`.
EuRay ray_through(const EuPoint& origin, const EuPoint& through,
                  const Tolerance& tol = kDefaultTolerance);

// First point where the ray leaves the circle going forward, i.e. the
// largest-parameter intersection with t >= 0. Throws DegenerateInput if the
// ray misses the circle.
EuPoint intersect_ray_circle(const EuRay& ray, const EuCircle& circle,
                             const Tolerance& tol = kDefaultTolerance);

}  // namespace postulatum::eu
