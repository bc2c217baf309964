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

// Beltrami-Klein disk model. Lines are Euclidean chords of the unit disk,
// distance is half the log of a cross-ratio, and angles are measured with
// the model's metric tensor since the model is not conformal.

#pragma once

#include <optional>

#include "postulatum/euclidean.hpp"
#include "postulatum/vec2.hpp"

namespace postulatum::hyp {

struct Tolerance {
  double interior_margin = 1e-12;  // HPoint requires |p|^2 < 1 - margin
  double ideal = 1e-10;            // IdealPoint requires ||p|^2 - 1| <= ideal
  double degenerate = 1e-12;
  double residual = 1e-10;
};

inline constexpr Tolerance kDefaultTolerance{};

// Strictly interior point of the Klein disk.
class HPoint {
 public:
  // Throws OutsideDisk unless x^2 + y^2 < 1 - interior_margin.
  HPoint(double x, double y, const Tolerance& tol = kDefaultTolerance);
  explicit HPoint(Vec2 p, const Tolerance& tol = kDefaultTolerance) : HPoint(p.x, p.y, tol) {}

  double x() const { return p_.x; }
  double y() const { return p_.y; }
  const Vec2& vec() const { return p_; }

  bool operator==(const HPoint&) const = default;

 private:
  Vec2 p_;
};

// Point of the boundary circle. Stored renormalized to unit length.
class IdealPoint {
 public:
  // Throws NotIdeal unless |x^2 + y^2 - 1| <= ideal.
  IdealPoint(double x, double y, const Tolerance& tol = kDefaultTolerance);
  explicit IdealPoint(Vec2 p, const Tolerance& tol = kDefaultTolerance)
      : IdealPoint(p.x, p.y, tol) {}

  double x() const { return p_.x; }
  double y() const { return p_.y; }
  const Vec2& vec() const { return p_; }

  bool operator==(const IdealPoint&) const = default;

 private:
  Vec2 p_;
};

// A hyperbolic line, carried by its two ideal endpoints in lexicographic
// order.
class HChord {
 public:
  HChord(IdealPoint e1, IdealPoint e2, const Tolerance& tol = kDefaultTolerance);

  const IdealPoint& first() const { return first_; }
  const IdealPoint& second() const { return second_; }

  // Euclidean carrier line of the chord.
  eu::EuLine carrier() const;

  // Signed Euclidean distance from the carrier line.
  double offset_of(const Vec2& p) const { return carrier().signed_distance(p); }

  bool operator==(const HChord&) const = default;

 private:
  IdealPoint first_;
  IdealPoint second_;
};

class HRay {
 public:
  HRay(HPoint origin, IdealPoint toward) : origin_(origin), toward_(toward) {}

  const HPoint& origin() const { return origin_; }
  const IdealPoint& toward() const { return toward_; }

  bool operator==(const HRay&) const = default;

 private:
  HPoint origin_;
  IdealPoint toward_;
};

class HSegment {
 public:
  HSegment(HPoint start, HPoint end, const Tolerance& tol = kDefaultTolerance);

  const HPoint& start() const { return start_; }
  const HPoint& end() const { return end_; }

  // Euclidean (affine) parametrization; Klein geodesics are straight.
  Vec2 at(double t) const { return start_.vec() + (end_.vec() - start_.vec()) * t; }

  bool operator==(const HSegment&) const = default;

 private:
  HPoint start_;
  HPoint end_;
};

// Ideal endpoints of the Euclidean line through `p` with direction `dir`:
// `.behind` at negative parameter, `.ahead` at positive parameter. `p` must
// be inside the disk.
struct LineEnds {
  IdealPoint behind;
  IdealPoint ahead;
};
LineEnds ideal_ends(const Vec2& p, const Vec2& dir, const Tolerance& tol = kDefaultTolerance);

HChord h_line_through(const HPoint& a, const HPoint& b, const Tolerance& tol = kDefaultTolerance);

// Cross-ratio distance; zero for equal points.
double h_distance(const HPoint& a, const HPoint& b);

// Angle at V between the geodesics toward A and B under the Klein metric.
eu::AngleValue h_angle_at(const HPoint& a, const HPoint& v, const HPoint& b,
                          const Tolerance& tol = kDefaultTolerance);

struct Pole {
  // Intersection of the tangents at the chord's endpoints; empty for a
  // diameter.
  std::optional<Vec2> point;
  // For a diameter, the common (canonical) tangent direction.
  Vec2 direction;
};
Pole pole_of(const HChord& c, const Tolerance& tol = kDefaultTolerance);

// The chord through P perpendicular to c: the Euclidean line through P and
// the pole of c. Well defined for P on c as well.
HChord h_perpendicular(const HPoint& p, const HChord& c, const Tolerance& tol = kDefaultTolerance);

// Interior crossing of two chords, empty when they do not meet inside the
// disk. Throws DegenerateInput for the same chord.
std::optional<HPoint> intersect_chords(const HChord& c1, const HChord& c2,
                                       const Tolerance& tol = kDefaultTolerance);

// Foot of the perpendicular from P to c.
HPoint h_foot(const HPoint& p, const HChord& c, const Tolerance& tol = kDefaultTolerance);

// Point X on s with h_distance(center, X) = radius, by bisection on the
// segment parameter. Throws NoSignChange unless the endpoints lie strictly
// on opposite sides of the circle.
HPoint solve_circle_segment(const HPoint& center, double radius, const HSegment& s,
                            const Tolerance& tol = kDefaultTolerance);

// Ray from P through X, pointing at the ideal endpoint beyond X.
HRay h_ray_through(const HPoint& origin, const HPoint& through,
                   const Tolerance& tol = kDefaultTolerance);

// Whether P lies on the carrier of c, within the residual tolerance.
bool on_chord(const HPoint& p, const HChord& c, const Tolerance& tol = kDefaultTolerance);

// Ideal-endpoint tolerance used by is_limiting_parallel.
inline constexpr double kIdealMatchTolerance = 1e-6;

// Ray and chord share an ideal endpoint (within kIdealMatchTolerance) and
// the ray's line crosses c nowhere in the interior. Throws DegenerateInput
// when the ray starts on c.
bool is_limiting_parallel(const HRay& r, const HChord& c, const Tolerance& tol = kDefaultTolerance);

// Image in the Poincare disk under the standard isometry.
Vec2 klein_to_poincare(const HPoint& a);

}  // namespace postulatum::hyp
