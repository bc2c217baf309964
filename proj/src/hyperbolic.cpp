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

#include "postulatum/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace postulatum::hyp {
namespace {

constexpr int kBisectionMaxIterations = 200;
constexpr double kBisectionWidth = 1e-14;

eu::Tolerance euclidean_tolerance(const Tolerance& tol) {
  return {tol.degenerate, tol.residual};
}

// Homogeneous coordinates of the pole of c: the common point of the tangent
// lines e1 . x = 1 and e2 . x = 1. The weight vanishes for a diameter.
struct HomogeneousPole {
  Vec2 xy;
  double w;
};

HomogeneousPole homogeneous_pole(const HChord& c) {
  const Vec2& e1 = c.first().vec();
  const Vec2& e2 = c.second().vec();
  return {{e2.y - e1.y, e1.x - e2.x}, cross(e1, e2)};
}

}  // namespace

HPoint::HPoint(double x, double y, const Tolerance& tol) : p_(x, y) {
  if (!p_.finite() || !(p_.squared_norm() < 1.0 - tol.interior_margin)) {
    throw GeometryError(ErrorKind::kOutsideDisk,
                        "point (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not inside the Klein disk");
  }
}

IdealPoint::IdealPoint(double x, double y, const Tolerance& tol) : p_(x, y) {
  if (!p_.finite() || std::abs(p_.squared_norm() - 1.0) > tol.ideal) {
    throw GeometryError(ErrorKind::kNotIdeal,
                        "point (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not on the boundary circle");
  }
  p_ = p_ / p_.norm();
}

HChord::HChord(IdealPoint e1, IdealPoint e2, const Tolerance& tol) : first_(e1), second_(e2) {
  if (distance(e1.vec(), e2.vec()) <= tol.ideal) {
    throw GeometryError(ErrorKind::kDegenerateInput, "chord endpoints coincide");
  }
  if (lex_less(second_.vec(), first_.vec())) std::swap(first_, second_);
}

eu::EuLine HChord::carrier() const { return eu::line_through(first_.vec(), second_.vec()); }

HSegment::HSegment(HPoint start, HPoint end, const Tolerance& tol) : start_(start), end_(end) {
  if (distance(start.vec(), end.vec()) <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "segment endpoints coincide");
  }
}

LineEnds ideal_ends(const Vec2& p, const Vec2& dir, const Tolerance& tol) {
  const double len = dir.norm();
  if (!(len > 0.0)) {
    throw GeometryError(ErrorKind::kDegenerateInput, "line direction vanishes");
  }
  const Vec2 d = dir / len;
  // t^2 + 2 (p.d) t + (|p|^2 - 1) = 0; the constant term is negative inside
  // the disk, so there is one root of each sign.
  const double half_b = dot(p, d);
  const double c = p.squared_norm() - 1.0;
  const double root = std::sqrt(half_b * half_b - c);
  const double q = half_b >= 0.0 ? -(half_b + root) : -(half_b - root);
  double t1 = q;
  double t2 = c / q;
  if (t1 > t2) std::swap(t1, t2);
  return {IdealPoint(p + d * t1, tol), IdealPoint(p + d * t2, tol)};
}

HChord h_line_through(const HPoint& a, const HPoint& b, const Tolerance& tol) {
  if (distance(a.vec(), b.vec()) <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "line through coincident points");
  }
  const LineEnds ends = ideal_ends(a.vec(), b.vec() - a.vec(), tol);
  return HChord(ends.behind, ends.ahead, tol);
}

double h_distance(const HPoint& p, const HPoint& q) {
  if (p == q) return 0.0;
  // Evaluate in a fixed order so the result is exactly symmetric.
  const bool swap = lex_less(q.vec(), p.vec());
  const HPoint& a = swap ? q : p;
  const HPoint& b = swap ? p : q;
  // `behind` is on A's side of the chord and `ahead` on B's side.
  const LineEnds ends = ideal_ends(a.vec(), b.vec() - a.vec());
  const double a_near = distance(a.vec(), ends.behind.vec());
  const double a_far = distance(a.vec(), ends.ahead.vec());
  const double b_near = distance(b.vec(), ends.ahead.vec());
  const double b_far = distance(b.vec(), ends.behind.vec());
  return 0.5 * std::abs(std::log((a_far * b_far) / (a_near * b_near)));
}

eu::AngleValue h_angle_at(const HPoint& a, const HPoint& v, const HPoint& b,
                          const Tolerance& tol) {
  const Vec2 u = a.vec() - v.vec();
  const Vec2 w = b.vec() - v.vec();
  if (u.norm() <= tol.degenerate || w.norm() <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "angle with an undefined ray");
  }
  // g(u, w) = (u.w)/s + (V.u)(V.w)/s^2 with s = 1 - |V|^2; det g = 1/s^3, so
  // the metric "cross product" is |u x w| / s^1.5.
  const Vec2& p = v.vec();
  const double s = 1.0 - p.squared_norm();
  const double inner = dot(u, w) / s + dot(p, u) * dot(p, w) / (s * s);
  const double area = std::abs(cross(u, w)) / (s * std::sqrt(s));
  return {std::atan2(area, inner)};
}

Pole pole_of(const HChord& c, const Tolerance& tol) {
  const HomogeneousPole h = homogeneous_pole(c);
  if (std::abs(h.w) <= tol.degenerate) {
    Vec2 d = perp(c.first().vec());
    if (d.x < 0.0 || (d.x == 0.0 && d.y < 0.0)) d = -d;
    if (d.x == 0.0) d.x = 0.0;
    if (d.y == 0.0) d.y = 0.0;
    return {std::nullopt, d};
  }
  return {h.xy / h.w, Vec2{}};
}

HChord h_perpendicular(const HPoint& p, const HChord& c, const Tolerance& tol) {
  // Direction from P to the pole, written without dividing by the weight so
  // that near-diameters and diameters need no special case.
  const HomogeneousPole h = homogeneous_pole(c);
  const Vec2 dir = h.xy - p.vec() * h.w;
  const LineEnds ends = ideal_ends(p.vec(), dir, tol);
  return HChord(ends.behind, ends.ahead, tol);
}

std::optional<HPoint> intersect_chords(const HChord& c1, const HChord& c2, const Tolerance& tol) {
  const eu::Tolerance etol = euclidean_tolerance(tol);
  const eu::LineIntersection x = eu::intersect_lines(c1.carrier(), c2.carrier(), etol);
  if (x.coincident) {
    throw GeometryError(ErrorKind::kDegenerateInput, "intersection of a chord with itself");
  }
  if (!x.point || !(x.point->squared_norm() < 1.0 - tol.interior_margin)) return std::nullopt;
  return HPoint(*x.point, tol);
}

HPoint h_foot(const HPoint& p, const HChord& c, const Tolerance& tol) {
  const std::optional<HPoint> f = intersect_chords(h_perpendicular(p, c, tol), c, tol);
  if (!f) {
    throw GeometryError(ErrorKind::kDegenerateInput, "perpendicular foot left the disk");
  }
  return *f;
}

HPoint solve_circle_segment(const HPoint& center, double radius, const HSegment& s,
                            const Tolerance& tol) {
  auto excess = [&](double t) { return h_distance(center, HPoint(s.at(t), tol)) - radius; };
  const double f_start = excess(0.0);
  const double f_end = excess(1.0);
  if (std::abs(f_start) <= tol.degenerate || std::abs(f_end) <= tol.degenerate ||
      std::signbit(f_start) == std::signbit(f_end)) {
    throw GeometryError(ErrorKind::kNoSignChange,
                        "segment endpoints are not on opposite sides of the circle");
  }
  // Only the sign change is assumed, not monotonicity.
  double lo = 0.0;
  double hi = 1.0;
  const bool lo_negative = std::signbit(f_start);
  for (int i = 0; i < kBisectionMaxIterations && hi - lo >= kBisectionWidth; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f = excess(mid);
    if (f == 0.0) return HPoint(s.at(mid), tol);
    if (std::signbit(f) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return HPoint(s.at(0.5 * (lo + hi)), tol);
}

HRay h_ray_through(const HPoint& origin, const HPoint& through, const Tolerance& tol) {
  if (distance(origin.vec(), through.vec()) <= tol.degenerate) {
    throw GeometryError(ErrorKind::kDegenerateInput, "ray through its own origin");
  }
  return HRay(origin, ideal_ends(origin.vec(), through.vec() - origin.vec(), tol).ahead);
}

bool on_chord(const HPoint& p, const HChord& c, const Tolerance& tol) {
  return std::abs(c.offset_of(p.vec())) <= tol.residual;
}

bool is_limiting_parallel(const HRay& r, const HChord& c, const Tolerance& tol) {
  if (on_chord(r.origin(), c, tol)) {
    throw GeometryError(ErrorKind::kDegenerateInput, "ray starts on the chord");
  }
  const Vec2& toward = r.toward().vec();
  const double d1 = distance(toward, c.first().vec());
  const double d2 = distance(toward, c.second().vec());
  const Vec2& shared = d1 <= d2 ? c.first().vec() : c.second().vec();
  if (std::min(d1, d2) > kIdealMatchTolerance) return false;

  // A crossing within the match tolerance of the shared endpoint is the
  // meeting at infinity itself, displaced by rounding.
  const eu::LineIntersection x = eu::intersect_lines(eu::line_through(r.origin().vec(), toward),
                                                     c.carrier(), euclidean_tolerance(tol));
  if (!x.point) return !x.coincident;
  const bool interior = x.point->squared_norm() < 1.0 - tol.interior_margin;
  return !(interior && distance(*x.point, shared) > kIdealMatchTolerance);
}

Vec2 klein_to_poincare(const HPoint& a) {
  return a.vec() / (1.0 + std::sqrt(1.0 - a.vec().squared_norm()));
}

}  // namespace postulatum::hyp
