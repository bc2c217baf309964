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

// Test-only reference formulas. Nothing here calls into the kernels' metric
// or angle code, so agreement with the kernels is a real cross-check.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <utility>

namespace postulatum::oracle {

using Complex = std::complex<double>;

// Klein-model distance from cosh d = (1 - A.B) / sqrt((1-|A|^2)(1-|B|^2)),
// evaluated as acosh(1 + x) with x computed without cancellation:
// (1-A.B)^2 - (1-|A|^2)(1-|B|^2) = |A-B|^2 - (A x B)^2.
inline double klein_distance_acosh(double ax, double ay, double bx, double by) {
  const double dx = ax - bx;
  const double dy = ay - by;
  const double cr = ax * by - ay * bx;
  const double num = dx * dx + dy * dy - cr * cr;
  const double sa = 1.0 - (ax * ax + ay * ay);
  const double sb = 1.0 - (bx * bx + by * by);
  const double root = std::sqrt(sa * sb);
  const double one_minus_dot = 1.0 - (ax * bx + ay * by);
  const double x = std::max(0.0, num) / (root * (one_minus_dot + root));
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

// Poincare-disk distance 2 artanh |(p - q) / (1 - conj(q) p)|.
inline double poincare_distance(Complex p, Complex q) {
  return 2.0 * std::atanh(std::abs((p - q) / (1.0 - std::conj(q) * p)));
}

// Disk automorphism sending v to the origin. Its derivative at v is a
// positive real, so it preserves angles there without rotating them.
inline Complex to_origin(Complex z, Complex v) { return (z - v) / (1.0 - std::conj(v) * z); }

// Angle at v between Poincare geodesics toward a and b: after moving v to
// the origin those geodesics are diameters.
inline double poincare_angle(Complex a, Complex v, Complex b) {
  return std::abs(std::arg(to_origin(a, v) / to_origin(b, v)));
}

// Angle opposite side c in a hyperbolic triangle with sides a, b, c.
inline double law_of_cosines_angle(double a, double b, double c) {
  return std::acos((std::cosh(a) * std::cosh(b) - std::cosh(c)) / (std::sinh(a) * std::sinh(b)));
}

// Klein to Poincare: p / (1 + sqrt(1 - |p|^2)).
inline Complex klein_to_poincare(double x, double y) {
  return Complex(x, y) / (1.0 + std::sqrt(1.0 - (x * x + y * y)));
}

// Ideal endpoints of the Poincare geodesic through p and q, which must not
// lie on one diameter. The geodesic is the circle through p, q and the
// inverse of p; it meets the unit circle where x.c = 1.
inline std::pair<Complex, Complex> poincare_geodesic_ends(Complex p, Complex q) {
  const Complex r = 1.0 / std::conj(p);
  // Circumcenter of p, q, r.
  const Complex b = q - p;
  const Complex c = r - p;
  const double d = 2.0 * (b.real() * c.imag() - b.imag() * c.real());
  const double b2 = std::norm(b);
  const double c2 = std::norm(c);
  const Complex center = p + Complex((c.imag() * b2 - b.imag() * c2) / d,
                                     (b.real() * c2 - c.real() * b2) / d);
  const double n2 = std::norm(center);
  const Complex offset = Complex(0.0, 1.0) * center * std::sqrt(n2 - 1.0);
  return {(center + offset) / n2, (center - offset) / n2};
}

// Uniform point in the disk of radius `r`.
template <class Rng>
std::pair<double, double> uniform_in_disk(Rng& rng, double r) {
  std::uniform_real_distribution<double> u(-r, r);
  for (;;) {
    const double x = u(rng);
    const double y = u(rng);
    if (x * x + y * y <= r * r) return {x, y};
  }
}

}  // namespace postulatum::oracle
