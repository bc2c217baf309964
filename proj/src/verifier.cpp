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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "postulatum/verifier.hpp"

namespace postulatum::verify {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRightAngle = kPi / 2.0;
// Sampled points stay inside this radius; constructed points inside the next.
constexpr double kSampleRadius = 0.95;
constexpr double kConstructedRadius = 0.99;
constexpr double kMinSeparation = 1e-6;
constexpr double kStrictGap = 1e-12;

// Rejection loops in the samplers give up after this many draws; with the
// shipped margins acceptance is well above one in ten.
constexpr int kMaxDraws = 10000;

[[noreturn]] void sampler_exhausted(const char* what) {
  throw GeometryError(ErrorKind::kDegenerateScene,
                      std::string("sampler found no valid ") + what);
}

Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Line through a random point of the box with a random direction, built
// from two points so its normal carries ordinary rounding.
eu::EuLine random_line(TrialRng& rng, double theta) {
  const Vec2 p = rng.in_box(10.0);
  return eu::line_through(p, p + unit(theta) * rng.uniform(1.0, 5.0));
}

// Parallel to `b`, displaced by `gap` along b's normal.
eu::EuLine shifted_line(TrialRng& rng, const eu::EuLine& b, double gap) {
  const Vec2 q = b.foot(rng.in_box(10.0)) + b.normal() * gap;
  return eu::line_through(q, q + b.direction() * rng.uniform(1.0, 5.0));
}

double signed_gap(TrialRng& rng) {
  const double g = rng.uniform(0.1, 5.0);
  return rng.uniform() < 0.5 ? -g : g;
}

double sin_between(const eu::EuLine& l1, const eu::EuLine& l2) {
  return std::abs(cross(l1.direction(), l2.direction()));
}

bool within(const Vec2& p, double radius) { return p.norm() <= radius; }

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

double TrialRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

Vec2 TrialRng::in_disk(double radius) {
  // sqrt of a uniform radius fraction gives uniform area density.
  const double r = radius * std::sqrt(uniform());
  return unit(uniform(0.0, 2.0 * kPi)) * r;
}

Vec2 TrialRng::in_box(double half_width) {
  const double x = uniform(-half_width, half_width);
  return {x, uniform(-half_width, half_width)};
}

CheckResult check_alternate_angle_criterion(const TransversalScene& s, double tol) {
  const eu::AlternateAngles alt = eu::alternate_angles(s.b, s.a, s.c);
  const double diff = std::abs(alt.first.radians - alt.second.radians);
  const bool equal = diff <= tol;
  const bool parallel = eu::is_parallel(s.a, s.b);
  return {equal == parallel, parallel ? tol - diff : diff - tol};
}

CheckResult check_fp_meeting_side(const TransversalScene& s, double tol) {
  const eu::InteriorAngleSums sums = eu::interior_angle_sums(s.b, s.a, s.c);
  const double shortfall_right = kPi - sums.right;
  const double shortfall_left = kPi - sums.left;
  if (std::max(shortfall_right, shortfall_left) <= tol) {
    throw GeometryError(ErrorKind::kInconclusive, "interior angle sums are within tolerance of pi");
  }
  // c's right-hand side is the side of its normal.
  const double deficient_sign = shortfall_right > shortfall_left ? 1.0 : -1.0;
  const eu::LineIntersection x = eu::intersect_lines(s.a, s.b);
  if (!x.point) return {false, -std::numeric_limits<double>::infinity()};
  const double side = deficient_sign * s.c.signed_distance(*x.point);
  return {side > 0.0, side};
}

CheckResult check_parallel_transitivity(const eu::EuLine& a, const eu::EuLine& b,
                                        const eu::EuLine& c) {
  if (a == c || !eu::is_parallel(a, b) || !eu::is_parallel(c, b)) {
    throw GeometryError(ErrorKind::kPreconditionUnmet,
                        "transitivity needs distinct a, c both parallel to b");
  }
  if (eu::is_parallel(a, c)) {
    const double aligned = dot(a.normal(), c.normal()) >= 0.0 ? c.offset() : -c.offset();
    return {true, std::abs(a.offset() - aligned)};
  }
  return {false, -std::abs(cross(a.normal(), c.normal()))};
}

double hyperbolic_defect(const hyp::HPoint& a, const hyp::HPoint& b, const hyp::HPoint& c) {
  if (hyp::h_distance(a, b) <= kMinSeparation || hyp::h_distance(b, c) <= kMinSeparation ||
      hyp::h_distance(c, a) <= kMinSeparation) {
    throw GeometryError(ErrorKind::kDegenerateTriangle, "triangle vertices coincide");
  }
  if (std::abs(cross(b.vec() - a.vec(), c.vec() - a.vec())) <= kStrictGap) {
    throw GeometryError(ErrorKind::kDegenerateTriangle, "triangle vertices are collinear");
  }
  const double sum = hyp::h_angle_at(b, a, c).radians + hyp::h_angle_at(a, b, c).radians +
                     hyp::h_angle_at(a, c, b).radians;
  return kPi - sum;
}

CheckResult check_hyperbolic_angle_sum(const hyp::HPoint& a, const hyp::HPoint& b,
                                       const hyp::HPoint& c, double tol) {
  const double margin = hyperbolic_defect(a, b, c) - tol;
  return {margin > 0.0, margin};
}

namespace {

double right_angle_error(const hyp::HPoint& a, const hyp::HPoint& v, const hyp::HPoint& b) {
  try {
    return std::abs(hyp::h_angle_at(a, v, b).radians - kRightAngle);
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorKind::kNotLambert, e.what());
  }
}

}  // namespace

LambertScene make_lambert(const hyp::HPoint& p, const hyp::HPoint& q, const hyp::HPoint& s) {
  if (right_angle_error(q, p, s) > kAngleTolerance) {
    throw GeometryError(ErrorKind::kNotLambert, "angle at P is not right");
  }
  const hyp::HChord pq = hyp::h_line_through(p, q);
  const hyp::HChord ps = hyp::h_line_through(p, s);
  const std::optional<hyp::HPoint> r =
      hyp::intersect_chords(hyp::h_perpendicular(q, pq), hyp::h_perpendicular(s, ps));
  if (!r) throw GeometryError(ErrorKind::kNotLambert, "perpendiculars at Q and S do not meet");
  return {p, q, *r, s};
}

CheckResult check_lambert(const LambertScene& l, double tol) {
  for (const auto& [a, v, b] : {std::tuple{l.q, l.p, l.s}, std::tuple{l.p, l.q, l.r},
                                std::tuple{l.p, l.s, l.r}}) {
    if (right_angle_error(a, v, b) > kAngleTolerance) {
      throw GeometryError(ErrorKind::kNotLambert, "a required right angle fails");
    }
  }
  const double acute = kRightAngle - tol - hyp::h_angle_at(l.q, l.r, l.s).radians;
  const double qr_ps = hyp::h_distance(l.q, l.r) - hyp::h_distance(l.p, l.s) - kStrictGap;
  const double sr_pq = hyp::h_distance(l.s, l.r) - hyp::h_distance(l.p, l.q) - kStrictGap;
  const double margin = std::min({acute, qr_ps, sr_pq});
  return {margin > 0.0, margin};
}

construct::Scene bolyai_givens_scene(const BolyaiGivens& g) {
  construct::Scene scene(construct::Model::kKlein);
  scene.add("a", g.a);
  scene.add("P", g.p);
  scene.add("R", g.r);
  return scene;
}

LimitingCrossing limiting_crossing(const BolyaiGivens& g) {
  const hyp::Tolerance& tol = hyp::kDefaultTolerance;
  if (std::abs(g.a.offset_of(g.p.vec())) <= tol.residual) {
    throw GeometryError(ErrorKind::kDegenerateScene, "P lies on a");
  }
  const hyp::HChord pq = hyp::h_perpendicular(g.p, g.a);
  const hyp::HPoint q = hyp::h_foot(g.p, g.a);
  if (hyp::h_distance(g.r, q) <= kAngleTolerance) {
    throw GeometryError(ErrorKind::kDegenerateScene, "R coincides with the foot Q");
  }
  const hyp::HChord m = hyp::h_perpendicular(g.p, pq);
  const hyp::HChord rs = hyp::h_perpendicular(g.r, m);
  const std::optional<hyp::HPoint> s = hyp::intersect_chords(rs, m);
  if (!s) throw GeometryError(ErrorKind::kDegenerateScene, "perpendicular from R misses m");

  // The end of a on R's side of PQ.
  const bool r_side = pq.offset_of(g.r.vec()) > 0.0;
  const hyp::IdealPoint end =
      (pq.offset_of(g.a.first().vec()) > 0.0) == r_side ? g.a.first() : g.a.second();
  const hyp::LineEnds ends = hyp::ideal_ends(g.p.vec(), end.vec() - g.p.vec());
  const std::optional<hyp::HPoint> x = hyp::intersect_chords(hyp::HChord(ends.behind, end), rs);
  if (!x) throw GeometryError(ErrorKind::kDegenerateScene, "limiting ray misses RS");
  return {q, *s, *x, hyp::HRay(g.p, end)};
}

CheckResult check_px_equals_qr(const BolyaiGivens& g, double tol) {
  const LimitingCrossing lc = limiting_crossing(g);
  const double qr = hyp::h_distance(lc.q, g.r);
  const double px = hyp::h_distance(g.p, lc.x);
  const double margin = tol * std::max(1.0, qr) - std::abs(px - qr);
  return {margin >= 0.0, margin};
}

CheckResult check_bolyai(const BolyaiGivens& g) {
  const construct::Trace t = construct::run_program(construct::prog_bolyai(), bolyai_givens_scene(g));
  if (!t.ok()) {
    const construct::TraceFailure& f = *t.failure;
    if (f.kind == ErrorKind::kAssertionFailed && f.cause == ErrorKind::kNoSignChange) {
      // The continuity hypothesis is part of what the construction claims.
      return {false, t.steps.back().assertion->margin};
    }
    throw GeometryError(f.kind == ErrorKind::kAssertionFailed ? f.cause : ErrorKind::kStepFailed,
                        f.message);
  }
  const construct::BolyaiScene s = construct::bolyai_scene(t);
  const Vec2 toward = s.result.toward().vec();
  const double gap = std::min(distance(toward, g.a.first().vec()),
                              distance(toward, g.a.second().vec()));
  const double margin = hyp::kIdealMatchTolerance - gap;
  const bool passed = hyp::is_limiting_parallel(s.result, g.a);
  return {passed, passed ? std::abs(margin) : -std::abs(margin)};
}

TransversalScene sample_transversal(TrialRng& rng, bool parallel) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const double theta = rng.uniform(0.0, kPi);
    const eu::EuLine b = random_line(rng, theta);
    const eu::EuLine a =
        parallel ? shifted_line(rng, b, signed_gap(rng)) : random_line(rng, rng.uniform(0.0, kPi));
    if (!parallel && sin_between(a, b) < 1e-3) continue;
    const Vec2 pb = b.foot(rng.in_box(10.0));
    const Vec2 pa = a.foot(rng.in_box(10.0));
    if (distance(pa, pb) < 0.1) continue;
    const eu::EuLine c = eu::line_through(pb, pa);
    if (sin_between(c, a) < 1e-3 || sin_between(c, b) < 1e-3) continue;
    return {a, b, c};
  }
  sampler_exhausted("transversal scene");
}

TransversalScene sample_fp_scene(TrialRng& rng) { return sample_transversal(rng, false); }

ParallelTriple sample_parallel_triple(TrialRng& rng) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const eu::EuLine b = random_line(rng, rng.uniform(0.0, kPi));
    const double ga = signed_gap(rng);
    const double gc = signed_gap(rng);
    if (std::abs(ga - gc) < 0.1) continue;
    return {shifted_line(rng, b, ga), b, shifted_line(rng, b, gc)};
  }
  sampler_exhausted("parallel triple");
}

Triangle sample_triangle(TrialRng& rng) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Vec2 a = rng.in_disk(kSampleRadius);
    const Vec2 b = rng.in_disk(kSampleRadius);
    const Vec2 c = rng.in_disk(kSampleRadius);
    if (std::abs(cross(b - a, c - a)) / 2.0 < 1e-3) continue;
    return {hyp::HPoint(a), hyp::HPoint(b), hyp::HPoint(c)};
  }
  sampler_exhausted("triangle");
}

LambertScene sample_lambert(TrialRng& rng) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const hyp::HPoint p(rng.in_disk(0.8));
    const hyp::LineEnds e1 = hyp::ideal_ends(p.vec(), unit(rng.uniform(0.0, 2.0 * kPi)));
    const hyp::HChord l1(e1.behind, e1.ahead);
    const hyp::HChord l2 = hyp::h_perpendicular(p, l1);
    // Q toward l1's forward end, S toward a random end of l2.
    const Vec2 q = p.vec() + (e1.ahead.vec() - p.vec()) * rng.uniform(0.05, 0.9);
    const Vec2& s_end = rng.uniform() < 0.5 ? l2.first().vec() : l2.second().vec();
    const Vec2 s = p.vec() + (s_end - p.vec()) * rng.uniform(0.05, 0.9);
    if (!within(q, kSampleRadius) || !within(s, kSampleRadius)) continue;
    const hyp::HPoint hq(q);
    const hyp::HPoint hs(s);
    if (hyp::h_distance(p, hq) < 1e-2 || hyp::h_distance(p, hs) < 1e-2) continue;
    try {
      const LambertScene l = make_lambert(p, hq, hs);
      if (!within(l.r.vec(), kConstructedRadius)) continue;
      return l;
    } catch (const GeometryError&) {
      continue;
    }
  }
  sampler_exhausted("Lambert quadrilateral");
}

BolyaiGivens sample_bolyai_givens(TrialRng& rng) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double gap = rng.uniform(0.3, 2.0 * kPi - 0.3);
    const hyp::HChord a(hyp::IdealPoint(unit(phi)), hyp::IdealPoint(unit(phi + gap)));
    const hyp::HPoint p(rng.in_disk(kSampleRadius));
    if (std::abs(a.offset_of(p.vec())) < 1e-2) continue;
    const Vec2 r = a.first().vec() + (a.second().vec() - a.first().vec()) * rng.uniform();
    if (!within(r, kSampleRadius)) continue;
    const BolyaiGivens g{a, p, hyp::HPoint(r)};
    try {
      const LimitingCrossing lc = limiting_crossing(g);
      if (hyp::h_distance(lc.q, g.r) < 1e-2) continue;
      if (!within(lc.s.vec(), kConstructedRadius)) continue;
      return g;
    } catch (const GeometryError&) {
      continue;
    }
  }
  sampler_exhausted("Bolyai scene");
}

}  // namespace postulatum::verify
