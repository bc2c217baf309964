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
#include "oracles.hpp"
#include "postulatum/construction.hpp"
#include "postulatum/scene_io.hpp"

namespace {

using namespace postulatum;
using namespace postulatum::construct;
using oracle::Complex;

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of_error(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("expected a GeometryError");
  return ErrorKind::kParseError;
}

Scene i31_scene(eu::EuLine b, eu::EuPoint a) {
  Scene s(Model::kEuclidean);
  s.add("b", b);
  s.add("A", a);
  return s;
}

Scene bolyai_givens(const hyp::HChord& a, const hyp::HPoint& p, const hyp::HPoint& r) {
  Scene s(Model::kKlein);
  s.add("a", a);
  s.add("P", p);
  s.add("R", r);
  return s;
}

hyp::HChord diameter_x() { return hyp::HChord(hyp::IdealPoint(-1, 0), hyp::IdealPoint(1, 0)); }

// Random chord, a point off it and a point on it away from the foot.
struct KleinGivens {
  hyp::HChord a;
  hyp::HPoint p;
  hyp::HPoint r;
};

KleinGivens random_klein_givens(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (;;) {
    const double t1 = ang(rng);
    const double t2 = t1 + 0.6 + (kPi * 2 - 1.2) * unit(rng);
    const hyp::HChord a(hyp::IdealPoint(std::cos(t1), std::sin(t1)),
                        hyp::IdealPoint(std::cos(t2), std::sin(t2)));
    const auto [px, py] = oracle::uniform_in_disk(rng, 0.9);
    const hyp::HPoint p(px, py);
    if (std::abs(a.offset_of(p.vec())) < 0.05) continue;
    const double s = unit(rng);
    const hyp::HPoint r(a.first().vec() * (1 - s) + a.second().vec() * s);
    if (r.vec().norm() > 0.95) continue;
    const hyp::HPoint q = hyp::h_foot(p, a);
    if (hyp::h_distance(q, r) < 0.05) continue;
    return {a, p, r};
  }
}

TEST_CASE("empty program yields an empty trace") {
  const ConstructionProgram empty = ProgramBuilder("empty", Model::kEuclidean).build(std::nullopt);
  const Trace t = run_program(empty, Scene(Model::kEuclidean));
  CHECK(t.ok());
  CHECK(t.step_count() == 0);
  CHECK_FALSE(t.result);
}

TEST_CASE("references must resolve in order") {
  ProgramBuilder b("bad", Model::kEuclidean);
  b.given("A", Kind::kPoint);
  CHECK(kind_of_error([&] { b.step("line_through", {"A", "B"}, {"l"}); }) ==
        ErrorKind::kUnresolvedReference);
  // The failed step is not kept.
  CHECK(b.build(std::nullopt).steps.empty());

  ConstructionProgram manual;
  manual.name = "manual";
  manual.givens = {{"A", Kind::kPoint}, {"B", Kind::kPoint}};
  manual.steps = {{"line_through", {"A", "C"}, {"l"}, std::nullopt}};
  CHECK(kind_of_error([&] { validate(manual); }) == ErrorKind::kUnresolvedReference);
  Scene s;
  s.add("A", eu::EuPoint{0, 0});
  s.add("B", eu::EuPoint{1, 0});
  CHECK(kind_of_error([&] { run_program(manual, s); }) == ErrorKind::kUnresolvedReference);

  // A forward reference is the same error.
  manual.steps = {{"circle_from", {"A", "l2"}, {"c"}, std::nullopt},
                  {"line_through", {"A", "B"}, {"l2"}, std::nullopt}};
  CHECK(kind_of_error([&] { validate(manual); }) == ErrorKind::kUnresolvedReference);
}

TEST_CASE("givens are checked for presence, kind and model") {
  const ConstructionProgram i31 = prog_parallel_i31();
  Scene missing(Model::kEuclidean);
  missing.add("A", eu::EuPoint{0, 1});
  CHECK(kind_of_error([&] { run_program(i31, missing); }) == ErrorKind::kUnresolvedReference);

  Scene wrong(Model::kEuclidean);
  wrong.add("A", eu::EuPoint{0, 1});
  wrong.add("b", eu::EuPoint{0, 0});
  CHECK(kind_of_error([&] { run_program(i31, wrong); }) == ErrorKind::kKindMismatch);

  CHECK(kind_of_error([&] { run_program(i31, Scene(Model::kKlein)); }) == ErrorKind::kKindMismatch);
  CHECK(kind_of_error([] { Scene(Model::kKlein).add("p", eu::EuPoint{0, 0}); }) ==
        ErrorKind::kKindMismatch);
  CHECK(kind_of_error([] {
          ProgramBuilder("x", Model::kKlein).given("A", Kind::kPoint).step("line_through", {"A", "A"}, {"l"});
        }) == ErrorKind::kKindMismatch);
}

TEST_CASE("shipped programs satisfy the ordering invariant") {
  for (const auto& p : {prog_copy_angle(), prog_parallel_i31(), prog_bolyai()}) {
    CHECK_NOTHROW(validate(p));
    CHECK(p.result);
  }
}

TEST_CASE("parallel_i31 on the symmetric scene gives y = 1") {
  const ConstructionProgram prog = prog_parallel_i31();
  const Trace t = run_program(prog, i31_scene(eu::line_through({0, 0}, {1, 0}), {0, 1}));
  REQUIRE(t.ok());
  CHECK(t.step_count() == prog.steps.size());
  REQUIRE(t.result);
  const auto& a = t.scene.get<eu::EuLine>(*t.result);
  // Near-horizontal, so the canonical sign may go either way.
  CHECK(std::abs(a.normal().x) <= 1e-12);
  CHECK(std::abs(std::abs(a.normal().y) - 1.0) <= 1e-12);
  CHECK(std::abs(a.signed_distance({0, 1})) <= 1e-12);
  CHECK(std::abs(a.signed_distance({7, 1})) <= 1e-12);
  CHECK(replay_matches(t));
}

TEST_CASE("parallel_i31 rejects a point on the line") {
  const Trace t = run_program(prog_parallel_i31(), i31_scene(eu::line_through({0, 0}, {1, 0}), {3, 0}));
  REQUIRE_FALSE(t.ok());
  CHECK(t.failure->kind == ErrorKind::kAssertionFailed);
  CHECK(t.failure->cause == ErrorKind::kPointOnLine);
  CHECK(t.failure->step == 0);
  CHECK_FALSE(t.result);
}

TEST_CASE("parallel_i31 output is parallel on random scenes") {
  const ConstructionProgram prog = prog_parallel_i31();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const eu::EuPoint p{u(rng), u(rng)}, q{u(rng), u(rng)}, a{u(rng), u(rng)};
    if (distance(p, q) < 0.5) continue;
    const eu::EuLine b = eu::line_through(p, q);
    if (std::abs(b.signed_distance(a)) < 0.1) continue;
    const Trace t = run_program(prog, i31_scene(b, a));
    REQUIRE(t.ok());
    const auto& line_a = t.scene.get<eu::EuLine>("a");
    const auto& line_c = t.scene.get<eu::EuLine>("c");
    // The asserted alternate-angle equality and is_parallel agree.
    const bool alt_equal = t.steps[t.steps.size() - 2].assertion->passed;
    CHECK(alt_equal == eu::is_parallel(line_a, b));
    CHECK(eu::is_parallel(line_a, b));
    CHECK(std::abs(line_a.signed_distance(a)) <= 1e-9);
    const auto alt = eu::alternate_angles(b, line_a, line_c);
    CHECK(std::abs(alt.first.radians - alt.second.radians) <= 1e-9);
  }
}

TEST_CASE("copy_angle") {
  const ConstructionProgram prog = prog_copy_angle();
  Scene s(Model::kEuclidean);
  s.add("O", eu::EuPoint{0, 0});
  s.add("T", eu::EuPoint{1, 0});
  s.add("A", eu::EuPoint{1, 0});
  s.add("V", eu::EuPoint{0, 0});
  s.add("B", eu::EuPoint{0, 1});
  const Trace t = run_program(prog, s);
  REQUIRE(t.ok());
  const auto& ray = t.scene.get<eu::EuRay>("result");
  CHECK(std::abs(ray.direction().x) <= 1e-12);
  CHECK(std::abs(std::abs(ray.direction().y) - 1.0) <= 1e-12);

  Scene zero(Model::kEuclidean);
  zero.add("O", eu::EuPoint{0, 0});
  zero.add("T", eu::EuPoint{1, 0});
  zero.add("A", eu::EuPoint{1, 0});
  zero.add("V", eu::EuPoint{0, 0});
  zero.add("B", eu::EuPoint{2, 0});
  const Trace z = run_program(prog, zero);
  REQUIRE_FALSE(z.ok());
  CHECK(z.failure->kind == ErrorKind::kAssertionFailed);
  CHECK(z.failure->cause == ErrorKind::kDegenerateInput);
}

TEST_CASE("copied angle equals the model angle") {
  const ConstructionProgram prog = prog_copy_angle();
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  int runs = 0;
  while (runs < 1000) {
    const eu::EuPoint o{u(rng), u(rng)}, tpt{u(rng), u(rng)}, a{u(rng), u(rng)}, v{u(rng), u(rng)},
        b{u(rng), u(rng)};
    if (distance(o, tpt) < 0.1 || distance(a, v) < 0.1 || distance(b, v) < 0.1) continue;
    const double model = eu::angle_at(a, v, b).radians;
    if (model < 0.01 || model > kPi - 0.01) continue;
    Scene s(Model::kEuclidean);
    s.add("O", o);
    s.add("T", tpt);
    s.add("A", a);
    s.add("V", v);
    s.add("B", b);
    const Trace t = run_program(prog, s);
    REQUIRE(t.ok());
    const auto& ray = t.scene.get<eu::EuRay>("result");
    const double copied = eu::angle_between(tpt - o, ray.direction()).radians;
    CHECK(std::abs(copied - model) <= 1e-9);
    ++runs;
  }
}

TEST_CASE("bolyai on the diameter scene") {
  const Trace t = run_program(prog_bolyai(), bolyai_givens(diameter_x(), hyp::HPoint(0, 0.5),
                                                           hyp::HPoint(0.6, 0)));
  REQUIRE(t.ok());
  const BolyaiScene b = bolyai_scene(t);
  CHECK(distance(b.q.vec(), {0.0, 0.0}) <= 1e-15);
  CHECK(distance(b.s.vec(), {0.45, 0.5}) <= 1e-12);

  // Independent Poincare-model oracle: the limiting parallel from P toward
  // the ideal point (1, 0) is the geodesic that becomes a diameter once P is
  // moved to the origin, and the image of X must lie on it at distance
  // artanh(0.6) = ln 2 from P.
  const Complex p = {0.0, 0.5 / (1.0 + std::sqrt(0.75))};
  const Vec2 xk = b.x.vec();
  const Complex x = Complex{xk.x, xk.y} / (1.0 + std::sqrt(1.0 - xk.squared_norm()));
  const Complex omega = {1.0, 0.0};
  CHECK(std::abs(std::arg(oracle::to_origin(x, p) / oracle::to_origin(omega, p))) <= 1e-9);
  CHECK(std::abs(oracle::poincare_distance(p, x) - std::log(2.0)) <= 1e-10);

  // Closed form in the Klein disk: X = (9/17, 4/17).
  CHECK(distance(xk, {9.0 / 17.0, 4.0 / 17.0}) <= 1e-12);
  CHECK(std::abs(hyp::h_distance(b.p, b.x) - std::atanh(0.6)) <= 1e-10);
  CHECK(distance(b.result.toward().vec(), {1.0, 0.0}) <= 1e-9);
  CHECK(hyp::is_limiting_parallel(b.result, b.a));
  CHECK(replay_matches(t));
}

TEST_CASE("bolyai with R at the foot is a degenerate scene") {
  const Trace t = run_program(prog_bolyai(), bolyai_givens(diameter_x(), hyp::HPoint(0, 0.5),
                                                           hyp::HPoint(0, 0)));
  REQUIRE_FALSE(t.ok());
  CHECK(t.failure->cause == ErrorKind::kDegenerateScene);
  CHECK(kind_of_error([&] { bolyai_scene(t); }) == ErrorKind::kStepFailed);
}

TEST_CASE("bolyai yields the limiting parallel on random scenes") {
  const ConstructionProgram prog = prog_bolyai();
  std::mt19937_64 rng(500);
  for (int i = 0; i < 500; ++i) {
    const KleinGivens g = random_klein_givens(rng);
    const Trace t = run_program(prog, bolyai_givens(g.a, g.p, g.r));
    REQUIRE(t.ok());
    const BolyaiScene b = bolyai_scene(t);
    CHECK(hyp::is_limiting_parallel(b.result, b.a));
    const double qr = hyp::h_distance(b.q, b.r);
    CHECK(hyp::h_distance(b.p, b.s) < qr - 1e-9);
    CHECK(qr < hyp::h_distance(b.p, b.r) - 1e-9);
    CHECK(replay_matches(t));
  }
}

TEST_CASE("scene text") {
  const Scene s = parse_scene(
      "# a Bolyai scene\n"
      "model klein\n"
      "\n"
      "chord a -1 0 1 0   # the given line\n"
      "point P 0 0.5\n"
      "point R 6e-1 +0\n");
  CHECK(s.model() == Model::kKlein);
  REQUIRE(s.objects().size() == 3);
  CHECK(s.get<hyp::HPoint>("R").x() == 0.6);

  const Scene e = parse_scene("point A 0 1\nline b 0 1 0\n");
  CHECK(e.model() == Model::kEuclidean);
  CHECK(e.get<eu::EuLine>("b").offset() == 0.0);

  auto error_of = [](const char* text) {
    try {
      parse_scene(text);
    } catch (const GeometryError& e) {
      CHECK(e.kind() == ErrorKind::kParseError);
      return std::string(e.what());
    }
    FAIL("expected a parse error");
    return std::string();
  };
  CHECK(error_of("point A 0\n").find("line 1") != std::string::npos);
  CHECK(error_of("point A 0 0\nfoo x\n").find("line 2") != std::string::npos);
  CHECK(error_of("point A 0 zero\n").find("bad number") != std::string::npos);
  CHECK(error_of("model klein\npoint A 2 0\n").find("line 2") != std::string::npos);
  CHECK(error_of("point A 0 0\nmodel klein\n").find("before") != std::string::npos);
  CHECK(error_of("point A 0 0\npoint A 1 1\n").find("duplicate") != std::string::npos);
  CHECK(error_of("model klein\nline b 0 1 0\n").find("chord") != std::string::npos);
}

TEST_CASE("formatted scenes and traces parse back to the same objects") {
  const Trace t = run_program(prog_bolyai(), bolyai_givens(diameter_x(), hyp::HPoint(0, 0.5),
                                                           hyp::HPoint(0.6, 0)));
  const Scene back = parse_scene(format_scene(t.scene));
  REQUIRE(back.objects().size() == t.scene.objects().size());
  for (std::size_t i = 0; i < back.objects().size(); ++i) {
    CHECK(back.objects()[i] == t.scene.objects()[i]);
  }
  const std::string text = format_trace(t);
  CHECK(text.find("status ok") != std::string::npos);
  CHECK(text == format_trace(run_program(prog_bolyai(), bolyai_givens(diameter_x(), hyp::HPoint(0, 0.5),
                                                                      hyp::HPoint(0.6, 0)))));
}

}  // namespace
