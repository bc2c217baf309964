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

#include <string>

#include "doctest.h"
#include "postulatum/render.hpp"
#include "postulatum/scene_io.hpp"
#include "test_support.hpp"

namespace {

using namespace postulatum;
using namespace postulatum::construct;
using render::render_svg;
using render::RenderStyle;

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

ErrorKind kind_of_error(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("expected a GeometryError");
  return ErrorKind::kParseError;
}

}  // namespace

TEST_CASE("nothing to draw is an EmptyScene") {
  CHECK(kind_of_error([] { render_svg(Scene(Model::kEuclidean)); }) == ErrorKind::kEmptyScene);
  Scene only_scalar(Model::kKlein);
  only_scalar.add("d", Scalar{1.0});
  CHECK(kind_of_error([&] { render_svg(only_scalar); }) == ErrorKind::kEmptyScene);
}

TEST_CASE("canvas below 64 px is rejected") {
  Scene s(Model::kEuclidean);
  s.add("A", eu::EuPoint{0, 0});
  RenderStyle style;
  style.canvas = 63;
  CHECK(kind_of_error([&] { render_svg(s, style); }) == ErrorKind::kDegenerateInput);
  style.canvas = 64;
  CHECK_NOTHROW(render_svg(s, style));
}

TEST_CASE("a single point is one marker, byte-stable") {
  Scene s(Model::kEuclidean);
  s.add("A", eu::EuPoint{2, 3});
  const std::string svg = render_svg(s);
  CHECK(svg == render_svg(s));
  CHECK(count(svg, "<circle") == 1);
  // Centered on the canvas.
  CHECK(svg.find("cx=\"256.00\" cy=\"256.00\"") != std::string::npos);
  CHECK(svg.find(">A</text>") != std::string::npos);
}

TEST_CASE("euclidean scenes fit their extent with a 10% margin") {
  Scene s(Model::kEuclidean);
  s.add("A", eu::EuPoint{0, 0});
  s.add("B", eu::EuPoint{10, 0});
  s.add("b", eu::line_through({0, 0}, {10, 0}));
  const std::string svg = render_svg(s);
  // Side 12 world units over 512 px: x = 0 -> 42.67, x = 10 -> 469.33.
  CHECK(svg.find("cx=\"42.67\" cy=\"256.00\"") != std::string::npos);
  CHECK(svg.find("cx=\"469.33\" cy=\"256.00\"") != std::string::npos);
  // The line is clipped to the full frame.
  CHECK(svg.find("x1=\"512.00\" y1=\"256.00\" x2=\"0.00\" y2=\"256.00\"") != std::string::npos);
  CHECK(svg.find("id=\"disk\"") == std::string::npos);
}

TEST_CASE("klein scenes include the unit circle") {
  Scene s(Model::kKlein);
  s.add("P", hyp::HPoint(0, 0.5));
  const std::string svg = render_svg(s);
  CHECK(svg.find("<circle id=\"disk\" cx=\"256.00\" cy=\"256.00\" r=\"243.81\"") != std::string::npos);
  RenderStyle bare;
  bare.draw_disk = false;
  bare.labels = false;
  const std::string plain = render_svg(s, bare);
  CHECK(plain.find("id=\"disk\"") == std::string::npos);
  CHECK(plain.find("<text") == std::string::npos);
}

TEST_CASE("the Bolyai trace matches the golden figure") {
  const Scene givens = parse_scene(testing::read_file(testing::data_path("scenes/bolyai_diameter.scene")));
  const Trace t = run_program(prog_bolyai(), givens);
  REQUIRE(t.ok());
  const std::string svg = render_svg(t);
  CHECK(svg == testing::read_file(testing::golden_path("bolyai_diameter.svg")));
  for (const char* id : {"disk", "a", "m", "RS", "result", "P", "Q", "R", "S", "X"}) {
    CHECK(svg.find("id=\"" + std::string(id) + "\"") != std::string::npos);
  }
  for (const char* name : {">P<", ">Q<", ">R<", ">S<", ">X<"}) CHECK(svg.find(name) != std::string::npos);
  CHECK(svg.find("class=\"ray result\"") != std::string::npos);
  CHECK(format_trace(t) == testing::read_file(testing::golden_path("bolyai_diameter.trace")));
}
