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

// SVG 1.1 figures of scenes and traces.
//
// Klein scenes map the unit disk onto the canvas; Euclidean scenes are
// fitted to the bounding box of their finite objects with a 10% margin, and
// lines and rays are clipped to that box. Every object becomes a <g> whose
// id is its name. Scalars are not drawn. Output is byte-stable.

#pragma once

#include <string>

#include "postulatum/construction.hpp"

namespace postulatum::render {

struct RenderStyle {
  int canvas = 512;  // pixels, square; at least 64
  double stroke_width = 1.5;
  double result_stroke_width = 2.5;
  double point_radius = 3.0;
  bool draw_disk = true;  // Klein boundary circle
  bool labels = true;
};

// Throws EmptyScene for a scene with nothing drawable and DegenerateInput
// for a canvas below 64 px.
std::string render_svg(const construct::Scene& scene, const RenderStyle& style = {});

// The trace's scene, with givens, constructed objects and the result
// styled apart.
std::string render_svg(const construct::Trace& trace, const RenderStyle& style = {});

}  // namespace postulatum::render
