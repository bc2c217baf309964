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

// Line-oriented scene and trace text.
//
//   model euclidean|klein
//   point <name> <x> <y>
//   line <name> <nx> <ny> <d>            (euclidean; nx*x + ny*y = d)
//   chord <name> <x1> <y1> <x2> <y2>     (klein; ideal endpoints)
//
// Traces also use `circle <name> <cx> <cy> <r>`, `ray <name> <ox> <oy> <u>
// <v>` (direction, or the ideal point for klein), `segment <name> <x1> <y1>
// <x2> <y2>` and `scalar <name> <value>`, which the parser accepts too.
// Blank lines and `#` comments are ignored. `model` must precede objects and
// defaults to euclidean.

#pragma once

#include <string>
#include <string_view>

#include "postulatum/construction.hpp"

namespace postulatum::construct {

// Throws GeometryError(ParseError) naming the line on any malformed input,
// and propagates kernel validation errors (e.g. a point outside the disk)
// as ParseError too.
Scene parse_scene(std::string_view text);

// One object line, numbers printed with round-trip precision.
std::string format_object(const NamedObject& obj);

std::string format_scene(const Scene& scene);

// Deterministic text record of a trace.
std::string format_trace(const Trace& trace);

// Round-trip formatting of a double.
std::string format_number(double v);

}  // namespace postulatum::construct
