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

#include "postulatum/scene_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace postulatum::construct {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& reason) {
  throw GeometryError(ErrorKind::kParseError, "line " + std::to_string(line_no) + ": " + reason);
}

double parse_number(std::string_view word, std::size_t line_no) {
  // from_chars rejects a leading '+', which decimal notation allows.
  if (!word.empty() && word.front() == '+') word.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size() || !std::isfinite(value)) {
    parse_fail(line_no, "bad number '" + std::string(word) + "'");
  }
  return value;
}

std::string join_names(const std::vector<NamedObject>& objs) {
  std::string s;
  for (const auto& o : objs) s += " " + o.name;
  return s;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Scene parse_scene(std::string_view text) {
  Scene scene(Model::kEuclidean);
  bool saw_object = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto w = split_words(line);
    if (w.empty()) continue;

    const std::string_view directive = w[0];
    if (directive == "model") {
      if (w.size() != 2) parse_fail(line_no, "model takes one argument");
      if (saw_object) parse_fail(line_no, "model must come before any object");
      if (w[1] == "euclidean") {
        scene = Scene(Model::kEuclidean);
      } else if (w[1] == "klein") {
        scene = Scene(Model::kKlein);
      } else {
        parse_fail(line_no, "unknown model '" + std::string(w[1]) + "'");
      }
      continue;
    }

    auto expect = [&](std::size_t numbers) {
      if (w.size() != numbers + 2) {
        parse_fail(line_no, std::string(directive) + " takes a name and " +
                                std::to_string(numbers) + " numbers");
      }
    };
    auto num = [&](std::size_t i) { return parse_number(w[i], line_no); };
    const bool klein = scene.model() == Model::kKlein;

    try {
      Object obj;
      if (directive == "point") {
        expect(2);
        if (klein) {
          obj = hyp::HPoint(num(2), num(3));
        } else {
          obj = eu::EuPoint{num(2), num(3)};
        }
      } else if (directive == "line") {
        expect(3);
        if (klein) parse_fail(line_no, "line objects belong to the euclidean model; use chord");
        obj = eu::EuLine::from_normal({num(2), num(3)}, num(4));
      } else if (directive == "chord") {
        expect(4);
        if (!klein) parse_fail(line_no, "chord objects belong to the klein model");
        obj = hyp::HChord(hyp::IdealPoint(num(2), num(3)), hyp::IdealPoint(num(4), num(5)));
      } else if (directive == "circle") {
        expect(3);
        if (klein) parse_fail(line_no, "circle objects belong to the euclidean model");
        obj = eu::EuCircle({num(2), num(3)}, num(4));
      } else if (directive == "ray") {
        expect(4);
        if (klein) {
          obj = hyp::HRay(hyp::HPoint(num(2), num(3)), hyp::IdealPoint(num(4), num(5)));
        } else {
          obj = eu::EuRay({num(2), num(3)}, {num(4), num(5)});
        }
      } else if (directive == "segment") {
        expect(4);
        if (klein) {
          obj = hyp::HSegment(hyp::HPoint(num(2), num(3)), hyp::HPoint(num(4), num(5)));
        } else {
          obj = eu::EuSegment({num(2), num(3)}, {num(4), num(5)});
        }
      } else if (directive == "scalar") {
        expect(1);
        obj = Scalar{num(2)};
      } else {
        parse_fail(line_no, "unknown directive '" + std::string(directive) + "'");
      }
      scene.add(std::string(w[1]), std::move(obj));
    } catch (const GeometryError& e) {
      if (e.kind() == ErrorKind::kParseError) throw;
      parse_fail(line_no, e.what());
    }
    saw_object = true;
  }
  return scene;
}

std::string format_object(const NamedObject& obj) {
  const std::string& n = obj.name;
  auto f = [](double v) { return " " + format_number(v); };
  auto v2 = [&](const Vec2& p) { return f(p.x) + f(p.y); };
  return std::visit(
      [&](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, eu::EuPoint>) {
          return "point " + n + v2(o);
        } else if constexpr (std::is_same_v<T, hyp::HPoint>) {
          return "point " + n + v2(o.vec());
        } else if constexpr (std::is_same_v<T, eu::EuLine>) {
          return "line " + n + v2(o.normal()) + f(o.offset());
        } else if constexpr (std::is_same_v<T, hyp::HChord>) {
          return "chord " + n + v2(o.first().vec()) + v2(o.second().vec());
        } else if constexpr (std::is_same_v<T, eu::EuCircle>) {
          return "circle " + n + v2(o.center()) + f(o.radius());
        } else if constexpr (std::is_same_v<T, eu::EuRay>) {
          return "ray " + n + v2(o.origin()) + v2(o.direction());
        } else if constexpr (std::is_same_v<T, hyp::HRay>) {
          return "ray " + n + v2(o.origin().vec()) + v2(o.toward().vec());
        } else if constexpr (std::is_same_v<T, eu::EuSegment>) {
          return "segment " + n + v2(o.start()) + v2(o.end());
        } else if constexpr (std::is_same_v<T, hyp::HSegment>) {
          return "segment " + n + v2(o.start().vec()) + v2(o.end().vec());
        } else {
          return "scalar " + n + f(o.value);
        }
      },
      obj.value);
}

std::string format_scene(const Scene& scene) {
  std::string out = "model " + std::string(to_string(scene.model())) + "\n";
  for (const NamedObject& o : scene.objects()) out += format_object(o) + "\n";
  return out;
}

std::string format_trace(const Trace& trace) {
  std::ostringstream out;
  out << "program " << trace.program << "\n";
  out << "model " << to_string(trace.model) << "\n";
  for (const StepRecord& s : trace.steps) {
    out << "step " << s.index << " " << s.op << join_names(s.inputs);
    if (!s.outputs.empty()) out << " ->" << join_names(s.outputs);
    out << "\n";
    for (const NamedObject& o : s.outputs) out << "  " << format_object(o) << "\n";
    if (s.assertion) {
      out << "  assert " << s.assertion->predicate << " "
          << (s.assertion->passed ? "pass" : "fail")
          << " margin=" << format_number(s.assertion->margin) << "\n";
    }
  }
  out << "steps " << trace.step_count() << "\n";
  out << "result " << (trace.result ? *trace.result : "none") << "\n";
  if (trace.ok()) {
    out << "status ok\n";
  } else {
    const TraceFailure& f = *trace.failure;
    out << "status failed step=" << f.step << " kind=" << to_string(f.kind)
        << " cause=" << to_string(f.cause) << "\n";
    out << "message " << f.message << "\n";
  }
  return out.str();
}

}  // namespace postulatum::construct
