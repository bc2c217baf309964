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

#include "postulatum/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <set>

namespace postulatum::render {
namespace {

using construct::NamedObject;

enum class Role { kGiven, kConstructed, kResult };

std::string_view role_name(Role r) {
  switch (r) {
    case Role::kGiven: return "given";
    case Role::kConstructed: return "constructed";
    case Role::kResult: return "result";
  }
  return "given";
}

std::string_view role_color(Role r) {
  switch (r) {
    case Role::kGiven: return "#000000";
    case Role::kConstructed: return "#1f77b4";
    case Role::kResult: return "#d62728";
  }
  return "#000000";
}

std::string num(double v) {
  if (std::abs(v) < 0.005) v = 0.0;  // no "-0.00"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(const Vec2& p) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }
  bool empty() const { return !(xmin <= xmax); }
};

// Liang-Barsky: the part of p + t d, t in [t0, t1], inside the box.
std::optional<std::pair<Vec2, Vec2>> clip(const Vec2& p, const Vec2& d, double t0, double t1,
                                          const Box& b) {
  const double qs[4][2] = {{-d.x, p.x - b.xmin}, {d.x, b.xmax - p.x},
                           {-d.y, p.y - b.ymin}, {d.y, b.ymax - p.y}};
  for (const auto& [pk, qk] : qs) {
    if (pk == 0.0) {
      if (qk < 0.0) return std::nullopt;
      continue;
    }
    const double t = qk / pk;
    if (pk < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  if (t0 > t1) return std::nullopt;
  return std::pair{p + d * t0, p + d * t1};
}

class Canvas {
 public:
  Canvas(const RenderStyle& style, Vec2 center, double side)
      : style_(style), center_(center), scale_(style.canvas / side) {}

  Vec2 map(const Vec2& w) const {
    const double half = style_.canvas / 2.0;
    return {half + (w.x - center_.x) * scale_, half - (w.y - center_.y) * scale_};
  }
  double scale() const { return scale_; }
  const RenderStyle& style() const { return style_; }

 private:
  RenderStyle style_;
  Vec2 center_;
  double scale_;
};

std::string stroke_attrs(const Canvas& c, Role role) {
  const double w =
      role == Role::kResult ? c.style().result_stroke_width : c.style().stroke_width;
  return " stroke=\"" + std::string(role_color(role)) + "\" stroke-width=\"" + num(w) + "\"";
}

std::string label(const Canvas& c, const Vec2& at_px, std::string_view name, Role role) {
  if (!c.style().labels) return "";
  return "<text x=\"" + num(at_px.x + 5.0) + "\" y=\"" + num(at_px.y - 5.0) +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + std::string(role_color(role)) +
         "\">" + escape(name) + "</text>";
}

std::string open_group(const NamedObject& o, std::string_view kind, Role role) {
  return "<g id=\"" + escape(o.name) + "\" class=\"" + std::string(kind) + " " +
         std::string(role_name(role)) + "\">";
}

// Labels sit `at` of the way along, off the midpoints where lines cross.
std::string segment_element(const Canvas& c, const NamedObject& o, std::string_view kind,
                            const Vec2& a, const Vec2& b, Role role, double at) {
  const Vec2 pa = c.map(a);
  const Vec2 pb = c.map(b);
  return open_group(o, kind, role) + "<line x1=\"" + num(pa.x) + "\" y1=\"" + num(pa.y) +
         "\" x2=\"" + num(pb.x) + "\" y2=\"" + num(pb.y) + "\"" + stroke_attrs(c, role) + "/>" +
         label(c, pa + (pb - pa) * at, o.name, role) + "</g>\n";
}

// Curves and straight objects; points are drawn in a second pass on top.
std::string draw_curve(const Canvas& c, const NamedObject& o, Role role, const Box& clip_box) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, eu::EuLine>) {
          const auto seg = clip(v.foot({0, 0}), v.direction(), -std::numeric_limits<double>::infinity(),
                                std::numeric_limits<double>::infinity(), clip_box);
          return seg ? segment_element(c, o, "line", seg->first, seg->second, role, 0.85) : "";
        } else if constexpr (std::is_same_v<T, eu::EuRay>) {
          const auto seg = clip(v.origin(), v.direction(), 0.0,
                                std::numeric_limits<double>::infinity(), clip_box);
          return seg ? segment_element(c, o, "ray", seg->first, seg->second, role, 0.75) : "";
        } else if constexpr (std::is_same_v<T, eu::EuSegment>) {
          return segment_element(c, o, "segment", v.start(), v.end(), role, 0.5);
        } else if constexpr (std::is_same_v<T, eu::EuCircle>) {
          const Vec2 pc = c.map(v.center());
          const double r = v.radius() * c.scale();
          const Vec2 tag = pc + Vec2{r, -r} * std::sqrt(0.5);
          return open_group(o, "circle", role) + "<circle cx=\"" + num(pc.x) + "\" cy=\"" +
                 num(pc.y) + "\" r=\"" + num(r) + "\" fill=\"none\"" + stroke_attrs(c, role) +
                 "/>" + label(c, tag, o.name, role) + "</g>\n";
        } else if constexpr (std::is_same_v<T, hyp::HChord>) {
          return segment_element(c, o, "line", v.first().vec(), v.second().vec(), role, 0.85);
        } else if constexpr (std::is_same_v<T, hyp::HRay>) {
          return segment_element(c, o, "ray", v.origin().vec(), v.toward().vec(), role, 0.75);
        } else if constexpr (std::is_same_v<T, hyp::HSegment>) {
          return segment_element(c, o, "segment", v.start().vec(), v.end().vec(), role, 0.5);
        } else {
          return "";
        }
      },
      o.value);
}

std::optional<Vec2> point_of(const NamedObject& o) {
  if (const auto* p = std::get_if<eu::EuPoint>(&o.value)) return *p;
  if (const auto* p = std::get_if<hyp::HPoint>(&o.value)) return p->vec();
  return std::nullopt;
}

std::string draw_point(const Canvas& c, const NamedObject& o, Role role) {
  const Vec2 pp = c.map(*point_of(o));
  return open_group(o, "point", role) + "<circle cx=\"" + num(pp.x) + "\" cy=\"" + num(pp.y) +
         "\" r=\"" + num(c.style().point_radius) + "\" fill=\"" + std::string(role_color(role)) +
         "\"/>" + label(c, pp, o.name, role) + "</g>\n";
}

// Finite extent of a Euclidean scene.
Box euclidean_extent(const construct::Scene& scene) {
  Box b;
  for (const NamedObject& o : scene.objects()) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, eu::EuPoint>) {
            b.add(v);
          } else if constexpr (std::is_same_v<T, eu::EuCircle>) {
            b.add(v.center() - Vec2{v.radius(), v.radius()});
            b.add(v.center() + Vec2{v.radius(), v.radius()});
          } else if constexpr (std::is_same_v<T, eu::EuSegment>) {
            b.add(v.start());
            b.add(v.end());
          } else if constexpr (std::is_same_v<T, eu::EuRay>) {
            b.add(v.origin());
          }
        },
        o.value);
  }
  if (b.empty()) {
    // Only lines: frame the feet of the origin.
    for (const NamedObject& o : scene.objects()) {
      if (const auto* l = std::get_if<eu::EuLine>(&o.value)) b.add(l->foot({0, 0}));
    }
  }
  return b;
}

bool drawable(const NamedObject& o) { return !std::holds_alternative<construct::Scalar>(o.value); }

std::string render(const construct::Scene& scene, const RenderStyle& style,
                   const std::set<std::string>& constructed,
                   const std::optional<std::string>& result) {
  if (style.canvas < 64) {
    throw GeometryError(ErrorKind::kDegenerateInput, "canvas must be at least 64 px");
  }
  if (std::none_of(scene.objects().begin(), scene.objects().end(), drawable)) {
    throw GeometryError(ErrorKind::kEmptyScene, "nothing to draw");
  }
  const bool klein = scene.model() == construct::Model::kKlein;

  Vec2 center{0, 0};
  double side = 2.1;  // unit disk plus a 5% rim
  Box clip_box;
  if (!klein) {
    const Box b = euclidean_extent(scene);
    const double w = b.xmax - b.xmin;
    const double h = b.ymax - b.ymin;
    double extent = std::max(w, h);
    if (extent <= 0.0) extent = 2.0;  // a single location
    const double margin = 0.1 * extent;
    center = {(b.xmin + b.xmax) / 2.0, (b.ymin + b.ymax) / 2.0};
    side = extent + 2.0 * margin;
    clip_box.add(center - Vec2{side / 2.0, side / 2.0});
    clip_box.add(center + Vec2{side / 2.0, side / 2.0});
  }
  const Canvas canvas(style, center, side);

  auto role_of = [&](const std::string& name) {
    if (result && name == *result) return Role::kResult;
    return constructed.count(name) ? Role::kConstructed : Role::kGiven;
  };

  const std::string size = std::to_string(style.canvas);
  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size +
         "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"#ffffff\"/>\n";
  if (klein && style.draw_disk) {
    const Vec2 o = canvas.map({0, 0});
    svg += "<circle id=\"disk\" cx=\"" + num(o.x) + "\" cy=\"" + num(o.y) + "\" r=\"" +
           num(canvas.scale()) + "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" +
           num(style.stroke_width) + "\"/>\n";
  }
  for (const NamedObject& o : scene.objects()) {
    if (!point_of(o)) svg += draw_curve(canvas, o, role_of(o.name), clip_box);
  }
  for (const NamedObject& o : scene.objects()) {
    if (point_of(o)) svg += draw_point(canvas, o, role_of(o.name));
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_svg(const construct::Scene& scene, const RenderStyle& style) {
  return render(scene, style, {}, std::nullopt);
}

std::string render_svg(const construct::Trace& trace, const RenderStyle& style) {
  std::set<std::string> constructed;
  for (const construct::StepRecord& s : trace.steps) {
    for (const NamedObject& o : s.outputs) constructed.insert(o.name);
  }
  return render(trace.scene, style, constructed, trace.result);
}

}  // namespace postulatum::render
