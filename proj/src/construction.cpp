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

#include "postulatum/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

namespace postulatum::construct {
namespace {

using Args = std::span<const Object>;
using OpFn = std::vector<Object> (*)(Args, const RunOptions&);

struct OpSpec {
  Model model;
  std::vector<Kind> inputs;
  std::vector<Kind> outputs;
  OpFn fn;
};

struct PredicateOutcome {
  bool passed;
  double margin;
};

using PredicateFn = PredicateOutcome (*)(Args, const RunOptions&);

struct PredicateSpec {
  Model model;
  std::vector<Kind> args;
  // Error kind recorded as the cause when the predicate fails.
  ErrorKind cause;
  PredicateFn fn;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
const T& arg(Args args, std::size_t i) {
  return std::get<T>(args[i]);
}

[[noreturn]] void fail(ErrorKind kind, const std::string& message) {
  throw GeometryError(kind, message);
}

std::vector<Object> two_points(const std::vector<eu::EuPoint>& pts, const char* what) {
  if (pts.size() != 2) fail(ErrorKind::kDegenerateInput, std::string(what) + " do not cross twice");
  return {pts[0], pts[1]};
}

PredicateOutcome outcome(double margin) { return {margin > 0.0, margin}; }

const std::map<std::string, OpSpec, std::less<>>& operations() {
  using K = Kind;
  static const std::map<std::string, OpSpec, std::less<>> ops = {
      // Euclidean plane.
      {"line_through",
       {Model::kEuclidean, {K::kPoint, K::kPoint}, {K::kLine},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {eu::line_through(arg<eu::EuPoint>(a, 0), arg<eu::EuPoint>(a, 1), o.eu_tolerance)};
        }}},
      {"circle_from",
       {Model::kEuclidean, {K::kPoint, K::kPoint}, {K::kCircle},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {eu::circle_from(arg<eu::EuPoint>(a, 0), arg<eu::EuPoint>(a, 1), o.eu_tolerance)};
        }}},
      // Compass transfer: center, then two points giving the radius.
      {"circle_radius",
       {Model::kEuclidean, {K::kPoint, K::kPoint, K::kPoint}, {K::kCircle},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          const double r = distance(arg<eu::EuPoint>(a, 1), arg<eu::EuPoint>(a, 2));
          return {eu::EuCircle(arg<eu::EuPoint>(a, 0), r, o.eu_tolerance)};
        }}},
      {"intersect_lines",
       {Model::kEuclidean, {K::kLine, K::kLine}, {K::kPoint},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          const auto x = eu::intersect_lines(arg<eu::EuLine>(a, 0), arg<eu::EuLine>(a, 1),
                                             o.eu_tolerance);
          if (!x.point) fail(ErrorKind::kDegenerateInput, "lines do not meet");
          return {*x.point};
        }}},
      {"intersect_line_circle",
       {Model::kEuclidean, {K::kLine, K::kCircle}, {K::kPoint, K::kPoint},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return two_points(eu::intersect_line_circle(arg<eu::EuLine>(a, 0),
                                                      arg<eu::EuCircle>(a, 1), o.eu_tolerance),
                            "line and circle");
        }}},
      {"intersect_circles",
       {Model::kEuclidean, {K::kCircle, K::kCircle}, {K::kPoint, K::kPoint},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return two_points(eu::intersect_circles(arg<eu::EuCircle>(a, 0),
                                                  arg<eu::EuCircle>(a, 1), o.eu_tolerance),
                            "circles");
        }}},
      {"ray_through",
       {Model::kEuclidean, {K::kPoint, K::kPoint}, {K::kRay},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {eu::ray_through(arg<eu::EuPoint>(a, 0), arg<eu::EuPoint>(a, 1), o.eu_tolerance)};
        }}},
      {"intersect_ray_circle",
       {Model::kEuclidean, {K::kRay, K::kCircle}, {K::kPoint},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {eu::intersect_ray_circle(arg<eu::EuRay>(a, 0), arg<eu::EuCircle>(a, 1),
                                           o.eu_tolerance)};
        }}},
      // Foot of the perpendicular from a point to a line.
      {"foot",
       {Model::kEuclidean, {K::kPoint, K::kLine}, {K::kPoint},
        [](Args a, const RunOptions&) -> std::vector<Object> {
          return {arg<eu::EuLine>(a, 1).foot(arg<eu::EuPoint>(a, 0))};
        }}},
      // Of two candidates, the one strictly on the other side of the line
      // from the reference point.
      {"opposite_side",
       {Model::kEuclidean, {K::kPoint, K::kPoint, K::kLine, K::kPoint}, {K::kPoint},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          const auto& line = arg<eu::EuLine>(a, 2);
          const double ref = line.signed_distance(arg<eu::EuPoint>(a, 3));
          const double tol = o.eu_tolerance.degenerate;
          if (std::abs(ref) <= tol) fail(ErrorKind::kDegenerateInput, "reference point on the line");
          std::vector<Object> picked;
          for (std::size_t i = 0; i < 2; ++i) {
            const double s = line.signed_distance(arg<eu::EuPoint>(a, i));
            if (std::abs(s) > tol && std::signbit(s) != std::signbit(ref)) {
              picked.push_back(arg<eu::EuPoint>(a, i));
            }
          }
          if (picked.size() != 1) fail(ErrorKind::kDegenerateInput, "no unique opposite candidate");
          return picked;
        }}},

      // Klein disk.
      {"h_line_through",
       {Model::kKlein, {K::kPoint, K::kPoint}, {K::kLine},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {hyp::h_line_through(arg<hyp::HPoint>(a, 0), arg<hyp::HPoint>(a, 1),
                                      o.hyp_tolerance)};
        }}},
      {"h_perpendicular",
       {Model::kKlein, {K::kPoint, K::kLine}, {K::kLine},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {hyp::h_perpendicular(arg<hyp::HPoint>(a, 0), arg<hyp::HChord>(a, 1),
                                       o.hyp_tolerance)};
        }}},
      {"intersect_chords",
       {Model::kKlein, {K::kLine, K::kLine}, {K::kPoint},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          const auto x = hyp::intersect_chords(arg<hyp::HChord>(a, 0), arg<hyp::HChord>(a, 1),
                                               o.hyp_tolerance);
          if (!x) fail(ErrorKind::kDegenerateInput, "chords do not meet inside the disk");
          return {*x};
        }}},
      {"h_distance",
       {Model::kKlein, {K::kPoint, K::kPoint}, {K::kScalar},
        [](Args a, const RunOptions&) -> std::vector<Object> {
          return {Scalar{hyp::h_distance(arg<hyp::HPoint>(a, 0), arg<hyp::HPoint>(a, 1))}};
        }}},
      {"h_segment",
       {Model::kKlein, {K::kPoint, K::kPoint}, {K::kSegment},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {hyp::HSegment(arg<hyp::HPoint>(a, 0), arg<hyp::HPoint>(a, 1), o.hyp_tolerance)};
        }}},
      // Center, radius, segment.
      {"solve_circle_segment",
       {Model::kKlein, {K::kPoint, K::kScalar, K::kSegment}, {K::kPoint},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {hyp::solve_circle_segment(arg<hyp::HPoint>(a, 0), arg<Scalar>(a, 1).value,
                                            arg<hyp::HSegment>(a, 2), o.hyp_tolerance)};
        }}},
      {"h_ray_through",
       {Model::kKlein, {K::kPoint, K::kPoint}, {K::kRay},
        [](Args a, const RunOptions& o) -> std::vector<Object> {
          return {hyp::h_ray_through(arg<hyp::HPoint>(a, 0), arg<hyp::HPoint>(a, 1),
                                     o.hyp_tolerance)};
        }}},
  };
  return ops;
}

const std::map<std::string, PredicateSpec, std::less<>>& predicates() {
  using K = Kind;
  static const std::map<std::string, PredicateSpec, std::less<>> preds = {
      {"point_off_line",
       {Model::kEuclidean, {K::kPoint, K::kLine}, ErrorKind::kPointOnLine,
        [](Args a, const RunOptions& o) {
          const double d = arg<eu::EuLine>(a, 1).signed_distance(arg<eu::EuPoint>(a, 0));
          return outcome(std::abs(d) - o.assertion_tolerance);
        }}},
      // The angle A-V-B is neither zero nor straight.
      {"proper_angle",
       {Model::kEuclidean, {K::kPoint, K::kPoint, K::kPoint}, ErrorKind::kDegenerateInput,
        [](Args a, const RunOptions& o) {
          const double t = eu::angle_at(arg<eu::EuPoint>(a, 0), arg<eu::EuPoint>(a, 1),
                                        arg<eu::EuPoint>(a, 2), o.eu_tolerance)
                               .radians;
          return outcome(std::min(t, std::numbers::pi - t) - o.assertion_tolerance);
        }}},
      {"angles_equal",
       {Model::kEuclidean,
        {K::kPoint, K::kPoint, K::kPoint, K::kPoint, K::kPoint, K::kPoint},
        ErrorKind::kAssertionFailed,
        [](Args a, const RunOptions& o) {
          const auto& t = o.eu_tolerance;
          const double first = eu::angle_at(arg<eu::EuPoint>(a, 0), arg<eu::EuPoint>(a, 1),
                                            arg<eu::EuPoint>(a, 2), t)
                                   .radians;
          const double second = eu::angle_at(arg<eu::EuPoint>(a, 3), arg<eu::EuPoint>(a, 4),
                                             arg<eu::EuPoint>(a, 5), t)
                                    .radians;
          return outcome(o.assertion_tolerance - std::abs(first - second));
        }}},
      // P_{b,c}(a): args b, a, c.
      {"alternate_angles_equal",
       {Model::kEuclidean, {K::kLine, K::kLine, K::kLine}, ErrorKind::kAssertionFailed,
        [](Args a, const RunOptions& o) {
          const auto alt = eu::alternate_angles(arg<eu::EuLine>(a, 0), arg<eu::EuLine>(a, 1),
                                                arg<eu::EuLine>(a, 2), o.eu_tolerance);
          return outcome(o.assertion_tolerance - std::abs(alt.first.radians - alt.second.radians));
        }}},
      {"parallel",
       {Model::kEuclidean, {K::kLine, K::kLine}, ErrorKind::kAssertionFailed,
        [](Args a, const RunOptions& o) {
          const auto& l1 = arg<eu::EuLine>(a, 0);
          const auto& l2 = arg<eu::EuLine>(a, 1);
          if (eu::is_parallel(l1, l2, o.eu_tolerance)) {
            const double aligned = dot(l1.normal(), l2.normal()) >= 0.0 ? l2.offset() : -l2.offset();
            return PredicateOutcome{true, std::abs(l1.offset() - aligned)};
          }
          return PredicateOutcome{false, -std::abs(cross(l1.normal(), l2.normal()))};
        }}},

      {"off_chord",
       {Model::kKlein, {K::kPoint, K::kLine}, ErrorKind::kDegenerateScene,
        [](Args a, const RunOptions& o) {
          const double d = arg<hyp::HChord>(a, 1).offset_of(arg<hyp::HPoint>(a, 0).vec());
          return outcome(std::abs(d) - o.hyp_tolerance.residual);
        }}},
      {"on_chord",
       {Model::kKlein, {K::kPoint, K::kLine}, ErrorKind::kDegenerateScene,
        [](Args a, const RunOptions& o) {
          const double d = arg<hyp::HChord>(a, 1).offset_of(arg<hyp::HPoint>(a, 0).vec());
          const double margin = o.hyp_tolerance.residual - std::abs(d);
          return PredicateOutcome{margin >= 0.0, margin};
        }}},
      {"distinct",
       {Model::kKlein, {K::kPoint, K::kPoint}, ErrorKind::kDegenerateScene,
        [](Args a, const RunOptions& o) {
          return outcome(hyp::h_distance(arg<hyp::HPoint>(a, 0), arg<hyp::HPoint>(a, 1)) -
                         o.assertion_tolerance);
        }}},
      // Center, inner point, outer point, radius: the inner point is inside
      // the circle and the outer point outside.
      {"ecp_hypothesis",
       {Model::kKlein, {K::kPoint, K::kPoint, K::kPoint, K::kScalar}, ErrorKind::kNoSignChange,
        [](Args a, const RunOptions& o) {
          const auto& center = arg<hyp::HPoint>(a, 0);
          const double radius = arg<Scalar>(a, 3).value;
          const double inner = hyp::h_distance(center, arg<hyp::HPoint>(a, 1));
          const double outer = hyp::h_distance(center, arg<hyp::HPoint>(a, 2));
          return outcome(std::min(radius - inner, outer - radius) - o.assertion_tolerance);
        }}},
  };
  return preds;
}

void check_kinds(const std::vector<Kind>& expected, const std::vector<Kind>& actual,
                 const std::string& what) {
  if (expected.size() != actual.size()) {
    fail(ErrorKind::kKindMismatch, what + " takes " + std::to_string(expected.size()) +
                                       " arguments, got " + std::to_string(actual.size()));
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] != actual[i]) {
      fail(ErrorKind::kKindMismatch, what + " argument " + std::to_string(i + 1) + " must be a " +
                                         std::string(to_string(expected[i])) + ", got a " +
                                         std::string(to_string(actual[i])));
    }
  }
}

// Static checker shared by ProgramBuilder and validate(): tracks the kind of
// every name in scope.
class ScopeChecker {
 public:
  explicit ScopeChecker(Model model) : model_(model) {}

  void declare(const std::string& name, Kind kind) {
    if (!scope_.emplace(name, kind).second) {
      fail(ErrorKind::kDegenerateInput, "name " + name + " is defined twice");
    }
  }

  Kind lookup(const std::string& name) const {
    const auto it = scope_.find(name);
    if (it == scope_.end()) {
      fail(ErrorKind::kUnresolvedReference, "reference to undefined name " + name);
    }
    return it->second;
  }

  bool contains(const std::string& name) const { return scope_.count(name) != 0; }

  void step(const ConstructionStep& s) {
    if (s.op != kCheckOp) {
      const auto it = operations().find(s.op);
      if (it == operations().end()) fail(ErrorKind::kUnresolvedReference, "unknown operation " + s.op);
      const OpSpec& spec = it->second;
      if (spec.model != model_) {
        fail(ErrorKind::kKindMismatch, "operation " + s.op + " belongs to the " +
                                           std::string(to_string(spec.model)) + " model");
      }
      std::vector<Kind> kinds;
      for (const auto& in : s.inputs) kinds.push_back(lookup(in));
      check_kinds(spec.inputs, kinds, s.op);
      if (s.outputs.size() != spec.outputs.size()) {
        fail(ErrorKind::kKindMismatch, s.op + " produces " + std::to_string(spec.outputs.size()) +
                                           " outputs");
      }
      for (std::size_t i = 0; i < s.outputs.size(); ++i) declare(s.outputs[i], spec.outputs[i]);
    } else if (!s.inputs.empty() || !s.outputs.empty() || !s.assertion) {
      fail(ErrorKind::kKindMismatch, "a check step carries only an assertion");
    }
    if (s.assertion) {
      const auto it = predicates().find(s.assertion->predicate);
      if (it == predicates().end()) {
        fail(ErrorKind::kUnresolvedReference, "unknown predicate " + s.assertion->predicate);
      }
      if (it->second.model != model_) {
        fail(ErrorKind::kKindMismatch, "predicate " + s.assertion->predicate +
                                           " belongs to the other model");
      }
      std::vector<Kind> kinds;
      for (const auto& in : s.assertion->args) kinds.push_back(lookup(in));
      check_kinds(it->second.args, kinds, s.assertion->predicate);
    }
  }

 private:
  Model model_;
  std::map<std::string, Kind> scope_;
};

std::vector<Object> gather(const Scene& scene, const std::vector<std::string>& names) {
  std::vector<Object> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(*scene.find(n));
  return out;
}

AssertionRecord evaluate(const Assertion& assertion, const std::vector<Object>& args,
                         const RunOptions& options) {
  const PredicateSpec& spec = predicates().find(assertion.predicate)->second;
  const PredicateOutcome out = spec.fn(args, options);
  return {assertion.predicate, out.passed, out.margin};
}

std::string join(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

}  // namespace

std::string_view to_string(Model model) {
  return model == Model::kEuclidean ? "euclidean" : "klein";
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::kPoint: return "point";
    case Kind::kLine: return "line";
    case Kind::kCircle: return "circle";
    case Kind::kRay: return "ray";
    case Kind::kSegment: return "segment";
    case Kind::kScalar: return "scalar";
  }
  return "unknown";
}

Kind kind_of(const Object& obj) {
  return std::visit(
      Overloaded{
          [](const eu::EuPoint&) { return Kind::kPoint; },
          [](const hyp::HPoint&) { return Kind::kPoint; },
          [](const eu::EuLine&) { return Kind::kLine; },
          [](const hyp::HChord&) { return Kind::kLine; },
          [](const eu::EuCircle&) { return Kind::kCircle; },
          [](const eu::EuRay&) { return Kind::kRay; },
          [](const hyp::HRay&) { return Kind::kRay; },
          [](const eu::EuSegment&) { return Kind::kSegment; },
          [](const hyp::HSegment&) { return Kind::kSegment; },
          [](const Scalar&) { return Kind::kScalar; },
      },
      obj);
}

bool belongs_to(const Object& obj, Model model) {
  if (std::holds_alternative<Scalar>(obj)) return true;
  const bool klein = std::holds_alternative<hyp::HPoint>(obj) ||
                     std::holds_alternative<hyp::HChord>(obj) ||
                     std::holds_alternative<hyp::HRay>(obj) ||
                     std::holds_alternative<hyp::HSegment>(obj);
  return klein == (model == Model::kKlein);
}

void Scene::add(std::string name, Object value) {
  if (!belongs_to(value, model_)) {
    throw GeometryError(ErrorKind::kKindMismatch,
                        "object " + name + " does not belong to the " +
                            std::string(to_string(model_)) + " model");
  }
  if (index_.count(name) != 0) {
    throw GeometryError(ErrorKind::kDegenerateInput, "duplicate object name " + name);
  }
  index_.emplace(name, objects_.size());
  objects_.push_back({std::move(name), std::move(value)});
}

const Object* Scene::find(std::string_view name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? nullptr : &objects_[it->second].value;
}

ProgramBuilder::ProgramBuilder(std::string name, Model model) {
  program_.name = std::move(name);
  program_.model = model;
}

ProgramBuilder& ProgramBuilder::given(std::string name, Kind kind) {
  program_.givens.push_back({std::move(name), kind});
  validate(program_);
  return *this;
}

ProgramBuilder& ProgramBuilder::step(std::string op, std::vector<std::string> inputs,
                                     std::vector<std::string> outputs,
                                     std::optional<Assertion> assertion) {
  program_.steps.push_back({std::move(op), std::move(inputs), std::move(outputs),
                            std::move(assertion)});
  try {
    validate(program_);
  } catch (...) {
    program_.steps.pop_back();
    throw;
  }
  return *this;
}

ProgramBuilder& ProgramBuilder::check(std::string predicate, std::vector<std::string> args) {
  return step(std::string(kCheckOp), {}, {}, Assertion{std::move(predicate), std::move(args)});
}

std::map<std::string, std::string> ProgramBuilder::inline_program(
    const ConstructionProgram& sub, const std::map<std::string, std::string>& bindings,
    const std::string& prefix) {
  if (sub.model != program_.model) {
    throw GeometryError(ErrorKind::kKindMismatch, "cannot inline a program of the other model");
  }
  std::map<std::string, std::string> rename;
  for (const Given& g : sub.givens) {
    const auto it = bindings.find(g.name);
    if (it == bindings.end()) {
      throw GeometryError(ErrorKind::kUnresolvedReference, "unbound given " + g.name);
    }
    rename[g.name] = it->second;
  }
  auto mapped = [&](const std::string& n) {
    const auto it = rename.find(n);
    return it != rename.end() ? it->second : prefix + n;
  };
  std::map<std::string, std::string> outputs;
  for (const ConstructionStep& s : sub.steps) {
    ConstructionStep copy = s;
    for (auto& n : copy.inputs) n = mapped(n);
    for (auto& n : copy.outputs) {
      outputs[n] = prefix + n;
      rename[n] = prefix + n;
      n = prefix + n;
    }
    if (copy.assertion) {
      for (auto& n : copy.assertion->args) n = mapped(n);
    }
    step(copy.op, copy.inputs, copy.outputs, copy.assertion);
  }
  return outputs;
}

ConstructionProgram ProgramBuilder::build(std::optional<std::string> result) {
  program_.result = std::move(result);
  validate(program_);
  return program_;
}

void validate(const ConstructionProgram& program) {
  ScopeChecker scope(program.model);
  for (const Given& g : program.givens) scope.declare(g.name, g.kind);
  for (const ConstructionStep& s : program.steps) scope.step(s);
  if (program.result && !scope.contains(*program.result)) {
    throw GeometryError(ErrorKind::kUnresolvedReference, "result " + *program.result +
                                                             " is never defined");
  }
}

Trace run_program(const ConstructionProgram& program, const Scene& givens,
                  const RunOptions& options) {
  validate(program);
  if (givens.model() != program.model) {
    throw GeometryError(ErrorKind::kKindMismatch,
                        "program " + program.name + " needs a " +
                            std::string(to_string(program.model)) + " scene");
  }
  Trace trace;
  trace.program = program.name;
  trace.model = program.model;
  trace.scene = Scene(program.model);
  for (const Given& g : program.givens) {
    const Object* obj = givens.find(g.name);
    if (obj == nullptr) {
      throw GeometryError(ErrorKind::kUnresolvedReference, "scene lacks given " + g.name);
    }
    if (kind_of(*obj) != g.kind) {
      throw GeometryError(ErrorKind::kKindMismatch,
                          "given " + g.name + " must be a " + std::string(to_string(g.kind)));
    }
    trace.scene.add(g.name, *obj);
  }

  for (std::size_t i = 0; i < program.steps.size(); ++i) {
    const ConstructionStep& step = program.steps[i];
    StepRecord rec;
    rec.index = i;
    rec.op = step.op;
    const std::vector<Object> inputs = gather(trace.scene, step.inputs);
    for (std::size_t k = 0; k < inputs.size(); ++k) rec.inputs.push_back({step.inputs[k], inputs[k]});

    if (step.op != kCheckOp) {
      try {
        const std::vector<Object> out = operations().find(step.op)->second.fn(inputs, options);
        for (std::size_t k = 0; k < out.size(); ++k) {
          rec.outputs.push_back({step.outputs[k], out[k]});
          trace.scene.add(step.outputs[k], out[k]);
        }
      } catch (const GeometryError& e) {
        trace.failure = TraceFailure{i, ErrorKind::kStepFailed, e.kind(),
                                     step.op + "(" + join(step.inputs) + "): " + e.what()};
        trace.steps.push_back(std::move(rec));
        return trace;
      }
    }

    if (step.assertion) {
      const Assertion& a = *step.assertion;
      try {
        rec.assertion = evaluate(a, gather(trace.scene, a.args), options);
        if (!rec.assertion->passed) {
          trace.failure = TraceFailure{i, ErrorKind::kAssertionFailed,
                                       predicates().find(a.predicate)->second.cause,
                                       a.predicate + "(" + join(a.args) + ") failed"};
        }
      } catch (const GeometryError& e) {
        rec.assertion = AssertionRecord{a.predicate, false, 0.0};
        trace.failure = TraceFailure{i, ErrorKind::kAssertionFailed, e.kind(),
                                     a.predicate + "(" + join(a.args) + "): " + e.what()};
      }
    }
    trace.steps.push_back(std::move(rec));
    if (trace.failure) return trace;
  }
  trace.result = program.result;
  return trace;
}

bool replay_matches(const Trace& trace, const RunOptions& options) {
  for (const StepRecord& rec : trace.steps) {
    if (rec.op != kCheckOp && !rec.outputs.empty()) {
      std::vector<Object> inputs;
      for (const auto& in : rec.inputs) inputs.push_back(in.value);
      const std::vector<Object> out = operations().find(rec.op)->second.fn(inputs, options);
      if (out.size() != rec.outputs.size()) return false;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (!(out[k] == rec.outputs[k].value)) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> known_operations() {
  std::vector<std::string> names;
  for (const auto& [name, spec] : operations()) names.push_back(name);
  return names;
}

std::vector<std::string> known_predicates() {
  std::vector<std::string> names;
  for (const auto& [name, spec] : predicates()) names.push_back(name);
  return names;
}

ConstructionProgram prog_copy_angle() {
  ProgramBuilder b("copy_angle", Model::kEuclidean);
  b.given("O", Kind::kPoint)
      .given("T", Kind::kPoint)
      .given("A", Kind::kPoint)
      .given("V", Kind::kPoint)
      .given("B", Kind::kPoint)
      .check("proper_angle", {"A", "V", "B"})
      // Mark |VA| on both arms of the model angle.
      .step("circle_from", {"V", "A"}, {"c_model"})
      .step("ray_through", {"V", "B"}, {"arm_b"})
      .step("intersect_ray_circle", {"arm_b", "c_model"}, {"B1"})
      // Same radius on the target ray, then the chord length |A B1| from there.
      .step("ray_through", {"O", "T"}, {"target"})
      .step("circle_radius", {"O", "V", "A"}, {"c_target"})
      .step("intersect_ray_circle", {"target", "c_target"}, {"A2"})
      .step("circle_radius", {"A2", "A", "B1"}, {"c_chord"})
      .step("intersect_circles", {"c_target", "c_chord"}, {"B2", "B2_alt"})
      .step("ray_through", {"O", "B2"}, {"result"},
            Assertion{"angles_equal", {"A2", "O", "B2", "A", "V", "B"}});
  return b.build("result");
}

ConstructionProgram prog_parallel_i31() {
  ProgramBuilder b("parallel_i31", Model::kEuclidean);
  b.given("b", Kind::kLine)
      .given("A", Kind::kPoint)
      .check("point_off_line", {"A", "b"})
      .step("foot", {"A", "b"}, {"D"})
      .step("line_through", {"A", "D"}, {"c"})
      .step("circle_from", {"D", "A"}, {"c_D"})
      .step("intersect_line_circle", {"b", "c_D"}, {"E", "E_alt"});
  // Copy the angle E-D-A to the ray from A toward D.
  const auto copied =
      b.inline_program(prog_copy_angle(), {{"O", "A"}, {"T", "D"}, {"A", "E"}, {"V", "D"}, {"B", "A"}},
                       "i23.");
  b.step("opposite_side", {copied.at("B2"), copied.at("B2_alt"), "c", "E"}, {"F"})
      .step("line_through", {"A", "F"}, {"a"}, Assertion{"alternate_angles_equal", {"b", "a", "c"}})
      .check("parallel", {"a", "b"});
  return b.build("a");
}

ConstructionProgram prog_bolyai() {
  ProgramBuilder b("bolyai", Model::kKlein);
  b.given("a", Kind::kLine)
      .given("P", Kind::kPoint)
      .given("R", Kind::kPoint)
      .check("off_chord", {"P", "a"})
      .check("on_chord", {"R", "a"})
      .step("h_perpendicular", {"P", "a"}, {"PQ"})
      .step("intersect_chords", {"PQ", "a"}, {"Q"})
      .check("distinct", {"R", "Q"})
      .step("h_perpendicular", {"P", "PQ"}, {"m"})
      .step("h_perpendicular", {"R", "m"}, {"RS_line"})
      .step("intersect_chords", {"RS_line", "m"}, {"S"})
      .step("h_distance", {"Q", "R"}, {"QR"})
      .step("h_segment", {"R", "S"}, {"RS"})
      // S inside and R outside the circle (P, QR).
      .check("ecp_hypothesis", {"P", "S", "R", "QR"})
      .step("solve_circle_segment", {"P", "QR", "RS"}, {"X"})
      .step("h_ray_through", {"P", "X"}, {"result"});
  return b.build("result");
}

BolyaiScene bolyai_scene(const Trace& trace) {
  if (!trace.ok() || trace.program != "bolyai") {
    throw GeometryError(ErrorKind::kStepFailed, "not a completed Bolyai trace");
  }
  const Scene& s = trace.scene;
  return {s.get<hyp::HChord>("a"), s.get<hyp::HPoint>("P"), s.get<hyp::HPoint>("Q"),
          s.get<hyp::HChord>("m"), s.get<hyp::HPoint>("R"), s.get<hyp::HPoint>("S"),
          s.get<hyp::HPoint>("X"), s.get<hyp::HRay>("result")};
}

}  // namespace postulatum::construct
