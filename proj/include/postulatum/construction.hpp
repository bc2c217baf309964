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

// A small interpreter for straightedge-and-compass programs over either
// kernel, and the shipped programs built with it.
//
// A program is an ordered list of steps. Each step applies one primitive
// operation to named objects and binds its outputs to new names; a step may
// also carry an assertion that is checked after it runs. Every input must
// name a given or an output of an earlier step, which ProgramBuilder checks
// when the program is assembled.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "postulatum/error.hpp"
#include "postulatum/euclidean.hpp"
#include "postulatum/hyperbolic.hpp"

namespace postulatum::construct {

enum class Model { kEuclidean, kKlein };

std::string_view to_string(Model model);

// A real-valued intermediate such as a hyperbolic length.
struct Scalar {
  double value = 0.0;
  bool operator==(const Scalar&) const = default;
};

using Object = std::variant<eu::EuPoint, eu::EuLine, eu::EuCircle, eu::EuRay, eu::EuSegment,
                            hyp::HPoint, hyp::HChord, hyp::HRay, hyp::HSegment, Scalar>;

// Kind names are model-independent: a Klein chord is a "line".
enum class Kind { kPoint, kLine, kCircle, kRay, kSegment, kScalar };

std::string_view to_string(Kind kind);
Kind kind_of(const Object& obj);
// Scalars belong to both models.
bool belongs_to(const Object& obj, Model model);

struct NamedObject {
  std::string name;
  Object value;
  bool operator==(const NamedObject&) const = default;
};

// Named objects of one model, kept in insertion order.
class Scene {
 public:
  explicit Scene(Model model = Model::kEuclidean) : model_(model) {}

  Model model() const { return model_; }

  // Throws KindMismatch if the object is from the other model and
  // DegenerateInput if the name is taken.
  void add(std::string name, Object value);

  const Object* find(std::string_view name) const;
  const std::vector<NamedObject>& objects() const { return objects_; }
  bool empty() const { return objects_.empty(); }

  template <class T>
  const T& get(std::string_view name) const {
    const Object* obj = find(name);
    if (obj == nullptr) {
      throw GeometryError(ErrorKind::kUnresolvedReference, "no object named " + std::string(name));
    }
    const T* typed = std::get_if<T>(obj);
    if (typed == nullptr) {
      throw GeometryError(ErrorKind::kKindMismatch, "object " + std::string(name) +
                                                        " has kind " +
                                                        std::string(to_string(kind_of(*obj))));
    }
    return *typed;
  }

 private:
  Model model_;
  std::vector<NamedObject> objects_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct Assertion {
  std::string predicate;
  std::vector<std::string> args;
};

struct ConstructionStep {
  // "check" runs no operation; the step exists for its assertion.
  std::string op;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::optional<Assertion> assertion;
};

struct Given {
  std::string name;
  Kind kind;
};

struct ConstructionProgram {
  std::string name;
  Model model = Model::kEuclidean;
  std::vector<Given> givens;
  std::vector<ConstructionStep> steps;
  std::optional<std::string> result;
};

inline constexpr std::string_view kCheckOp = "check";

// Assembles a program, rejecting any reference that is not a given or an
// earlier output (UnresolvedReference) and unknown operations or
// predicates.
class ProgramBuilder {
 public:
  ProgramBuilder(std::string name, Model model);

  ProgramBuilder& given(std::string name, Kind kind);
  ProgramBuilder& step(std::string op, std::vector<std::string> inputs,
                       std::vector<std::string> outputs,
                       std::optional<Assertion> assertion = std::nullopt);
  ProgramBuilder& check(std::string predicate, std::vector<std::string> args);

  // Appends `sub` with its givens bound to names already in scope and its
  // other names prefixed with `prefix`. Returns the renaming of sub's
  // outputs.
  std::map<std::string, std::string> inline_program(
      const ConstructionProgram& sub, const std::map<std::string, std::string>& bindings,
      const std::string& prefix);

  ConstructionProgram build(std::optional<std::string> result);

 private:
  ConstructionProgram program_;
};

// Checks the ordering invariant of an already assembled program.
void validate(const ConstructionProgram& program);

struct AssertionRecord {
  std::string predicate;
  bool passed = false;
  // Signed distance to the decision boundary; positive when passing.
  double margin = 0.0;
};

struct StepRecord {
  std::size_t index = 0;
  std::string op;
  std::vector<NamedObject> inputs;
  std::vector<NamedObject> outputs;
  std::optional<AssertionRecord> assertion;
};

struct TraceFailure {
  std::size_t step = 0;
  ErrorKind kind = ErrorKind::kStepFailed;  // StepFailed or AssertionFailed
  ErrorKind cause = ErrorKind::kDegenerateInput;
  std::string message;
};

struct Trace {
  std::string program;
  Model model = Model::kEuclidean;
  std::vector<StepRecord> steps;
  std::optional<std::string> result;
  std::optional<TraceFailure> failure;
  // Givens plus every object the executed steps produced.
  Scene scene;

  bool ok() const { return !failure.has_value(); }
  std::size_t step_count() const { return steps.size(); }
};

struct RunOptions {
  eu::Tolerance eu_tolerance = eu::kDefaultTolerance;
  hyp::Tolerance hyp_tolerance = hyp::kDefaultTolerance;
  double assertion_tolerance = 1e-9;
};

// Executes the program against the givens. Structural problems (missing
// givens, wrong kinds, bad references, model mismatch) throw; kernel errors
// and failed assertions stop execution and are recorded in the trace.
Trace run_program(const ConstructionProgram& program, const Scene& givens,
                  const RunOptions& options = {});

// Re-executes every recorded step from its recorded inputs and compares the
// outputs bit for bit.
bool replay_matches(const Trace& trace, const RunOptions& options = {});

// Names of the registered operations and predicates, for diagnostics.
std::vector<std::string> known_operations();
std::vector<std::string> known_predicates();

// I.23: copy the angle A-V-B onto the ray from O through T.
// Givens: O, T, A, V, B (points). Outputs `B2` and `B2_alt`, the two
// candidate points on either side of the target ray, and `result`, the
// copied ray through B2.
ConstructionProgram prog_copy_angle();

// I.31: the line through A making equal alternate angles with b along the
// transversal from A to the foot D on b. Givens: b (line), A (point).
ConstructionProgram prog_parallel_i31();

// Bolyai's limiting-parallel construction on the Klein disk.
// Givens: a (chord), P (point off a), R (point on a).
ConstructionProgram prog_bolyai();

// Named objects of a finished Bolyai run.
struct BolyaiScene {
  hyp::HChord a;
  hyp::HPoint p;
  hyp::HPoint q;
  hyp::HChord m;
  hyp::HPoint r;
  hyp::HPoint s;
  hyp::HPoint x;
  hyp::HRay result;
};

// Throws StepFailed if the trace did not complete.
BolyaiScene bolyai_scene(const Trace& trace);

}  // namespace postulatum::construct
