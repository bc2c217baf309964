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

#include "postulatum/error.hpp"

namespace postulatum {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
    case ErrorKind::kCoincidentCircles: return "CoincidentCircles";
    case ErrorKind::kNotATransversal: return "NotATransversal";
    case ErrorKind::kOutsideDisk: return "OutsideDisk";
    case ErrorKind::kNotIdeal: return "NotIdeal";
    case ErrorKind::kNoSignChange: return "NoSignChange";
    case ErrorKind::kPointOnLine: return "PointOnLine";
    case ErrorKind::kDegenerateScene: return "DegenerateScene";
    case ErrorKind::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::kNotLambert: return "NotLambert";
    case ErrorKind::kPreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::kInconclusive: return "Inconclusive";
    case ErrorKind::kUnresolvedReference: return "UnresolvedReference";
    case ErrorKind::kKindMismatch: return "KindMismatch";
    case ErrorKind::kStepFailed: return "StepFailed";
    case ErrorKind::kAssertionFailed: return "AssertionFailed";
    case ErrorKind::kUnknownProposition: return "UnknownProposition";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kEmptyScene: return "EmptyScene";
  }
  return "Unknown";
}

}  // namespace postulatum
