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

// Seeded randomized checks of the parallel-postulate propositions, each in
// the model where it holds.
//
// Every check reports a pass flag and a signed margin: the distance to its
// decision boundary, positive when passing. A check whose precondition fails
// throws; run_trials counts that as an invalid sample and draws again.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "postulatum/construction.hpp"
#include "postulatum/euclidean.hpp"
#include "postulatum/hyperbolic.hpp"

namespace postulatum::verify {

// Deterministic per-trial stream: a 64-bit Mersenne Twister keyed by
// (seed, trial index) through seed_seq, so trial i draws the same numbers
// whatever order the trials run in.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t index);

  // Uniform in [0, 1) from the top 53 bits of one draw.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in the disk of the given radius around the origin.
  Vec2 in_disk(double radius);
  Vec2 in_box(double half_width);

 private:
  std::mt19937_64 engine_;
};

struct CheckResult {
  bool passed = false;
  double margin = 0.0;
};

// Transversal c crossing a and b at distinct points.
struct TransversalScene {
  eu::EuLine a;
  eu::EuLine b;
  eu::EuLine c;
};

inline constexpr double kAngleTolerance = 1e-9;

// Alternate angles equal (within tol) iff a and b are parallel.
// Throws NotATransversal.
CheckResult check_alternate_angle_criterion(const TransversalScene& s,
                                            double tol = kAngleTolerance);

// a and b meet on the side of c where the interior angles sum below pi.
// Throws NotATransversal, and Inconclusive when neither side falls short of
// pi by more than tol. The margin is the signed distance of the meeting
// point from c, positive on the deficient side.
CheckResult check_fp_meeting_side(const TransversalScene& s, double tol = kAngleTolerance);

// a || b and c || b imply a || c. Throws PreconditionUnmet unless both
// hypotheses hold and a != c. The margin is the gap between a and c.
CheckResult check_parallel_transitivity(const eu::EuLine& a, const eu::EuLine& b,
                                        const eu::EuLine& c);

// pi minus the angle sum of triangle ABC. Throws DegenerateTriangle for
// vertices closer than 1e-6 or on one chord.
double hyperbolic_defect(const hyp::HPoint& a, const hyp::HPoint& b, const hyp::HPoint& c);

// Passes iff the defect exceeds tol; the margin is defect - tol.
CheckResult check_hyperbolic_angle_sum(const hyp::HPoint& a, const hyp::HPoint& b,
                                       const hyp::HPoint& c, double tol = kAngleTolerance);

// Quadrilateral PQRS with right angles at P, Q and S.
struct LambertScene {
  hyp::HPoint p;
  hyp::HPoint q;
  hyp::HPoint r;
  hyp::HPoint s;
};

// Erects perpendiculars to PQ at Q and to PS at S and intersects them.
// Throws NotLambert if the angle at P is not right or they do not meet.
LambertScene make_lambert(const hyp::HPoint& p, const hyp::HPoint& q, const hyp::HPoint& s);

// Fourth angle acute, QR > PS and SR > PQ. Throws NotLambert unless the
// angles at P, Q and S are right within 1e-9.
CheckResult check_lambert(const LambertScene& l, double tol = kAngleTolerance);

// Givens of the Bolyai construction: R on a, P off a.
struct BolyaiGivens {
  hyp::HChord a;
  hyp::HPoint p;
  hyp::HPoint r;
};

construct::Scene bolyai_givens_scene(const BolyaiGivens& g);

// X where the limiting ray from P toward the end of a on R's side of PQ
// crosses RS. Throws DegenerateScene if P is on a or R is the foot Q.
struct LimitingCrossing {
  hyp::HPoint q;
  hyp::HPoint s;
  hyp::HPoint x;
  hyp::HRay ray;
};
LimitingCrossing limiting_crossing(const BolyaiGivens& g);

inline constexpr double kPxQrTolerance = 1e-7;

// PX = QR within tol * max(1, QR), X taken from the limiting ray.
CheckResult check_px_equals_qr(const BolyaiGivens& g, double tol = kPxQrTolerance);

// Runs prog_bolyai and checks its ray is a limiting parallel to a. The
// margin is kIdealMatchTolerance minus the endpoint gap. Precondition
// failures of the program are rethrown with their cause.
CheckResult check_bolyai(const BolyaiGivens& g);

// Samplers. Each rejects and redraws internally until its margins hold,
// so the scenes they return satisfy the checks' preconditions.
TransversalScene sample_transversal(TrialRng& rng, bool parallel);
TransversalScene sample_fp_scene(TrialRng& rng);
struct ParallelTriple {
  eu::EuLine a;
  eu::EuLine b;
  eu::EuLine c;
};
ParallelTriple sample_parallel_triple(TrialRng& rng);
struct Triangle {
  hyp::HPoint a;
  hyp::HPoint b;
  hyp::HPoint c;
};
Triangle sample_triangle(TrialRng& rng);
LambertScene sample_lambert(TrialRng& rng);
BolyaiGivens sample_bolyai_givens(TrialRng& rng);

struct TrialConfig {
  std::string proposition;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  // Replaces the proposition's decision tolerance when set.
  std::optional<double> tolerance;
};

struct VerificationReport {
  std::string proposition;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t invalid_samples = 0;
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  // Wall-clock seconds; informational, never serialized.
  double elapsed_seconds = 0.0;
};

// Accepted ids: i27_i29, fp, i30, 4.1, 4.2, 4.3, bolyai.
std::vector<std::string> known_propositions();

// Parallel over trials. Throws UnknownProposition, and DegenerateInput for
// a zero trial count.
VerificationReport run_trials(const TrialConfig& cfg);

// Single-threaded reference; produces the same report.
VerificationReport run_trials_serial(const TrialConfig& cfg);

// Fixed-order `key: value` lines.
std::string format_report(const VerificationReport& report);

}  // namespace postulatum::verify
