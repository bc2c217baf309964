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

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

#include "postulatum/verifier.hpp"

namespace postulatum::verify {
namespace {

using TrialFn = CheckResult (*)(TrialRng&, double);

struct Proposition {
  std::string_view id;
  double default_tolerance;
  TrialFn trial;
};

// Half the I.27/I.29 scenes are parallel so both sides of the biconditional
// are exercised.
const std::array<Proposition, 7> kPropositions{{
    {"i27_i29", kAngleTolerance,
     [](TrialRng& rng, double tol) {
       const bool parallel = rng.uniform() < 0.5;
       return check_alternate_angle_criterion(sample_transversal(rng, parallel), tol);
     }},
    {"fp", kAngleTolerance,
     [](TrialRng& rng, double tol) { return check_fp_meeting_side(sample_fp_scene(rng), tol); }},
    {"i30", 0.0,
     [](TrialRng& rng, double) {
       const ParallelTriple t = sample_parallel_triple(rng);
       return check_parallel_transitivity(t.a, t.b, t.c);
     }},
    {"4.1", kAngleTolerance,
     [](TrialRng& rng, double tol) {
       const Triangle t = sample_triangle(rng);
       return check_hyperbolic_angle_sum(t.a, t.b, t.c, tol);
     }},
    {"4.2", kAngleTolerance,
     [](TrialRng& rng, double tol) { return check_lambert(sample_lambert(rng), tol); }},
    {"4.3", kPxQrTolerance,
     [](TrialRng& rng, double tol) { return check_px_equals_qr(sample_bolyai_givens(rng), tol); }},
    {"bolyai", 0.0,
     [](TrialRng& rng, double) { return check_bolyai(sample_bolyai_givens(rng)); }},
}};

// A check that throws one of these saw a scene outside its hypotheses.
bool is_precondition(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotATransversal:
    case ErrorKind::kInconclusive:
    case ErrorKind::kPreconditionUnmet:
    case ErrorKind::kDegenerateTriangle:
    case ErrorKind::kNotLambert:
    case ErrorKind::kDegenerateScene:
    case ErrorKind::kPointOnLine:
      return true;
    default:
      return false;
  }
}

constexpr int kMaxAttempts = 64;

struct TrialOutcome {
  bool passed = false;
  double margin = 0.0;
  std::uint64_t invalid = 0;
};

TrialOutcome run_one(const Proposition& prop, double tol, std::uint64_t seed,
                     std::uint64_t index) {
  TrialRng rng(seed, index);
  TrialOutcome out;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    try {
      const CheckResult r = prop.trial(rng, tol);
      out.passed = r.passed;
      out.margin = r.margin;
      return out;
    } catch (const GeometryError& e) {
      if (!is_precondition(e.kind())) break;
      ++out.invalid;
    } catch (const std::exception&) {
      break;
    }
  }
  out.passed = false;
  out.margin = -std::numeric_limits<double>::infinity();
  return out;
}

const Proposition& find_proposition(std::string_view id) {
  for (const Proposition& p : kPropositions) {
    if (p.id == id) return p;
  }
  throw GeometryError(ErrorKind::kUnknownProposition, "unknown proposition '" + std::string(id) + "'");
}

double resolve_tolerance(const TrialConfig& cfg, const Proposition& prop) {
  if (cfg.trials < 1) throw GeometryError(ErrorKind::kDegenerateInput, "trial count must be >= 1");
  if (!cfg.tolerance) return prop.default_tolerance;
  if (!std::isfinite(*cfg.tolerance) || *cfg.tolerance < 0.0) {
    throw GeometryError(ErrorKind::kDegenerateInput, "tolerance must be finite and non-negative");
  }
  return *cfg.tolerance;
}

using Clock = std::chrono::steady_clock;

VerificationReport make_report(const TrialConfig& cfg, std::uint64_t failures,
                               std::uint64_t invalid, double worst, Clock::time_point start) {
  VerificationReport r;
  r.proposition = cfg.proposition;
  r.trials = cfg.trials;
  r.failures = failures;
  r.invalid_samples = invalid;
  r.worst_margin = worst;
  r.seed = cfg.seed;
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<std::string> known_propositions() {
  std::vector<std::string> ids;
  for (const Proposition& p : kPropositions) ids.emplace_back(p.id);
  return ids;
}

VerificationReport run_trials_serial(const TrialConfig& cfg) {
  const Proposition& prop = find_proposition(cfg.proposition);
  const double tol = resolve_tolerance(cfg, prop);
  const auto start = Clock::now();
  std::uint64_t failures = 0;
  std::uint64_t invalid = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const TrialOutcome t = run_one(prop, tol, cfg.seed, i);
    failures += t.passed ? 0 : 1;
    invalid += t.invalid;
    worst = std::min(worst, t.margin);
  }
  return make_report(cfg, failures, invalid, worst, start);
}

VerificationReport run_trials(const TrialConfig& cfg) {
  const Proposition& prop = find_proposition(cfg.proposition);
  const double tol = resolve_tolerance(cfg, prop);
  const auto start = Clock::now();
  std::uint64_t failures = 0;
  std::uint64_t invalid = 0;
  double worst = std::numeric_limits<double>::infinity();
  const auto n = static_cast<std::int64_t>(cfg.trials);
  // Counts and a min are exact under any reduction order.
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures, invalid) \
    reduction(min : worst)
  for (std::int64_t i = 0; i < n; ++i) {
    const TrialOutcome t = run_one(prop, tol, cfg.seed, static_cast<std::uint64_t>(i));
    failures += t.passed ? 0 : 1;
    invalid += t.invalid;
    worst = std::min(worst, t.margin);
  }
  return make_report(cfg, failures, invalid, worst, start);
}

std::string format_report(const VerificationReport& r) {
  char margin[48];
  std::snprintf(margin, sizeof margin, "%.9e", r.worst_margin);
  std::string out;
  out += "proposition: " + r.proposition + "\n";
  out += "trials: " + std::to_string(r.trials) + "\n";
  out += "failures: " + std::to_string(r.failures) + "\n";
  out += "invalid_samples: " + std::to_string(r.invalid_samples) + "\n";
  out += "worst_margin: " + std::string(margin) + "\n";
  out += "seed: " + std::to_string(r.seed) + "\n";
  return out;
}

}  // namespace postulatum::verify
