/*
 * Copyright 2026 lrsym developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lrsym/symmetry.hpp"

#include <cmath>
#include <numeric>

#include "lrsym/errors.hpp"

namespace lrsym {

namespace {

double norm2(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

void remove_mean(std::vector<double>& v) {
  const double mean =
      std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

const JointTrajectory& require_joint(const TrajectoryMap& trajectories,
                                     JointId id) {
  auto it = trajectories.find(id);
  if (it == trajectories.end())
    fail(ErrorCode::MissingData,
         std::string("missing trajectory for joint ") +
             std::string(joint_name(id)));
  return it->second;
}

}  // namespace

std::string_view coupling_case_name(CouplingCase c) {
  switch (c) {
    case CouplingCase::HV: return "HV";
    case CouplingCase::VH: return "VH";
    case CouplingCase::HH: return "HH";
    case CouplingCase::VV: return "VV";
  }
  return "?";
}

std::optional<CouplingCase> coupling_case_from_name(std::string_view name) {
  for (CouplingCase c : kAllCases)
    if (name == coupling_case_name(c)) return c;
  return std::nullopt;
}

SpeedMode case_input_mode(CouplingCase c) {
  return (c == CouplingCase::HV || c == CouplingCase::HH)
             ? SpeedMode::Horizontal
             : SpeedMode::Vertical;
}

SpeedMode case_output_mode(CouplingCase c) {
  return (c == CouplingCase::VH || c == CouplingCase::HH)
             ? SpeedMode::Horizontal
             : SpeedMode::Vertical;
}

const CaseOutcome& DissimilarityReport::outcome(CouplingCase c) const {
  for (const CaseOutcome& o : cases)
    if (o.coupling == c) return o;
  return cases[0];  // unreachable: all four cases are always present
}

ShiftCorrelationResult quarter_shift_correlation(const SpeedSeries& left,
                                                 const SpeedSeries& right,
                                                 const CycleEstimate& cycle) {
  if (left.size() != right.size())
    fail(ErrorCode::InvalidInput, "quarter_shift_correlation: length mismatch");
  const int m = static_cast<int>(left.size());
  const int t = cycle.period_frames;
  if (t < 1) fail(ErrorCode::InvalidInput, "quarter_shift_correlation: bad cycle");
  if (2 * t > m)
    fail(ErrorCode::InsufficientRecord,
         "record of " + std::to_string(m) +
             " speed samples holds fewer than two cycles of " +
             std::to_string(t) + " frames");

  // Keep whole cycles only so the circular-shift periodicity assumption
  // holds over the analysis window.
  const int trimmed = (m / t) * t;
  const std::span<const double> lv(left.values.data(), trimmed);
  const std::span<const double> rv(right.values.data(), trimmed);

  const double quarter = static_cast<double>(t) / 4.0;
  const std::vector<double> shifted_left = fractional_circular_shift(lv, +quarter);
  const std::vector<double> shifted_right = fractional_circular_shift(rv, -quarter);

  ShiftCorrelationResult result;
  result.rho = pearson(shifted_left, shifted_right);
  result.cycle_frames = t;
  result.left_shift = +quarter;
  result.right_shift = -quarter;
  result.analyzed_length = trimmed;
  return result;
}

CaseSeries case_series(const TrajectoryMap& trajectories, CouplingCase c) {
  const JointTrajectory& r_ankle = require_joint(trajectories, JointId::RAnkle);
  const JointTrajectory& r_wrist = require_joint(trajectories, JointId::RWrist);
  const JointTrajectory& l_ankle = require_joint(trajectories, JointId::LAnkle);
  const JointTrajectory& l_wrist = require_joint(trajectories, JointId::LWrist);

  const std::size_t m = r_ankle.size();
  if (r_wrist.size() != m || l_ankle.size() != m || l_wrist.size() != m)
    fail(ErrorCode::InvalidInput, "case_series: trajectory length mismatch");

  const SpeedMode in_mode = case_input_mode(c);
  const SpeedMode out_mode = case_output_mode(c);
  return CaseSeries{
      speed_series(r_ankle, in_mode),
      speed_series(r_wrist, out_mode),
      speed_series(l_ankle, in_mode),
      speed_series(l_wrist, out_mode),
  };
}

DissimilarityValue dissimilarity(const SpeedSeries& a, const SpeedSeries& b,
                                 const SpeedSeries& x, const SpeedSeries& y) {
  const std::size_t n = a.size();
  if (b.size() != n || x.size() != n || y.size() != n)
    fail(ErrorCode::InvalidInput, "dissimilarity: length mismatch");
  if (n < 2) fail(ErrorCode::InvalidInput, "dissimilarity: need >= 2 samples");

  DissimilarityValue out;
  out.pair.u = linear_convolution(a.values, y.values);
  out.pair.v = linear_convolution(x.values, b.values);

  const double nu = norm2(out.pair.u);
  const double nv = norm2(out.pair.v);
  if (nu == 0.0)
    fail(ErrorCode::DegenerateSignal,
         std::string("degenerate system: ") + std::string(joint_name(a.source)) +
             " * " + std::string(joint_name(y.source)) +
             " has zero energy (motionless limb)");
  if (nv == 0.0)
    fail(ErrorCode::DegenerateSignal,
         std::string("degenerate system: ") + std::string(joint_name(x.source)) +
             " * " + std::string(joint_name(b.source)) +
             " has zero energy (motionless limb)");

  double diff2 = 0.0;
  for (std::size_t i = 0; i < out.pair.u.size(); ++i) {
    const double d = out.pair.u[i] - out.pair.v[i];
    diff2 += d * d;
  }
  out.dis = diff2 / (nu * nv);
  return out;
}

DissimilarityReport evaluate_all_cases(const TrajectoryMap& trajectories,
                                       double threshold, bool demean) {
  DissimilarityReport report;
  report.threshold = threshold;
  std::size_t slot = 0;
  for (CouplingCase c : kAllCases) {
    CaseOutcome outcome;
    outcome.coupling = c;
    // Missing joints or mismatched lengths abort the whole report from
    // case_series; only degenerate (zero-energy) cases are kept per-case.
    CaseSeries series = case_series(trajectories, c);
    if (demean) {
      remove_mean(series.a.values);
      remove_mean(series.b.values);
      remove_mean(series.x.values);
      remove_mean(series.y.values);
    }
    try {
      outcome.value = dissimilarity(series.a, series.b, series.x, series.y);
      outcome.classification = outcome.value->dis < threshold
                                   ? CaseClassification::Symmetric
                                   : CaseClassification::Asymmetric;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateSignal) throw;
      outcome.classification = CaseClassification::Degenerate;
      outcome.error = e.what();
    }
    report.cases[slot++] = std::move(outcome);
  }
  return report;
}

CycleEstimate combined_cycle(const SpeedSeries& left_ankle,
                             const SpeedSeries& right_ankle,
                             const CycleSearchParams& params) {
  const CycleEstimate left = estimate_cycle(left_ankle.values, params);
  const CycleEstimate right = estimate_cycle(right_ankle.values, params);
  const double mean =
      (static_cast<double>(left.period_frames) + right.period_frames) / 2.0;
  if (std::abs(left.period_frames - right.period_frames) > 0.25 * mean)
    fail(ErrorCode::AmbiguousCycle,
         "ambiguous cycle: left " + std::to_string(left.period_frames) +
             " vs right " + std::to_string(right.period_frames) +
             " frames differ by more than 25%");
  CycleEstimate combined;
  combined.period_frames = static_cast<int>(std::llround(mean));
  combined.peak_acf = (left.peak_acf + right.peak_acf) / 2.0;
  combined.min_lag = left.min_lag;
  combined.max_lag = std::max(left.max_lag, right.max_lag);
  return combined;
}

}  // namespace lrsym
