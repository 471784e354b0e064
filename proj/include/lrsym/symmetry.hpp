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

#ifndef LRSYM_SYMMETRY_HPP
#define LRSYM_SYMMETRY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "lrsym/signal.hpp"

namespace lrsym {

/// Quarter-cycle shift correlation between the left and right ankle speed
/// series: the left side is delayed by T/4, the right side advanced by
/// T/4, and the two realigned series are correlated.
struct ShiftCorrelationResult {
  double rho = 0.0;
  int cycle_frames = 0;
  double left_shift = 0.0;   // +T/4 frames
  double right_shift = 0.0;  // -T/4 frames
  int analyzed_length = 0;   // whole-cycle trimmed length
};

/// Ankle->wrist coupling cases. The first letter is the ankle (input)
/// speed component, the second the wrist (output) component;
/// H = horizontal, V = vertical.
enum class CouplingCase { HV, VH, HH, VV };

inline constexpr std::array<CouplingCase, 4> kAllCases = {
    CouplingCase::HV, CouplingCase::VH, CouplingCase::HH, CouplingCase::VV};

std::string_view coupling_case_name(CouplingCase c);
std::optional<CouplingCase> coupling_case_from_name(std::string_view name);
SpeedMode case_input_mode(CouplingCase c);   // ankle component
SpeedMode case_output_mode(CouplingCase c);  // wrist component

/// The two cross products whose equality is being tested:
/// u = a * y (right ankle with left wrist), v = x * b (left ankle with
/// right wrist), * = linear convolution.
struct ConvolutionPair {
  std::vector<double> u;
  std::vector<double> v;
};

/// The four speed series feeding one coupling case.
struct CaseSeries {
  SpeedSeries a;  // right ankle, input component
  SpeedSeries b;  // right wrist, output component
  SpeedSeries x;  // left ankle, input component
  SpeedSeries y;  // left wrist, output component
};

struct DissimilarityValue {
  double dis = 0.0;
  ConvolutionPair pair;
};

enum class CaseClassification { Symmetric, Asymmetric, Degenerate };

struct CaseOutcome {
  CouplingCase coupling = CouplingCase::HV;
  std::optional<DissimilarityValue> value;  // empty when degenerate
  CaseClassification classification = CaseClassification::Degenerate;
  std::string error;  // set when degenerate
};

/// Per-case dissimilarities and their symmetric/asymmetric classification
/// against a threshold. A degenerate case (motionless limb) is recorded
/// without aborting the other cases.
struct DissimilarityReport {
  std::array<CaseOutcome, 4> cases;  // in HV, VH, HH, VV order
  double threshold = 1.0;

  const CaseOutcome& outcome(CouplingCase c) const;
};

using TrajectoryMap = std::map<JointId, JointTrajectory>;

/// Method I. Trims both series to whole cycles, applies the +T/4 / -T/4
/// circular shifts and correlates. T must not exceed half the record.
ShiftCorrelationResult quarter_shift_correlation(const SpeedSeries& left,
                                                 const SpeedSeries& right,
                                                 const CycleEstimate& cycle);

/// Builds the (a, b, x, y) speed quadruple for one coupling case from
/// repaired trajectories of both ankles and both wrists.
CaseSeries case_series(const TrajectoryMap& trajectories, CouplingCase c);

/// Dis((a,b),(x,y)) = |u - v|^2 / (|u| |v|) with u = a*y, v = x*b.
/// Zero exactly when the two coordination systems have equal transfer
/// functions; a zero-norm product (motionless limb) is an error.
DissimilarityValue dissimilarity(const SpeedSeries& a, const SpeedSeries& b,
                                 const SpeedSeries& x, const SpeedSeries& y);

/// Runs all four coupling cases and classifies each one: Symmetric
/// exactly when dis < threshold. With demean, every series has its mean
/// removed before convolution.
DissimilarityReport evaluate_all_cases(const TrajectoryMap& trajectories,
                                       double threshold = 1.0,
                                       bool demean = false);

/// Gait cycle agreed between the two ankles: the rounded mean of the two
/// per-side estimates. Estimates differing by more than 25% of their mean
/// are rejected as ambiguous.
CycleEstimate combined_cycle(const SpeedSeries& left_ankle,
                             const SpeedSeries& right_ankle,
                             const CycleSearchParams& params = {});

}  // namespace lrsym

#endif
