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

#ifndef LRSYM_ANALYSIS_HPP
#define LRSYM_ANALYSIS_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "lrsym/symmetry.hpp"
#include "lrsym/synth.hpp"

namespace lrsym {

enum class InputFormat { Auto, OpenPoseDir, Csv };

/// Pipeline stages; shift-correlation implies the cycle stage.
enum AnalysisStage : unsigned {
  kStageCycle = 1u,
  kStageShiftCorrelation = 2u,
  kStageDissimilarity = 4u,
  kStageAll = kStageCycle | kStageShiftCorrelation | kStageDissimilarity,
};

struct AnalysisConfig {
  std::filesystem::path input;
  InputFormat format = InputFormat::Auto;
  double confidence_threshold = 0.5;
  int smooth_window = 3;
  SpeedMode method1_speed_mode = SpeedMode::AbsSum;
  CycleSearchParams cycle_search{};
  double dis_threshold = 1.0;
  bool demean = false;
  std::string subject;  // defaults to the input path stem
  unsigned stages = kStageAll;
};

struct AnalysisResult {
  std::string subject;
  long frame_count = 0;

  /// Repaired and smoothed trajectories of the four analyzed joints.
  TrajectoryMap trajectories;

  std::optional<CycleEstimate> cycle_left;
  std::optional<CycleEstimate> cycle_right;
  std::optional<CycleEstimate> cycle_combined;

  std::optional<ShiftCorrelationResult> shift;
  std::vector<double> shifted_left;   // post-shift overlay series
  std::vector<double> shifted_right;

  std::optional<DissimilarityReport> dissimilarity;
};

/// Reads the input (OpenPose JSON directory or keypoint CSV, auto-detected
/// from the path by default) and runs the configured pipeline stages:
/// gate -> interpolate -> smooth, then cycle estimation, quarter-cycle
/// shift correlation and the four-case dissimilarity report.
AnalysisResult run_analysis(const AnalysisConfig& config);

/// Same pipeline on frames already in memory.
AnalysisResult run_analysis(const AnalysisConfig& config,
                            const std::vector<KeypointFrame>& frames);

std::vector<KeypointFrame> load_frames(const std::filesystem::path& input,
                                       InputFormat format);

}  // namespace lrsym

#endif
