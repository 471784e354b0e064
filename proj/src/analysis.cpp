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

#include "lrsym/analysis.hpp"

#include <algorithm>
#include <utility>

#include "lrsym/errors.hpp"

namespace lrsym {

namespace {

// Joints the two metrics consume. Other tracked joints pass through the
// parsers but are not repaired or analyzed.
constexpr std::array<JointId, 4> kAnalyzedJoints = {
    JointId::RAnkle, JointId::LAnkle, JointId::RWrist, JointId::LWrist};

template <typename F>
auto stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(name) + ": " + e.what());
  }
}

}  // namespace

std::vector<KeypointFrame> load_frames(const std::filesystem::path& input,
                                       InputFormat format) {
  if (format == InputFormat::Auto)
    format = std::filesystem::is_directory(input) ? InputFormat::OpenPoseDir
                                                  : InputFormat::Csv;
  return format == InputFormat::OpenPoseDir ? parse_openpose_dir(input)
                                            : parse_keypoint_csv_file(input);
}

AnalysisResult run_analysis(const AnalysisConfig& config) {
  const std::vector<KeypointFrame> frames =
      stage("ingest", [&] { return load_frames(config.input, config.format); });
  return run_analysis(config, frames);
}

AnalysisResult run_analysis(const AnalysisConfig& config,
                            const std::vector<KeypointFrame>& frames) {
  AnalysisResult result;
  result.subject = !config.subject.empty() ? config.subject
                                           : config.input.stem().string();
  if (result.subject.empty()) result.subject = "subject";
  result.frame_count = static_cast<long>(frames.size());

  unsigned stages = config.stages;
  if (stages & kStageShiftCorrelation) stages |= kStageCycle;

  for (JointId id : kAnalyzedJoints) {
    JointTrajectory traj = stage("extract", [&] {
      JointTrajectory t = extract_trajectory(frames, id);
      // A joint that never shows up at all is missing input, not a
      // low-confidence repair problem.
      if (std::all_of(t.confidence.begin(), t.confidence.end(),
                      [](double c) { return c <= 0.0; }))
        fail(ErrorCode::MissingData,
             std::string("joint ") + std::string(joint_name(id)) +
                 " has no recorded samples in the input");
      return t;
    });
    traj = stage("interpolate", [&] {
      return interpolate_gaps(traj, config.confidence_threshold);
    });
    traj = stage("smooth", [&] {
      return smooth_moving_average(traj, config.smooth_window);
    });
    result.trajectories.emplace(id, std::move(traj));
  }

  std::optional<SpeedSeries> left_speed;
  std::optional<SpeedSeries> right_speed;
  if (stages & kStageCycle) {
    stage("cycle", [&] {
      left_speed = speed_series(result.trajectories.at(JointId::LAnkle),
                                config.method1_speed_mode);
      right_speed = speed_series(result.trajectories.at(JointId::RAnkle),
                                 config.method1_speed_mode);
      result.cycle_left = estimate_cycle(left_speed->values, config.cycle_search);
      result.cycle_right = estimate_cycle(right_speed->values, config.cycle_search);
      result.cycle_combined =
          combined_cycle(*left_speed, *right_speed, config.cycle_search);
      return 0;
    });
  }

  if (stages & kStageShiftCorrelation) {
    stage("shift-correlation", [&] {
      result.shift = quarter_shift_correlation(*left_speed, *right_speed,
                                               *result.cycle_combined);
      const int trimmed = result.shift->analyzed_length;
      result.shifted_left = fractional_circular_shift(
          std::span<const double>(left_speed->values.data(), trimmed),
          result.shift->left_shift);
      result.shifted_right = fractional_circular_shift(
          std::span<const double>(right_speed->values.data(), trimmed),
          result.shift->right_shift);
      return 0;
    });
  }

  if (stages & kStageDissimilarity) {
    stage("dissimilarity", [&] {
      result.dissimilarity = evaluate_all_cases(
          result.trajectories, config.dis_threshold, config.demean);
      return 0;
    });
  }

  return result;
}

}  // namespace lrsym
