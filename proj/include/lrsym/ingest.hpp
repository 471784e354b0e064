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

#ifndef LRSYM_INGEST_HPP
#define LRSYM_INGEST_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace lrsym {

/// The ten tracked joints. Every joint has a left/right mirror.
enum class JointId {
  RAnkle,
  LAnkle,
  RKnee,
  LKnee,
  RHip,
  LHip,
  RWrist,
  LWrist,
  RShoulder,
  LShoulder,
};

inline constexpr std::size_t kJointCount = 10;

inline constexpr std::array<JointId, kJointCount> kAllJoints = {
    JointId::RAnkle, JointId::LAnkle,    JointId::RKnee,  JointId::LKnee,
    JointId::RHip,   JointId::LHip,      JointId::RWrist, JointId::LWrist,
    JointId::RShoulder, JointId::LShoulder,
};

std::string_view joint_name(JointId joint);
std::optional<JointId> joint_from_name(std::string_view name);
JointId mirror_joint(JointId joint);

/// Index of the joint inside an OpenPose BODY_25 pose_keypoints_2d array.
int body25_index(JointId joint);

/// One raw (x, y, confidence) reading for a joint in one frame.
struct Keypoint {
  double x = 0.0;
  double y = 0.0;
  double confidence = 0.0;  // always kept in [0, 1]
};

/// One video frame's readings for the ten tracked joints. Joints that were
/// not detected carry confidence 0.
struct KeypointFrame {
  long frame_index = 0;
  std::array<Keypoint, kJointCount> joints{};

  const Keypoint& joint(JointId id) const {
    return joints[static_cast<std::size_t>(id)];
  }
  Keypoint& joint(JointId id) { return joints[static_cast<std::size_t>(id)]; }
};

/// A single joint's coordinate series over the whole recording.
///
/// Structurally missing samples (confidence <= 0) are stored as NaN until
/// interpolate_gaps() repairs them; gap_mask marks every repaired index.
struct JointTrajectory {
  JointId joint = JointId::RAnkle;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> confidence;
  std::vector<bool> gap_mask;

  std::size_t size() const { return x.size(); }
};

/// Parses a directory of OpenPose per-frame JSON files (BODY_25 layout,
/// `people[i].pose_keypoints_2d` with 75 numbers). Files are taken in
/// lexicographic filename order; when several people are present the one
/// with the highest summed confidence wins; an empty `people` list yields
/// a frame with all confidences 0.
std::vector<KeypointFrame> parse_openpose_dir(const std::filesystem::path& dir);

/// Parses the flat CSV format `frame,joint,x,y,confidence`. Frames are
/// sorted by frame index; wholly absent (frame, joint) rows become
/// confidence-0 entries; gaps in the frame numbering are filled with
/// empty frames so indices come out contiguous.
std::vector<KeypointFrame> parse_keypoint_csv(std::istream& in);
std::vector<KeypointFrame> parse_keypoint_csv_file(const std::filesystem::path& file);

/// Serializes frames back to the CSV format parse_keypoint_csv consumes.
/// Values round-trip exactly.
void write_keypoint_csv(std::ostream& out, const std::vector<KeypointFrame>& frames);
void write_keypoint_csv_file(const std::filesystem::path& file,
                             const std::vector<KeypointFrame>& frames);

/// Copies one joint's per-frame readings into a trajectory. Samples with
/// confidence <= 0 are entered as NaN and pre-marked in gap_mask.
JointTrajectory extract_trajectory(const std::vector<KeypointFrame>& frames,
                                   JointId joint);

/// Repairs every sample with confidence <= threshold by linear
/// interpolation between the nearest trusted neighbours; leading/trailing
/// gaps hold the nearest trusted value constant. Idempotent.
JointTrajectory interpolate_gaps(const JointTrajectory& traj, double threshold = 0.5);

/// Centered moving average over x and y with the window truncated at the
/// series boundaries. Window must be odd, >= 1 and <= series length.
/// Confidence and gap_mask pass through unchanged.
JointTrajectory smooth_moving_average(const JointTrajectory& traj, int window = 3);

}  // namespace lrsym

#endif
