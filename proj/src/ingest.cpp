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

#include "lrsym/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lrsym/errors.hpp"

namespace lrsym {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct JointNameEntry {
  JointId id;
  std::string_view name;
  int body25;
};

// BODY_25 slots for the ten joints this pipeline tracks.
constexpr std::array<JointNameEntry, kJointCount> kJointTable = {{
    {JointId::RAnkle, "RAnkle", 11},
    {JointId::LAnkle, "LAnkle", 14},
    {JointId::RKnee, "RKnee", 10},
    {JointId::LKnee, "LKnee", 13},
    {JointId::RHip, "RHip", 9},
    {JointId::LHip, "LHip", 12},
    {JointId::RWrist, "RWrist", 4},
    {JointId::LWrist, "LWrist", 7},
    {JointId::RShoulder, "RShoulder", 2},
    {JointId::LShoulder, "LShoulder", 5},
}};

double clamp_confidence(double c) { return std::clamp(c, 0.0, 1.0); }

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, std::size_t line_no,
                    std::string_view what) {
  const std::string tmp(token);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end == tmp.c_str() || *end != '\0' || !std::isfinite(v))
    fail(ErrorCode::ParseError, "csv line " + std::to_string(line_no) +
                                    ": non-numeric " + std::string(what) +
                                    " field '" + tmp + "'");
  return v;
}

}  // namespace

std::string_view joint_name(JointId joint) {
  for (const auto& e : kJointTable)
    if (e.id == joint) return e.name;
  return "?";
}

std::optional<JointId> joint_from_name(std::string_view name) {
  for (const auto& e : kJointTable)
    if (e.name == name) return e.id;
  return std::nullopt;
}

JointId mirror_joint(JointId joint) {
  switch (joint) {
    case JointId::RAnkle: return JointId::LAnkle;
    case JointId::LAnkle: return JointId::RAnkle;
    case JointId::RKnee: return JointId::LKnee;
    case JointId::LKnee: return JointId::RKnee;
    case JointId::RHip: return JointId::LHip;
    case JointId::LHip: return JointId::RHip;
    case JointId::RWrist: return JointId::LWrist;
    case JointId::LWrist: return JointId::RWrist;
    case JointId::RShoulder: return JointId::LShoulder;
    case JointId::LShoulder: return JointId::RShoulder;
  }
  return joint;
}

int body25_index(JointId joint) {
  for (const auto& e : kJointTable)
    if (e.id == joint) return e.body25;
  return -1;
}

std::vector<KeypointFrame> parse_openpose_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    fail(ErrorCode::ParseError, "not a directory: " + dir.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  if (files.size() < 2)
    fail(ErrorCode::InsufficientData,
         "need at least 2 keypoint JSON files in " + dir.string() + ", found " +
             std::to_string(files.size()));

  std::vector<KeypointFrame> frames;
  frames.reserve(files.size());
  long index = 0;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + file.string());
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError,
           "malformed JSON in " + file.string() + ": " + e.what());
    }

    KeypointFrame frame;
    frame.frame_index = index++;
    if (!doc.contains("people") || !doc["people"].is_array())
      fail(ErrorCode::ParseError, "missing 'people' array in " + file.string());

    // Several detections in one frame: keep the person whose 25 keypoint
    // confidences sum highest (first one wins a tie).
    const nlohmann::json* best = nullptr;
    double best_sum = -1.0;
    for (const auto& person : doc["people"]) {
      if (!person.contains("pose_keypoints_2d") ||
          !person["pose_keypoints_2d"].is_array() ||
          person["pose_keypoints_2d"].size() != 75)
        fail(ErrorCode::ParseError,
             "person without a 75-value pose_keypoints_2d array in " +
                 file.string());
      double sum = 0.0;
      for (std::size_t i = 2; i < 75; i += 3) {
        const auto& v = person["pose_keypoints_2d"][i];
        if (!v.is_number())
          fail(ErrorCode::ParseError,
               "non-numeric keypoint value in " + file.string());
        sum += v.get<double>();
      }
      if (sum > best_sum) {
        best_sum = sum;
        best = &person;
      }
    }
    if (best != nullptr) {
      const auto& kp = (*best)["pose_keypoints_2d"];
      for (JointId id : kAllJoints) {
        const int base = 3 * body25_index(id);
        for (int off = 0; off < 3; ++off)
          if (!kp[base + off].is_number())
            fail(ErrorCode::ParseError,
                 "non-numeric keypoint value in " + file.string());
        frame.joint(id) = Keypoint{kp[base].get<double>(),
                                   kp[base + 1].get<double>(),
                                   clamp_confidence(kp[base + 2].get<double>())};
      }
    }
    frames.push_back(frame);
  }
  return frames;
}

std::vector<KeypointFrame> parse_keypoint_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::ParseError, "csv: empty input");
  if (trim(line) != "frame,joint,x,y,confidence")
    fail(ErrorCode::ParseError,
         "csv line 1: expected header 'frame,joint,x,y,confidence'");

  std::map<long, KeypointFrame> by_index;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;

    std::array<std::string_view, 5> fields;
    std::size_t start = 0, field = 0;
    for (std::size_t i = 0; i <= row.size(); ++i) {
      if (i == row.size() || row[i] == ',') {
        if (field >= 5)
          fail(ErrorCode::ParseError,
               "csv line " + std::to_string(line_no) + ": too many fields");
        fields[field++] = trim(row.substr(start, i - start));
        start = i + 1;
      }
    }
    if (field != 5)
      fail(ErrorCode::ParseError,
           "csv line " + std::to_string(line_no) + ": expected 5 fields, got " +
               std::to_string(field));

    const double frame_val = parse_number(fields[0], line_no, "frame");
    if (frame_val < 0 || frame_val != std::floor(frame_val))
      fail(ErrorCode::ParseError, "csv line " + std::to_string(line_no) +
                                      ": frame index must be a non-negative integer");
    const auto joint = joint_from_name(fields[1]);
    if (!joint)
      fail(ErrorCode::ParseError, "csv line " + std::to_string(line_no) +
                                      ": unknown joint '" + std::string(fields[1]) +
                                      "'");
    const double x = parse_number(fields[2], line_no, "x");
    const double y = parse_number(fields[3], line_no, "y");
    const double conf = clamp_confidence(parse_number(fields[4], line_no, "confidence"));

    const long idx = static_cast<long>(frame_val);
    KeypointFrame& frame = by_index[idx];
    frame.frame_index = idx;
    frame.joint(*joint) = Keypoint{x, y, conf};
  }
  if (by_index.size() < 2)
    fail(ErrorCode::InsufficientData, "csv: fewer than 2 frames");

  // Fill wholly absent intermediate frames with all-zero-confidence frames
  // so the sequence comes out contiguous and the time base stays uniform.
  std::vector<KeypointFrame> frames;
  const long first = by_index.begin()->first;
  const long last = by_index.rbegin()->first;
  frames.reserve(static_cast<std::size_t>(last - first + 1));
  for (long idx = first; idx <= last; ++idx) {
    auto it = by_index.find(idx);
    if (it != by_index.end()) {
      frames.push_back(it->second);
    } else {
      KeypointFrame empty;
      empty.frame_index = idx;
      frames.push_back(empty);
    }
  }
  return frames;
}

std::vector<KeypointFrame> parse_keypoint_csv_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + file.string());
  return parse_keypoint_csv(in);
}

void write_keypoint_csv(std::ostream& out, const std::vector<KeypointFrame>& frames) {
  out << "frame,joint,x,y,confidence\n";
  for (const KeypointFrame& frame : frames)
    for (JointId id : kAllJoints) {
      const Keypoint& kp = frame.joint(id);
      out << frame.frame_index << ',' << joint_name(id) << ','
          << format_double(kp.x) << ',' << format_double(kp.y) << ','
          << format_double(kp.confidence) << '\n';
    }
}

void write_keypoint_csv_file(const std::filesystem::path& file,
                             const std::vector<KeypointFrame>& frames) {
  std::ofstream out(file);
  if (!out) fail(ErrorCode::IoError, "cannot write " + file.string());
  write_keypoint_csv(out, frames);
  out.flush();
  if (!out) fail(ErrorCode::IoError, "write failed for " + file.string());
}

JointTrajectory extract_trajectory(const std::vector<KeypointFrame>& frames,
                                   JointId joint) {
  if (frames.size() < 2)
    fail(ErrorCode::InsufficientData, "extract_trajectory: need >= 2 frames");
  JointTrajectory traj;
  traj.joint = joint;
  traj.x.reserve(frames.size());
  traj.y.reserve(frames.size());
  traj.confidence.reserve(frames.size());
  traj.gap_mask.reserve(frames.size());
  for (const KeypointFrame& frame : frames) {
    const Keypoint& kp = frame.joint(joint);
    const bool missing = kp.confidence <= 0.0;
    traj.x.push_back(missing ? kNaN : kp.x);
    traj.y.push_back(missing ? kNaN : kp.y);
    traj.confidence.push_back(kp.confidence);
    traj.gap_mask.push_back(missing);
  }
  return traj;
}

JointTrajectory interpolate_gaps(const JointTrajectory& traj, double threshold) {
  const std::size_t m = traj.size();
  if (m < 2) fail(ErrorCode::InvalidInput, "interpolate_gaps: trajectory too short");

  std::vector<std::size_t> anchors;
  for (std::size_t i = 0; i < m; ++i)
    if (traj.confidence[i] > threshold) anchors.push_back(i);
  if (anchors.empty())
    fail(ErrorCode::AllOccluded,
         std::string("joint ") + std::string(joint_name(traj.joint)) +
             " has no sample above confidence " + std::to_string(threshold));

  JointTrajectory out = traj;
  auto repair = [&](std::vector<double>& series) {
    std::size_t next_anchor = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (traj.confidence[i] > threshold) continue;
      while (next_anchor < anchors.size() && anchors[next_anchor] < i)
        ++next_anchor;
      const bool has_prev = next_anchor > 0;
      const bool has_next = next_anchor < anchors.size();
      if (has_prev && has_next) {
        const std::size_t a = anchors[next_anchor - 1];
        const std::size_t b = anchors[next_anchor];
        const double t = static_cast<double>(i - a) / static_cast<double>(b - a);
        series[i] = series[a] + t * (series[b] - series[a]);
      } else if (has_next) {
        series[i] = series[anchors[next_anchor]];  // leading gap: hold first anchor
      } else {
        series[i] = series[anchors.back()];  // trailing gap: hold last anchor
      }
      out.gap_mask[i] = true;
    }
  };
  // Anchor values are never rewritten, so the pass is idempotent.
  repair(out.x);
  repair(out.y);
  return out;
}

JointTrajectory smooth_moving_average(const JointTrajectory& traj, int window) {
  const std::size_t m = traj.size();
  if (window < 1 || window % 2 == 0)
    fail(ErrorCode::InvalidParameter,
         "smooth_moving_average: window must be odd and positive, got " +
             std::to_string(window));
  if (static_cast<std::size_t>(window) > m)
    fail(ErrorCode::InvalidParameter,
         "smooth_moving_average: window " + std::to_string(window) +
             " exceeds series length " + std::to_string(m));
  if (window == 1) return traj;

  JointTrajectory out = traj;
  const std::size_t half = static_cast<std::size_t>(window) / 2;
  auto smooth = [&](const std::vector<double>& src, std::vector<double>& dst) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t lo = i >= half ? i - half : 0;
      const std::size_t hi = std::min(m - 1, i + half);
      double acc = 0.0;
      for (std::size_t k = lo; k <= hi; ++k) acc += src[k];
      dst[i] = acc / static_cast<double>(hi - lo + 1);
    }
  };
  smooth(traj.x, out.x);
  smooth(traj.y, out.y);
  return out;
}

}  // namespace lrsym
