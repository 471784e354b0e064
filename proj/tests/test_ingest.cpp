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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lrsym/errors.hpp"
#include "lrsym/ingest.hpp"
#include "lrsym/synth.hpp"

using namespace lrsym;
namespace fs = std::filesystem;

namespace {

// Self-cleaning fixture directory under the system temp dir.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() /
           ("lrsym_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

// One OpenPose-style frame file. Every person is a 25-keypoint flat array;
// joints not listed in `set` default to (0, 0, conf).
nlohmann::json person_json(double conf,
                           const std::map<int, std::array<double, 3>>& set = {}) {
  std::vector<double> kp(75, 0.0);
  for (int i = 0; i < 25; ++i) kp[3 * i + 2] = conf;
  for (const auto& [idx, v] : set) {
    kp[3 * idx + 0] = v[0];
    kp[3 * idx + 1] = v[1];
    kp[3 * idx + 2] = v[2];
  }
  return nlohmann::json{{"pose_keypoints_2d", kp}};
}

void write_frame_file(const fs::path& file, std::vector<nlohmann::json> people) {
  nlohmann::json doc;
  doc["version"] = 1.3;
  doc["people"] = people;
  std::ofstream out(file);
  out << doc.dump();
}

std::string csv_header() { return "frame,joint,x,y,confidence\n"; }

JointTrajectory traj_from_x(std::vector<double> x, std::vector<double> conf) {
  JointTrajectory t;
  t.joint = JointId::LKnee;
  t.x = x;
  t.y = std::vector<double>(x.size(), 0.0);
  t.confidence = std::move(conf);
  t.gap_mask.assign(x.size(), false);
  return t;
}

}  // namespace

TEST_CASE("joint table round trips and mirrors") {
  for (JointId id : kAllJoints) {
    CHECK(joint_from_name(joint_name(id)) == id);
    CHECK(mirror_joint(mirror_joint(id)) == id);
    CHECK(mirror_joint(id) != id);
  }
  CHECK(!joint_from_name("RElbow").has_value());
  CHECK(body25_index(JointId::RShoulder) == 2);
  CHECK(body25_index(JointId::RWrist) == 4);
  CHECK(body25_index(JointId::LShoulder) == 5);
  CHECK(body25_index(JointId::LWrist) == 7);
  CHECK(body25_index(JointId::RHip) == 9);
  CHECK(body25_index(JointId::RKnee) == 10);
  CHECK(body25_index(JointId::RAnkle) == 11);
  CHECK(body25_index(JointId::LHip) == 12);
  CHECK(body25_index(JointId::LKnee) == 13);
  CHECK(body25_index(JointId::LAnkle) == 14);
}

TEST_CASE("parse_openpose_dir reads a well-formed sequence") {
  TempDir dir("openpose_ok");
  for (int i = 0; i < 80; ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "clip_%012d_keypoints.json", i);
    write_frame_file(dir.path / name,
                     {person_json(0.9, {{11, {100.0 + i, 200.0, 0.95}}})});
  }
  const auto frames = parse_openpose_dir(dir.path);
  REQUIRE(frames.size() == 80);
  CHECK(frames.front().frame_index == 0);
  CHECK(frames.back().frame_index == 79);
  CHECK(frames[5].joint(JointId::RAnkle).x == doctest::Approx(105.0));
  CHECK(frames[5].joint(JointId::RAnkle).confidence == doctest::Approx(0.95));
}

TEST_CASE("parse_openpose_dir: empty people list gives zero confidence") {
  TempDir dir("openpose_empty");
  write_frame_file(dir.path / "f_000.json", {person_json(0.8)});
  write_frame_file(dir.path / "f_001.json", {});
  const auto frames = parse_openpose_dir(dir.path);
  REQUIRE(frames.size() == 2);
  for (JointId id : kAllJoints)
    CHECK(frames[1].joint(id).confidence == 0.0);
}

TEST_CASE("parse_openpose_dir: highest summed confidence wins") {
  TempDir dir("openpose_two");
  // person 0 sums to 25 * 0.248 = 6.2; person 1 to 25 * 0.72 = 18.0
  write_frame_file(dir.path / "f_000.json",
                   {person_json(0.248, {{11, {1.0, 1.0, 0.248}}}),
                    person_json(0.72, {{11, {500.0, 300.0, 0.72}}})});
  write_frame_file(dir.path / "f_001.json", {person_json(0.9)});
  const auto frames = parse_openpose_dir(dir.path);
  CHECK(frames[0].joint(JointId::RAnkle).x == doctest::Approx(500.0));
  CHECK(frames[0].joint(JointId::RAnkle).confidence == doctest::Approx(0.72));
}

TEST_CASE("parse_openpose_dir error paths") {
  TempDir dir("openpose_bad");
  write_frame_file(dir.path / "f_000.json", {person_json(0.9)});
  CHECK_THROWS_WITH_AS(parse_openpose_dir(dir.path),
                       doctest::Contains("at least 2"), Error);

  {
    std::ofstream out(dir.path / "f_001.json");
    out << "{ not json";
  }
  try {
    parse_openpose_dir(dir.path);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("f_001.json") != std::string::npos);
  }
}

TEST_CASE("parse_keypoint_csv assembles frames") {
  std::ostringstream csv;
  csv << csv_header();
  for (int f = 0; f < 3; ++f)
    for (JointId id : kAllJoints)
      csv << f << ',' << joint_name(id) << ',' << (10.0 * f) << ",5,0.9\n";
  std::istringstream in(csv.str());
  const auto frames = parse_keypoint_csv(in);
  REQUIRE(frames.size() == 3);
  for (int f = 0; f < 3; ++f)
    for (JointId id : kAllJoints) {
      CHECK(frames[f].joint(id).x == doctest::Approx(10.0 * f));
      CHECK(frames[f].joint(id).confidence == doctest::Approx(0.9));
    }
}

TEST_CASE("parse_keypoint_csv error and absence conventions") {
  {
    std::istringstream in(csv_header() +
                          "0,RElbow,1,2,0.9\n");
    try {
      parse_keypoint_csv(in);
      FAIL("expected parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
      CHECK(std::string(e.what()).find("RElbow") != std::string::npos);
    }
  }
  {
    std::istringstream in(csv_header() + "0,RAnkle,1,oops,0.9\n");
    try {
      parse_keypoint_csv(in);
      FAIL("expected parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  {
    std::istringstream in("frame;joint\n");
    CHECK_THROWS_AS(parse_keypoint_csv(in), Error);
  }
  {
    // frame 5 lacks LWrist: the entry exists with confidence 0
    std::ostringstream csv;
    csv << csv_header();
    for (int f = 0; f < 7; ++f)
      for (JointId id : kAllJoints) {
        if (f == 5 && id == JointId::LWrist) continue;
        csv << f << ',' << joint_name(id) << ",1,2,0.8\n";
      }
    std::istringstream in(csv.str());
    const auto frames = parse_keypoint_csv(in);
    REQUIRE(frames.size() == 7);
    CHECK(frames[5].joint(JointId::LWrist).confidence == 0.0);
    CHECK(frames[5].joint(JointId::RWrist).confidence == doctest::Approx(0.8));
  }
  {
    // a wholly missing frame index is filled in as an empty frame
    std::ostringstream csv;
    csv << csv_header();
    for (int f : {0, 1, 3})
      csv << f << ",RAnkle,1,2,0.8\n";
    std::istringstream in(csv.str());
    const auto frames = parse_keypoint_csv(in);
    REQUIRE(frames.size() == 4);
    CHECK(frames[2].frame_index == 2);
    CHECK(frames[2].joint(JointId::RAnkle).confidence == 0.0);
    // contiguity invariant
    for (std::size_t i = 1; i < frames.size(); ++i)
      CHECK(frames[i].frame_index == frames[i - 1].frame_index + 1);
  }
}

TEST_CASE("csv round trip is lossless") {
  GaitParams params;
  params.noise_std = 0.7;  // irrational-looking doubles
  params.dropout_fraction = 0.1;
  params.seed = 9;
  const auto frames = generate_gait(params);

  std::ostringstream first;
  write_keypoint_csv(first, frames);
  std::istringstream back(first.str());
  const auto reparsed = parse_keypoint_csv(back);

  REQUIRE(reparsed.size() == frames.size());
  for (std::size_t f = 0; f < frames.size(); ++f) {
    CHECK(reparsed[f].frame_index == frames[f].frame_index);
    for (JointId id : kAllJoints) {
      CHECK(reparsed[f].joint(id).x == frames[f].joint(id).x);
      CHECK(reparsed[f].joint(id).y == frames[f].joint(id).y);
      CHECK(reparsed[f].joint(id).confidence == frames[f].joint(id).confidence);
    }
  }

  std::ostringstream second;
  write_keypoint_csv(second, reparsed);
  CHECK(first.str() == second.str());
}

TEST_CASE("extract_trajectory copies fields and flags structural gaps") {
  std::vector<KeypointFrame> frames(80);
  for (int f = 0; f < 80; ++f) {
    frames[f].frame_index = f;
    for (JointId id : kAllJoints)
      frames[f].joint(id) = Keypoint{100.0, 200.0, f % 2 == 0 ? 0.9 : 0.3};
  }
  const JointTrajectory t = extract_trajectory(frames, JointId::RAnkle);
  REQUIRE(t.size() == 80);
  CHECK(t.joint == JointId::RAnkle);
  for (int f = 0; f < 80; ++f) {
    CHECK(t.x[f] == 100.0);
    CHECK(t.confidence[f] == doctest::Approx(f % 2 == 0 ? 0.9 : 0.3));
    CHECK(!t.gap_mask[f]);
  }

  frames[3].joint(JointId::RAnkle).confidence = 0.0;
  const JointTrajectory gappy = extract_trajectory(frames, JointId::RAnkle);
  CHECK(gappy.gap_mask[3]);
  CHECK(std::isnan(gappy.x[3]));

  CHECK_THROWS_AS(extract_trajectory({frames[0]}, JointId::RAnkle), Error);
}

TEST_CASE("interpolate_gaps repairs interior and boundary gaps") {
  {
    auto t = traj_from_x({10, 123, 30}, {0.9, 0.2, 0.9});
    const auto r = interpolate_gaps(t);
    CHECK(r.x == std::vector<double>{10, 20, 30});
    CHECK(r.gap_mask[1]);
    CHECK(!r.gap_mask[0]);
  }
  {
    auto t = traj_from_x({7, 7, 50, 60}, {0.1, 0.1, 0.9, 0.9});
    const auto r = interpolate_gaps(t);
    CHECK(r.x == std::vector<double>{50, 50, 50, 60});
  }
  {
    // line through (0, 0) and (3, 9) evaluated at 1 and 2
    auto t = traj_from_x({0, -1, -1, 9}, {0.9, 0.4, 0.4, 0.9});
    const auto r = interpolate_gaps(t);
    CHECK(r.x == std::vector<double>{0, 3, 6, 9});
  }
  {
    // trailing gap holds the last anchor
    auto t = traj_from_x({1, 2, 99}, {0.9, 0.9, 0.3});
    const auto r = interpolate_gaps(t);
    CHECK(r.x == std::vector<double>{1, 2, 2});
  }
}

TEST_CASE("interpolate_gaps invariants") {
  auto t = traj_from_x({5, 0, 8, 0, 0, 11, 2}, {0.9, 0.1, 0.9, 0.0, 0.2, 0.9, 0.9});
  t.x[3] = std::numeric_limits<double>::quiet_NaN();
  const auto once = interpolate_gaps(t);

  // trusted samples untouched
  CHECK(once.x[0] == 5.0);
  CHECK(once.x[2] == 8.0);
  CHECK(once.x[5] == 11.0);
  CHECK(once.x[6] == 2.0);
  // all finite afterwards
  for (double v : once.x) CHECK(std::isfinite(v));
  // mask covers exactly the low-confidence indices
  for (std::size_t i = 0; i < once.size(); ++i)
    CHECK(once.gap_mask[i] == (once.confidence[i] <= 0.5));

  const auto twice = interpolate_gaps(once);
  CHECK(twice.x == once.x);
  CHECK(twice.y == once.y);
  CHECK(twice.gap_mask == once.gap_mask);
}

TEST_CASE("interpolate_gaps rejects fully occluded joints") {
  auto t = traj_from_x({1, 2, 3}, {0.2, 0.5, 0.1});
  try {
    interpolate_gaps(t, 0.5);
    FAIL("expected all-occluded error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllOccluded);
    CHECK(std::string(e.what()).find("LKnee") != std::string::npos);
  }
}

TEST_CASE("smooth_moving_average") {
  {
    auto t = traj_from_x({5, 5, 5, 5}, std::vector<double>(4, 0.9));
    CHECK(smooth_moving_average(t, 3).x == std::vector<double>{5, 5, 5, 5});
  }
  {
    auto t = traj_from_x({0, 3, 0, 3, 0}, std::vector<double>(5, 0.9));
    const auto s = smooth_moving_average(t, 3);
    CHECK(s.x == std::vector<double>{1.5, 1, 2, 1, 1.5});
  }
  {
    auto t = traj_from_x({4, 8, 1}, {0.9, 0.2, 0.9});
    const auto s = smooth_moving_average(t, 1);
    CHECK(s.x == t.x);
    CHECK(s.confidence == t.confidence);
  }
  {
    auto t = traj_from_x({1, 2, 3, 4}, std::vector<double>(4, 0.9));
    CHECK_THROWS_AS(smooth_moving_average(t, 2), Error);
    CHECK_THROWS_AS(smooth_moving_average(t, 0), Error);
    CHECK_THROWS_AS(smooth_moving_average(t, -3), Error);
    CHECK_THROWS_AS(smooth_moving_average(t, 5), Error);
  }
  {
    // confidence and gap mask pass through
    auto t = traj_from_x({1, 5, 9}, {0.9, 0.2, 0.9});
    t.gap_mask[1] = true;
    const auto s = smooth_moving_average(t, 3);
    CHECK(s.confidence == t.confidence);
    CHECK(s.gap_mask == t.gap_mask);
  }
}
