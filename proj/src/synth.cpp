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

#include "lrsym/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "lrsym/errors.hpp"

namespace lrsym {

namespace {

constexpr double kPi = std::numbers::pi;

// Each gait cycle is active only inside this phase window; outside it the
// joint holds its position. The margins keep the moving-average window and
// the half-cycle delay away from the record boundaries.
constexpr double kBurstBegin = 0.10;
constexpr double kBurstEnd = 0.27;

// Knob levels below these leave the verdict unchanged (see expected_verdict).
constexpr double kAmpRatioNeutralBand = 0.05;
constexpr double kJitterNeutralRad = 0.15;
constexpr double kDistortionNeutral = 0.05;
// Method I only reacts to the vertical-channel knobs; these are the levels
// beyond which the shifted-correlation is no longer expected to stay high.
constexpr double kJitterRhoBreak = 0.25;
constexpr double kDistortionRhoBreak = 0.40;

// Smooth monotone step: zero slope (and curvature) at both ends.
double smooth_step(double s) { return s - std::sin(2.0 * kPi * s) / (2.0 * kPi); }
// Double-humped variant used for the wrist's forward progression.
double smooth_step2(double s) { return s - std::sin(4.0 * kPi * s) / (4.0 * kPi); }
// Lift bump, zero at both ends.
double bump(double s) { const double t = std::sin(kPi * s); return t * t; }
// Up/down swing bump.
double bump_swing(double s) {
  const double t = std::sin(kPi * s);
  return t * t * std::cos(kPi * s);
}
// Third-harmonic admixtures for the distortion knob.
double bump3_ankle(double s) { const double t = std::sin(3.0 * kPi * s); return t * t; }
double bump3_wrist(double s) {
  const double t = std::sin(3.0 * kPi * s);
  return t * t * std::cos(kPi * s);
}

// Cycle count and burst-local coordinate for continuous frame time t.
struct CyclePos {
  double k;  // completed cycles (floor)
  double s;  // burst-local coordinate in [0, 1]
};

CyclePos cycle_pos(double t, double cycle_frames) {
  const double c = t / cycle_frames;
  const double k = std::floor(c);
  const double phase = c - k;
  double s = (phase - kBurstBegin) / (kBurstEnd - kBurstBegin);
  s = std::clamp(s, 0.0, 1.0);
  return {k, s};
}

struct SideWaveform {
  double delay_frames = 0.0;          // half a cycle for the left side
  double vertical_extra_delay = 0.0;  // jitter knob, frames
  double wrist_vertical_scale = 1.0;  // amp-ratio knob
  double distortion = 0.0;            // third-harmonic knob
  double x_offset = 0.0;
  double y_offset = 0.0;
};

Keypoint eval_joint(JointId joint, double frame, double cycle_frames,
                    double stride, const GaitParams& p, const SideWaveform& w) {
  const double t = frame - w.delay_frames;
  const CyclePos h = cycle_pos(t, cycle_frames);
  const CyclePos v = cycle_pos(t - w.vertical_extra_delay, cycle_frames);

  double x = 0.0, y = 0.0;
  switch (joint) {
    case JointId::RAnkle:
    case JointId::LAnkle:
      x = 300.0 + stride * (h.k + smooth_step(h.s));
      y = 560.0 - p.ankle_amp * (bump(v.s) + w.distortion * bump3_ankle(v.s));
      break;
    case JointId::RWrist:
    case JointId::LWrist:
      x = 320.0 + stride * (h.k + smooth_step2(h.s));
      y = 380.0 - p.wrist_amp * w.wrist_vertical_scale *
                      (bump_swing(v.s) + w.distortion * bump3_wrist(v.s));
      break;
    case JointId::RKnee:
    case JointId::LKnee:
      x = 305.0 + stride * (h.k + smooth_step(h.s));
      y = 470.0 - 0.45 * p.ankle_amp * bump(v.s);
      break;
    case JointId::RHip:
    case JointId::LHip:
      x = 310.0 + stride * (h.k + smooth_step(h.s));
      y = 360.0 - 0.10 * p.ankle_amp * bump(v.s);
      break;
    case JointId::RShoulder:
    case JointId::LShoulder:
      x = 315.0 + stride * (h.k + smooth_step(h.s));
      y = 220.0 - 0.08 * p.ankle_amp * bump(v.s);
      break;
  }
  return Keypoint{x + w.x_offset, y + w.y_offset, 0.9};
}

void validate(const GaitParams& p) {
  auto bad = [](const std::string& msg) { fail(ErrorCode::InvalidParameter, msg); };
  if (p.cycle_frames < 8) bad("cycle_frames must be >= 8");
  if (p.n_strides < 1) bad("n_strides must be >= 1");
  if (p.fps < 1) bad("fps must be >= 1");
  if (!(p.ankle_amp >= 0.0) || !(p.wrist_amp >= 0.0)) bad("amplitudes must be >= 0");
  if (!(p.forward_speed >= 0.0)) bad("forward_speed must be >= 0");
  if (!(p.left_amp_ratio > 0.0)) bad("left_amp_ratio must be > 0");
  if (!std::isfinite(p.left_phase_jitter)) bad("left_phase_jitter must be finite");
  if (!(p.waveform_distortion >= 0.0) || p.waveform_distortion >= 1.0)
    bad("waveform_distortion must be in [0, 1)");
  if (!(p.noise_std >= 0.0)) bad("noise_std must be >= 0");
  if (!(p.dropout_fraction >= 0.0) || p.dropout_fraction >= 1.0)
    bad("dropout_fraction must be in [0, 1)");
}

}  // namespace

std::vector<KeypointFrame> generate_gait(const GaitParams& params) {
  validate(params);

  const double t_cycle = static_cast<double>(params.cycle_frames);
  const long total_frames =
      static_cast<long>(params.n_strides) * params.cycle_frames;
  const double stride = t_cycle * params.forward_speed;
  const double jitter_frames =
      params.left_phase_jitter / (2.0 * kPi) * t_cycle;

  const SideWaveform right{};
  SideWaveform left;
  left.delay_frames = t_cycle / 2.0;
  left.vertical_extra_delay = jitter_frames;
  left.wrist_vertical_scale = params.left_amp_ratio;
  left.distortion = params.waveform_distortion;
  left.x_offset = 4.0;
  left.y_offset = 8.0;

  std::mt19937 rng(params.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  std::vector<KeypointFrame> frames;
  frames.reserve(static_cast<std::size_t>(total_frames));
  for (long n = 0; n < total_frames; ++n) {
    KeypointFrame frame;
    frame.frame_index = n;
    for (JointId id : kAllJoints) {
      const bool is_left = joint_name(id).front() == 'L';
      const SideWaveform& side = is_left ? left : right;
      Keypoint kp = eval_joint(id, static_cast<double>(n), t_cycle, stride,
                               params, side);
      // The RNG stream is consumed in the same order regardless of the
      // noise/dropout settings, so the dropout pattern only depends on the
      // seed and the fraction.
      const double nx = gauss(rng);
      const double ny = gauss(rng);
      const double drop = uniform(rng);
      kp.x += params.noise_std * nx;
      kp.y += params.noise_std * ny;
      if (drop < params.dropout_fraction) {
        // Unrecorded reading: coordinates lost, confidence below the gate.
        kp = Keypoint{0.0, 0.0, 0.2};
      }
      frame.joint(id) = kp;
    }
    frames.push_back(frame);
  }
  return frames;
}

ExpectedVerdict expected_verdict(const GaitParams& params) {
  ExpectedVerdict verdict;
  verdict.method1_high_rho =
      std::abs(params.left_phase_jitter) <= kJitterRhoBreak &&
      params.waveform_distortion <= kDistortionRhoBreak;

  // The left wrist's vertical series feeds the u = a*y product of the HV
  // and VV cases; scaling it moves both.
  if (std::abs(params.left_amp_ratio - 1.0) > kAmpRatioNeutralBand) {
    verdict.asymmetric_cases.insert(CouplingCase::HV);
    verdict.asymmetric_cases.insert(CouplingCase::VV);
  }
  // A common extra delay on both left vertical channels cancels inside VV
  // (and trivially HH) but breaks the mixed cases.
  if (std::abs(params.left_phase_jitter) > kJitterNeutralRad) {
    verdict.asymmetric_cases.insert(CouplingCase::HV);
    verdict.asymmetric_cases.insert(CouplingCase::VH);
  }
  // Distinct third-harmonic content on the two left vertical channels
  // breaks every case that touches them.
  if (params.waveform_distortion > kDistortionNeutral) {
    verdict.asymmetric_cases.insert(CouplingCase::HV);
    verdict.asymmetric_cases.insert(CouplingCase::VH);
    verdict.asymmetric_cases.insert(CouplingCase::VV);
  }
  return verdict;
}

}  // namespace lrsym
