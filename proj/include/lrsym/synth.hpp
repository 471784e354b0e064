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

#ifndef LRSYM_SYNTH_HPP
#define LRSYM_SYNTH_HPP

#include <set>

#include "lrsym/ingest.hpp"
#include "lrsym/symmetry.hpp"

namespace lrsym {

/// Parametric gait generator with controllable left/right symmetry.
///
/// Joint motion is built from per-cycle speed bursts (position changes
/// only inside a fixed phase window of each cycle and is frozen outside
/// it, the way an ankle stands still during stance). Left-side joints
/// replay the right-side waveforms half a cycle later, so with all three
/// asymmetry knobs neutral the left speed series is a zero-padded delayed
/// copy of the right one and both symmetry metrics sit at their floor.
/// For even cycle_frames the half-cycle delay is a whole number of frames
/// and the copy is sample-exact.
///
/// Asymmetry knobs (all act on the left side only):
///  - left_amp_ratio scales the left wrist's vertical oscillation;
///  - left_phase_jitter (radians) delays the left vertical components
///    (ankle and wrist together) relative to the left horizontal ones;
///  - waveform_distortion admixes a third-harmonic bump into the left
///    vertical components.
/// Horizontal components are never touched, so the HH coupling case stays
/// symmetric under every knob.
struct GaitParams {
  int cycle_frames = 33;  // T; >= 8
  int n_strides = 3;      // total frames = n_strides * T
  int fps = 30;           // metadata only
  double ankle_amp = 50.0;       // vertical ankle lift, pixels
  double wrist_amp = 30.0;       // vertical wrist swing, pixels
  double forward_speed = 2.5;    // net drift, pixels/frame
  double left_amp_ratio = 1.0;   // 1.0 = symmetric
  double left_phase_jitter = 0.0;  // radians; 0 = symmetric
  double waveform_distortion = 0.0;  // [0, 1); 0 = symmetric
  double noise_std = 0.0;        // Gaussian pixel noise
  double dropout_fraction = 0.0;  // [0, 1) share of low-confidence readings
  unsigned seed = 42;
};

/// What the analysis pipeline is expected to conclude for a parameter
/// set, derived from the documented knob thresholds. asymmetric_cases
/// lists the coupling cases whose dissimilarity must strictly exceed the
/// knob-neutral baseline.
struct ExpectedVerdict {
  bool method1_high_rho = true;
  std::set<CouplingCase> asymmetric_cases;
};

/// Deterministic: identical params (including seed) give identical frames.
std::vector<KeypointFrame> generate_gait(const GaitParams& params);

ExpectedVerdict expected_verdict(const GaitParams& params);

}  // namespace lrsym

#endif
