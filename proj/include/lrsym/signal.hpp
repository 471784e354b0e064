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

#ifndef LRSYM_SIGNAL_HPP
#define LRSYM_SIGNAL_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lrsym/ingest.hpp"

namespace lrsym {

/// How a per-frame velocity value is derived from the coordinate deltas
/// (dx, dy) between consecutive frames.
enum class SpeedMode {
  SignedSum,   // dx + dy
  AbsSum,      // |dx| + |dy|
  Euclidean,   // sqrt(dx^2 + dy^2)
  Horizontal,  // dx
  Vertical,    // dy
};

std::string_view speed_mode_name(SpeedMode mode);
std::optional<SpeedMode> speed_mode_from_name(std::string_view name);

/// Per-frame velocity of one joint, in pixels/frame. One sample shorter
/// than the source trajectory.
struct SpeedSeries {
  std::vector<double> values;
  SpeedMode mode = SpeedMode::SignedSum;
  JointId source = JointId::RAnkle;

  std::size_t size() const { return values.size(); }
};

/// Full complex DFT of a real series, X(k) for k = 0..M-1.
struct SpectrumCoefficients {
  std::vector<std::complex<double>> coefficients;
  std::size_t original_length = 0;
};

/// Gait cycle length from autocorrelation peak picking.
struct CycleEstimate {
  int period_frames = 0;
  double peak_acf = 0.0;
  int min_lag = 0;
  int max_lag = 0;
};

struct CycleSearchParams {
  int min_lag = 15;
  int max_lag = 0;  // 0 = floor(M / 2)
  double min_peak = 0.2;
};

/// Velocity series from a repaired trajectory. Fails on any non-finite
/// sample (an unrepaired gap).
SpeedSeries speed_series(const JointTrajectory& traj, SpeedMode mode);

/// X(k) = sum_n x(n) exp(-j 2 pi k n / M), k = 0..M-1.
SpectrumCoefficients dft(std::span<const double> series);

/// x(n) = (1/M) sum_k X(k) exp(+j 2 pi k n / M). The spectrum must be
/// conjugate symmetric (i.e. come from a real signal); the imaginary
/// residue of the reconstruction must stay below 1e-6.
std::vector<double> idft(const SpectrumCoefficients& spec);

/// Circularly delays the series by a (possibly fractional) number of
/// samples. Realized as the phase ramp exp(-j 2 pi k d / M) applied with
/// conjugate factors on mirrored bins; for even M the Nyquist bin is
/// scaled by cos(pi d) so the output stays real. Positive d moves content
/// toward higher indices.
std::vector<double> fractional_circular_shift(std::span<const double> series,
                                              double shift_frames);

/// Linear convolution of two equal-length series; output length 2N-1.
/// Large inputs go through a radix-2 FFT, small ones through the direct
/// sum; both agree within 1e-9 relative.
std::vector<double> linear_convolution(std::span<const double> a,
                                       std::span<const double> b);

/// Normalized (biased) autocorrelation r[tau], tau = 0..M-1, with the
/// mean removed and the lag-0 sum as denominator; r[0] = 1.
std::vector<double> autocorrelation(std::span<const double> series);

/// Picks the dominant period as the highest local autocorrelation maximum
/// with r >= min_peak inside [min_lag, max_lag]; ties break toward the
/// smaller lag.
CycleEstimate estimate_cycle(std::span<const double> series,
                             const CycleSearchParams& params = {});

/// Pearson correlation coefficient with population (1/M) normalization.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace lrsym

#endif
