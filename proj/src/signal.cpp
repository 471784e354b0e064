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

#include "lrsym/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "lrsym/errors.hpp"

namespace lrsym {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using cdouble = std::complex<double>;

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

// In-place iterative radix-2 FFT. sign = -1 forward, +1 inverse
// (inverse leaves the 1/N scaling to the caller).
void fft_pow2(std::vector<cdouble>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const cdouble wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cdouble w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cdouble u = a[i + k];
        cdouble t = a[i + k + len / 2] * w;
        a[i + k] = u + t;
        a[i + k + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> convolve_direct(std::span<const double> a,
                                    std::span<const double> b) {
  const std::size_t n = a.size();
  std::vector<double> out(2 * n - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<double> convolve_fft(std::span<const double> a,
                                 std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<cdouble> fa(m), fb(m);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = a[i];
    fb[i] = b[i];
  }
  fft_pow2(fa, -1);
  fft_pow2(fb, -1);
  for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  fft_pow2(fa, +1);
  std::vector<double> out(2 * n - 1);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = fa[i].real() / static_cast<double>(m);
  return out;
}

}  // namespace

std::string_view speed_mode_name(SpeedMode mode) {
  switch (mode) {
    case SpeedMode::SignedSum: return "signed-sum";
    case SpeedMode::AbsSum: return "abs-sum";
    case SpeedMode::Euclidean: return "euclidean";
    case SpeedMode::Horizontal: return "horizontal";
    case SpeedMode::Vertical: return "vertical";
  }
  return "?";
}

std::optional<SpeedMode> speed_mode_from_name(std::string_view name) {
  for (SpeedMode m : {SpeedMode::SignedSum, SpeedMode::AbsSum,
                      SpeedMode::Euclidean, SpeedMode::Horizontal,
                      SpeedMode::Vertical})
    if (name == speed_mode_name(m)) return m;
  return std::nullopt;
}

SpeedSeries speed_series(const JointTrajectory& traj, SpeedMode mode) {
  const std::size_t m = traj.size();
  if (m < 2)
    fail(ErrorCode::InvalidInput, "speed_series: trajectory shorter than 2 samples");
  SpeedSeries out;
  out.mode = mode;
  out.source = traj.joint;
  out.values.resize(m - 1);
  for (std::size_t n = 0; n + 1 < m; ++n) {
    const double dx = traj.x[n + 1] - traj.x[n];
    const double dy = traj.y[n + 1] - traj.y[n];
    if (!std::isfinite(dx) || !std::isfinite(dy))
      fail(ErrorCode::InvalidInput,
           std::string("speed_series: unrepaired gap in joint ") +
               std::string(joint_name(traj.joint)) + " near frame " +
               std::to_string(n));
    double v = 0.0;
    switch (mode) {
      case SpeedMode::SignedSum: v = dx + dy; break;
      case SpeedMode::AbsSum: v = std::abs(dx) + std::abs(dy); break;
      case SpeedMode::Euclidean: v = std::hypot(dx, dy); break;
      case SpeedMode::Horizontal: v = dx; break;
      case SpeedMode::Vertical: v = dy; break;
    }
    out.values[n] = v;
  }
  return out;
}

SpectrumCoefficients dft(std::span<const double> series) {
  const std::size_t m = series.size();
  if (m == 0) fail(ErrorCode::InvalidInput, "dft: empty series");
  if (!all_finite(series)) fail(ErrorCode::InvalidInput, "dft: non-finite sample");
  SpectrumCoefficients spec;
  spec.original_length = m;
  spec.coefficients.resize(m);
  // Direct evaluation; record lengths here are a few hundred samples at
  // most. The k*n product is reduced mod M before the angle is formed so
  // the twiddle argument never grows.
  for (std::size_t k = 0; k < m; ++k) {
    cdouble acc(0.0, 0.0);
    for (std::size_t n = 0; n < m; ++n) {
      const double ang = -kTwoPi * static_cast<double>((k * n) % m) /
                         static_cast<double>(m);
      acc += series[n] * cdouble(std::cos(ang), std::sin(ang));
    }
    spec.coefficients[k] = acc;
  }
  return spec;
}

std::vector<double> idft(const SpectrumCoefficients& spec) {
  const std::size_t m = spec.original_length;
  if (m == 0 || spec.coefficients.size() != m)
    fail(ErrorCode::InvalidInput, "idft: inconsistent spectrum length");

  double max_mag = 0.0;
  for (const cdouble& c : spec.coefficients)
    max_mag = std::max(max_mag, std::abs(c));
  // Conjugate symmetry X(k) == conj(X(M-k)) is what makes the inverse
  // real; reject spectra that cannot have come from a real signal.
  const double sym_tol = 1e-9 * std::max(1.0, max_mag);
  for (std::size_t k = 0; k < m; ++k) {
    const cdouble mirror = std::conj(spec.coefficients[(m - k) % m]);
    if (std::abs(spec.coefficients[k] - mirror) > sym_tol)
      fail(ErrorCode::InvalidSpectrum,
           "idft: spectrum is not conjugate symmetric (bin " +
               std::to_string(k) + ")");
  }

  std::vector<double> out(m);
  double max_imag = 0.0;
  for (std::size_t n = 0; n < m; ++n) {
    cdouble acc(0.0, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      const double ang = kTwoPi * static_cast<double>((k * n) % m) /
                         static_cast<double>(m);
      acc += spec.coefficients[k] * cdouble(std::cos(ang), std::sin(ang));
    }
    acc /= static_cast<double>(m);
    max_imag = std::max(max_imag, std::abs(acc.imag()));
    out[n] = acc.real();
  }
  if (max_imag > 1e-6)
    fail(ErrorCode::InvalidSpectrum,
         "idft: imaginary residue " + std::to_string(max_imag) +
             " exceeds 1e-6");
  return out;
}

std::vector<double> fractional_circular_shift(std::span<const double> series,
                                              double shift_frames) {
  const std::size_t m = series.size();
  if (m < 2) fail(ErrorCode::InvalidInput, "fractional_circular_shift: need >= 2 samples");
  SpectrumCoefficients spec = dft(series);
  const double md = static_cast<double>(m);
  for (std::size_t k = 1; k < (m + 1) / 2; ++k) {
    const double ang = -kTwoPi * static_cast<double>(k) * shift_frames / md;
    const cdouble ramp(std::cos(ang), std::sin(ang));
    spec.coefficients[k] *= ramp;
    spec.coefficients[m - k] *= std::conj(ramp);
  }
  if (m % 2 == 0) {
    // Real output forces a real gain on the unpaired Nyquist bin. This
    // attenuates Nyquist content for non-integer shifts.
    spec.coefficients[m / 2] *= std::cos(std::numbers::pi * shift_frames);
  }
  return idft(spec);
}

std::vector<double> linear_convolution(std::span<const double> a,
                                       std::span<const double> b) {
  if (a.size() != b.size())
    fail(ErrorCode::InvalidInput, "linear_convolution: length mismatch");
  if (a.empty()) fail(ErrorCode::InvalidInput, "linear_convolution: empty input");
  if (!all_finite(a) || !all_finite(b))
    fail(ErrorCode::InvalidInput, "linear_convolution: non-finite sample");
  if (a.size() < 16) return convolve_direct(a, b);
  return convolve_fft(a, b);
}

std::vector<double> autocorrelation(std::span<const double> series) {
  const std::size_t m = series.size();
  if (m < 4) fail(ErrorCode::InvalidInput, "autocorrelation: need >= 4 samples");
  if (!all_finite(series))
    fail(ErrorCode::InvalidInput, "autocorrelation: non-finite sample");
  const double mean =
      std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(m);
  std::vector<double> centered(m);
  for (std::size_t i = 0; i < m; ++i) centered[i] = series[i] - mean;
  const double denom =
      std::inner_product(centered.begin(), centered.end(), centered.begin(), 0.0);
  if (denom <= 0.0)
    fail(ErrorCode::DegenerateSignal, "autocorrelation: zero-variance series");
  std::vector<double> r(m);
  for (std::size_t tau = 0; tau < m; ++tau) {
    double acc = 0.0;
    for (std::size_t n = 0; n + tau < m; ++n) acc += centered[n] * centered[n + tau];
    r[tau] = acc / denom;
  }
  return r;
}

CycleEstimate estimate_cycle(std::span<const double> series,
                             const CycleSearchParams& params) {
  const std::size_t m = series.size();
  const int max_lag =
      params.max_lag > 0 ? params.max_lag : static_cast<int>(m / 2);
  if (params.min_lag < 1 || max_lag <= params.min_lag)
    fail(ErrorCode::InvalidParameter,
         "estimate_cycle: lag window [" + std::to_string(params.min_lag) +
             ", " + std::to_string(max_lag) + "] is empty" +
             (params.max_lag == 0
                  ? " (a record of " + std::to_string(m) +
                        " samples caps the automatic max_lag at " +
                        std::to_string(m / 2) + ")"
                  : ""));
  const std::vector<double> r = autocorrelation(series);

  // Highest local maximum wins; the strict > keeps ties on the smaller lag.
  int best_lag = 0;
  double best_r = -2.0;
  const int hi = std::min<int>(max_lag, static_cast<int>(m) - 2);
  for (int tau = params.min_lag; tau <= hi; ++tau) {
    if (r[tau] >= r[tau - 1] && r[tau] >= r[tau + 1] &&
        r[tau] >= params.min_peak && r[tau] > best_r) {
      best_r = r[tau];
      best_lag = tau;
    }
  }
  if (best_lag == 0)
    fail(ErrorCode::NoPeriodicity,
         "estimate_cycle: no autocorrelation peak >= " +
             std::to_string(params.min_peak) + " in lag range [" +
             std::to_string(params.min_lag) + ", " + std::to_string(max_lag) +
             "]");
  return CycleEstimate{best_lag, best_r, params.min_lag, max_lag};
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    fail(ErrorCode::InvalidInput, "pearson: length mismatch");
  const std::size_t m = x.size();
  if (m < 2) fail(ErrorCode::InvalidInput, "pearson: need >= 2 samples");
  const double mx =
      std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(m);
  const double my =
      std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(m);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    fail(ErrorCode::DegenerateSignal, "pearson: zero-variance input");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace lrsym
