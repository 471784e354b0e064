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

#include "lrsym.h"

#include <memory>
#include <string>

#include "lrsym/analysis.hpp"
#include "lrsym/errors.hpp"
#include "lrsym/report.hpp"

struct lrs_options {
  lrsym::AnalysisConfig config;
};

struct lrs_analysis {
  lrsym::AnalysisResult result;
};

struct lrs_synth_params {
  lrsym::GaitParams params;
};

namespace {

thread_local std::string g_last_error;

lrs_status status_from(lrsym::ErrorCode code) {
  using lrsym::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InsufficientData:
    case ErrorCode::MissingData:
    case ErrorCode::IoError:
      return LRS_ERR_INPUT;
    case ErrorCode::DegenerateSignal:
    case ErrorCode::NoPeriodicity:
    case ErrorCode::AmbiguousCycle:
    case ErrorCode::AllOccluded:
    case ErrorCode::InsufficientRecord:
      return LRS_ERR_DEGENERATE;
    case ErrorCode::InvalidParameter:
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidSpectrum:
      return LRS_ERR_PARAM;
  }
  return LRS_ERR_INTERNAL;
}

lrs_status set_error(lrs_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
lrs_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const lrsym::Error& e) {
    return set_error(status_from(e.code()), e.what());
  } catch (const std::exception& e) {
    return set_error(LRS_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(LRS_ERR_INTERNAL, "unknown failure");
  }
}

lrs_status require(bool ok, const char* what) {
  return ok ? LRS_OK : set_error(LRS_ERR_PARAM, what);
}

}  // namespace

extern "C" {

const char* lrs_version(void) { return "1.0.0"; }

const char* lrs_last_error(void) { return g_last_error.c_str(); }

/* ---- options ---------------------------------------------------------- */

lrs_options* lrs_options_new(void) { return new (std::nothrow) lrs_options; }

void lrs_options_free(lrs_options* opts) { delete opts; }

lrs_status lrs_options_set_format(lrs_options* opts, lrs_format format) {
  if (lrs_status s = require(opts != nullptr, "null options"); s != LRS_OK) return s;
  switch (format) {
    case LRS_FORMAT_AUTO: opts->config.format = lrsym::InputFormat::Auto; break;
    case LRS_FORMAT_OPENPOSE_DIR:
      opts->config.format = lrsym::InputFormat::OpenPoseDir;
      break;
    case LRS_FORMAT_CSV: opts->config.format = lrsym::InputFormat::Csv; break;
    default: return set_error(LRS_ERR_PARAM, "unknown input format");
  }
  return LRS_OK;
}

lrs_status lrs_options_set_confidence_threshold(lrs_options* opts, double value) {
  if (lrs_status s = require(opts != nullptr, "null options"); s != LRS_OK) return s;
  if (!(value >= 0.0) || !(value <= 1.0))
    return set_error(LRS_ERR_PARAM, "confidence threshold must be in [0, 1]");
  opts->config.confidence_threshold = value;
  return LRS_OK;
}

lrs_status lrs_options_set_smooth_window(lrs_options* opts, int window) {
  if (lrs_status s = require(opts != nullptr, "null options"); s != LRS_OK) return s;
  if (window < 1 || window % 2 == 0)
    return set_error(LRS_ERR_PARAM, "smoothing window must be odd and positive");
  opts->config.smooth_window = window;
  return LRS_OK;
}

lrs_status lrs_options_set_speed_mode(lrs_options* opts, lrs_speed_mode mode) {
  if (lrs_status s = require(opts != nullptr, "null options"); s != LRS_OK) return s;
  switch (mode) {
    case LRS_SPEED_SIGNED_SUM:
      opts->config.method1_speed_mode = lrsym::SpeedMode::SignedSum;
      break;
    case LRS_SPEED_ABS_SUM:
      opts->config.method1_speed_mode = lrsym::SpeedMode::AbsSum;
      break;
    case LRS_SPEED_EUCLIDEAN:
      opts->config.method1_speed_mode = lrsym::SpeedMode::Euclidean;
      break;
    case LRS_SPEED_HORIZONTAL:
      opts->config.method1_speed_mode = lrsym::SpeedMode::Horizontal;
      break;
    case LRS_SPEED_VERTICAL:
      opts->config.method1_speed_mode = lrsym::SpeedMode::Vertical;
      break;
    default: return set_error(LRS_ERR_PARAM, "unknown speed mode");
  }
  return LRS_OK;
}

lrs_status lrs_options_set_cycle_search(lrs_options* opts, int min_lag,
                                        int max_lag, double min_peak) {
  if (lrs_status s = require(opts != nullptr, "null options"); s != LRS_OK) return s;
  if (min_lag < 1) return set_error(LRS_ERR_PARAM, "min_lag must be >= 1");
  if (max_lag != 0 && max_lag <= min_lag)
    return set_error(LRS_ERR_PARAM, "max_lag must be 0 (auto) or > min_lag");
  if (!(min_peak > -1.0) || !(min_peak <= 1.0))
    return set_error(LRS_ERR_PARAM, "min_peak must be in (-1, 1]");
  opts->config.cycle_search = lrsym::CycleSearchParams{min_lag, max_lag, min_peak};
  return LRS_OK;
}

lrs_status lrs_options_set_dis_threshold(lrs_options* opts, double value) {
  if (lrs_status s = require(opts != nullptr, "null options"); s != LRS_OK) return s;
  if (!(value > 0.0))
    return set_error(LRS_ERR_PARAM, "dissimilarity threshold must be > 0");
  opts->config.dis_threshold = value;
  return LRS_OK;
}

lrs_status lrs_options_set_demean(lrs_options* opts, int enabled) {
  if (lrs_status s = require(opts != nullptr, "null options"); s != LRS_OK) return s;
  opts->config.demean = enabled != 0;
  return LRS_OK;
}

lrs_status lrs_options_set_subject(lrs_options* opts, const char* name) {
  if (lrs_status s = require(opts != nullptr && name != nullptr, "null argument");
      s != LRS_OK)
    return s;
  opts->config.subject = name;
  return LRS_OK;
}

lrs_status lrs_options_set_stages(lrs_options* opts, unsigned stage_mask) {
  if (lrs_status s = require(opts != nullptr, "null options"); s != LRS_OK) return s;
  if (stage_mask == 0 || (stage_mask & ~static_cast<unsigned>(LRS_STAGE_ALL)) != 0)
    return set_error(LRS_ERR_PARAM, "invalid stage mask");
  opts->config.stages = stage_mask;
  return LRS_OK;
}

/* ---- analysis --------------------------------------------------------- */

lrs_status lrs_analyze(const lrs_options* opts, const char* input_path,
                       lrs_analysis** out) {
  if (lrs_status s = require(opts != nullptr && input_path != nullptr &&
                                 out != nullptr,
                             "null argument");
      s != LRS_OK)
    return s;
  *out = nullptr;
  return guarded([&] {
    lrsym::AnalysisConfig config = opts->config;
    config.input = input_path;
    auto analysis = std::make_unique<lrs_analysis>();
    analysis->result = lrsym::run_analysis(config);
    *out = analysis.release();
    return LRS_OK;
  });
}

void lrs_analysis_free(lrs_analysis* analysis) { delete analysis; }

lrs_status lrs_analysis_frames(const lrs_analysis* analysis, long* out) {
  if (lrs_status s = require(analysis != nullptr && out != nullptr, "null argument");
      s != LRS_OK)
    return s;
  *out = analysis->result.frame_count;
  return LRS_OK;
}

lrs_status lrs_analysis_cycle(const lrs_analysis* analysis, int side,
                              int* period_frames, double* peak_acf) {
  if (lrs_status s = require(analysis != nullptr, "null analysis"); s != LRS_OK)
    return s;
  const lrsym::AnalysisResult& r = analysis->result;
  const std::optional<lrsym::CycleEstimate>* est = nullptr;
  switch (side) {
    case 0: est = &r.cycle_combined; break;
    case 1: est = &r.cycle_left; break;
    case 2: est = &r.cycle_right; break;
    default: return set_error(LRS_ERR_PARAM, "side must be 0, 1 or 2");
  }
  if (!est->has_value())
    return set_error(LRS_ERR_PARAM, "cycle stage was not run");
  if (period_frames) *period_frames = (*est)->period_frames;
  if (peak_acf) *peak_acf = (*est)->peak_acf;
  return LRS_OK;
}

lrs_status lrs_analysis_shift_correlation(const lrs_analysis* analysis,
                                          double* rho, double* left_shift,
                                          double* right_shift,
                                          int* analyzed_length) {
  if (lrs_status s = require(analysis != nullptr, "null analysis"); s != LRS_OK)
    return s;
  const auto& shift = analysis->result.shift;
  if (!shift.has_value())
    return set_error(LRS_ERR_PARAM, "shift-correlation stage was not run");
  if (rho) *rho = shift->rho;
  if (left_shift) *left_shift = shift->left_shift;
  if (right_shift) *right_shift = shift->right_shift;
  if (analyzed_length) *analyzed_length = shift->analyzed_length;
  return LRS_OK;
}

lrs_status lrs_analysis_dissimilarity(const lrs_analysis* analysis,
                                      lrs_case coupling, double* dis,
                                      int* classification) {
  if (lrs_status s = require(analysis != nullptr, "null analysis"); s != LRS_OK)
    return s;
  if (coupling < LRS_CASE_HV || coupling > LRS_CASE_VV)
    return set_error(LRS_ERR_PARAM, "unknown coupling case");
  const auto& report = analysis->result.dissimilarity;
  if (!report.has_value())
    return set_error(LRS_ERR_PARAM, "dissimilarity stage was not run");
  const lrsym::CaseOutcome& outcome =
      report->outcome(lrsym::kAllCases[static_cast<std::size_t>(coupling)]);
  switch (outcome.classification) {
    case lrsym::CaseClassification::Symmetric:
      if (classification) *classification = LRS_CLASS_SYMMETRIC;
      break;
    case lrsym::CaseClassification::Asymmetric:
      if (classification) *classification = LRS_CLASS_ASYMMETRIC;
      break;
    case lrsym::CaseClassification::Degenerate:
      if (classification) *classification = LRS_CLASS_DEGENERATE;
      return set_error(LRS_ERR_DEGENERATE, outcome.error);
  }
  if (dis) *dis = outcome.value->dis;
  return LRS_OK;
}

lrs_status lrs_analysis_write_reports(const lrs_analysis* analysis,
                                      const char* out_dir,
                                      unsigned report_mask) {
  if (lrs_status s = require(analysis != nullptr && out_dir != nullptr,
                             "null argument");
      s != LRS_OK)
    return s;
  if (report_mask == 0) return set_error(LRS_ERR_PARAM, "empty report mask");
  return guarded([&] {
    const std::filesystem::path dir(out_dir);
    const lrsym::AnalysisResult& r = analysis->result;
    if (report_mask & LRS_REPORT_SUMMARY_CSV)
      lrsym::write_summary_csv(r, dir / "summary.csv");
    if (report_mask & LRS_REPORT_SUMMARY_JSON)
      lrsym::write_summary_json(r, dir / "summary.json");
    if (report_mask & LRS_REPORT_SPEED_SVG) lrsym::write_speed_svgs(r, dir);
    if (report_mask & LRS_REPORT_CONVOLUTION_SVG)
      lrsym::write_convolution_svgs(r, dir);
    if (report_mask & LRS_REPORT_SHIFT_SVG)
      lrsym::write_shift_svg(r, dir / "shifted_overlay.svg");
    return LRS_OK;
  });
}

/* ---- synth ------------------------------------------------------------ */

lrs_synth_params* lrs_synth_params_new(void) {
  return new (std::nothrow) lrs_synth_params;
}

void lrs_synth_params_free(lrs_synth_params* params) { delete params; }

#define LRSYM_SYNTH_SETTER(name, type, field)                                  \
  lrs_status name(lrs_synth_params* params, type value) {                      \
    if (lrs_status s = require(params != nullptr, "null synth params");        \
        s != LRS_OK)                                                           \
      return s;                                                                \
    params->params.field = value;                                              \
    return LRS_OK;                                                             \
  }

LRSYM_SYNTH_SETTER(lrs_synth_set_cycle_frames, int, cycle_frames)
LRSYM_SYNTH_SETTER(lrs_synth_set_strides, int, n_strides)
LRSYM_SYNTH_SETTER(lrs_synth_set_fps, int, fps)
LRSYM_SYNTH_SETTER(lrs_synth_set_ankle_amp, double, ankle_amp)
LRSYM_SYNTH_SETTER(lrs_synth_set_wrist_amp, double, wrist_amp)
LRSYM_SYNTH_SETTER(lrs_synth_set_forward_speed, double, forward_speed)
LRSYM_SYNTH_SETTER(lrs_synth_set_left_amp_ratio, double, left_amp_ratio)
LRSYM_SYNTH_SETTER(lrs_synth_set_left_phase_jitter, double, left_phase_jitter)
LRSYM_SYNTH_SETTER(lrs_synth_set_waveform_distortion, double, waveform_distortion)
LRSYM_SYNTH_SETTER(lrs_synth_set_noise_std, double, noise_std)
LRSYM_SYNTH_SETTER(lrs_synth_set_dropout_fraction, double, dropout_fraction)
LRSYM_SYNTH_SETTER(lrs_synth_set_seed, unsigned, seed)

#undef LRSYM_SYNTH_SETTER

lrs_status lrs_synth_write_csv(const lrs_synth_params* params,
                               const char* path) {
  if (lrs_status s = require(params != nullptr && path != nullptr,
                             "null argument");
      s != LRS_OK)
    return s;
  return guarded([&] {
    const std::vector<lrsym::KeypointFrame> frames =
        lrsym::generate_gait(params->params);
    lrsym::write_keypoint_csv_file(path, frames);
    return LRS_OK;
  });
}

}  // extern "C"
