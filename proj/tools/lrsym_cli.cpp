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

// lrsym command-line front end. Talks to the library exclusively through
// the C API in lrsym.h; library status codes double as exit codes
// (0 ok, 2 input error, 3 degenerate signal, 4 invalid parameters).

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "lrsym.h"

namespace {

constexpr const char* kCaseNames[4] = {"HV", "VH", "HH", "VV"};

struct OptionsDeleter {
  void operator()(lrs_options* p) const { lrs_options_free(p); }
};
struct AnalysisDeleter {
  void operator()(lrs_analysis* p) const { lrs_analysis_free(p); }
};
struct SynthDeleter {
  void operator()(lrs_synth_params* p) const { lrs_synth_params_free(p); }
};

using OptionsPtr = std::unique_ptr<lrs_options, OptionsDeleter>;
using AnalysisPtr = std::unique_ptr<lrs_analysis, AnalysisDeleter>;
using SynthPtr = std::unique_ptr<lrs_synth_params, SynthDeleter>;

int fail_with(lrs_status status, const char* stage) {
  std::fprintf(stderr, "lrsym: %s: %s\n", stage, lrs_last_error());
  return static_cast<int>(status);
}

// Flags shared by every analysis-style subcommand.
struct AnalyzeFlags {
  std::string input;
  std::string format = "auto";
  double confidence_threshold = 0.5;
  int smooth_window = 3;
  std::string speed_mode = "abs-sum";
  int min_lag = 15;
  int max_lag = 0;
  double min_peak = 0.2;
  double dis_threshold = 1.0;
  bool demean = false;
  std::string subject;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", input, "keypoint CSV file or OpenPose JSON directory")
        ->required();
    cmd->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"auto", "openpose-dir", "csv"}))
        ->capture_default_str();
    cmd->add_option("--confidence-threshold", confidence_threshold,
                    "repair keypoints at or below this confidence")
        ->capture_default_str();
    cmd->add_option("--smooth-window", smooth_window,
                    "moving-average window (odd)")
        ->capture_default_str();
    cmd->add_option("--speed-mode", speed_mode,
                    "speed mode for the shift correlation")
        ->check(CLI::IsMember({"signed-sum", "abs-sum", "euclidean",
                               "horizontal", "vertical"}))
        ->capture_default_str();
    cmd->add_option("--min-lag", min_lag, "cycle search lower bound, frames")
        ->capture_default_str();
    cmd->add_option("--max-lag", max_lag,
                    "cycle search upper bound, frames (0 = half the record)")
        ->capture_default_str();
    cmd->add_option("--min-peak", min_peak,
                    "minimum autocorrelation peak for a valid cycle")
        ->capture_default_str();
    cmd->add_option("--dis-threshold", dis_threshold,
                    "dissimilarity below this counts as symmetric")
        ->capture_default_str();
    cmd->add_flag("--demean", demean,
                  "remove each series mean before the convolutions");
    cmd->add_option("--subject", subject,
                    "subject label in reports (default: input name)");
  }

  lrs_status apply(lrs_options* opts) const {
    lrs_format fmt = LRS_FORMAT_AUTO;
    if (format == "openpose-dir") fmt = LRS_FORMAT_OPENPOSE_DIR;
    if (format == "csv") fmt = LRS_FORMAT_CSV;
    lrs_speed_mode mode = LRS_SPEED_ABS_SUM;
    if (speed_mode == "signed-sum") mode = LRS_SPEED_SIGNED_SUM;
    if (speed_mode == "euclidean") mode = LRS_SPEED_EUCLIDEAN;
    if (speed_mode == "horizontal") mode = LRS_SPEED_HORIZONTAL;
    if (speed_mode == "vertical") mode = LRS_SPEED_VERTICAL;

    lrs_status s;
    if ((s = lrs_options_set_format(opts, fmt)) != LRS_OK) return s;
    if ((s = lrs_options_set_confidence_threshold(opts, confidence_threshold)) !=
        LRS_OK)
      return s;
    if ((s = lrs_options_set_smooth_window(opts, smooth_window)) != LRS_OK)
      return s;
    if ((s = lrs_options_set_speed_mode(opts, mode)) != LRS_OK) return s;
    if ((s = lrs_options_set_cycle_search(opts, min_lag, max_lag, min_peak)) !=
        LRS_OK)
      return s;
    if ((s = lrs_options_set_dis_threshold(opts, dis_threshold)) != LRS_OK)
      return s;
    if ((s = lrs_options_set_demean(opts, demean ? 1 : 0)) != LRS_OK) return s;
    if (!subject.empty() &&
        (s = lrs_options_set_subject(opts, subject.c_str())) != LRS_OK)
      return s;
    return LRS_OK;
  }
};

int run_stages(const AnalyzeFlags& flags, unsigned stages, AnalysisPtr* out) {
  OptionsPtr opts(lrs_options_new());
  if (!opts) return fail_with(LRS_ERR_INTERNAL, "options");
  if (lrs_status s = flags.apply(opts.get()); s != LRS_OK)
    return fail_with(s, "options");
  if (lrs_status s = lrs_options_set_stages(opts.get(), stages); s != LRS_OK)
    return fail_with(s, "options");
  lrs_analysis* raw = nullptr;
  if (lrs_status s = lrs_analyze(opts.get(), flags.input.c_str(), &raw);
      s != LRS_OK)
    return fail_with(s, "analyze");
  out->reset(raw);
  return 0;
}

void print_cycles(const lrs_analysis* analysis) {
  static constexpr const char* kSides[3] = {"combined", "left", "right"};
  for (int side : {1, 2, 0}) {
    int period = 0;
    double peak = 0.0;
    if (lrs_analysis_cycle(analysis, side, &period, &peak) == LRS_OK)
      std::printf("%-9s period=%d frames  peak_acf=%.2f\n", kSides[side],
                  period, peak);
  }
}

void print_dissimilarity(const lrs_analysis* analysis) {
  std::printf("%-5s %-8s %s\n", "case", "dis", "classification");
  for (int i = 0; i < 4; ++i) {
    double dis = 0.0;
    int cls = 0;
    const lrs_status s = lrs_analysis_dissimilarity(
        analysis, static_cast<lrs_case>(i), &dis, &cls);
    if (s == LRS_OK)
      std::printf("%-5s %-8.2f %s\n", kCaseNames[i], dis,
                  cls == LRS_CLASS_SYMMETRIC ? "Symmetric" : "Asymmetric");
    else
      std::printf("%-5s %-8s Degenerate (%s)\n", kCaseNames[i], "-",
                  lrs_last_error());
  }
}

int cmd_analyze(const AnalyzeFlags& flags, const std::string& out_dir,
                bool json) {
  AnalysisPtr analysis;
  if (int rc = run_stages(flags, LRS_STAGE_ALL, &analysis)) return rc;

  unsigned mask = LRS_REPORT_SUMMARY_CSV | LRS_REPORT_SPEED_SVG |
                  LRS_REPORT_CONVOLUTION_SVG;
  if (json) mask |= LRS_REPORT_SUMMARY_JSON;
  if (lrs_status s =
          lrs_analysis_write_reports(analysis.get(), out_dir.c_str(), mask);
      s != LRS_OK)
    return fail_with(s, "reports");

  double rho = 0.0;
  lrs_analysis_shift_correlation(analysis.get(), &rho, nullptr, nullptr, nullptr);
  print_cycles(analysis.get());
  std::printf("shift correlation rho=%.2f\n", rho);
  print_dissimilarity(analysis.get());
  std::printf("reports written to %s\n", out_dir.c_str());
  return 0;
}

int cmd_cycle(const AnalyzeFlags& flags) {
  AnalysisPtr analysis;
  if (int rc = run_stages(flags, LRS_STAGE_CYCLE, &analysis)) return rc;
  print_cycles(analysis.get());
  return 0;
}

int cmd_shiftcorr(const AnalyzeFlags& flags, const std::string& out_dir) {
  AnalysisPtr analysis;
  if (int rc = run_stages(flags, LRS_STAGE_CYCLE | LRS_STAGE_SHIFT_CORRELATION,
                          &analysis))
    return rc;
  double rho = 0.0, left = 0.0, right = 0.0;
  int length = 0;
  lrs_analysis_shift_correlation(analysis.get(), &rho, &left, &right, &length);
  int period = 0;
  double peak = 0.0;
  lrs_analysis_cycle(analysis.get(), 0, &period, &peak);
  std::printf("cycle=%d frames  left_shift=%+.2f  right_shift=%+.2f  "
              "analyzed=%d frames\nrho=%.2f\n",
              period, left, right, length, rho);
  if (!out_dir.empty()) {
    if (lrs_status s = lrs_analysis_write_reports(analysis.get(),
                                                  out_dir.c_str(),
                                                  LRS_REPORT_SHIFT_SVG);
        s != LRS_OK)
      return fail_with(s, "reports");
    std::printf("overlay written to %s\n", out_dir.c_str());
  }
  return 0;
}

int cmd_dissim(const AnalyzeFlags& flags, const std::string& out_dir) {
  AnalysisPtr analysis;
  if (int rc = run_stages(flags, LRS_STAGE_DISSIMILARITY, &analysis)) return rc;
  print_dissimilarity(analysis.get());
  if (!out_dir.empty()) {
    if (lrs_status s = lrs_analysis_write_reports(
            analysis.get(), out_dir.c_str(), LRS_REPORT_CONVOLUTION_SVG);
        s != LRS_OK)
      return fail_with(s, "reports");
    std::printf("convolution plots written to %s\n", out_dir.c_str());
  }
  return 0;
}

struct SynthFlags {
  std::string out;
  int cycle_frames = 33;
  int strides = 3;
  int fps = 30;
  double ankle_amp = 50.0;
  double wrist_amp = 30.0;
  double forward_speed = 2.5;
  double left_amp_ratio = 1.0;
  double left_phase_jitter = 0.0;
  double distortion = 0.0;
  double noise_std = 0.0;
  double dropout_fraction = 0.0;
  unsigned seed = 42;
};

int cmd_synth(const SynthFlags& flags) {
  SynthPtr params(lrs_synth_params_new());
  if (!params) return fail_with(LRS_ERR_INTERNAL, "synth");
  lrs_synth_set_cycle_frames(params.get(), flags.cycle_frames);
  lrs_synth_set_strides(params.get(), flags.strides);
  lrs_synth_set_fps(params.get(), flags.fps);
  lrs_synth_set_ankle_amp(params.get(), flags.ankle_amp);
  lrs_synth_set_wrist_amp(params.get(), flags.wrist_amp);
  lrs_synth_set_forward_speed(params.get(), flags.forward_speed);
  lrs_synth_set_left_amp_ratio(params.get(), flags.left_amp_ratio);
  lrs_synth_set_left_phase_jitter(params.get(), flags.left_phase_jitter);
  lrs_synth_set_waveform_distortion(params.get(), flags.distortion);
  lrs_synth_set_noise_std(params.get(), flags.noise_std);
  lrs_synth_set_dropout_fraction(params.get(), flags.dropout_fraction);
  lrs_synth_set_seed(params.get(), flags.seed);
  if (lrs_status s = lrs_synth_write_csv(params.get(), flags.out.c_str());
      s != LRS_OK)
    return fail_with(s, "synth");
  std::printf("wrote %s\n", flags.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"left-right gait symmetry metrics from 2D keypoints"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lrs_version()));

  AnalyzeFlags analyze_flags, cycle_flags, shift_flags, dissim_flags;
  std::string analyze_out = "lrsym-out";
  bool analyze_json = false;
  std::string shift_out, dissim_out;
  SynthFlags synth_flags;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full pipeline: cycle, shift correlation, dissimilarity");
  analyze_flags.attach(analyze);
  analyze->add_option("--out-dir", analyze_out, "report directory")
      ->capture_default_str();
  analyze->add_flag("--json", analyze_json, "also write summary.json");

  CLI::App* cycle = app.add_subcommand("cycle", "gait cycle per side");
  cycle_flags.attach(cycle);

  CLI::App* shiftcorr = app.add_subcommand(
      "shiftcorr", "quarter-cycle shift correlation of the ankle speeds");
  shift_flags.attach(shiftcorr);
  shiftcorr->add_option("--out-dir", shift_out,
                        "also write the shifted-overlay SVG here");

  CLI::App* dissim = app.add_subcommand(
      "dissim", "ankle-wrist coupling dissimilarity, four cases");
  dissim_flags.attach(dissim);
  dissim->add_option("--out-dir", dissim_out,
                     "also write the convolution SVGs here");

  CLI::App* synth =
      app.add_subcommand("synth", "generate a synthetic gait CSV");
  synth->add_option("--out", synth_flags.out, "output CSV path")->required();
  synth->add_option("--cycle-frames", synth_flags.cycle_frames)
      ->capture_default_str();
  synth->add_option("--strides", synth_flags.strides)->capture_default_str();
  synth->add_option("--fps", synth_flags.fps)->capture_default_str();
  synth->add_option("--ankle-amp", synth_flags.ankle_amp)->capture_default_str();
  synth->add_option("--wrist-amp", synth_flags.wrist_amp)->capture_default_str();
  synth->add_option("--forward-speed", synth_flags.forward_speed)
      ->capture_default_str();
  synth->add_option("--left-amp-ratio", synth_flags.left_amp_ratio)
      ->capture_default_str();
  synth->add_option("--left-phase-jitter", synth_flags.left_phase_jitter,
                    "radians")
      ->capture_default_str();
  synth->add_option("--distortion", synth_flags.distortion)
      ->capture_default_str();
  synth->add_option("--noise-std", synth_flags.noise_std, "pixels")
      ->capture_default_str();
  synth->add_option("--dropout-fraction", synth_flags.dropout_fraction)
      ->capture_default_str();
  synth->add_option("--seed", synth_flags.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return static_cast<int>(LRS_ERR_PARAM);
  }

  if (analyze->parsed()) return cmd_analyze(analyze_flags, analyze_out, analyze_json);
  if (cycle->parsed()) return cmd_cycle(cycle_flags);
  if (shiftcorr->parsed()) return cmd_shiftcorr(shift_flags, shift_out);
  if (dissim->parsed()) return cmd_dissim(dissim_flags, dissim_out);
  if (synth->parsed()) return cmd_synth(synth_flags);
  return static_cast<int>(LRS_ERR_PARAM);
}
