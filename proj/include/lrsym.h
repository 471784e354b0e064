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

/*
 * C interface to the lrsym gait-symmetry library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns an lrs_status; on failure a thread-local
 * human-readable message is available from lrs_last_error(). Status
 * values double as the canonical process exit codes of the lrsym CLI.
 */

#ifndef LRSYM_H
#define LRSYM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lrs_status {
  LRS_OK = 0,
  LRS_ERR_INTERNAL = 1,   /* unexpected failure */
  LRS_ERR_INPUT = 2,      /* unreadable/malformed input, missing joints,
                             too few frames */
  LRS_ERR_DEGENERATE = 3, /* zero-variance or motionless signal, no or
                             ambiguous periodicity, record too short */
  LRS_ERR_PARAM = 4       /* invalid parameter value */
} lrs_status;

typedef enum lrs_case {
  LRS_CASE_HV = 0, /* horizontal ankle in, vertical wrist out */
  LRS_CASE_VH = 1,
  LRS_CASE_HH = 2,
  LRS_CASE_VV = 3
} lrs_case;

typedef enum lrs_format {
  LRS_FORMAT_AUTO = 0, /* directory -> OpenPose JSON, file -> CSV */
  LRS_FORMAT_OPENPOSE_DIR = 1,
  LRS_FORMAT_CSV = 2
} lrs_format;

typedef enum lrs_speed_mode {
  LRS_SPEED_SIGNED_SUM = 0, /* dx + dy */
  LRS_SPEED_ABS_SUM = 1,    /* |dx| + |dy| */
  LRS_SPEED_EUCLIDEAN = 2,  /* sqrt(dx^2 + dy^2) */
  LRS_SPEED_HORIZONTAL = 3, /* dx */
  LRS_SPEED_VERTICAL = 4    /* dy */
} lrs_speed_mode;

/* Pipeline stages to run (bitmask). Shift correlation implies cycle. */
enum {
  LRS_STAGE_CYCLE = 1,
  LRS_STAGE_SHIFT_CORRELATION = 2,
  LRS_STAGE_DISSIMILARITY = 4,
  LRS_STAGE_ALL = 7
};

/* Report files to emit (bitmask). */
enum {
  LRS_REPORT_SUMMARY_CSV = 1,
  LRS_REPORT_SUMMARY_JSON = 2,
  LRS_REPORT_SPEED_SVG = 4,
  LRS_REPORT_CONVOLUTION_SVG = 8,
  LRS_REPORT_SHIFT_SVG = 16
};

/* Classification values reported per coupling case. */
enum {
  LRS_CLASS_ASYMMETRIC = 0,
  LRS_CLASS_SYMMETRIC = 1,
  LRS_CLASS_DEGENERATE = 2
};

typedef struct lrs_options lrs_options;
typedef struct lrs_analysis lrs_analysis;
typedef struct lrs_synth_params lrs_synth_params;

const char* lrs_version(void);

/* Message for the most recent failure on this thread ("" if none). */
const char* lrs_last_error(void);

/* ---- analysis options ------------------------------------------------ */

/* Defaults: auto format, confidence threshold 0.5, smoothing window 3,
 * abs-sum speed mode, cycle lag search [15, M/2] with min peak 0.2,
 * dissimilarity threshold 1.0, demean off. */
lrs_options* lrs_options_new(void);
void lrs_options_free(lrs_options* opts);

lrs_status lrs_options_set_format(lrs_options* opts, lrs_format format);
lrs_status lrs_options_set_confidence_threshold(lrs_options* opts, double value);
lrs_status lrs_options_set_smooth_window(lrs_options* opts, int window);
lrs_status lrs_options_set_speed_mode(lrs_options* opts, lrs_speed_mode mode);
/* max_lag 0 selects floor(M/2). */
lrs_status lrs_options_set_cycle_search(lrs_options* opts, int min_lag,
                                        int max_lag, double min_peak);
lrs_status lrs_options_set_dis_threshold(lrs_options* opts, double value);
lrs_status lrs_options_set_demean(lrs_options* opts, int enabled);
/* Row label used in reports; defaults to the input path stem. */
lrs_status lrs_options_set_subject(lrs_options* opts, const char* name);
lrs_status lrs_options_set_stages(lrs_options* opts, unsigned stage_mask);

/* ---- running an analysis --------------------------------------------- */

lrs_status lrs_analyze(const lrs_options* opts, const char* input_path,
                       lrs_analysis** out);
void lrs_analysis_free(lrs_analysis* analysis);

lrs_status lrs_analysis_frames(const lrs_analysis* analysis, long* out);

/* side: 0 = combined, 1 = left ankle, 2 = right ankle. */
lrs_status lrs_analysis_cycle(const lrs_analysis* analysis, int side,
                              int* period_frames, double* peak_acf);

lrs_status lrs_analysis_shift_correlation(const lrs_analysis* analysis,
                                          double* rho, double* left_shift,
                                          double* right_shift,
                                          int* analyzed_length);

/* Returns LRS_ERR_DEGENERATE for a motionless-limb case; the other cases
 * of the same analysis remain readable. classification receives one of
 * the LRS_CLASS_* values whenever the case exists. */
lrs_status lrs_analysis_dissimilarity(const lrs_analysis* analysis,
                                      lrs_case coupling, double* dis,
                                      int* classification);

lrs_status lrs_analysis_write_reports(const lrs_analysis* analysis,
                                      const char* out_dir,
                                      unsigned report_mask);

/* ---- synthetic gait generator ---------------------------------------- */

/* Defaults: 33-frame cycle, 3 strides, 30 fps, ankle amp 50 px, wrist amp
 * 30 px, forward speed 2.5 px/frame, symmetric knobs, no noise, seed 42. */
lrs_synth_params* lrs_synth_params_new(void);
void lrs_synth_params_free(lrs_synth_params* params);

lrs_status lrs_synth_set_cycle_frames(lrs_synth_params* params, int frames);
lrs_status lrs_synth_set_strides(lrs_synth_params* params, int n_strides);
lrs_status lrs_synth_set_fps(lrs_synth_params* params, int fps);
lrs_status lrs_synth_set_ankle_amp(lrs_synth_params* params, double pixels);
lrs_status lrs_synth_set_wrist_amp(lrs_synth_params* params, double pixels);
lrs_status lrs_synth_set_forward_speed(lrs_synth_params* params,
                                       double px_per_frame);
lrs_status lrs_synth_set_left_amp_ratio(lrs_synth_params* params, double ratio);
lrs_status lrs_synth_set_left_phase_jitter(lrs_synth_params* params,
                                           double radians);
lrs_status lrs_synth_set_waveform_distortion(lrs_synth_params* params,
                                             double amount);
lrs_status lrs_synth_set_noise_std(lrs_synth_params* params, double pixels);
lrs_status lrs_synth_set_dropout_fraction(lrs_synth_params* params,
                                          double fraction);
lrs_status lrs_synth_set_seed(lrs_synth_params* params, unsigned seed);

/* Writes the generated sequence in the keypoint CSV format. Identical
 * params (including the seed) produce byte-identical files. */
lrs_status lrs_synth_write_csv(const lrs_synth_params* params,
                               const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LRSYM_H */
