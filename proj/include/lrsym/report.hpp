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

#ifndef LRSYM_REPORT_HPP
#define LRSYM_REPORT_HPP

#include <filesystem>

#include "lrsym/analysis.hpp"

namespace lrsym {

/// One row per subject with the cycle estimate, the shift correlation and
/// the four dissimilarity values (2-decimal formatting). Deterministic
/// for identical inputs.
void write_summary_csv(const AnalysisResult& result,
                       const std::filesystem::path& path);

/// Full-precision variant of the summary.
void write_summary_json(const AnalysisResult& result,
                        const std::filesystem::path& path);

/// speeds_<case>.svg: the four per-case speed series overlaid
/// (blue right ankle, red right wrist, green left ankle, yellow left wrist).
void write_speed_svgs(const AnalysisResult& result,
                      const std::filesystem::path& out_dir);

/// convolution_<case>.svg: the u = a*y and v = x*b cross products overlaid.
void write_convolution_svgs(const AnalysisResult& result,
                            const std::filesystem::path& out_dir);

/// shifted_overlay.svg: ankle speeds after the quarter-cycle shifts.
void write_shift_svg(const AnalysisResult& result,
                     const std::filesystem::path& path);

}  // namespace lrsym

#endif
