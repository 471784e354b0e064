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

#ifndef LRSYM_ERRORS_HPP
#define LRSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrsym {

/// Failure categories. Grouped so the C API / CLI can map them onto
/// process exit codes: input problems (2), degenerate signals (3),
/// invalid parameters (4).
enum class ErrorCode {
  // input / parse problems
  ParseError,
  InsufficientData,
  MissingData,
  // signal-quality problems
  DegenerateSignal,
  NoPeriodicity,
  AmbiguousCycle,
  AllOccluded,
  InsufficientRecord,
  // caller mistakes
  InvalidParameter,
  InvalidInput,
  InvalidSpectrum,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace lrsym

#endif
