// Copyright 2026 The Speiser Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPEISER_ERRORS_HPP_
#define SPEISER_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace speiser {

enum class ErrorCode {
  kInvalidArgument,
  // linecomplex
  kDanglingHalfEdge,
  kUnlabelableFace,
  kNotATree,
  kWindingMismatch,
  kZeroGap,
  kTooFewEnds,
  kNoZeroLabel,
  kSplitZeroLabel,
  kAmbiguousLabel,
  // symmetry
  kRealSingularityOverLabel,
  kFaceOnAxis,
  kCriterionFailed,
  kVariantUnavailable,
  kNotAlmostSymmetric,
  kNoInvolution,
  // odeint / sectors
  kStepUnderflow,
  kOverflowGuard,
  kPoleTooClose,
  kCriticalPoint,
  kNoConvergence,
  kZeroPolynomial,
  kCountMismatch,
  // serialization
  kSyntaxError,
  kInvariantViolation,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI) can branch on the kind of failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace speiser

#endif  // SPEISER_ERRORS_HPP_
