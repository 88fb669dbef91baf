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

#include "speiser/errors.hpp"

namespace speiser {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDanglingHalfEdge: return "DanglingHalfEdge";
    case ErrorCode::kUnlabelableFace: return "UnlabelableFace";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kWindingMismatch: return "WindingMismatch";
    case ErrorCode::kZeroGap: return "ZeroGap";
    case ErrorCode::kTooFewEnds: return "TooFewEnds";
    case ErrorCode::kNoZeroLabel: return "NoZeroLabel";
    case ErrorCode::kSplitZeroLabel: return "SplitZeroLabel";
    case ErrorCode::kAmbiguousLabel: return "AmbiguousLabel";
    case ErrorCode::kRealSingularityOverLabel: return "RealSingularityOverLabel";
    case ErrorCode::kFaceOnAxis: return "FaceOnAxis";
    case ErrorCode::kCriterionFailed: return "CriterionFailed";
    case ErrorCode::kVariantUnavailable: return "VariantUnavailable";
    case ErrorCode::kNotAlmostSymmetric: return "NotAlmostSymmetric";
    case ErrorCode::kNoInvolution: return "NoInvolution";
    case ErrorCode::kStepUnderflow: return "StepUnderflow";
    case ErrorCode::kOverflowGuard: return "OverflowGuard";
    case ErrorCode::kPoleTooClose: return "PoleTooClose";
    case ErrorCode::kCriticalPoint: return "CriticalPoint";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace speiser
