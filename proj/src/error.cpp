// Copyright 2026 The craneplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "craneplan/error.hpp"

namespace craneplan {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kRopeLengthNonpositive: return "rope-length-nonpositive";
    case ErrorCode::kZeroVelocity: return "zero-velocity";
    case ErrorCode::kInfeasibleProfile: return "infeasible-profile";
    case ErrorCode::kInconsistentBoundary: return "inconsistent-boundary";
    case ErrorCode::kMissingKey: return "missing-key";
    case ErrorCode::kBadNumber: return "bad-number";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kBoundsInverted: return "bounds-inverted";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kSimulationBlowup: return "simulation-blowup";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace craneplan
