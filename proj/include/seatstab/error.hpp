// Copyright 2026 The seatstab Authors
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

#ifndef SEATSTAB_ERROR_HPP_
#define SEATSTAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace seatstab {

enum class ErrorCode {
  kMalformedDocument,
  kUnknownAgent,
  kDuplicateAgent,
  kShapeMismatch,
  kSelfLoop,
  kSizeMismatch,
  kInvalidAssignment,
  kSameAgent,
  kNotACycle,
  kNotAPath,
  kNoInsertionPoint,
  kTypeTwoDetected,
  kBudgetExceeded,
  kNotAcyclic,
  kInsufficientLeaves,
  kTooLarge,
  kBadParameter,
  kIo,
  kInternal,  // a proven invariant failed to hold
};

// Stable name used in JSON error documents, e.g. "InsufficientLeaves".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace seatstab

#endif  // SEATSTAB_ERROR_HPP_
