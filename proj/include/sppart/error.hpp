// Copyright 2026 The sppart Authors.
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

#ifndef SPPART_ERROR_HPP_
#define SPPART_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sppart {

// Error categories. The numeric values double as CLI exit codes for the
// categories that have one.
enum class ErrorCode {
  kParse = 2,
  kInfeasible = 3,
  kPrecondition = 4,
  kInvalidAssignment = 5,
  kIo = 6,
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kInfeasible:
      return "infeasible";
    case ErrorCode::kPrecondition:
      return "precondition violated";
    case ErrorCode::kInvalidAssignment:
      return "invalid assignment";
    case ErrorCode::kIo:
      return "i/o error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool condition, const std::string& what) {
  if (!condition) Fail(ErrorCode::kPrecondition, what);
}

}  // namespace sppart

#endif  // SPPART_ERROR_HPP_
