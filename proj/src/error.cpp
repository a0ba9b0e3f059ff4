// Copyright 2026 The Authors.
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

#include "covopt/error.hpp"

namespace covopt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter:
      return "invalid parameter";
    case ErrorKind::kInvalidArgument:
      return "invalid argument";
    case ErrorKind::kValidation:
      return "validation error";
    case ErrorKind::kEmptyCandidateSet:
      return "empty candidate set";
    case ErrorKind::kDegenerateCandidate:
      return "degenerate candidate";
    case ErrorKind::kInstanceTooLarge:
      return "instance too large";
    case ErrorKind::kIo:
      return "i/o error";
  }
  return "unknown error";
}

}  // namespace covopt
