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

#ifndef COVOPT_ERROR_HPP_
#define COVOPT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace covopt {

enum class ErrorKind {
  kInvalidParameter,
  kInvalidArgument,
  kValidation,
  kEmptyCandidateSet,
  kDegenerateCandidate,
  kInstanceTooLarge,
  kIo,
};

const char* to_string(ErrorKind kind);

// Every module reports failures through this exception; the CLI maps the kind
// onto a process exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace covopt

#endif  // COVOPT_ERROR_HPP_
