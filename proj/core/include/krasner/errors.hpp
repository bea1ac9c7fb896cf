// Copyright 2026 The krasnerlab Authors
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

#ifndef KRASNER_ERRORS_HPP_
#define KRASNER_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace krasner {

  enum class ErrorCode {
    kInvalidArgument,
    kArityMismatch,
    kIndexOutOfRange,
    kBoundExceeded,
    kMissingIdentity,
    kNotCanonical,
    kParseError,
    kMissingEntry,
    kDuplicateKey,
    kUnsortedKey,
    kDuplicateLabel,
    kUnknownLabel,
    kAxiomFailure,
    kNotAPartition,
    kWellDefinednessFailure,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Every failure raised by the library carries one of the codes above so
  // that frontends can map it to an exit status without parsing messages.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace krasner

#endif  // KRASNER_ERRORS_HPP_
