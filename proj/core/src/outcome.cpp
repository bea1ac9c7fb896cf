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

#include "krasner/outcome.hpp"

namespace krasner {

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::kHolds:
        return "Holds";
      case Verdict::kFails:
        return "Fails";
      case Verdict::kInapplicable:
        return "Inapplicable";
    }
    return "unknown";
  }

}  // namespace krasner
