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

#ifndef TWISTWIDTH_ERROR_HPP_
#define TWISTWIDTH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistwidth {

// Domain error kinds. The names double as the diagnostic tags printed by
// the command-line tool.
enum class Errc {
  kOutOfRangeElement,
  kGroundSetTooLarge,
  kImproperSystem,
  kNotDeltaMatroid,
  kNotFeasible,
  kNoSandwich,
  kIllegalScript,
  kRepeatedElement,
  kTooLarge,
  kTooManyEdges,
  kInvalidSubset,
  kInvalidGraph,
  kDisconnected,
  kGenerationExhausted,
  kParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kOutOfRangeElement: return "OutOfRangeElement";
    case Errc::kGroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::kImproperSystem: return "ImproperSystem";
    case Errc::kNotDeltaMatroid: return "NotDeltaMatroid";
    case Errc::kNotFeasible: return "NotFeasible";
    case Errc::kNoSandwich: return "NoSandwich";
    case Errc::kIllegalScript: return "IllegalScript";
    case Errc::kRepeatedElement: return "RepeatedElement";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kTooManyEdges: return "TooManyEdges";
    case Errc::kInvalidSubset: return "InvalidSubset";
    case Errc::kInvalidGraph: return "InvalidGraph";
    case Errc::kDisconnected: return "Disconnected";
    case Errc::kGenerationExhausted: return "GenerationExhausted";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  Errc code_;
};

}  // namespace twistwidth

#endif  // TWISTWIDTH_ERROR_HPP_
