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

// Element sequences whose prefix twists have non-decreasing width and end
// at the maximum twist width of a delta-matroid.

#ifndef TWISTWIDTH_MONOTONE_HPP_
#define TWISTWIDTH_MONOTONE_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twistwidth/error.hpp"
#include "twistwidth/set_system.hpp"
#include "twistwidth/subset.hpp"

namespace twistwidth {

// One pre-made decision of the sequence construction: the set X picked from
// the current minimum (or maximum) family and the element x removed.
struct ScriptedChoice {
  Subset chosen;
  Element element = 0;
};

class ChoiceStrategy {
 public:
  enum class Mode { kCanonical, kScripted };

  // First qualifying X in canonical order, smallest qualifying element.
  static ChoiceStrategy canonical() { return ChoiceStrategy(); }

  // Replays `choices` step by step. `initial` overrides the starting set; it
  // must be a minimum-cardinality member of the hat family.
  static ChoiceStrategy scripted(std::vector<ScriptedChoice> choices,
                                 std::optional<Subset> initial = std::nullopt) {
    ChoiceStrategy s;
    s.mode_ = Mode::kScripted;
    s.choices_ = std::move(choices);
    s.initial_ = initial;
    return s;
  }

  Mode mode() const { return mode_; }
  const std::vector<ScriptedChoice>& choices() const { return choices_; }
  const std::optional<Subset>& initial() const { return initial_; }

 private:
  Mode mode_ = Mode::kCanonical;
  std::vector<ScriptedChoice> choices_;
  std::optional<Subset> initial_;
};

struct WidthTrace {
  std::vector<Element> sequence;
  // widths[i] is the width of D twisted by the first i elements.
  std::vector<int> widths;
  Subset final_set;
  int attained = 0;
};

namespace detail {

inline Error illegal_script(std::size_t step, const std::string& why) {
  return Error(Errc::kIllegalScript,
               "scripted choice " + std::to_string(step + 1) + ": " + why);
}

inline Subset initial_feasible(const SetSystem& d, const ChoiceStrategy& strategy) {
  const std::vector<Subset> hat = hat_family(d);
  if (!strategy.initial()) return hat.front();
  const Subset f = *strategy.initial();
  const bool in_hat = std::find(hat.begin(), hat.end(), f) != hat.end();
  if (!in_hat || f.size() != hat.front().size()) {
    throw Error(Errc::kIllegalScript,
                "initial set " + f.to_string() +
                    " is not a minimum-cardinality member of the hat family");
  }
  return f;
}

}  // namespace detail

// Builds the sequence by repeatedly removing one element x from the current
// set F. While the empty set is infeasible in the current twist, x comes from
// a minimum feasible set contained in F; otherwise x lies in F but outside
// some maximum feasible set. The current family is twisted by {x} after each
// step, so min/max families always refer to the current twist.
inline WidthTrace monotone_sequence(const DeltaMatroid& dm,
                                    const ChoiceStrategy& strategy = ChoiceStrategy::canonical()) {
  const SetSystem& d = dm.system();
  const bool scripted = strategy.mode() == ChoiceStrategy::Mode::kScripted;
  const Subset f_init = detail::initial_feasible(d, strategy);

  WidthTrace trace;
  trace.final_set = f_init;
  trace.widths.push_back(width(d));

  SetSystem current = d;
  Subset remaining = f_init;
  std::size_t step = 0;
  while (!remaining.empty()) {
    std::optional<Element> pick;
    if (!current.contains(Subset())) {
      const std::vector<Subset> lows = min_family(current);
      if (scripted) {
        if (step >= strategy.choices().size()) throw detail::illegal_script(step, "script exhausted");
        const ScriptedChoice& c = strategy.choices()[step];
        if (std::find(lows.begin(), lows.end(), c.chosen) == lows.end() ||
            !c.chosen.subset_of(remaining) || !c.chosen.contains(c.element)) {
          throw detail::illegal_script(step, "X=" + c.chosen.to_string() +
                                                 " is not a minimum feasible set inside " +
                                                 remaining.to_string() + " containing x");
        }
        pick = c.element;
      } else {
        for (Subset x : lows) {
          if (x.subset_of(remaining)) {
            pick = x.front();
            break;
          }
        }
      }
    } else {
      const std::vector<Subset> highs = max_family(current);
      if (scripted) {
        if (step >= strategy.choices().size()) throw detail::illegal_script(step, "script exhausted");
        const ScriptedChoice& c = strategy.choices()[step];
        if (std::find(highs.begin(), highs.end(), c.chosen) == highs.end() ||
            remaining.subset_of(c.chosen) || !remaining.minus(c.chosen).contains(c.element)) {
          throw detail::illegal_script(step, "X=" + c.chosen.to_string() +
                                                 " is not a maximum feasible set missing x from " +
                                                 remaining.to_string());
        }
        pick = c.element;
      } else {
        for (Subset x : highs) {
          if (!remaining.subset_of(x)) {
            pick = remaining.minus(x).front();
            break;
          }
        }
      }
    }
    if (!pick) {
      // Neither branch can be stuck on a delta-matroid.
      throw std::logic_error("monotone_sequence: no qualifying feasible set for " +
                             remaining.to_string());
    }
    const Subset single = Subset().flip(*pick);
    trace.sequence.push_back(*pick);
    remaining = remaining.flip(*pick);
    current = twist(current, single);
    trace.widths.push_back(width(current));
    ++step;
  }
  if (scripted && step != strategy.choices().size()) {
    throw detail::illegal_script(step, "script has unused choices");
  }
  trace.attained = trace.widths.back();
  return trace;
}

inline WidthTrace monotone_sequence(const SetSystem& d,
                                    const ChoiceStrategy& strategy = ChoiceStrategy::canonical()) {
  return monotone_sequence(DeltaMatroid::certify(d), strategy);
}

// Width of D twisted by each prefix of `seq`, starting with the empty prefix.
inline std::vector<int> width_profile(const SetSystem& d, std::span<const Element> seq) {
  detail::require_proper(d);
  Subset seen;
  for (Element e : seq) {
    if (e < 0 || e >= d.ground_size()) {
      throw Error(Errc::kOutOfRangeElement, "element " + std::to_string(e + 1) + " out of range");
    }
    if (seen.contains(e)) {
      throw Error(Errc::kRepeatedElement, "element " + std::to_string(e + 1) + " repeated");
    }
    seen = seen.flip(e);
  }
  std::vector<int> out{width(d)};
  SetSystem current = d;
  for (Element e : seq) {
    current = twist(current, Subset().flip(e));
    out.push_back(width(current));
  }
  return out;
}

struct TraceViolation {
  int property = 0;  // 1: final set feasible, 2: maximum attained, 3: monotone
  std::size_t index = 0;
  std::string detail;
};

struct TraceVerdict {
  std::vector<TraceViolation> violations;

  bool passed() const { return violations.empty(); }
  const TraceViolation& first() const { return violations.front(); }
};

// Recomputes the widths of a claimed trace and checks the three properties
// of a monotone sequence. Claimed widths that disagree with the recomputed
// ones are charged to property 2 when the disagreement is at the last entry
// and to property 3 otherwise; these checks come first, then properties 2,
// 3 and 1 on the recomputed widths.
inline TraceVerdict verify_trace(const SetSystem& d, const WidthTrace& trace) {
  TraceVerdict verdict;
  auto fail = [&](int property, std::size_t index, std::string detail) {
    verdict.violations.push_back({property, index, std::move(detail)});
  };

  std::vector<int> actual;
  try {
    actual = width_profile(d, trace.sequence);
  } catch (const Error& e) {
    if (e.code() == Errc::kImproperSystem) throw;
    fail(1, 0, std::string("sequence is not a set of ground elements: ") + e.what());
    return verdict;
  }
  const std::size_t k = trace.sequence.size();
  Subset prefix;
  for (std::size_t i = 0; i <= k; ++i) {
    if (i > 0) prefix = prefix.flip(trace.sequence[i - 1]);
    if (i >= trace.widths.size()) {
      fail(3, i, "width list is shorter than the sequence");
      break;
    }
    if (trace.widths[i] != actual[i]) {
      fail(i == k ? 2 : 3, i,
           "width after twisting by " + prefix.to_string() + " is " + std::to_string(actual[i]) +
               ", trace claims " + std::to_string(trace.widths[i]));
    }
  }
  if (trace.widths.size() > k + 1) fail(3, k + 1, "width list is longer than the sequence");

  const int target = max_twist_width(d);
  if (actual[k] != target) {
    fail(2, k, "final width " + std::to_string(actual[k]) + " differs from maximum twist width " +
                   std::to_string(target));
  }
  if (trace.attained != target) {
    fail(2, k, "attained value " + std::to_string(trace.attained) +
                   " differs from maximum twist width " + std::to_string(target));
  }
  for (std::size_t i = 1; i <= k; ++i) {
    if (actual[i] < actual[i - 1]) {
      fail(3, i, "width drops from " + std::to_string(actual[i - 1]) + " to " +
                     std::to_string(actual[i]));
      break;
    }
  }
  if (prefix != trace.final_set) {
    fail(1, k, "final set " + trace.final_set.to_string() + " differs from the sequence's set " +
                   prefix.to_string());
  }
  if (!d.contains(prefix)) fail(1, k, prefix.to_string() + " is not feasible");
  return verdict;
}

struct MonotoneSearchResult {
  std::optional<std::vector<Element>> sequence;
  // Whether the witness's element set is itself feasible.
  bool final_feasible = false;
};

inline constexpr int kMaxBruteForceSequenceGround = 12;

// Depth-first search over repeat-free sequences in lexicographic order for
// one whose prefix widths never decrease and that reaches the maximum twist
// width. Works on arbitrary proper set systems.
inline MonotoneSearchResult exists_monotone_sequence_bruteforce(const SetSystem& d) {
  detail::require_proper(d);
  const int n = d.ground_size();
  if (n > kMaxBruteForceSequenceGround) {
    throw Error(Errc::kTooLarge, "exhaustive sequence search is limited to 12 elements");
  }
  const std::size_t states = std::size_t{1} << n;
  std::vector<int> widths(states);
  int target = 0;
  for (std::size_t s = 0; s < states; ++s) {
    widths[s] = detail::twisted_width(d.family(), Subset(s));
    target = std::max(target, widths[s]);
  }
  // The reachable future depends only on the current set, so a set that
  // failed once fails on every path.
  std::vector<bool> dead(states, false);
  std::vector<Element> path;
  std::function<bool(std::size_t)> search = [&](std::size_t s) -> bool {
    if (widths[s] == target) return true;
    if (dead[s]) return false;
    for (Element e = 0; e < n; ++e) {
      const std::size_t t = s | (std::size_t{1} << e);
      if (t == s || widths[t] < widths[s]) continue;
      path.push_back(e);
      if (search(t)) return true;
      path.pop_back();
    }
    dead[s] = true;
    return false;
  };

  MonotoneSearchResult result;
  if (search(0)) {
    result.final_feasible = d.contains(Subset::of(path));
    result.sequence = std::move(path);
  }
  return result;
}

}  // namespace twistwidth

#endif  // TWISTWIDTH_MONOTONE_HPP_
