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

// Set systems, twists, widths and the symmetric exchange axiom.

#ifndef TWISTWIDTH_SET_SYSTEM_HPP_
#define TWISTWIDTH_SET_SYSTEM_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twistwidth/error.hpp"
#include "twistwidth/subset.hpp"

namespace twistwidth {

// A finite ground set {0, ..., n-1} together with a family of subsets
// (the feasible sets). The family is kept deduplicated and sorted in
// canonical order. It may be empty; operations that need a proper system
// reject that case with ImproperSystem.
class SetSystem {
 public:
  SetSystem() = default;

  SetSystem(int ground_size, std::vector<Subset> family)
      : ground_size_(ground_size), family_(std::move(family)) {
    if (ground_size_ < 0 || ground_size_ > kMaxGroundSize) {
      throw Error(Errc::kGroundSetTooLarge,
                  "ground set size " + std::to_string(ground_size_) +
                      " outside [0, 64]");
    }
    const Subset ground = Subset::full(ground_size_);
    for (Subset s : family_) {
      if (!s.subset_of(ground)) {
        throw Error(Errc::kOutOfRangeElement,
                    "feasible set " + s.to_string() + " leaves the ground set");
      }
    }
    std::sort(family_.begin(), family_.end());
    family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
  }

  int ground_size() const { return ground_size_; }
  Subset ground() const { return Subset::full(ground_size_); }
  std::span<const Subset> family() const { return family_; }
  std::size_t size() const { return family_.size(); }
  bool proper() const { return !family_.empty(); }

  bool contains(Subset s) const {
    return std::binary_search(family_.begin(), family_.end(), s);
  }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int ground_size_ = 0;
  std::vector<Subset> family_;
};

// Builds a set system from 1-based element lists. Duplicates are merged.
inline SetSystem make_set_system(int n, const std::vector<std::vector<int>>& subsets) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(Errc::kGroundSetTooLarge,
                "ground set size " + std::to_string(n) + " outside [0, 64]");
  }
  std::vector<Subset> family;
  family.reserve(subsets.size());
  for (const auto& labels : subsets) {
    for (int label : labels) {
      if (label < 1 || label > n) {
        throw Error(Errc::kOutOfRangeElement,
                    "element " + std::to_string(label) + " not in 1.." +
                        std::to_string(n));
      }
    }
    family.push_back(Subset::from_labels(labels));
  }
  return SetSystem(n, std::move(family));
}

namespace detail {

inline void require_proper(const SetSystem& d) {
  if (!d.proper()) {
    throw Error(Errc::kImproperSystem, "set system has no feasible sets");
  }
}

inline void require_in_ground(const SetSystem& d, Subset a) {
  if (!a.subset_of(d.ground())) {
    throw Error(Errc::kOutOfRangeElement,
                "subset " + a.to_string() + " leaves the ground set of size " +
                    std::to_string(d.ground_size()));
  }
}

// Width of D twisted by `a`, without materializing the twisted family.
inline int twisted_width(std::span<const Subset> family, Subset a) {
  int lo = kMaxGroundSize + 1;
  int hi = -1;
  for (Subset x : family) {
    const int c = (x ^ a).size();
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return hi - lo;
}

}  // namespace detail

// D twisted by A: every feasible set X is replaced by X symmetric-difference A.
inline SetSystem twist(const SetSystem& d, Subset a) {
  detail::require_in_ground(d, a);
  std::vector<Subset> family;
  family.reserve(d.size());
  for (Subset x : d.family()) family.push_back(x ^ a);
  return SetSystem(d.ground_size(), std::move(family));
}

struct WidthSummary {
  int r_min = 0;
  int r_max = 0;
  int width = 0;

  friend bool operator==(const WidthSummary&, const WidthSummary&) = default;
};

inline WidthSummary width_summary(const SetSystem& d) {
  detail::require_proper(d);
  // Canonical order sorts by cardinality first.
  const int lo = d.family().front().size();
  const int hi = d.family().back().size();
  return {lo, hi, hi - lo};
}

inline int width(const SetSystem& d) { return width_summary(d).width; }

inline std::vector<Subset> min_family(const SetSystem& d) {
  detail::require_proper(d);
  const int lo = d.family().front().size();
  std::vector<Subset> out;
  for (Subset x : d.family()) {
    if (x.size() != lo) break;
    out.push_back(x);
  }
  return out;
}

inline std::vector<Subset> max_family(const SetSystem& d) {
  detail::require_proper(d);
  const int hi = d.family().back().size();
  std::vector<Subset> out;
  for (Subset x : d.family()) {
    if (x.size() == hi) out.push_back(x);
  }
  return out;
}

// A violation of symmetric exchange: u lies in X sym-diff Y, yet no v in
// X sym-diff Y puts X sym-diff {u, v} back in the family.
struct AxiomWitness {
  Subset x;
  Subset y;
  Element u = 0;

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct AxiomVerdict {
  bool holds = true;
  std::optional<AxiomWitness> witness;
};

// Full scan over ordered pairs (X, Y) in canonical order and u ascending;
// reports the first violation found.
inline AxiomVerdict check_symmetric_exchange(const SetSystem& d) {
  detail::require_proper(d);
  for (Subset x : d.family()) {
    for (Subset y : d.family()) {
      const Subset diff = x ^ y;
      for (Element u : diff.elements()) {
        bool exchanged = false;
        for (Element v : diff.elements()) {
          const Subset moved = v == u ? x.flip(u) : x.flip(u).flip(v);
          if (d.contains(moved)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return {false, AxiomWitness{x, y, u}};
      }
    }
  }
  return {true, std::nullopt};
}

class NotDeltaMatroidError : public Error {
 public:
  explicit NotDeltaMatroidError(const AxiomWitness& w)
      : Error(Errc::kNotDeltaMatroid,
              "symmetric exchange fails for X=" + w.x.to_string() +
                  " Y=" + w.y.to_string() + " u=" + std::to_string(w.u + 1)),
        witness_(w) {}

  const AxiomWitness& witness() const noexcept { return witness_; }

 private:
  AxiomWitness witness_;
};

// A set system certified to satisfy the symmetric exchange axiom. The
// certificate is established once at construction.
class DeltaMatroid {
 public:
  static DeltaMatroid certify(SetSystem d) {
    const AxiomVerdict verdict = check_symmetric_exchange(d);
    if (!verdict.holds) throw NotDeltaMatroidError(*verdict.witness);
    return DeltaMatroid(std::move(d));
  }

  const SetSystem& system() const { return system_; }

  // Twisting preserves the axiom, so no re-certification is needed.
  DeltaMatroid twisted(Subset a) const { return DeltaMatroid(twist(system_, a)); }

 private:
  explicit DeltaMatroid(SetSystem d) : system_(std::move(d)) {}

  SetSystem system_;
};

// Maximum twist width, as the largest symmetric difference between two
// feasible sets. Valid for every proper set system.
inline int max_twist_width(const SetSystem& d) {
  detail::require_proper(d);
  const auto family = d.family();
  int best = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      best = std::max(best, (family[i] ^ family[j]).size());
    }
  }
  return best;
}

// Feasible sets whose twist attains the maximum twist width.
inline std::vector<Subset> hat_family(const SetSystem& d) {
  const int target = max_twist_width(d);
  std::vector<Subset> out;
  for (Subset f : d.family()) {
    if (detail::twisted_width(d.family(), f) == target) out.push_back(f);
  }
  return out;
}

inline Subset min_hat_feasible(const SetSystem& d) { return hat_family(d).front(); }

// For a feasible F0, the canonically first minimum-cardinality feasible set
// inside F0 and the first maximum-cardinality feasible set containing it.
inline std::pair<Subset, Subset> sandwich(const DeltaMatroid& dm, Subset f0) {
  const SetSystem& d = dm.system();
  if (!d.contains(f0)) {
    throw Error(Errc::kNotFeasible, f0.to_string() + " is not feasible");
  }
  std::optional<Subset> lower;
  for (Subset x : min_family(d)) {
    if (x.subset_of(f0)) {
      lower = x;
      break;
    }
  }
  std::optional<Subset> upper;
  for (Subset x : max_family(d)) {
    if (f0.subset_of(x)) {
      upper = x;
      break;
    }
  }
  if (!lower || !upper) {
    throw Error(Errc::kNoSandwich, "no min/max feasible sets around " + f0.to_string());
  }
  return {*lower, *upper};
}

inline std::pair<Subset, Subset> sandwich(const SetSystem& d, Subset f0) {
  return sandwich(DeltaMatroid::certify(d), f0);
}

}  // namespace twistwidth

#endif  // TWISTWIDTH_SET_SYSTEM_HPP_
