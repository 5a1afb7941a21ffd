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

#ifndef TWISTWIDTH_SUBSET_HPP_
#define TWISTWIDTH_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "twistwidth/error.hpp"

namespace twistwidth {

// Ground-set elements are 0-based inside the library. Everything that
// faces a user (files, CLI flags, printed sets) uses 1-based labels.
using Element = int;

inline constexpr int kMaxGroundSize = 64;

// A subset of a ground set of at most 64 elements, stored as a bit-vector.
//
// Subsets compare in canonical order: first by cardinality, then by the
// numeric value of the bit-vector. Every "choose the first" in the library
// refers to this order.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  // Throws OutOfRangeElement for elements outside [0, 64).
  static Subset of(std::initializer_list<Element> elements) {
    return of(std::span<const Element>(elements.begin(), elements.size()));
  }
  static Subset of(std::span<const Element> elements) {
    Subset s;
    for (Element e : elements) {
      if (e < 0 || e >= kMaxGroundSize) {
        throw Error(Errc::kOutOfRangeElement,
                    "element index " + std::to_string(e) + " out of range");
      }
      s.bits_ |= bit(e);
    }
    return s;
  }

  // Builds a subset from 1-based labels.
  static Subset from_labels(std::initializer_list<int> labels) {
    return from_labels(std::span<const int>(labels.begin(), labels.size()));
  }
  static Subset from_labels(std::span<const int> labels) {
    Subset s;
    for (int label : labels) {
      if (label < 1 || label > kMaxGroundSize) {
        throw Error(Errc::kOutOfRangeElement,
                    "element " + std::to_string(label) + " out of range");
      }
      s.bits_ |= bit(label - 1);
    }
    return s;
  }

  // The full ground set {0, ..., n-1}.
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Smallest element; undefined for the empty set.
  constexpr Element front() const { return std::countr_zero(bits_); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }
  std::vector<int> labels() const {
    std::vector<int> out = elements();
    for (int& e : out) ++e;
    return out;
  }

  // "{1,2,3}" in 1-based labels.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int label : labels()) {
      if (!first) out += ',';
      out += std::to_string(label);
      first = false;
    }
    return out + "}";
  }

  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset flip(Element e) const { return Subset(bits_ ^ bit(e)); }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  static constexpr std::uint64_t bit(Element e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

}  // namespace twistwidth

#endif  // TWISTWIDTH_SUBSET_HPP_
