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

// Brute-force baselines, seeded instance generators, and a cross-check
// battery that pits every shortcut against its exhaustive counterpart.

#ifndef TWISTWIDTH_ORACLE_HPP_
#define TWISTWIDTH_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twistwidth/error.hpp"
#include "twistwidth/io.hpp"
#include "twistwidth/monotone.hpp"
#include "twistwidth/ribbon.hpp"
#include "twistwidth/set_system.hpp"

namespace twistwidth {

// Every generated instance is a pure function of its seed.
struct Seeded {
  std::uint64_t seed = 0;
};

namespace detail {

// Raw mt19937_64 output only; the standard distributions are not portable
// across library implementations and the golden files depend on the bits.
class SeededRng {
 public:
  explicit SeededRng(Seeded s) : engine_(s.seed) {}

  std::uint64_t bits() { return engine_(); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform in [0, n) up to a negligible modulo bias.
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

inline constexpr int kMaxBruteForceGround = 20;

// Literal maximum of width(D twisted by A) over all 2^n subsets A.
inline int max_twist_width_bruteforce(const SetSystem& d) {
  if (!d.proper()) throw Error(Errc::kImproperSystem, "set system has no feasible sets");
  if (d.ground_size() > kMaxBruteForceGround) {
    throw Error(Errc::kTooLarge, "brute-force twist sweep is limited to 20 elements");
  }
  int best = 0;
  const std::uint64_t limit = std::uint64_t{1} << d.ground_size();
  for (std::uint64_t a = 0; a < limit; ++a) {
    int lo = kMaxGroundSize;
    int hi = 0;
    for (Subset x : d.family()) {
      const int c = std::popcount(x.bits() ^ a);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    best = std::max(best, hi - lo);
  }
  return best;
}

// All subsets A (feasible or not) whose twist has the maximum width.
inline std::vector<Subset> bruteforce_maximizers(const SetSystem& d) {
  const int best = max_twist_width_bruteforce(d);
  std::vector<Subset> out;
  const std::uint64_t limit = std::uint64_t{1} << d.ground_size();
  for (std::uint64_t a = 0; a < limit; ++a) {
    if (width(twist(d, Subset(a))) == best) out.push_back(Subset(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline SetSystem random_set_system(Seeded s, int n) {
  if (n < 1 || n > 10) throw Error(Errc::kTooLarge, "random set systems use 1 <= n <= 10");
  detail::SeededRng rng(s);
  const double p = 0.02 + 0.68 * rng.unit();
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<Subset> family;
  while (family.empty()) {
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      if (rng.unit() < p) family.push_back(Subset(bits));
    }
  }
  return SetSystem(n, std::move(family));
}

inline RibbonGraph random_ribbon_graph(Seeded s, int vertices, int edges) {
  if (vertices < 1) throw Error(Errc::kInvalidGraph, "need at least one vertex");
  if (edges < 0 || edges > kMaxGroundSize) throw Error(Errc::kTooManyEdges, "at most 64 edges");
  detail::SeededRng rng(s);
  std::vector<int> half_edges(2 * edges);
  for (int h = 0; h < 2 * edges; ++h) half_edges[h] = h;
  for (int i = 2 * edges - 1; i > 0; --i) std::swap(half_edges[i], half_edges[rng.below(i + 1)]);
  std::vector<std::vector<int>> rotations(vertices);
  for (int h : half_edges) rotations[rng.below(vertices)].push_back(h);
  std::vector<bool> twisted(edges);
  for (int e = 0; e < edges; ++e) twisted[e] = (rng.bits() >> 63) != 0;
  return RibbonGraph(std::move(twisted), std::move(rotations));
}

// All rank-r subsets of an n-element ground set.
inline SetSystem uniform_matroid(int rank, int n) {
  std::vector<Subset> family;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (std::popcount(bits) == rank) family.push_back(Subset(bits));
  }
  return SetSystem(n, std::move(family));
}

enum class DeltaMatroidStrategy { kRejection, kTwistedUniform, kRibbon };

inline constexpr int kRejectionBudget = 10'000;

inline SetSystem random_delta_matroid(Seeded s, int n, DeltaMatroidStrategy strategy) {
  if (n < 1 || n > 8) throw Error(Errc::kTooLarge, "random delta-matroids use 1 <= n <= 8");
  detail::SeededRng rng(s);
  SetSystem out;
  switch (strategy) {
    case DeltaMatroidStrategy::kRejection: {
      bool found = false;
      for (int attempt = 0; attempt < kRejectionBudget && !found; ++attempt) {
        std::vector<Subset> family;
        const int members = 1 + rng.below(4);
        for (int i = 0; i < members; ++i) {
          family.push_back(Subset(rng.bits() & Subset::full(n).bits()));
        }
        SetSystem candidate(n, std::move(family));
        if (check_symmetric_exchange(candidate).holds) {
          out = std::move(candidate);
          found = true;
        }
      }
      if (!found) throw Error(Errc::kGenerationExhausted, "rejection budget exceeded");
      break;
    }
    case DeltaMatroidStrategy::kTwistedUniform: {
      const int rank = rng.below(n + 1);
      const Subset a(rng.bits() & Subset::full(n).bits());
      out = twist(uniform_matroid(rank, n), a);
      break;
    }
    case DeltaMatroidStrategy::kRibbon: {
      const int vertices = 1 + rng.below(3);
      out = delta_matroid_of(random_ribbon_graph(Seeded{rng.bits()}, vertices, n));
      break;
    }
  }
  if (!check_symmetric_exchange(out).holds) {
    throw std::logic_error("random_delta_matroid produced a set system failing the axiom");
  }
  return out;
}

// Strategy drawn from the seed as well.
inline SetSystem random_delta_matroid(Seeded s, int n) {
  const auto pick = static_cast<int>(detail::splitmix64(s.seed) % 3);
  return random_delta_matroid(Seeded{detail::splitmix64(s.seed + 1)}, n,
                              static_cast<DeltaMatroidStrategy>(pick));
}

struct PropertyOutcome {
  std::string name;
  int checked = 0;
  int failed = 0;
  // JSON replay record of the first failing instance.
  std::optional<std::string> first_failure;
};

struct CertificationReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyOutcome> properties;

  bool all_passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyOutcome& p) { return p.failed == 0; });
  }

  const PropertyOutcome* find(const std::string& name) const {
    for (const auto& p : properties) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }

  Json to_json() const {
    Json props = Json::array();
    for (const auto& p : properties) {
      Json entry{{"name", p.name}, {"checked", p.checked}, {"failed", p.failed}};
      if (p.first_failure) entry["first_failure"] = Json::parse(*p.first_failure);
      props.push_back(std::move(entry));
    }
    return Json{{"seed", seed}, {"trials", trials}, {"all_passed", all_passed()},
                {"properties", std::move(props)}};
  }
};

// Hooks for exercising the battery against deliberately broken routines.
struct CertifyOptions {
  std::function<int(const SetSystem&)> max_twist_width = [](const SetSystem& d) {
    return twistwidth::max_twist_width(d);
  };
};

namespace detail {

class Battery {
 public:
  PropertyOutcome& outcome(const std::string& name) {
    for (auto& p : outcomes_) {
      if (p.name == name) return p;
    }
    outcomes_.push_back({name, 0, 0, std::nullopt});
    return outcomes_.back();
  }

  // Evaluates `check`; exceptions count as failures.
  void check(const std::string& name, const Json& instance, const std::function<bool()>& check) {
    PropertyOutcome& p = outcome(name);
    ++p.checked;
    std::string detail;
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (ok) return;
    ++p.failed;
    if (!p.first_failure) {
      Json record{{"property", name}, {"instance", instance}};
      if (!detail.empty()) record["exception"] = detail;
      p.first_failure = record.dump();
    }
  }

  std::vector<PropertyOutcome> take() { return std::move(outcomes_); }

 private:
  std::vector<PropertyOutcome> outcomes_;
};

inline Json instance_json(const SetSystem& d, std::optional<Subset> a = std::nullopt) {
  Json j{{"set_system", to_json(d)}};
  if (a) j["subset"] = to_json(*a);
  return j;
}

inline Json instance_json(const RibbonGraph& g, std::optional<Subset> a = std::nullopt) {
  Json j{{"ribbon_graph", to_json(g)}};
  if (a) j["subset"] = to_json(*a);
  return j;
}

inline void certify_set_system(Battery& b, const SetSystem& d, SeededRng& rng,
                               const CertifyOptions& options) {
  const Subset ground = d.ground();
  const Subset a(rng.bits() & ground.bits());
  const Subset c(rng.bits() & ground.bits());
  b.check("twist_involution", instance_json(d, a), [&] { return twist(twist(d, a), a) == d; });
  b.check("twist_composition", instance_json(d, a),
          [&] { return twist(twist(d, a), c) == twist(d, a ^ c); });
  b.check("width_shift_bounds", instance_json(d), [&] {
    const WidthSummary base = width_summary(d);
    for (Element e = 0; e < d.ground_size(); ++e) {
      const WidthSummary moved = width_summary(twist(d, Subset().flip(e)));
      if (std::abs(moved.r_min - base.r_min) > 1 || std::abs(moved.r_max - base.r_max) > 1) {
        return false;
      }
    }
    return true;
  });
  const int brute = max_twist_width_bruteforce(d);
  b.check("pairwise_oracle_equivalence", instance_json(d),
          [&] { return options.max_twist_width(d) == brute; });
  b.check("feasible_twist_attains_max", instance_json(d), [&] {
    int best = 0;
    for (Subset f : d.family()) best = std::max(best, width(twist(d, f)));
    return best == brute;
  });
  b.check("hat_family_nonempty", instance_json(d), [&] { return !hat_family(d).empty(); });
  const bool holds = check_symmetric_exchange(d).holds;
  if (holds) {
    b.check("axiom_twist_closure", instance_json(d, a),
            [&] { return check_symmetric_exchange(twist(d, a)).holds; });
  } else {
    b.check("nondelta_refused", instance_json(d), [&] {
      try {
        monotone_sequence(d);
      } catch (const NotDeltaMatroidError&) {
        return true;
      }
      return false;
    });
  }
}

inline void certify_delta_matroid(Battery& b, const SetSystem& d) {
  b.check("generated_delta_matroid_axiom", instance_json(d),
          [&] { return check_symmetric_exchange(d).holds; });
  const DeltaMatroid dm = DeltaMatroid::certify(d);
  WidthTrace trace;
  b.check("monotone_trace_verified", instance_json(d), [&] {
    trace = monotone_sequence(dm);
    return verify_trace(d, trace).passed() &&
           static_cast<int>(trace.sequence.size()) == min_hat_feasible(d).size();
  });
  b.check("profile_consistency", instance_json(d),
          [&] { return width_profile(d, trace.sequence) == trace.widths; });
  b.check("sandwich", instance_json(d), [&] {
    const auto lows = min_family(d);
    const auto highs = max_family(d);
    for (Subset f0 : d.family()) {
      const auto [lo, hi] = sandwich(dm, f0);
      if (!lo.subset_of(f0) || !f0.subset_of(hi)) return false;
      if (std::find(lows.begin(), lows.end(), lo) == lows.end()) return false;
      if (std::find(highs.begin(), highs.end(), hi) == highs.end()) return false;
    }
    return true;
  });
  b.check("bruteforce_sequence_exists", instance_json(d),
          [&] { return exists_monotone_sequence_bruteforce(d).sequence.has_value(); });
}

inline void certify_ribbon_graph(Battery& b, const RibbonGraph& g) {
  const SetSystem dg = delta_matroid_of(g);
  const int genus = euler_genus(g);
  b.check("genus_nonnegative", instance_json(g), [&] { return genus >= 0; });
  b.check("width_equals_genus", instance_json(g), [&] { return width(dg) == genus; });
  b.check("ribbon_axiom", instance_json(g), [&] { return check_symmetric_exchange(dg).holds; });
  b.check("dual_empty_identity", instance_json(g), [&] { return partial_dual(g, Subset()) == g; });
  const bool connected = components(g) == 1;
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const Subset a(bits);
    const RibbonGraph dual = partial_dual(g, a);
    b.check("partial_dual_twist", instance_json(g, a),
            [&] { return delta_matroid_of(dual) == twist(dg, a); });
    b.check("pd_genus_formula", instance_json(g, a), [&] {
      const int formula = pd_genus_formula(g, a);
      return euler_genus(dual) == formula && formula == width(twist(dg, a));
    });
    b.check("dual_involution", instance_json(g, a),
            [&] { return isomorphic_preserving_edge_labels(partial_dual(dual, a), g); });
    if (connected && boundary_count(g, a).count == 1) {
      b.check("quasi_tree_connected", instance_json(g, a),
              [&] { return detail::components_of(g, a) == 1; });
    }
  }
  b.check("max_pd_genus_agreement", instance_json(g),
          [&] { return max_pd_genus_methods(g).agree(); });
  if (connected) {
    b.check("deficiency_formula", instance_json(g), [&] {
      return deficiency(g) == g.edge_count() + 1 - max_twist_width(dg);
    });
  }
}

}  // namespace detail

// Runs the cross-check battery on `trials` seeded instances of each kind:
// a random set system (n <= 8), a random delta-matroid (n <= 6) and a random
// ribbon graph (up to 3 vertices, 5 edges).
inline CertificationReport certify_theorems(Seeded s, int trials,
                                            const CertifyOptions& options = {}) {
  detail::Battery battery;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t base = detail::splitmix64(s.seed ^ detail::splitmix64(t));
    detail::SeededRng rng(Seeded{base});

    const Seeded system_seed{rng.bits()};
    const int n_system = 1 + rng.below(8);
    const SetSystem d = random_set_system(system_seed, n_system);
    detail::certify_set_system(battery, d, rng, options);

    const Seeded matroid_seed{rng.bits()};
    const int n_matroid = 1 + rng.below(6);
    const SetSystem dm = random_delta_matroid(matroid_seed, n_matroid);
    detail::certify_delta_matroid(battery, dm);

    const Seeded graph_seed{rng.bits()};
    const int vertices = 1 + rng.below(3);
    const int edges = rng.below(6);
    const RibbonGraph g = random_ribbon_graph(graph_seed, vertices, edges);
    detail::certify_ribbon_graph(battery, g);

    battery.check("generators_deterministic", detail::instance_json(d), [&] {
      return random_set_system(system_seed, n_system) == d &&
             random_delta_matroid(matroid_seed, n_matroid) == dm &&
             random_ribbon_graph(graph_seed, vertices, edges) == g;
    });
  }
  return {s.seed, trials, battery.take()};
}

}  // namespace twistwidth

#endif  // TWISTWIDTH_ORACLE_HPP_
