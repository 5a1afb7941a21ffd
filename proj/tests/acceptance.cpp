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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion with
// its wall time and exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "twistwidth/io.hpp"
#include "twistwidth/monotone.hpp"
#include "twistwidth/oracle.hpp"
#include "twistwidth/ribbon.hpp"
#include "twistwidth/set_system.hpp"

namespace twistwidth {
namespace {

using testing::labels;

// Collects the first few failure messages of one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) std::fprintf(stderr, "    failed: %s\n", what.c_str());
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::vector<Subset> sets(std::initializer_list<std::initializer_list<int>> l) {
  std::vector<Subset> out;
  for (auto s : l) out.push_back(Subset::from_labels(std::vector<int>(s)));
  std::sort(out.begin(), out.end());
  return out;
}

std::string where(std::uint64_t seed) { return "seed " + std::to_string(seed); }

void counterexample_regression(Checker& c) {
  const SetSystem d = parse_set_system_file(testing::fixture("d_r.json"));
  c.expect(width(d) == 4, "width is 4");
  c.expect(max_twist_width(d) == 5, "pairwise maximum twist width is 5");
  c.expect(max_twist_width_bruteforce(d) == 5, "brute-force maximum twist width is 5");
  c.expect(hat_family(d) == sets({{1, 2}, {3, 4, 5}}), "attaining feasible twists");
  const AxiomVerdict v = check_symmetric_exchange(d);
  c.expect(!v.holds && v.witness.has_value(), "axiom fails with a witness");
  if (v.witness) {
    const AxiomWitness& w = *v.witness;
    bool refuted = d.contains(w.x) && d.contains(w.y) && (w.x ^ w.y).contains(w.u);
    for (Element e : (w.x ^ w.y).elements()) {
      const Subset moved = e == w.u ? w.x.flip(w.u) : w.x.flip(w.u).flip(e);
      refuted = refuted && !d.contains(moved);
    }
    c.expect(refuted, "witness refutes the axiom");
  }
  c.expect(!exists_monotone_sequence_bruteforce(d).sequence.has_value(),
           "no monotone sequence exists");
}

void bouchet_regression(Checker& c) {
  const SetSystem d = parse_set_system_file(testing::fixture("d_b.json"));
  c.expect(check_symmetric_exchange(d).holds, "axiom holds");
  c.expect(hat_family(d) == sets({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), "hat family");
  const WidthTrace scripted =
      monotone_sequence(d, parse_script_file(testing::fixture("d_b_script.json")));
  c.expect(scripted.sequence == std::vector<Element>{0, 1}, "scripted sequence is [1,2]");
  c.expect(scripted.widths == std::vector<int>{2, 2, 4}, "scripted widths are (2,2,4)");
  c.expect(verify_trace(d, scripted).passed(), "scripted trace verifies");
  const WidthTrace canonical = monotone_sequence(d);
  c.expect(verify_trace(d, canonical).passed(), "canonical trace verifies");
  c.expect(canonical.widths.back() == 4, "canonical trace reaches 4");
}

void four_loop_regression(Checker& c) {
  const SetSystem d = parse_set_system_file(testing::fixture("f53.json"));
  c.expect(hat_family(d) == sets({{1, 3}, {1, 4}, {2, 3}, {2, 4}}), "hat family");
  const WidthTrace scripted =
      monotone_sequence(d, parse_script_file(testing::fixture("f53_script.json")));
  c.expect(scripted.sequence == std::vector<Element>{0, 2}, "scripted sequence is [1,3]");
  c.expect(verify_trace(d, scripted).passed(), "scripted trace verifies");
  const RibbonGraph r4 = parse_ribbon_graph_file(testing::fixture("r4.json"));
  c.expect(delta_matroid_of(r4) == d, "D(R4) is the four-loop family");
  c.expect(euler_genus(r4) == 2, "genus of R4 is 2");
  c.expect(max_pd_genus(r4) == 4, "maximum partial-dual genus is 4");
  c.expect(deficiency(r4) == 1, "deficiency is 1");
}

void pairwise_width_suite(Checker& c) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 1 + static_cast<int>(detail::splitmix64(seed) % 10);
    const SetSystem d = random_set_system(Seeded{seed}, n);
    const int brute = max_twist_width_bruteforce(d);
    c.expect(max_twist_width(d) == brute, where(seed) + ": pairwise equals brute force");
    int attained = 0;
    for (Subset f : d.family()) attained = std::max(attained, width(twist(d, f)));
    c.expect(attained == brute, where(seed) + ": attained by a feasible twist");
  }
}

void monotone_suite(Checker& c) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(detail::splitmix64(seed) % 8);
    const SetSystem d = random_delta_matroid(Seeded{seed}, n);
    const DeltaMatroid dm = DeltaMatroid::certify(d);
    const WidthTrace trace = monotone_sequence(dm);
    const TraceVerdict v = verify_trace(d, trace);
    c.expect(v.passed(), where(seed) + ": trace verifies" + (v.passed() ? "" : " (" + v.first().detail + ")"));
    for (Subset f0 : d.family()) {
      try {
        const auto [lo, hi] = sandwich(dm, f0);
        c.expect(lo.subset_of(f0) && f0.subset_of(hi) && d.contains(lo) && d.contains(hi),
                 where(seed) + ": sandwich around " + f0.to_string());
      } catch (const Error& e) {
        c.expect(false, where(seed) + ": sandwich threw " + e.what());
      }
    }
  }
}

std::vector<RibbonGraph> ribbon_corpus() {
  std::vector<RibbonGraph> out;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::uint64_t mix = detail::splitmix64(seed);
    out.push_back(random_ribbon_graph(Seeded{seed}, 1 + static_cast<int>(mix % 3),
                                      static_cast<int>((mix >> 8) % 7)));
  }
  for (const RibbonGraph& g : testing::all_ribbon_fixtures()) out.push_back(g);
  return out;
}

void ribbon_suite(Checker& c) {
  int index = 0;
  for (const RibbonGraph& g : ribbon_corpus()) {
    const std::string at = "graph " + std::to_string(index++);
    const SetSystem dg = delta_matroid_of(g);
    c.expect(width(dg) == euler_genus(g), at + ": width of D(G) equals genus");
    c.expect(check_symmetric_exchange(dg).holds, at + ": D(G) satisfies the axiom");
    c.expect(partial_dual(g, Subset()) == g, at + ": empty partial dual is G");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const Subset a(bits);
      const RibbonGraph dual = partial_dual(g, a);
      const SetSystem twisted = twist(dg, a);
      c.expect(delta_matroid_of(dual) == twisted, at + ": D(G^A) = D(G) twisted by A");
      const int genus = euler_genus(dual);
      c.expect(genus == pd_genus_formula(g, a) && genus == width(twisted),
               at + ": partial-dual genus formula");
      c.expect(isomorphic_preserving_edge_labels(partial_dual(dual, a), g),
               at + ": partial duality is an involution");
    }
  }
}

void max_genus_suite(Checker& c) {
  int index = 0;
  int connected = 0;
  for (const RibbonGraph& g : ribbon_corpus()) {
    const std::string at = "graph " + std::to_string(index++);
    if (components(g) != 1) continue;
    ++connected;
    const MaxPdGenusMethods m = max_pd_genus_methods(g);
    c.expect(m.agree(), at + ": three maximum partial-dual genus methods agree");
    c.expect(deficiency(g) == g.edge_count() + 1 - max_twist_width(delta_matroid_of(g)),
             at + ": deficiency formula");
  }
  c.expect(connected > 0, "corpus has connected graphs");
}

void performance_check(Checker& c) {
  const RibbonGraph g = random_ribbon_graph(Seeded{14}, 1, 14);
  const SetSystem d = delta_matroid_of(g);
  c.expect(d.proper() && d.ground_size() == 14, "fourteen-edge delta-matroid built");
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 when no time bound applies
  std::function<void(Checker&)> run;
};

int run_all() {
  const std::vector<Criterion> criteria = {
      {"1 counterexample regression", 1.0, counterexample_regression},
      {"2 Bouchet example regression", 1.0, bouchet_regression},
      {"3 four-loop example regression", 1.0, four_loop_regression},
      {"4 maximum twist width suite (1000 systems)", 60.0, pairwise_width_suite},
      {"5 monotone sequence and sandwich suite (500 delta-matroids)", 120.0, monotone_suite},
      {"6 ribbon identity suite (200 graphs + fixtures)", 120.0, ribbon_suite},
      {"7 maximum partial-dual genus and deficiency suite", 0.0, max_genus_suite},
      {"8 fourteen-edge delta_matroid_of performance", 5.0, performance_check},
  };
  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = criterion.limit_seconds == 0.0 || seconds < criterion.limit_seconds;
    const bool ok = checker.failures() == 0 && in_time;
    if (!ok) ++failed;
    std::printf("%s criterion %s: %.3f s", ok ? "PASS" : "FAIL", criterion.name, seconds);
    if (criterion.limit_seconds > 0.0) std::printf(" (limit %.0f s)", criterion.limit_seconds);
    if (checker.failures() > 0) std::printf(", %d check(s) failed", checker.failures());
    std::printf("\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace twistwidth

int main() { return twistwidth::run_all(); }
