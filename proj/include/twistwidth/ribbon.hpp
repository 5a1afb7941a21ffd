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

// Ribbon graphs as signed rotation systems.
//
// Edge i owns half-edges 2i and 2i+1. Every vertex carries a cyclic order of
// the half-edges attached to it; an edge flagged as twisted is a band with a
// half-twist. Edge subsets reuse Subset, indexed by edge.

#ifndef TWISTWIDTH_RIBBON_HPP_
#define TWISTWIDTH_RIBBON_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twistwidth/error.hpp"
#include "twistwidth/set_system.hpp"
#include "twistwidth/subset.hpp"

namespace twistwidth {

class RibbonGraph {
 public:
  RibbonGraph() = default;

  RibbonGraph(std::vector<bool> twisted, std::vector<std::vector<int>> rotations)
      : twisted_(std::move(twisted)), rotations_(std::move(rotations)) {
    if (twisted_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
      throw Error(Errc::kTooManyEdges, "at most 64 edges are supported");
    }
    const int half_edges = half_edge_count();
    vertex_of_.assign(half_edges, -1);
    position_.assign(half_edges, -1);
    for (std::size_t v = 0; v < rotations_.size(); ++v) {
      for (std::size_t p = 0; p < rotations_[v].size(); ++p) {
        const int h = rotations_[v][p];
        if (h < 0 || h >= half_edges) {
          throw Error(Errc::kInvalidGraph, "half-edge " + std::to_string(h) + " out of range");
        }
        if (vertex_of_[h] != -1) {
          throw Error(Errc::kInvalidGraph, "half-edge " + std::to_string(h) + " listed twice");
        }
        vertex_of_[h] = static_cast<int>(v);
        position_[h] = static_cast<int>(p);
      }
    }
    for (int h = 0; h < half_edges; ++h) {
      if (vertex_of_[h] == -1) {
        throw Error(Errc::kInvalidGraph, "half-edge " + std::to_string(h) + " not attached");
      }
    }
  }

  // Rotations given by 1-based edge labels; the first occurrence of label j
  // is half-edge 2(j-1), the second 2(j-1)+1.
  static RibbonGraph from_label_rotations(std::vector<bool> twisted,
                                          const std::vector<std::vector<int>>& labels) {
    std::vector<int> seen(twisted.size(), 0);
    std::vector<std::vector<int>> rotations;
    for (const auto& rotation : labels) {
      std::vector<int>& out = rotations.emplace_back();
      for (int label : rotation) {
        if (label < 1 || label > static_cast<int>(twisted.size()) || seen[label - 1] >= 2) {
          throw Error(Errc::kInvalidGraph, "bad edge label " + std::to_string(label));
        }
        out.push_back(2 * (label - 1) + seen[label - 1]++);
      }
    }
    return RibbonGraph(std::move(twisted), std::move(rotations));
  }

  int edge_count() const { return static_cast<int>(twisted_.size()); }
  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int half_edge_count() const { return 2 * edge_count(); }
  Subset edges() const { return Subset::full(edge_count()); }

  bool twisted(Element e) const { return twisted_[e]; }
  const std::vector<bool>& twist_flags() const { return twisted_; }
  const std::vector<std::vector<int>>& rotations() const { return rotations_; }

  int vertex_of(int half_edge) const { return vertex_of_[half_edge]; }
  int successor(int half_edge) const {
    const auto& rot = rotations_[vertex_of_[half_edge]];
    return rot[(position_[half_edge] + 1) % rot.size()];
  }
  int predecessor(int half_edge) const {
    const auto& rot = rotations_[vertex_of_[half_edge]];
    return rot[(position_[half_edge] + rot.size() - 1) % rot.size()];
  }

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
    return a.twisted_ == b.twisted_ && a.rotations_ == b.rotations_;
  }

 private:
  std::vector<bool> twisted_;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> vertex_of_;
  std::vector<int> position_;
};

// A traced state: standing at a half-edge, about to leave along its edge,
// with the walking direction around vertices (+1 successor, -1 predecessor).
struct TraceState {
  int half_edge = 0;
  int direction = 1;

  friend bool operator==(const TraceState&, const TraceState&) = default;
};

struct BoundaryReport {
  Subset subset;
  // Number of boundary components of the spanning ribbon subgraph (V, A).
  int count = 0;
  // Every state cycle of the doubled tracing. Each boundary circle is
  // traced once per direction, so there are two cycles per circle.
  std::vector<std::vector<TraceState>> walks;
  // Vertices incident to no edge of A; each is one more boundary circle.
  std::vector<int> bare_vertices;
};

namespace detail {

inline void require_edge_subset(const RibbonGraph& g, Subset a) {
  if (!a.subset_of(g.edges())) {
    throw Error(Errc::kInvalidSubset,
                "edge subset " + a.to_string() + " is not within the " +
                    std::to_string(g.edge_count()) + " edges");
  }
}

// Rotation successor/predecessor restricted to half-edges of edges in A.
struct RestrictedRotation {
  std::vector<int> next;
  std::vector<int> prev;
  int bare_vertices = 0;

  RestrictedRotation(const RibbonGraph& g, Subset a)
      : next(g.half_edge_count(), -1), prev(g.half_edge_count(), -1) {
    std::vector<int> kept;
    for (const auto& rot : g.rotations()) {
      kept.clear();
      for (int h : rot) {
        if (a.contains(h >> 1)) kept.push_back(h);
      }
      if (kept.empty()) {
        ++bare_vertices;
        continue;
      }
      for (std::size_t i = 0; i < kept.size(); ++i) {
        next[kept[i]] = kept[(i + 1) % kept.size()];
        prev[kept[i]] = kept[(i + kept.size() - 1) % kept.size()];
      }
    }
  }

  // Move to the partner half-edge, reversing direction across a twisted
  // edge, then step around the vertex among the kept half-edges.
  TraceState step(const RibbonGraph& g, TraceState s) const {
    const int partner = s.half_edge ^ 1;
    const int dir = g.twisted(s.half_edge >> 1) ? -s.direction : s.direction;
    return {dir > 0 ? next[partner] : prev[partner], dir};
  }
};

inline int state_index(TraceState s) { return 2 * s.half_edge + (s.direction > 0 ? 0 : 1); }

inline int count_boundaries(const RibbonGraph& g, Subset a) {
  const RestrictedRotation rr(g, a);
  std::vector<char> seen(2 * g.half_edge_count(), 0);
  int orbits = 0;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (!a.contains(h >> 1)) continue;
    for (int dir : {1, -1}) {
      TraceState s{h, dir};
      if (seen[state_index(s)]) continue;
      ++orbits;
      while (!seen[state_index(s)]) {
        seen[state_index(s)] = 1;
        s = rr.step(g, s);
      }
    }
  }
  return orbits / 2 + rr.bare_vertices;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Number of connected components of (V, A).
inline int components_of(const RibbonGraph& g, Subset a) {
  DisjointSets sets(g.vertex_count());
  int k = g.vertex_count();
  for (Element e : a.elements()) {
    if (sets.unite(g.vertex_of(2 * e), g.vertex_of(2 * e + 1))) --k;
  }
  return k;
}

inline constexpr int kMaxEnumeratedEdges = 20;

inline void require_enumerable(const RibbonGraph& g) {
  if (g.edge_count() > kMaxEnumeratedEdges) {
    throw Error(Errc::kTooManyEdges, "subset enumeration is limited to 20 edges");
  }
}

}  // namespace detail

// Boundary components of the spanning ribbon subgraph (V, A), with the
// traced walks.
inline BoundaryReport boundary_count(const RibbonGraph& g, Subset a) {
  detail::require_edge_subset(g, a);
  const detail::RestrictedRotation rr(g, a);
  BoundaryReport report;
  report.subset = a;
  std::vector<char> seen(2 * g.half_edge_count(), 0);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (!a.contains(h >> 1)) continue;
    for (int dir : {1, -1}) {
      TraceState s{h, dir};
      if (seen[detail::state_index(s)]) continue;
      auto& walk = report.walks.emplace_back();
      while (!seen[detail::state_index(s)]) {
        seen[detail::state_index(s)] = 1;
        walk.push_back(s);
        s = rr.step(g, s);
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotations()[v];
    if (std::none_of(rot.begin(), rot.end(), [&](int h) { return a.contains(h >> 1); })) {
      report.bare_vertices.push_back(v);
    }
  }
  report.count = static_cast<int>(report.walks.size() / 2 + report.bare_vertices.size());
  return report;
}

inline int components(const RibbonGraph& g) { return detail::components_of(g, g.edges()); }

inline int euler_genus(const RibbonGraph& g) {
  const int faces = detail::count_boundaries(g, g.edges());
  return 2 * components(g) - g.vertex_count() + g.edge_count() - faces;
}

// Edge sets of spanning quasi-trees: subsets A with as many components as G
// and one boundary circle per component.
inline std::vector<Subset> quasi_trees(const RibbonGraph& g) {
  detail::require_enumerable(g);
  const int k = components(g);
  std::vector<Subset> out;
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const Subset a(bits);
    if (detail::count_boundaries(g, a) == k && detail::components_of(g, a) == k) {
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline SetSystem delta_matroid_of(const RibbonGraph& g) {
  return SetSystem(g.edge_count(), quasi_trees(g));
}

namespace detail {

// Boundary walks of (V, A) traced through every corner of G, used to build
// the partial dual. A state is (half-edge h, direction) meaning the walk
// arrives at the attachment segment of h while moving along the vertex
// boundary in that direction. For edge i, the + direction at half-edge 2i
// arrives on side 0 of the band; at 2i+1 it arrives on side 1, or on side 0
// when the band is twisted.
class CornerWalker {
 public:
  CornerWalker(const RibbonGraph& g, Subset a) : g_(g), a_(a) {}

  int enter_side(int h) const {
    if ((h & 1) == 0) return 0;
    return g_.twisted(h >> 1) ? 0 : 1;
  }

  int arrival_side(TraceState s) const {
    return s.direction > 0 ? enter_side(s.half_edge) : 1 - enter_side(s.half_edge);
  }

  bool in_a(int h) const { return a_.contains(h >> 1); }

  TraceState next(TraceState s) const {
    const int h = s.half_edge;
    if (!in_a(h)) {
      return s.direction > 0 ? TraceState{g_.successor(h), 1} : TraceState{g_.predecessor(h), -1};
    }
    const int side = arrival_side(s);
    const int p = h ^ 1;
    if (side == enter_side(p)) return {g_.predecessor(p), -1};
    return {g_.successor(p), 1};
  }

  TraceState reverse(TraceState s) const {
    if (!in_a(s.half_edge)) return {s.half_edge, -s.direction};
    const int side = arrival_side(s);
    const int p = s.half_edge ^ 1;
    return {p, side == enter_side(p) ? 1 : -1};
  }

  // The half-edge of the dual created by this state, and the band side at
  // which the dual vertex boundary reaches it.
  std::pair<int, int> dual_attachment(TraceState s) const {
    const int h = s.half_edge;
    if (!in_a(h)) return {h, arrival_side(s)};
    return {2 * (h >> 1) + arrival_side(s), h & 1};
  }

 private:
  const RibbonGraph& g_;
  Subset a_;
};

}  // namespace detail

// Partial dual G^A. Vertices of the result are the boundary circles of
// (V, A), in the order their first corner is met scanning G's vertices.
// Edges keep their identities: a side of an edge in A becomes half-edge
// 2i + side, edges outside A keep their half-edges.
inline RibbonGraph partial_dual(const RibbonGraph& g, Subset a) {
  detail::require_edge_subset(g, a);
  const detail::CornerWalker walker(g, a);
  std::vector<char> seen(2 * g.half_edge_count(), 0);
  std::vector<int> dual_enter(g.half_edge_count(), -1);
  std::vector<std::vector<int>> rotations;

  auto mark = [&](TraceState start) {
    TraceState s = start;
    do {
      seen[detail::state_index(s)] = 1;
      s = walker.next(s);
    } while (!(s == start));
  };

  for (const auto& rot : g.rotations()) {
    if (rot.empty()) {
      rotations.emplace_back();
      continue;
    }
    for (int h : rot) {
      for (int dir : {1, -1}) {
        const TraceState start{h, dir};
        if (seen[detail::state_index(start)]) continue;
        std::vector<int>& vertex = rotations.emplace_back();
        TraceState s = start;
        do {
          seen[detail::state_index(s)] = 1;
          const auto [half_edge, side] = walker.dual_attachment(s);
          vertex.push_back(half_edge);
          dual_enter[half_edge] = side;
          s = walker.next(s);
        } while (!(s == start));
        const TraceState back = walker.reverse(start);
        if (seen[detail::state_index(back)]) {
          throw std::logic_error("partial_dual: boundary walk is its own reverse");
        }
        mark(back);
      }
    }
  }

  std::vector<bool> twisted(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    twisted[e] = dual_enter[2 * e] == dual_enter[2 * e + 1];
  }
  return RibbonGraph(std::move(twisted), std::move(rotations));
}

inline RibbonGraph geometric_dual(const RibbonGraph& g) { return partial_dual(g, g.edges()); }

// Euler genus of G^A from boundary counts of G alone, summed over the
// components of G: 2 + e - f(A) - f(A^c) per component.
inline int pd_genus_formula(const RibbonGraph& g, Subset a) {
  detail::require_edge_subset(g, a);
  const Subset rest = g.edges().minus(a);
  return 2 * components(g) + g.edge_count() - detail::count_boundaries(g, a) -
         detail::count_boundaries(g, rest);
}

struct MaxPdGenusMethods {
  int via_quasi_trees = 0;    // k + e - min f(A^c) over spanning quasi-trees
  int via_delta_matroid = 0;  // maximum twist width of D(G)
  int via_sweep = 0;          // maximum of the genus formula over all A

  bool agree() const {
    return via_quasi_trees == via_delta_matroid && via_delta_matroid == via_sweep;
  }
};

inline MaxPdGenusMethods max_pd_genus_methods(const RibbonGraph& g) {
  detail::require_enumerable(g);
  const std::vector<Subset> trees = quasi_trees(g);
  int min_complement = g.vertex_count() + g.edge_count() + 1;
  for (Subset a : trees) {
    min_complement = std::min(min_complement, detail::count_boundaries(g, g.edges().minus(a)));
  }
  MaxPdGenusMethods m;
  m.via_quasi_trees = components(g) + g.edge_count() - min_complement;
  m.via_delta_matroid = max_twist_width(SetSystem(g.edge_count(), trees));
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    m.via_sweep = std::max(m.via_sweep, pd_genus_formula(g, Subset(bits)));
  }
  return m;
}

// Maximum Euler genus over all partial duals of G.
inline int max_pd_genus(const RibbonGraph& g) {
  const MaxPdGenusMethods m = max_pd_genus_methods(g);
  if (!m.agree()) {
    throw std::logic_error("max_pd_genus: quasi-tree, delta-matroid and sweep values disagree");
  }
  return m.via_quasi_trees;
}

// Partial-duality deficiency: the least number of boundary circles of the
// complement of a spanning quasi-tree.
inline int deficiency(const RibbonGraph& g) {
  if (components(g) != 1) {
    throw Error(Errc::kDisconnected, "deficiency needs a connected ribbon graph");
  }
  int best = g.vertex_count() + g.edge_count() + 1;
  for (Subset a : quasi_trees(g)) {
    best = std::min(best, detail::count_boundaries(g, g.edges().minus(a)));
  }
  return best;
}

// Whether some isomorphism maps every edge of `a` to the same-numbered edge
// of `b`. Ends of an edge may be exchanged and vertex orientations reversed.
// Brute force over end exchanges; intended for small graphs.
inline bool isomorphic_preserving_edge_labels(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.edge_count() != b.edge_count() || a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() > 16) throw Error(Errc::kTooLarge, "isomorphism search is limited to 16 edges");
  auto bare = [](const RibbonGraph& g) {
    return std::count_if(g.rotations().begin(), g.rotations().end(),
                         [](const auto& r) { return r.empty(); });
  };
  if (bare(a) != bare(b)) return false;

  const int m = a.edge_count();
  const int nv = a.vertex_count();
  for (std::uint64_t swap = 0; swap < (std::uint64_t{1} << m); ++swap) {
    auto map = [&](int h) { return h ^ static_cast<int>((swap >> (h >> 1)) & 1U); };
    // Bit 0: orientation kept matches, bit 1: reversed matches.
    std::vector<int> allowed(nv, 3);
    bool ok = true;
    for (int u = 0; u < nv && ok; ++u) {
      const auto& ru = a.rotations()[u];
      if (ru.empty()) continue;
      const auto& rw = b.rotations()[b.vertex_of(map(ru[0]))];
      const std::size_t len = ru.size();
      if (rw.size() != len) {
        ok = false;
        break;
      }
      const std::size_t start =
          static_cast<std::size_t>(std::find(rw.begin(), rw.end(), map(ru[0])) - rw.begin());
      int mask = 0;
      bool fwd = true;
      bool rev = true;
      for (std::size_t j = 0; j < len; ++j) {
        fwd = fwd && rw[(start + j) % len] == map(ru[j]);
        rev = rev && rw[(start + len - j) % len] == map(ru[j]);
      }
      if (fwd) mask |= 1;
      if (rev) mask |= 2;
      allowed[u] = mask;
      ok = mask != 0;
    }
    if (!ok) continue;

    // Reversing a vertex toggles the twist of each band end attached there:
    // flip(u) xor flip(w) must equal the twist difference of every edge u-w.
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (int e = 0; e < m; ++e) {
      const int u = a.vertex_of(2 * e);
      const int w = a.vertex_of(2 * e + 1);
      const int parity = a.twisted(e) != b.twisted(e) ? 1 : 0;
      if (u == w) {
        if (parity) ok = false;
        continue;
      }
      adj[u].push_back({w, parity});
      adj[w].push_back({u, parity});
    }
    if (!ok) continue;

    std::vector<int> flip(nv, -1);
    for (int root = 0; root < nv && ok; ++root) {
      if (flip[root] != -1 || a.rotations()[root].empty()) continue;
      bool component_ok = false;
      for (int root_flip : {0, 1}) {
        std::vector<int> trial = flip;
        std::vector<int> stack{root};
        trial[root] = root_flip;
        bool good = true;
        while (!stack.empty() && good) {
          const int u = stack.back();
          stack.pop_back();
          if (!((allowed[u] >> trial[u]) & 1)) good = false;
          for (auto [w, parity] : adj[u]) {
            const int want = trial[u] ^ parity;
            if (trial[w] == -1) {
              trial[w] = want;
              stack.push_back(w);
            } else if (trial[w] != want) {
              good = false;
            }
          }
        }
        if (good) {
          flip = std::move(trial);
          component_ok = true;
          break;
        }
      }
      ok = component_ok;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace twistwidth

#endif  // TWISTWIDTH_RIBBON_HPP_
