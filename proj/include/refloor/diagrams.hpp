#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "refloor/error.hpp"
#include "refloor/partitions.hpp"
#include "refloor/qalgebra.hpp"

namespace refloor {

enum class VertexKind { Floor1, Floor2, Leaf };

inline std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Floor1: return "Floor1";
    case VertexKind::Floor2: return "Floor2";
    case VertexKind::Leaf: return "Leaf";
  }
  return "?";
}

inline VertexKind parse_vertex_kind(std::string_view s) {
  if (s == "Floor1") return VertexKind::Floor1;
  if (s == "Floor2") return VertexKind::Floor2;
  if (s == "Leaf") return VertexKind::Leaf;
  throw Error(ErrorKind::Parse, "unknown vertex kind '" + std::string(s) + "'");
}

struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::Leaf;
};

/// Oriented source -> target.
struct Edge {
  int id = 0;
  int src = 0;
  int dst = 0;
  int weight = 1;
};

/// Weighted oriented graph with typed vertices. Ids equal positions.
class FloorDiagram {
 public:
  FloorDiagram() = default;
  FloorDiagram(const std::vector<VertexKind>& kinds, const std::vector<std::array<int, 3>>& edges) {
    for (const auto& kind : kinds) vertices_.push_back({static_cast<int>(vertices_.size()), kind});
    for (const auto& [s, t, w] : edges) edges_.push_back({static_cast<int>(edges_.size()), s, t, w});
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_vertex(int id) const { return id >= 0 && id < static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int id) const {
    if (!has_vertex(id)) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(id));
    return vertices_[static_cast<size_t>(id)];
  }

  std::vector<int> incident_edges(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_)
      if (e.src == v || e.dst == v) out.push_back(e.id);
    return out;
  }

  /// Vertices adjacent to exactly one edge, that edge being outgoing.
  bool in_vert_infinity(int v) const {
    auto inc = incident_edges(v);
    return inc.size() == 1 && edges_[static_cast<size_t>(inc[0])].src == v;
  }

  bool is_end(int edge_id) const {
    const Edge& e = edges_.at(static_cast<size_t>(edge_id));
    return in_vert_infinity(e.src) || in_vert_infinity(e.dst);
  }

  friend bool operator==(const FloorDiagram& x, const FloorDiagram& y) {
    if (x.vertices_.size() != y.vertices_.size() || x.edges_.size() != y.edges_.size()) return false;
    for (size_t i = 0; i < x.vertices_.size(); ++i)
      if (x.vertices_[i].kind != y.vertices_[i].kind) return false;
    for (size_t i = 0; i < x.edges_.size(); ++i) {
      const auto &a = x.edges_[i], &b = y.edges_[i];
      if (a.src != b.src || a.dst != b.dst || a.weight != b.weight) return false;
    }
    return true;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Σ incoming weights − Σ outgoing weights.
inline int divergence(const FloorDiagram& d, int v) {
  d.vertex(v);
  int div = 0;
  for (const auto& e : d.edges()) {
    if (e.dst == v) div += e.weight;
    if (e.src == v) div -= e.weight;
  }
  return div;
}

/// Checks the floor-diagram axioms at the given degree and genus and reports
/// every violation found.
inline std::vector<std::string> validate(const FloorDiagram& d, int degree, int genus) {
  std::vector<std::string> v;
  const int n = static_cast<int>(d.vertices().size());
  for (const auto& e : d.edges()) {
    if (!d.has_vertex(e.src) || !d.has_vertex(e.dst)) {
      v.push_back("edge " + std::to_string(e.id) + " has an unknown endpoint");
      return v;
    }
    if (e.src == e.dst) v.push_back("edge " + std::to_string(e.id) + " is a loop");
    if (e.weight < 1) v.push_back("edge " + std::to_string(e.id) + " has non-positive weight");
  }
  if (n == 0) {
    v.push_back("diagram has no vertices");
    return v;
  }

  // connectivity
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : d.edges()) {
    adj[static_cast<size_t>(e.src)].push_back(e.dst);
    adj[static_cast<size_t>(e.dst)].push_back(e.src);
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<size_t>(x)])
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != n) v.push_back("underlying graph is not connected");

  // acyclicity (Kahn)
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (const auto& e : d.edges()) ++indeg[static_cast<size_t>(e.dst)];
  std::queue<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<size_t>(i)] == 0) ready.push(i);
  int popped = 0;
  while (!ready.empty()) {
    int x = ready.front();
    ready.pop();
    ++popped;
    for (const auto& e : d.edges())
      if (e.src == x && --indeg[static_cast<size_t>(e.dst)] == 0) ready.push(e.dst);
  }
  if (popped != n) v.push_back("oriented graph has a cycle");

  const int betti = static_cast<int>(d.edges().size()) - n + 1;
  if (betti != genus)
    v.push_back("first Betti number " + std::to_string(betti) + " differs from genus " + std::to_string(genus));

  int leaf_div_sum = 0;
  for (const auto& vert : d.vertices()) {
    const int div = divergence(d, vert.id);
    const bool infinite = d.in_vert_infinity(vert.id);
    const std::string name = "vertex " + std::to_string(vert.id);
    if (infinite) {
      leaf_div_sum += div;
      if (vert.kind != VertexKind::Leaf) v.push_back(name + " is an infinite leaf but is not of kind Leaf");
      if (div > -1) v.push_back(name + " is an infinite leaf with divergence > -1");
      continue;
    }
    if (vert.kind == VertexKind::Leaf) {
      v.push_back(name + " of kind Leaf must have exactly one edge, outgoing");
      continue;
    }
    if (div != 2 && div != 4) v.push_back(name + " has divergence " + std::to_string(div) + ", expected 2 or 4");
    if (vert.kind == VertexKind::Floor1 && div != 2) v.push_back(name + " is Floor1 but has divergence " + std::to_string(div));
    if (vert.kind == VertexKind::Floor2 && div != 4) v.push_back(name + " is Floor2 but has divergence " + std::to_string(div));
    if (div == 2) {
      for (const auto& e : d.edges())
        if (e.src == vert.id) {
          v.push_back(name + " has divergence 2 but is not a sink");
          break;
        }
    }
  }
  if (leaf_div_sum != -2 * degree)
    v.push_back("leaf divergences sum to " + std::to_string(leaf_div_sum) + ", expected " + std::to_string(-2 * degree));
  return v;
}

// ---------------------------------------------------------------------------
// Floor layout: the shape of a valid diagram with leaves folded into floors
// ---------------------------------------------------------------------------

/// Floors indexed 0..F-1; each floor carries the weights of the infinite leaves
/// feeding it, and inner edges run between floors.
struct FloorLayout {
  std::vector<VertexKind> floor_kinds;
  std::vector<std::vector<int>> leaf_weights;  // per floor, ascending
  std::vector<std::array<int, 3>> inner;       // (source floor, target floor, weight), sorted

  int floor_count() const { return static_cast<int>(floor_kinds.size()); }
  int degree() const {
    int d = 0;
    for (auto k : floor_kinds) d += k == VertexKind::Floor2 ? 2 : 1;
    return d;
  }
  int genus() const { return static_cast<int>(inner.size()) - floor_count() + 1; }
  int leaf_count() const {
    int c = 0;
    for (const auto& w : leaf_weights) c += static_cast<int>(w.size());
    return c;
  }

  friend bool operator==(const FloorLayout&, const FloorLayout&) = default;
};

/// Floors first, then each floor's leaves in ascending weight; inner edges
/// come first in the edge list, followed by one edge per leaf.
inline FloorDiagram to_diagram(const FloorLayout& layout) {
  std::vector<VertexKind> kinds = layout.floor_kinds;
  std::vector<std::array<int, 3>> edges = layout.inner;
  for (int f = 0; f < layout.floor_count(); ++f)
    for (int w : layout.leaf_weights[static_cast<size_t>(f)]) {
      edges.push_back({static_cast<int>(kinds.size()), f, w});
      kinds.push_back(VertexKind::Leaf);
    }
  return FloorDiagram(kinds, edges);
}

/// Inverse of to_diagram up to relabeling; the diagram must already be valid.
inline FloorLayout layout_of(const FloorDiagram& d) {
  FloorLayout layout;
  std::vector<int> floor_index(d.vertices().size(), -1);
  for (const auto& v : d.vertices()) {
    if (v.kind == VertexKind::Leaf) continue;
    floor_index[static_cast<size_t>(v.id)] = layout.floor_count();
    layout.floor_kinds.push_back(v.kind);
  }
  layout.leaf_weights.resize(layout.floor_kinds.size());
  for (const auto& e : d.edges()) {
    const int fs = floor_index[static_cast<size_t>(e.src)], ft = floor_index[static_cast<size_t>(e.dst)];
    if (fs < 0 && ft >= 0) {
      layout.leaf_weights[static_cast<size_t>(ft)].push_back(e.weight);
    } else if (fs >= 0 && ft >= 0) {
      layout.inner.push_back({fs, ft, e.weight});
    } else {
      throw Error(ErrorKind::InvalidArguments, "edge " + std::to_string(e.id) + " does not run from a leaf or floor into a floor");
    }
  }
  for (auto& w : layout.leaf_weights) std::sort(w.begin(), w.end());
  std::sort(layout.inner.begin(), layout.inner.end());
  return layout;
}

/// Canonical relabeling of a layout together with its symmetry data.
struct CanonicalLayout {
  FloorLayout layout;               // floors in canonical order
  std::vector<int> encoding;        // isomorphism-class invariant
  /// Floor permutations p (floor i -> p[i]) preserving the canonical layout.
  std::vector<std::vector<int>> floor_automorphisms;
  /// Order of the full automorphism group of the diagram (vertices and edges).
  Integer automorphism_count = 1;
};

namespace detail {

inline std::vector<int> encode_layout(const FloorLayout& l, const std::vector<int>& position) {
  const int f = l.floor_count();
  std::vector<std::vector<int>> per_floor(static_cast<size_t>(f));
  std::vector<int> enc{f};
  std::vector<int> order(static_cast<size_t>(f));
  for (int i = 0; i < f; ++i) order[static_cast<size_t>(position[static_cast<size_t>(i)])] = i;
  for (int p = 0; p < f; ++p) {
    const int old = order[static_cast<size_t>(p)];
    enc.push_back(l.floor_kinds[static_cast<size_t>(old)] == VertexKind::Floor2 ? 2 : 1);
    const auto& lw = l.leaf_weights[static_cast<size_t>(old)];
    enc.push_back(static_cast<int>(lw.size()));
    enc.insert(enc.end(), lw.begin(), lw.end());
  }
  std::vector<std::array<int, 3>> edges;
  edges.reserve(l.inner.size());
  for (const auto& [s, t, w] : l.inner)
    edges.push_back({position[static_cast<size_t>(s)], position[static_cast<size_t>(t)], w});
  std::sort(edges.begin(), edges.end());
  enc.push_back(static_cast<int>(edges.size()));
  for (const auto& e : edges) enc.insert(enc.end(), e.begin(), e.end());
  return enc;
}

/// Isomorphism-invariant floor colors by iterated neighborhood refinement.
inline std::vector<int> refined_floor_colors(const FloorLayout& l) {
  const int f = l.floor_count();
  std::vector<std::vector<int>> keys(static_cast<size_t>(f));
  for (int i = 0; i < f; ++i) {
    auto& k = keys[static_cast<size_t>(i)];
    k.push_back(l.floor_kinds[static_cast<size_t>(i)] == VertexKind::Floor2 ? 2 : 1);
    k.push_back(static_cast<int>(l.leaf_weights[static_cast<size_t>(i)].size()));
    k.insert(k.end(), l.leaf_weights[static_cast<size_t>(i)].begin(), l.leaf_weights[static_cast<size_t>(i)].end());
  }
  auto rank = [&](const std::vector<std::vector<int>>& ks) {
    std::vector<std::vector<int>> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(ks.size());
    for (size_t i = 0; i < ks.size(); ++i)
      colors[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), ks[i]) - sorted.begin());
    return std::make_pair(colors, static_cast<int>(sorted.size()));
  };
  auto [colors, classes] = rank(keys);
  for (;;) {
    std::vector<std::vector<int>> next(static_cast<size_t>(f));
    for (int i = 0; i < f; ++i) {
      std::vector<std::array<int, 3>> nbrs;
      for (const auto& [s, t, w] : l.inner) {
        if (s == i) nbrs.push_back({0, w, colors[static_cast<size_t>(t)]});
        if (t == i) nbrs.push_back({1, w, colors[static_cast<size_t>(s)]});
      }
      std::sort(nbrs.begin(), nbrs.end());
      auto& k = next[static_cast<size_t>(i)];
      k.push_back(colors[static_cast<size_t>(i)]);
      for (const auto& a : nbrs) k.insert(k.end(), a.begin(), a.end());
    }
    auto [c2, n2] = rank(next);
    if (n2 == classes) return colors;
    colors = std::move(c2);
    classes = n2;
  }
}

/// Visits every floor position vector that respects the color order: floors of
/// a smaller color come first, floors sharing a color are permuted freely.
inline void for_each_color_ordering(const std::vector<int>& colors,
                                    const std::function<void(const std::vector<int>&)>& visit) {
  const int f = static_cast<int>(colors.size());
  std::vector<int> by_color(static_cast<size_t>(f));
  std::iota(by_color.begin(), by_color.end(), 0);
  std::stable_sort(by_color.begin(), by_color.end(),
                   [&](int x, int y) { return colors[static_cast<size_t>(x)] < colors[static_cast<size_t>(y)]; });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) in by_color
  for (int i = 0; i < f;) {
    int j = i;
    while (j < f && colors[static_cast<size_t>(by_color[static_cast<size_t>(j)])] ==
                        colors[static_cast<size_t>(by_color[static_cast<size_t>(i)])])
      ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<int> seq = by_color;
  std::vector<int> position(static_cast<size_t>(f));
  std::function<void(size_t)> rec = [&](size_t b) {
    if (b == blocks.size()) {
      for (int p = 0; p < f; ++p) position[static_cast<size_t>(seq[static_cast<size_t>(p)])] = p;
      visit(position);
      return;
    }
    auto first = seq.begin() + blocks[b].first, last = seq.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      rec(b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
}

inline FloorLayout apply_positions(const FloorLayout& l, const std::vector<int>& position) {
  const int f = l.floor_count();
  FloorLayout out;
  out.floor_kinds.resize(static_cast<size_t>(f));
  out.leaf_weights.resize(static_cast<size_t>(f));
  for (int i = 0; i < f; ++i) {
    out.floor_kinds[static_cast<size_t>(position[static_cast<size_t>(i)])] = l.floor_kinds[static_cast<size_t>(i)];
    out.leaf_weights[static_cast<size_t>(position[static_cast<size_t>(i)])] = l.leaf_weights[static_cast<size_t>(i)];
  }
  for (const auto& [s, t, w] : l.inner)
    out.inner.push_back({position[static_cast<size_t>(s)], position[static_cast<size_t>(t)], w});
  std::sort(out.inner.begin(), out.inner.end());
  return out;
}

}  // namespace detail

inline CanonicalLayout canonicalize(const FloorLayout& layout) {
  const auto colors = detail::refined_floor_colors(layout);
  std::optional<std::vector<int>> best;
  std::vector<int> best_position;
  detail::for_each_color_ordering(colors, [&](const std::vector<int>& position) {
    auto enc = detail::encode_layout(layout, position);
    if (!best || enc < *best) {
      best = std::move(enc);
      best_position = position;
    }
  });

  CanonicalLayout c;
  c.layout = detail::apply_positions(layout, best_position);
  c.encoding = *best;

  // Automorphisms: orderings of the canonical layout that reproduce its encoding.
  const auto canon_colors = detail::refined_floor_colors(c.layout);
  detail::for_each_color_ordering(canon_colors, [&](const std::vector<int>& position) {
    if (detail::encode_layout(c.layout, position) == c.encoding) c.floor_automorphisms.push_back(position);
  });

  Integer order = static_cast<unsigned long>(c.floor_automorphisms.size());
  for (const auto& lw : c.layout.leaf_weights) {
    std::map<int, int> groups;
    for (int w : lw) ++groups[w];
    for (const auto& [w, cnt] : groups) order *= factorial(cnt);
  }
  std::map<std::array<int, 3>, int> parallel;
  for (const auto& e : c.layout.inner) ++parallel[e];
  for (const auto& [e, cnt] : parallel) order *= factorial(cnt);
  c.automorphism_count = order;
  return c;
}

/// Canonical encoding of a valid diagram as text; equal iff isomorphic as
/// decorated oriented graphs.
inline std::string canonical_form(const FloorDiagram& d) {
  const auto c = canonicalize(layout_of(d));
  std::string out;
  for (size_t i = 0; i < c.encoding.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(c.encoding[i]);
  }
  return out;
}

inline Integer automorphism_count(const FloorDiagram& d) { return canonicalize(layout_of(d)).automorphism_count; }

/// Human-readable layout summary: "F2[1,1](0>1:3) F2[...]".
inline std::string describe(const FloorLayout& l) {
  std::string out;
  for (int f = 0; f < l.floor_count(); ++f) {
    if (f) out += " ";
    out += l.floor_kinds[static_cast<size_t>(f)] == VertexKind::Floor2 ? "F2" : "F1";
    out += "#" + std::to_string(f) + "[";
    const auto& lw = l.leaf_weights[static_cast<size_t>(f)];
    for (size_t i = 0; i < lw.size(); ++i) out += (i ? "," : "") + std::to_string(lw[i]);
    out += "]";
  }
  for (const auto& [s, t, w] : l.inner) out += " " + std::to_string(s) + ">" + std::to_string(t) + ":" + std::to_string(w);
  return out;
}

/// Every floor diagram of the given degree and genus, one per isomorphism
/// class, sorted by canonical encoding. When `leaf_weights` is given only
/// diagrams whose infinite leaves carry exactly that multiset are produced.
inline std::vector<CanonicalLayout> generate_layouts(int degree, int genus,
                                                     const std::optional<Partition>& leaf_weights = std::nullopt) {
  if (degree < 1 || genus < 0) throw Error(ErrorKind::InvalidArguments, "generate needs degree >= 1 and genus >= 0");
  if (leaf_weights && leaf_weights->size() != 2 * degree) return {};
  std::map<std::vector<int>, CanonicalLayout> found;
  const int max_inner_weight = 2 * degree - 4;

  for (int f2 = 0; 2 * f2 <= degree; ++f2) {
    const int f1 = degree - 2 * f2;
    const int floors = f1 + f2;
    const int inner_count = floors - 1 + genus;
    std::vector<VertexKind> kinds(static_cast<size_t>(f2), VertexKind::Floor2);
    kinds.insert(kinds.end(), static_cast<size_t>(f1), VertexKind::Floor1);

    // Only Floor2 vertices may have outgoing edges; Floor1 vertices are sinks.
    std::vector<std::array<int, 3>> candidates;
    for (int s = 0; s < f2; ++s)
      for (int t = 0; t < floors; ++t)
        if (s != t)
          for (int w = 1; w <= max_inner_weight; ++w) candidates.push_back({s, t, w});
    if (inner_count > 0 && candidates.empty()) continue;

    std::vector<std::array<int, 3>> chosen;
    std::function<void(size_t)> pick = [&](size_t start) {
      if (static_cast<int>(chosen.size()) == inner_count) {
        FloorLayout base;
        base.floor_kinds = kinds;
        base.inner = chosen;
        std::vector<int> need(static_cast<size_t>(floors));
        for (int v = 0; v < floors; ++v) need[static_cast<size_t>(v)] = kinds[static_cast<size_t>(v)] == VertexKind::Floor2 ? 4 : 2;
        for (const auto& [s, t, w] : chosen) {
          need[static_cast<size_t>(t)] -= w;
          need[static_cast<size_t>(s)] += w;
        }
        if (std::any_of(need.begin(), need.end(), [](int x) { return x < 0; })) return;
        // connected and acyclic on floors
        std::vector<int> comp(static_cast<size_t>(floors));
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> root = [&](int x) {
          return comp[static_cast<size_t>(x)] == x ? x : comp[static_cast<size_t>(x)] = root(comp[static_cast<size_t>(x)]);
        };
        for (const auto& [s, t, w] : chosen) comp[static_cast<size_t>(root(s))] = root(t);
        for (int v = 1; v < floors; ++v)
          if (root(v) != root(0)) return;
        std::vector<int> indeg(static_cast<size_t>(floors), 0);
        for (const auto& e : chosen) ++indeg[static_cast<size_t>(e[1])];
        std::vector<int> ready;
        for (int v = 0; v < floors; ++v)
          if (!indeg[static_cast<size_t>(v)]) ready.push_back(v);
        int popped = 0;
        while (!ready.empty()) {
          int x = ready.back();
          ready.pop_back();
          ++popped;
          for (const auto& e : chosen)
            if (e[0] == x && --indeg[static_cast<size_t>(e[1])] == 0) ready.push_back(e[1]);
        }
        if (popped != floors) return;

        // distribute leaves floor by floor
        base.leaf_weights.assign(static_cast<size_t>(floors), {});
        std::map<int, int> pool;
        if (leaf_weights) pool = leaf_weights->multiplicities();
        std::function<void(int)> place = [&](int v) {
          if (v == floors) {
            auto c = canonicalize(base);
            found.emplace(c.encoding, std::move(c));
            return;
          }
          const int target = need[static_cast<size_t>(v)];
          auto& slot = base.leaf_weights[static_cast<size_t>(v)];
          if (!leaf_weights) {
            for (const auto& p : partitions_of(target)) {
              slot = p.entries();
              std::sort(slot.begin(), slot.end());
              place(v + 1);
            }
            slot.clear();
            return;
          }
          // choose a sub-multiset of the pool summing to target
          std::vector<std::pair<int, int>> values(pool.begin(), pool.end());
          std::function<void(size_t, int)> take = [&](size_t i, int left) {
            if (left == 0) {
              place(v + 1);
              return;
            }
            if (i == values.size()) return;
            const int w = values[i].first;
            for (int c = 0; c <= pool[w] && c * w <= left; ++c) {
              pool[w] -= c;
              slot.insert(slot.end(), static_cast<size_t>(c), w);
              take(i + 1, left - c * w);
              slot.resize(slot.size() - static_cast<size_t>(c));
              pool[w] += c;
            }
          };
          take(0, target);
        };
        place(0);
        return;
      }
      for (size_t i = start; i < candidates.size(); ++i) {
        chosen.push_back(candidates[i]);
        pick(i);
        chosen.pop_back();
      }
    };
    pick(0);
  }

  std::vector<CanonicalLayout> out;
  out.reserve(found.size());
  for (auto& [enc, c] : found) out.push_back(std::move(c));
  return out;
}

inline std::vector<FloorDiagram> generate(int degree, int genus) {
  std::vector<FloorDiagram> out;
  for (const auto& c : generate_layouts(degree, genus)) out.push_back(to_diagram(c.layout));
  return out;
}

/// Graphviz rendering: edges drawn bottom to top, degree-1 floors grey,
/// weights shown when at least 2.
inline std::string to_dot(const FloorDiagram& d) {
  std::string out = "digraph floor_diagram {\n  rankdir=BT;\n";
  for (const auto& v : d.vertices()) {
    out += "  v" + std::to_string(v.id);
    switch (v.kind) {
      case VertexKind::Floor1: out += " [shape=ellipse, style=filled, fillcolor=lightgray, label=\"\"];\n"; break;
      case VertexKind::Floor2: out += " [shape=ellipse, label=\"\"];\n"; break;
      case VertexKind::Leaf: out += " [shape=point];\n"; break;
    }
  }
  for (const auto& e : d.edges()) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst);
    if (e.weight >= 2) out += " [label=\"" + std::to_string(e.weight) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace refloor
