#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "refloor/classes.hpp"
#include "refloor/diagrams.hpp"
#include "refloor/error.hpp"
#include "refloor/partitions.hpp"
#include "refloor/qalgebra.hpp"

namespace refloor {

/// Curve class, genus and ordered tangency type (μ1, μ2).
struct MarkingSpec {
  CurveClass d;
  int genus = 0;
  Partition mu1;
  Partition mu2;

  int a0_size() const { return d.dot_L() - 1 + genus + mu1.length() + mu2.length(); }
};

/// Every reason the spec cannot index a count; empty when it is usable.
inline std::vector<std::string> spec_problems(const MarkingSpec& s) {
  std::vector<std::string> out;
  if (s.genus < 0) out.push_back("genus must be non-negative");
  if (s.d.dot_L() < 1) out.push_back("d.L must be at least 1");
  for (int i = 1; i <= s.d.k(); ++i)
    if (s.d.dot_Ei(i) < 0) out.push_back("d.E_" + std::to_string(i) + " is negative");
  if (s.d.dot_E() < 0) out.push_back("d.E is negative");
  if (s.mu1.size() + s.mu2.size() != s.d.dot_E())
    out.push_back("|mu1| + |mu2| = " + std::to_string(s.mu1.size() + s.mu2.size()) + " but d.E = " +
                  std::to_string(s.d.dot_E()));
  return out;
}

inline void require_valid_spec(const MarkingSpec& s) {
  auto problems = spec_problems(s);
  if (problems.empty()) return;
  std::string msg;
  for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
  throw Error(ErrorKind::SpecInvalid, msg);
}

/// A vertex or an edge of the diagram.
struct MarkTarget {
  bool is_edge = false;
  int id = 0;
  friend bool operator==(const MarkTarget&, const MarkTarget&) = default;
  friend auto operator<=>(const MarkTarget&, const MarkTarget&) = default;
};

inline std::string to_string(const MarkTarget& t) { return (t.is_edge ? "e" : "v") + std::to_string(t.id); }

/// a0[l-1] is the image of label l; ai[i-1][x] is the leaf vertex carrying the
/// x-th element of A_i.
struct MarkedDiagram {
  FloorDiagram diagram;
  std::vector<MarkTarget> a0;
  std::vector<std::vector<int>> ai;
};

namespace detail {

/// Strict orientation order on vertices and edges: source < edge < target,
/// closed transitively. Vertices occupy indices [0, V), edges [V, V+E).
inline std::vector<std::vector<bool>> orientation_order(const FloorDiagram& d) {
  const size_t nv = d.vertices().size(), n = nv + d.edges().size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (const auto& e : d.edges()) {
    const size_t ei = nv + static_cast<size_t>(e.id);
    less[static_cast<size_t>(e.src)][ei] = true;
    less[ei][static_cast<size_t>(e.dst)] = true;
  }
  for (size_t m = 0; m < n; ++m)
    for (size_t i = 0; i < n; ++i)
      if (less[i][m])
        for (size_t j = 0; j < n; ++j)
          if (less[m][j]) less[i][j] = true;
  return less;
}

inline int leaf_end(const FloorDiagram& d, int v) { return d.incident_edges(v).front(); }

}  // namespace detail

/// Checks the six marking conditions independently and reports all failures.
inline std::vector<std::string> validate_marking(const MarkedDiagram& m, const MarkingSpec& spec) {
  std::vector<std::string> out;
  const auto& d = m.diagram;
  const int l1 = spec.mu1.length();
  const size_t nv = d.vertices().size();

  if (static_cast<int>(m.a0.size()) != spec.a0_size())
    out.push_back("A_0 has " + std::to_string(m.a0.size()) + " marks, expected " + std::to_string(spec.a0_size()));
  if (static_cast<int>(m.ai.size()) != spec.d.k()) {
    out.push_back("expected " + std::to_string(spec.d.k()) + " sets A_i");
    return out;
  }
  for (int i = 1; i <= spec.d.k(); ++i)
    if (static_cast<int>(m.ai[static_cast<size_t>(i - 1)].size()) != spec.d.dot_Ei(i))
      out.push_back("|A_" + std::to_string(i) + "| differs from d.E_" + std::to_string(i));

  auto exists = [&](const MarkTarget& t) {
    return t.is_edge ? (t.id >= 0 && t.id < static_cast<int>(d.edges().size())) : d.has_vertex(t.id);
  };
  std::vector<MarkTarget> all = m.a0;
  for (const auto& set : m.ai)
    for (int v : set) all.push_back({false, v});
  for (const auto& t : all)
    if (!exists(t)) {
      out.push_back("mark on unknown " + to_string(t));
      return out;
    }

  // (1)
  std::set<MarkTarget> image(all.begin(), all.end());
  if (image.size() != all.size()) out.push_back("(1) marking is not injective");
  for (const auto& t : all)
    if (!t.is_edge && d.vertex(t.id).kind == VertexKind::Floor1) out.push_back("(1) " + to_string(t) + " is a degree-1 floor");
  const auto less = detail::orientation_order(d);
  auto index = [&](const MarkTarget& t) { return t.is_edge ? nv + static_cast<size_t>(t.id) : static_cast<size_t>(t.id); };
  for (size_t i = 0; i < m.a0.size(); ++i)
    for (size_t j = i + 1; j < m.a0.size(); ++j)
      if (less[index(m.a0[j])][index(m.a0[i])])
        out.push_back("(1) labels " + std::to_string(i + 1) + " < " + std::to_string(j + 1) + " are not increasing");

  // (2)
  for (const auto& v : d.vertices()) {
    if (!d.in_vert_infinity(v.id)) continue;
    const int e = detail::leaf_end(d, v.id);
    const int marked = static_cast<int>(image.count({false, v.id}) + image.count({true, e}));
    if (marked != 1) out.push_back("(2) leaf v" + std::to_string(v.id) + " has " + std::to_string(marked) + " marks on {v, e}");
  }

  // (3)
  for (size_t i = 0; i < m.ai.size(); ++i)
    for (int v : m.ai[i])
      if (!d.in_vert_infinity(v)) out.push_back("(3) A_" + std::to_string(i + 1) + " mark on non-leaf v" + std::to_string(v));
  for (size_t l = 0; l < m.a0.size(); ++l) {
    const auto& t = m.a0[l];
    const bool at_leaf = !t.is_edge && d.in_vert_infinity(t.id);
    if (at_leaf != (static_cast<int>(l) < l1))
      out.push_back("(3) label " + std::to_string(l + 1) + (at_leaf ? " marks a leaf" : " does not mark a leaf"));
  }

  // (4)
  for (const auto& f : d.vertices()) {
    if (f.kind == VertexKind::Leaf) continue;
    for (size_t i = 0; i < m.ai.size(); ++i) {
      int hits = 0;
      for (int v : m.ai[i])
        if (d.in_vert_infinity(v) && d.edges()[static_cast<size_t>(detail::leaf_end(d, v))].dst == f.id) ++hits;
      if (hits > 1) out.push_back("(4) floor v" + std::to_string(f.id) + " meets two leaves from A_" + std::to_string(i + 1));
    }
  }

  // (5)
  for (int l = 0; l < l1 && l < static_cast<int>(m.a0.size()); ++l) {
    const auto& t = m.a0[static_cast<size_t>(l)];
    if (t.is_edge || !d.in_vert_infinity(t.id)) continue;
    const int w = d.edges()[static_cast<size_t>(detail::leaf_end(d, t.id))].weight;
    if (w != spec.mu1[static_cast<size_t>(l)])
      out.push_back("(5) label " + std::to_string(l + 1) + " sits on an end of weight " + std::to_string(w));
  }

  // (6)
  std::vector<int> weights;
  for (const auto& t : m.a0)
    if (t.is_edge && d.is_end(t.id)) weights.push_back(d.edges()[static_cast<size_t>(t.id)].weight);
  if (!Partition(weights).same_multiset(spec.mu2))
    out.push_back("(6) A_0-marked ends carry weights {" + to_string(Partition(weights)) + "}, expected {" +
                  to_string(spec.mu2) + "}");
  return out;
}

/// Complex multiplicity: Π μ2 · Π_{inner e} w(e)².
inline Rational mult_complex(const MarkedDiagram& m, const MarkingSpec& spec) {
  Rational r = 1;
  for (int w : spec.mu2.entries()) r *= w;
  for (const auto& e : m.diagram.edges())
    if (!m.diagram.is_end(e.id)) r *= e.weight * e.weight;
  return r;
}

/// Refined multiplicity from the roles the marking gives to each end.
inline HalfLaurent mult_refined(const MarkedDiagram& m, const MarkingSpec& spec) {
  const auto& d = m.diagram;
  HalfLaurent r(1L);
  const int l1 = spec.mu1.length();
  for (size_t l = 0; l < m.a0.size(); ++l) {
    const auto& t = m.a0[l];
    if (static_cast<int>(l) < l1 && !t.is_edge && d.in_vert_infinity(t.id)) {
      const int w = d.edges()[static_cast<size_t>(detail::leaf_end(d, t.id))].weight;
      r = r * quantum_integer(w) / Rational(w);
    } else if (t.is_edge && d.is_end(t.id)) {
      // [w]/w from the end itself times w from the free tangency
      r *= quantum_integer(d.edges()[static_cast<size_t>(t.id)].weight);
    }
  }
  for (const auto& e : d.edges())
    if (!d.is_end(e.id)) r *= quantum_integer(e.weight).pow(2);
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration of marking classes
// ---------------------------------------------------------------------------

/// Roles of the leaves in one (floor, weight) group of a layout.
struct LeafRoles {
  int weight = 0;
  std::vector<int> mu1_labels;  // 1-based labels, ascending
  int mu2 = 0;
  int exceptional = 0;
  friend bool operator==(const LeafRoles&, const LeafRoles&) = default;
  friend auto operator<=>(const LeafRoles&, const LeafRoles&) = default;
};

/// Per floor, its leaf groups in ascending weight.
using RolePattern = std::vector<std::vector<LeafRoles>>;

inline std::string describe(const FloorLayout& l, const RolePattern& p) {
  std::string out;
  for (int f = 0; f < l.floor_count(); ++f) {
    if (f) out += " ";
    out += l.floor_kinds[static_cast<size_t>(f)] == VertexKind::Floor2 ? "F2" : "F1";
    out += "#" + std::to_string(f) + "[";
    bool first = true;
    for (const auto& g : p[static_cast<size_t>(f)]) {
      auto put = [&](const std::string& role) {
        out += (first ? "" : ",") + std::to_string(g.weight) + ":" + role;
        first = false;
      };
      for (int lab : g.mu1_labels) put("mu1." + std::to_string(lab));
      for (int i = 0; i < g.mu2; ++i) put("mu2");
      for (int i = 0; i < g.exceptional; ++i) put("E");
    }
    out += "]";
  }
  for (const auto& [s, t, w] : l.inner) out += " " + std::to_string(s) + ">" + std::to_string(t) + ":" + std::to_string(w);
  return out;
}

/// Marking classes of one diagram sharing a role pattern up to symmetry.
struct MarkingClassGroup {
  RolePattern pattern;
  std::string description;
  Integer classes = 0;
  HalfLaurent mult_refined;
  Rational mult_complex;
  MarkedDiagram representative;
};

struct MarkingEnumeration {
  CanonicalLayout layout;
  Integer classes = 0;
  std::vector<MarkingClassGroup> groups;
};

namespace detail {

/// Number of linear extensions of a poset given by strict predecessor masks.
inline Integer linear_extensions(const std::vector<unsigned>& preds) {
  const size_t n = preds.size();
  if (n > 24) throw Error(ErrorKind::InvalidArguments, "poset too large for linear-extension counting");
  std::vector<Integer> ways(size_t{1} << n);
  ways[0] = 1;
  for (size_t mask = 0; mask < ways.size(); ++mask) {
    if (ways[mask] == 0) continue;
    for (size_t i = 0; i < n; ++i) {
      const unsigned bit = 1U << i;
      if ((mask & bit) || (preds[i] & ~mask)) continue;
      ways[mask | bit] += ways[mask];
    }
  }
  return ways.back();
}

/// 0/1 matrices with the given row and column sums.
inline Integer count_01_matrices(const std::vector<int>& rows, std::vector<int> cols) {
  Integer total = 0;
  std::function<void(size_t)> row = [&](size_t r) {
    if (r == rows.size()) {
      if (std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; })) total += 1;
      return;
    }
    std::function<void(size_t, int)> pick = [&](size_t c, int left) {
      if (left == 0) {
        row(r + 1);
        return;
      }
      if (c == cols.size() || static_cast<int>(cols.size() - c) < left) return;
      if (cols[c] > 0) {
        --cols[c];
        pick(c + 1, left - 1);
        ++cols[c];
      }
      pick(c + 1, left);
    };
    pick(0, rows[r]);
  };
  row(0);
  return total;
}

inline std::optional<std::vector<std::vector<int>>> some_01_matrix(const std::vector<int>& rows, std::vector<int> cols) {
  std::vector<std::vector<int>> chosen(rows.size());
  std::function<bool(size_t)> row = [&](size_t r) -> bool {
    if (r == rows.size()) return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; });
    std::function<bool(size_t, int)> pick = [&](size_t c, int left) -> bool {
      if (left == 0) return row(r + 1);
      if (c == cols.size()) return false;
      if (cols[c] > 0) {
        --cols[c];
        chosen[r].push_back(static_cast<int>(c));
        if (pick(c + 1, left - 1)) return true;
        chosen[r].pop_back();
        ++cols[c];
      }
      return pick(c + 1, left);
    };
    return pick(0, rows[r]);
  };
  if (!row(0)) return std::nullopt;
  return chosen;
}

/// The A_0-marked elements other than μ1 leaves: Floor2 vertices, inner edges
/// and free-tangency ends, with their strict predecessors.
struct MarkedPoset {
  std::vector<MarkTarget> elements;
  std::vector<unsigned> preds;
};

inline MarkedPoset marked_poset(const FloorLayout& l, const FloorDiagram& d, const std::vector<int>& mu2_leaves) {
  MarkedPoset p;
  std::map<MarkTarget, size_t> at;
  auto add = [&](MarkTarget t) {
    at[t] = p.elements.size();
    p.elements.push_back(t);
    p.preds.push_back(0);
  };
  for (int f = 0; f < l.floor_count(); ++f)
    if (l.floor_kinds[static_cast<size_t>(f)] == VertexKind::Floor2) add({false, f});
  for (size_t e = 0; e < l.inner.size(); ++e) add({true, static_cast<int>(e)});
  for (int v : mu2_leaves) add({true, leaf_end(d, v)});
  auto below = [&](MarkTarget lo, MarkTarget hi) {
    auto a = at.find(lo), b = at.find(hi);
    if (a != at.end() && b != at.end()) p.preds[b->second] |= 1U << a->second;
  };
  for (const auto& [t, i] : at) {
    if (!t.is_edge) continue;
    const Edge& e = d.edges()[static_cast<size_t>(t.id)];
    below({false, e.src}, t);
    below(t, {false, e.dst});
  }
  return p;
}

/// Linear extensions where unconstrained elements are factored out.
inline Integer count_extensions(const MarkedPoset& p) {
  const size_t n = p.elements.size();
  std::vector<bool> free(n, true);
  for (size_t i = 0; i < n; ++i)
    if (p.preds[i]) {
      free[i] = false;
      for (size_t j = 0; j < n; ++j)
        if (p.preds[i] & (1U << j)) free[j] = false;
    }
  std::vector<size_t> kept;
  for (size_t i = 0; i < n; ++i)
    if (!free[i]) kept.push_back(i);
  std::vector<unsigned> preds;
  for (size_t i : kept) {
    unsigned m = 0;
    for (size_t j = 0; j < kept.size(); ++j)
      if (p.preds[i] & (1U << kept[j])) m |= 1U << j;
    preds.push_back(m);
  }
  // interleave the free elements anywhere: n! / kept!
  return linear_extensions(preds) * factorial(static_cast<int>(n)) / factorial(static_cast<int>(kept.size()));
}

inline std::vector<MarkTarget> some_extension(const MarkedPoset& p) {
  std::vector<MarkTarget> order;
  unsigned done = 0;
  while (order.size() < p.elements.size())
    for (size_t i = 0; i < p.elements.size(); ++i)
      if (!(done & (1U << i)) && !(p.preds[i] & ~done)) {
        done |= 1U << i;
        order.push_back(p.elements[i]);
        break;
      }
  return order;
}

/// Leaf vertex ids per floor in the order produced by to_diagram.
inline std::vector<std::vector<int>> leaf_ids(const FloorLayout& l) {
  std::vector<std::vector<int>> ids(static_cast<size_t>(l.floor_count()));
  int next = l.floor_count();
  for (int f = 0; f < l.floor_count(); ++f)
    for (size_t i = 0; i < l.leaf_weights[static_cast<size_t>(f)].size(); ++i) ids[static_cast<size_t>(f)].push_back(next++);
  return ids;
}

inline RolePattern permute_pattern(const RolePattern& p, const std::vector<int>& position) {
  RolePattern out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(position[i])] = p[i];
  return out;
}

}  // namespace detail

/// All marking classes of the canonical layout for the spec, grouped by role
/// pattern up to diagram automorphisms.
inline MarkingEnumeration enumerate_markings(const CanonicalLayout& c, const MarkingSpec& spec) {
  require_valid_spec(spec);
  MarkingEnumeration result;
  result.layout = c;
  const FloorLayout& l = c.layout;
  if (l.degree() != spec.d.dot_L() || l.genus() != spec.genus) return result;

  const int k = spec.d.k();
  const int f_count = l.floor_count();
  const FloorDiagram d = to_diagram(l);
  const auto leaves = detail::leaf_ids(l);
  std::vector<int> bcols(spec.d.b());

  // (floor, weight, count) groups
  struct Group {
    int floor, weight, count;
  };
  std::vector<Group> groups;
  for (int f = 0; f < f_count; ++f) {
    std::map<int, int> m;
    for (int w : l.leaf_weights[static_cast<size_t>(f)]) ++m[w];
    for (const auto& [w, cnt] : m) groups.push_back({f, w, cnt});
  }

  std::vector<int> mu1_left(static_cast<size_t>(spec.mu1.length()), 1);
  std::map<int, int> mu2_left = spec.mu2.multiplicities();
  int e_left = spec.d.b_sum();

  RolePattern pattern(static_cast<size_t>(f_count));
  std::map<RolePattern, Rational> orbit_classes;

  auto finish = [&]() {
    // raw / (|Aut| Π |A_i|!) with the A_i factorials cancelled against the E assignment
    Integer arrangements = 1;
    std::vector<int> rows(static_cast<size_t>(f_count), 0);
    std::vector<int> mu2_leaves;
    for (int f = 0; f < f_count; ++f) {
      size_t offset = 0;
      for (const auto& g : pattern[static_cast<size_t>(f)]) {
        const int cnt = static_cast<int>(g.mu1_labels.size()) + g.mu2 + g.exceptional;
        arrangements *= factorial(cnt) / (factorial(g.mu2) * factorial(g.exceptional));
        for (int i = 0; i < g.mu2; ++i)
          mu2_leaves.push_back(leaves[static_cast<size_t>(f)][offset + g.mu1_labels.size() + static_cast<size_t>(i)]);
        rows[static_cast<size_t>(f)] += g.exceptional;
        offset += static_cast<size_t>(cnt);
      }
    }
    Integer e_ways = detail::count_01_matrices(rows, bcols);
    if (e_ways == 0) return;
    for (int r : rows) e_ways *= factorial(r);
    const auto poset = detail::marked_poset(l, d, mu2_leaves);
    const Integer raw = arrangements * e_ways * detail::count_extensions(poset);
    if (raw == 0) return;
    RolePattern canon = pattern;
    for (const auto& p : c.floor_automorphisms) canon = std::min(canon, detail::permute_pattern(pattern, p));
    orbit_classes[canon] += make_rational(raw, c.automorphism_count);
  };

  std::function<void(size_t)> place = [&](size_t gi) {
    if (gi == groups.size()) {
      if (e_left == 0 && std::all_of(mu1_left.begin(), mu1_left.end(), [](int x) { return x == 0; }) &&
          std::all_of(mu2_left.begin(), mu2_left.end(), [](const auto& kv) { return kv.second == 0; }))
        finish();
      return;
    }
    const auto& g = groups[gi];
    std::vector<int> candidates;
    for (int lab = 1; lab <= spec.mu1.length(); ++lab)
      if (mu1_left[static_cast<size_t>(lab - 1)] && spec.mu1[static_cast<size_t>(lab - 1)] == g.weight) candidates.push_back(lab);
    const size_t nc = candidates.size();
    for (unsigned subset = 0; subset < (1U << nc); ++subset) {
      LeafRoles roles;
      roles.weight = g.weight;
      for (size_t i = 0; i < nc; ++i)
        if (subset & (1U << i)) roles.mu1_labels.push_back(candidates[i]);
      const int rest = g.count - static_cast<int>(roles.mu1_labels.size());
      if (rest < 0) continue;
      const int mu2_avail = mu2_left.count(g.weight) ? mu2_left[g.weight] : 0;
      for (int x = 0; x <= std::min(rest, mu2_avail); ++x) {
        const int e = rest - x;
        if (e > 0 && (g.weight != 1 || e > k || e > e_left)) continue;
        roles.mu2 = x;
        roles.exceptional = e;
        for (int lab : roles.mu1_labels) mu1_left[static_cast<size_t>(lab - 1)] = 0;
        if (x) mu2_left[g.weight] -= x;
        e_left -= e;
        pattern[static_cast<size_t>(g.floor)].push_back(roles);
        place(gi + 1);
        pattern[static_cast<size_t>(g.floor)].pop_back();
        e_left += e;
        if (x) mu2_left[g.weight] += x;
        for (int lab : roles.mu1_labels) mu1_left[static_cast<size_t>(lab - 1)] = 1;
      }
    }
  };
  place(0);

  for (const auto& [canon, classes] : orbit_classes) {
    if (classes.get_den() != 1)
      throw Error(ErrorKind::InvalidArguments, "non-integral class count for pattern " + describe(l, canon));
    MarkingClassGroup g;
    g.pattern = canon;
    g.description = describe(l, canon);
    g.classes = classes.get_num();

    // representative: μ1 labels, then free-tangency ends, then exceptional leaves in each group
    MarkedDiagram rep;
    rep.diagram = d;
    rep.a0.assign(static_cast<size_t>(spec.a0_size()), MarkTarget{});
    rep.ai.assign(static_cast<size_t>(k), {});
    std::vector<int> rows(static_cast<size_t>(f_count), 0), mu2_leaves;
    std::vector<std::vector<int>> e_leaves(static_cast<size_t>(f_count));
    for (int f = 0; f < f_count; ++f) {
      size_t offset = 0;
      for (const auto& grp : canon[static_cast<size_t>(f)]) {
        const auto& ids = leaves[static_cast<size_t>(f)];
        for (int lab : grp.mu1_labels) rep.a0[static_cast<size_t>(lab - 1)] = {false, ids[offset++]};
        for (int i = 0; i < grp.mu2; ++i) mu2_leaves.push_back(ids[offset++]);
        for (int i = 0; i < grp.exceptional; ++i) e_leaves[static_cast<size_t>(f)].push_back(ids[offset++]);
        rows[static_cast<size_t>(f)] += grp.exceptional;
      }
    }
    const auto order = detail::some_extension(detail::marked_poset(l, d, mu2_leaves));
    for (size_t i = 0; i < order.size(); ++i) rep.a0[static_cast<size_t>(spec.mu1.length()) + i] = order[i];
    const auto matrix = detail::some_01_matrix(rows, bcols);
    for (int f = 0; f < f_count; ++f)
      for (size_t j = 0; j < (*matrix)[static_cast<size_t>(f)].size(); ++j)
        rep.ai[static_cast<size_t>((*matrix)[static_cast<size_t>(f)][j])].push_back(e_leaves[static_cast<size_t>(f)][j]);

    g.mult_refined = mult_refined(rep, spec);
    g.mult_complex = mult_complex(rep, spec);
    g.representative = std::move(rep);
    result.classes += g.classes;
    result.groups.push_back(std::move(g));
  }
  return result;
}

inline MarkingEnumeration enumerate_markings(const FloorDiagram& d, const MarkingSpec& spec) {
  return enumerate_markings(canonicalize(layout_of(d)), spec);
}

}  // namespace refloor
