#pragma once

#include <algorithm>
#include <array>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "arcstab/bigint.hpp"
#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/graph_aut.hpp"
#include "arcstab/perm_group.hpp"
#include "arcstab/perm_iso.hpp"

namespace arcstab {

// A graph together with a group acting on it by automorphisms.
struct Pair {
  Graph graph;
  PermGroup group;
  bool vertex_transitive = false;
  bool arc_transitive = false;

  // Lexicographically least arc (u, v); requires at least one edge.
  std::pair<int, int> first_arc() const {
    for (int v = 0; v < graph.vertex_count(); ++v)
      if (!graph.neighbours(v).empty()) return {v, graph.neighbours(v)[0]};
    fail(Errc::precondition, "graph has no arcs");
  }
};

namespace detail {

// Size of the orbit of (u, v) under the diagonal action on ordered pairs.
inline long long pair_orbit_size(const PermGroup& g, int u, int v) {
  int n = g.degree();
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  std::queue<std::pair<int, int>> q;
  seen[static_cast<size_t>(u) * n + v] = 1;
  q.push({u, v});
  long long count = 0;
  while (!q.empty()) {
    auto [a, b] = q.front();
    q.pop();
    ++count;
    for (const Perm& p : g.generators()) {
      int a2 = p[a], b2 = p[b];
      size_t key = static_cast<size_t>(a2) * n + b2;
      if (!seen[key]) {
        seen[key] = 1;
        q.push({a2, b2});
      }
    }
  }
  return count;
}

}  // namespace detail

// Validates that every generator acts as an automorphism and records the
// transitivity flags.
inline Pair make_pair(Graph graph, PermGroup group) {
  require(group.degree() == graph.vertex_count(), Errc::precondition,
          "group degree does not match vertex count");
  const auto& gens = group.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    require(is_automorphism(graph, gens[i]), Errc::precondition,
            "generator #" + std::to_string(i) + " is not a graph automorphism");
  Pair pair;
  pair.graph = std::move(graph);
  pair.group = std::move(group);
  pair.vertex_transitive = pair.group.is_transitive();
  if (pair.graph.edge_count() > 0) {
    auto [u, v] = pair.first_arc();
    pair.arc_transitive = detail::pair_orbit_size(pair.group, u, v) ==
                          static_cast<long long>(pair.graph.arc_count());
  }
  return pair;
}

// The action of the vertex stabiliser on the neighbourhood, written on
// points 0..d-1 via the ascending labelling of the neighbours.
struct LocalGroup {
  int vertex = 0;
  std::vector<int> labelling;  // label i names vertex labelling[i]
  PermGroup group;
};

inline LocalGroup local_group(const Pair& pair, int v) {
  require(v >= 0 && v < pair.graph.vertex_count(), Errc::precondition,
          "vertex out of range");
  const std::vector<int>& nbrs = pair.graph.neighbours(v);
  int d = static_cast<int>(nbrs.size());
  std::vector<int> pos(pair.graph.vertex_count(), -1);
  for (int i = 0; i < d; ++i) pos[nbrs[i]] = i;
  PermGroup stab = pair.group.point_stabiliser(v);
  std::vector<Perm> local_gens;
  for (const Perm& g : stab.generators()) {
    std::vector<int> images(d);
    for (int i = 0; i < d; ++i) {
      int w = g[nbrs[i]];
      require(pos[w] >= 0, Errc::internal, "stabiliser element leaves the neighbourhood");
      images[i] = pos[w];
    }
    local_gens.push_back(Perm::from_images(images));
  }
  LocalGroup out;
  out.vertex = v;
  out.labelling = nbrs;
  out.group = PermGroup(d, local_gens);
  return out;
}

// Elements of the vertex stabiliser acting trivially on the neighbourhood.
inline PermGroup local_kernel(const Pair& pair, int v) {
  require(v >= 0 && v < pair.graph.vertex_count(), Errc::precondition,
          "vertex out of range");
  std::vector<int> pts = pair.graph.neighbours(v);
  pts.push_back(v);
  return pair.group.pointwise_stabiliser(pts);
}

inline PermGroup arc_stabiliser(const Pair& pair, int u, int v) {
  require(u >= 0 && u < pair.graph.vertex_count() && v >= 0 &&
              v < pair.graph.vertex_count(),
          Errc::precondition, "vertex out of range");
  require(pair.graph.adjacent(u, v), Errc::precondition,
          "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
  return pair.group.pointwise_stabiliser({u, v});
}

// Whether the action is locally L: the local group at a vertex of an
// arc-transitive pair is permutation-isomorphic to L.  A valency different
// from the degree of L simply reports false.
inline bool is_locally(const Pair& pair, const PermGroup& l) {
  require(pair.arc_transitive, Errc::precondition, "pair is not arc-transitive");
  LocalGroup loc = local_group(pair, pair.first_arc().first);
  if (loc.group.degree() != l.degree()) return false;
  return is_perm_isomorphic(loc.group, l).has_value();
}

inline bool is_arc_regular(const Pair& pair) {
  if (!pair.arc_transitive) return false;
  return pair.group.order() == BigInt(pair.graph.arc_count());
}

// Regular on 2-arcs (x, y, z) with x != z and both adjacent to y.
inline bool is_two_arc_regular(const Pair& pair) {
  const Graph& g = pair.graph;
  int n = g.vertex_count();
  BigInt two_arcs = 0;
  for (int v = 0; v < n; ++v) {
    BigInt d = static_cast<long long>(g.neighbours(v).size());
    two_arcs += d * (d - 1);
  }
  if (two_arcs == 0 || pair.group.order() != two_arcs) return false;
  // transitivity on 2-arcs: orbit of one 2-arc fills the count
  int y = -1, x = -1, z = -1;
  for (int v = 0; v < n && y < 0; ++v)
    if (g.neighbours(v).size() >= 2) {
      y = v;
      x = g.neighbours(v)[0];
      z = g.neighbours(v)[1];
    }
  if (y < 0) return false;
  std::vector<char> seen(static_cast<size_t>(n) * n * n, 0);
  std::queue<std::array<int, 3>> q;
  auto key = [n](int a, int b, int c) {
    return (static_cast<size_t>(a) * n + b) * n + c;
  };
  seen[key(x, y, z)] = 1;
  q.push({x, y, z});
  BigInt count = 0;
  while (!q.empty()) {
    auto t = q.front();
    q.pop();
    ++count;
    for (const Perm& p : pair.group.generators()) {
      int a = p[t[0]], b = p[t[1]], c = p[t[2]];
      if (!seen[key(a, b, c)]) {
        seen[key(a, b, c)] = 1;
        q.push({a, b, c});
      }
    }
  }
  return count == two_arcs;
}

}  // namespace arcstab
