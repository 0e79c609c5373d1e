#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "arcstab/action.hpp"
#include "arcstab/bigint.hpp"
#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/graph_aut.hpp"
#include "arcstab/perm_group.hpp"

namespace arcstab {

// Double cover data: voltages live in (Z/2)^beta, beta the cycle rank.
// Tree edges carry voltage zero; the j-th cotree edge (in ascending edge
// order) carries the j-th standard basis vector.  Cover vertex (v, x) is
// flattened as v * 2^beta + x.
struct VoltageCover {
  Graph base;
  std::vector<std::pair<int, int>> tree_edges;    // discovery order, u-min first
  std::vector<std::pair<int, int>> cotree_edges;  // ascending; j-th carries bit j
  int beta = 0;
  Graph cover;
  std::vector<int> projection;       // cover vertex -> base vertex
  std::vector<int> tree_parent;      // BFS tree from vertex 0; -1 at the root
  std::vector<std::uint32_t> volt_;  // base-edge voltages, indexed u*n+v

  int cover_index(int v, std::uint32_t x) const {
    return v * (1 << beta) + static_cast<int>(x);
  }

  std::uint32_t voltage(int u, int v) const {
    require(base.adjacent(u, v), Errc::precondition, "voltage of a non-edge");
    return volt_[static_cast<size_t>(u) * base.vertex_count() + v];
  }
};

inline VoltageCover homological_2cover(const Graph& g) {
  require(g.connected(), Errc::precondition, "graph is disconnected");
  int n = g.vertex_count();
  int beta = g.edge_count() - n + 1;
  require(beta <= 22 && (static_cast<long long>(n) << beta) <= (1 << 22),
          Errc::cap_exceeded, "cover would be too large");

  VoltageCover vc;
  vc.base = g;
  vc.beta = beta;
  vc.tree_parent.assign(n, -2);
  vc.tree_parent[0] = -1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbours(v))
      if (vc.tree_parent[u] == -2) {
        vc.tree_parent[u] = v;
        vc.tree_edges.push_back({std::min(u, v), std::max(u, v)});
        q.push(u);
      }
  }

  vc.volt_.assign(static_cast<size_t>(n) * n, 0);
  auto is_tree = [&](int u, int v) {
    return vc.tree_parent[u] == v || vc.tree_parent[v] == u;
  };
  int j = 0;
  for (auto [u, v] : g.edges())
    if (!is_tree(u, v)) {
      vc.cotree_edges.push_back({u, v});
      std::uint32_t bit = std::uint32_t{1} << j++;
      vc.volt_[static_cast<size_t>(u) * n + v] = bit;
      vc.volt_[static_cast<size_t>(v) * n + u] = bit;
    }
  require(j == beta, Errc::internal, "cotree size differs from the cycle rank");

  int fibre = 1 << beta;
  std::vector<std::pair<int, int>> cover_edges;
  for (auto [u, v] : g.edges()) {
    std::uint32_t z = vc.volt_[static_cast<size_t>(u) * n + v];
    for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(fibre); ++x)
      cover_edges.push_back({vc.cover_index(u, x), vc.cover_index(v, x ^ z)});
  }
  vc.cover = Graph(n * fibre, cover_edges);
  vc.projection.resize(static_cast<size_t>(n) * fibre);
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < fibre; ++x) vc.projection[vc.cover_index(v, x)] = v;

  require(vc.cover.connected(), Errc::internal, "homological cover is disconnected");
  // the projection must be bijective on every neighbourhood
  for (int w = 0; w < vc.cover.vertex_count(); ++w) {
    std::vector<int> proj;
    for (int z : vc.cover.neighbours(w)) proj.push_back(vc.projection[z]);
    std::sort(proj.begin(), proj.end());
    require(proj == g.neighbours(vc.projection[w]), Errc::internal,
            "projection is not bijective on a neighbourhood");
  }
  return vc;
}

namespace detail {

// Voltage of the image under g of the tree path from the root to each
// vertex, computed down the BFS tree.
inline std::vector<std::uint32_t> image_path_voltages(const VoltageCover& vc, const Perm& g) {
  int n = vc.base.vertex_count();
  std::vector<std::uint32_t> d(n, 0);
  std::vector<char> done(n, 0);
  done[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : vc.base.neighbours(v))
      if (!done[u] && vc.tree_parent[u] == v) {
        d[u] = d[v] ^ vc.voltage(g[v], g[u]);
        done[u] = 1;
        q.push(u);
      }
  }
  return d;
}

}  // namespace detail

// Lift of the base action to the cover: covering translations plus one lift
// per base generator, (v,x) -> (g(v), g*(x) + d_g(v)) where g* maps each
// fundamental-cycle voltage to the voltage of its image cycle.  Every lift
// is verified to be a cover automorphism projecting to its base generator.
inline Pair lift_group(const Pair& pair, const VoltageCover& vc) {
  require(pair.graph.vertex_count() == vc.base.vertex_count() &&
              pair.graph.edges() == vc.base.edges(),
          Errc::precondition, "pair graph differs from the cover's base");
  int n = vc.base.vertex_count();
  int fibre = 1 << vc.beta;
  int cn = vc.cover.vertex_count();

  std::vector<Perm> gens;
  for (int j = 0; j < vc.beta; ++j) {
    std::vector<int> img(cn);
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < fibre; ++x)
        img[vc.cover_index(v, x)] = vc.cover_index(v, x ^ (1 << j));
    gens.push_back(Perm::from_images(img));
  }
  size_t translations = gens.size();

  for (const Perm& g : pair.group.generators()) {
    std::vector<std::uint32_t> d = detail::image_path_voltages(vc, g);
    std::vector<std::uint32_t> col(vc.beta);
    for (int j = 0; j < vc.beta; ++j) {
      auto [u, v] = vc.cotree_edges[j];
      col[j] = d[u] ^ vc.voltage(g[u], g[v]) ^ d[v];
    }
    auto phi = [&](std::uint32_t x) {
      std::uint32_t y = 0;
      for (int j = 0; j < vc.beta; ++j)
        if (x >> j & 1) y ^= col[j];
      return y;
    };
    std::vector<int> img(cn);
    for (int v = 0; v < n; ++v)
      for (int x = 0; x < fibre; ++x)
        img[vc.cover_index(v, x)] = vc.cover_index(g[v], phi(x) ^ d[v]);
    gens.push_back(Perm::from_images(img));
  }

  for (size_t i = 0; i < gens.size(); ++i) {
    const Perm& lift = gens[i];
    require(is_automorphism(vc.cover, lift), Errc::internal,
            "constructed lift is not a cover automorphism");
    const Perm* base_gen =
        i < translations ? nullptr : &pair.group.generators()[i - translations];
    for (int w = 0; w < cn; ++w) {
      int want = base_gen ? (*base_gen)[vc.projection[w]] : vc.projection[w];
      require(vc.projection[lift[w]] == want, Errc::internal,
              "constructed lift does not project to its base generator");
    }
  }

  PermGroup lifted(cn, gens);
  require(lifted.order() == bigint_pow(BigInt(2), vc.beta) * pair.group.order(),
          Errc::internal, "lifted group order differs from 2^beta * |G|");
  return make_pair(vc.cover, std::move(lifted));
}

}  // namespace arcstab
