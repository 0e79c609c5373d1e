#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "arcstab/bigint.hpp"
#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/perm.hpp"
#include "arcstab/perm_group.hpp"

namespace arcstab {

inline bool is_automorphism(const Graph& g, const Perm& p) {
  require(p.degree() == g.vertex_count(), Errc::precondition,
          "permutation degree does not match vertex count");
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

namespace detail {

// Stable colouring of the vertices by iterated neighbour-colour profiles,
// starting from valencies.  Any automorphism preserves the colour classes.
inline std::vector<int> refine_colours(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> colour(n, 0);
  size_t classes = 1;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> key_id;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> profile;
      for (int w : g.neighbours(v)) profile.push_back(colour[w]);
      std::sort(profile.begin(), profile.end());
      auto key = std::make_pair(colour[v], std::move(profile));
      auto it = key_id.find(key);
      if (it == key_id.end()) it = key_id.emplace(std::move(key), static_cast<int>(key_id.size())).first;
      next[v] = it->second;
    }
    if (key_id.size() == classes) return next;
    classes = key_id.size();
    colour = std::move(next);
  }
}

}  // namespace detail

// Exhaustive search for the full automorphism group.  Backtracks over
// vertex images with colour-refinement classes and adjacency masks as the
// pruning; every automorphism is collected, so the answer is exact.
inline PermGroup automorphism_search(const Graph& g, std::uint64_t cap = default_element_cap()) {
  int n = g.vertex_count();
  require(n <= 64, Errc::precondition, "automorphism search supports at most 64 vertices");
  if (n == 0) return PermGroup::trivial(0);

  std::vector<int> colour = detail::refine_colours(g);
  std::vector<std::uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbours(v)) adj[v] |= std::uint64_t{1} << w;

  std::vector<Perm> autos;
  std::vector<int> sigma(n, -1);
  std::uint64_t used = 0;

  // depth-first over sigma(0..n-1); at depth k a candidate v must match k's
  // colour and reproduce k's adjacency into the already-placed vertices
  std::vector<int> stack_v(n, -1);
  int k = 0;
  while (k >= 0) {
    if (k == n) {
      autos.push_back(Perm::from_images(sigma));
      require(autos.size() <= cap, Errc::cap_exceeded, "automorphism group larger than cap");
      --k;
      used &= ~(std::uint64_t{1} << sigma[k]);
      continue;
    }
    std::uint64_t want = 0;
    for (int j : g.neighbours(k))
      if (j < k) want |= std::uint64_t{1} << sigma[j];
    int v = stack_v[k] + 1;
    for (; v < n; ++v) {
      if (used & (std::uint64_t{1} << v)) continue;
      if (colour[v] != colour[k]) continue;
      if ((adj[v] & used) != want) continue;
      break;
    }
    if (v == n) {
      stack_v[k] = -1;
      --k;
      if (k >= 0) used &= ~(std::uint64_t{1} << sigma[k]);
      continue;
    }
    stack_v[k] = v;
    sigma[k] = v;
    used |= std::uint64_t{1} << v;
    ++k;
  }
  return PermGroup(n, autos);
}

}  // namespace arcstab
