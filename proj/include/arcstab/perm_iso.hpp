#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "arcstab/error.hpp"
#include "arcstab/perm.hpp"
#include "arcstab/perm_group.hpp"

namespace arcstab {

namespace detail {

// Orbit ids of the componentwise action on ordered pairs; used as a
// backtracking invariant: any relabelling carrying G to H must carry
// G-pair-orbits to H-pair-orbits.
struct PairOrbits {
  int n = 0;
  std::vector<int> id;  // id[i*n + j]
  std::vector<int> sizes;

  int at(int i, int j) const { return id[static_cast<size_t>(i) * n + j]; }
};

inline PairOrbits pair_orbits(const PermGroup& G) {
  PairOrbits po;
  po.n = G.degree();
  int n = po.n;
  po.id.assign(static_cast<size_t>(n) * n, -1);
  int next = 0;
  std::vector<std::pair<int, int>> queue;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (po.id[static_cast<size_t>(i) * n + j] >= 0) continue;
      po.id[static_cast<size_t>(i) * n + j] = next;
      int count = 1;
      queue.assign(1, {i, j});
      while (!queue.empty()) {
        auto [a, b] = queue.back();
        queue.pop_back();
        for (const Perm& g : G.generators()) {
          int a2 = g[a], b2 = g[b];
          int& slot = po.id[static_cast<size_t>(a2) * n + b2];
          if (slot < 0) {
            slot = next;
            ++count;
            queue.push_back({a2, b2});
          }
        }
      }
      po.sizes.push_back(count);
      ++next;
    }
  return po;
}

inline std::vector<int> element_order_profile(const PermGroup& G, std::uint64_t cap) {
  std::vector<int> orders;
  for (const Perm& e : G.elements(cap)) orders.push_back(perm_order(e));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace detail

// Searches for a relabelling sigma of the shared domain with G^sigma = H.
// Exhaustive backtracking over point images, pruned by pair-orbit
// consistency and (for small orders) element-order multisets, so an empty
// result is a proof of non-isomorphism.
inline std::optional<Perm> is_perm_isomorphic(const PermGroup& G, const PermGroup& H) {
  require(G.degree() == H.degree(), Errc::precondition,
          "permutation isomorphism across different degrees");
  require(G.is_transitive() && H.is_transitive(), Errc::precondition,
          "permutation isomorphism test expects transitive groups");
  const int n = G.degree();
  if (G.order() != H.order()) return std::nullopt;
  if (n == 0) return Perm(0);

  constexpr std::uint64_t kOrderProfileCap = 5000;
  if (G.order() <= kOrderProfileCap) {
    if (detail::element_order_profile(G, kOrderProfileCap) !=
        detail::element_order_profile(H, kOrderProfileCap))
      return std::nullopt;
  }

  detail::PairOrbits og = detail::pair_orbits(G);
  detail::PairOrbits oh = detail::pair_orbits(H);
  {
    auto sg = og.sizes, sh = oh.sizes;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }

  std::vector<int> sigma(n, -1), used(n, 0);
  // consistent orbit-id matching built up during the search
  std::vector<int> g2h(og.sizes.size(), -1), h2g(oh.sizes.size(), -1);

  auto compatible = [&](int k, int v) {
    // record the (G-orbit -> H-orbit) constraints created by sigma(k) = v,
    // returning the entries added so rollbacks are cheap
    std::vector<int> added;
    auto bind = [&](int a, int b) {
      if (og.sizes[a] != oh.sizes[b]) return false;
      if (g2h[a] < 0 && h2g[b] < 0) {
        g2h[a] = b;
        h2g[b] = a;
        added.push_back(a);
        return true;
      }
      return g2h[a] == b && h2g[b] == a;
    };
    bool ok = bind(og.at(k, k), oh.at(v, v));
    for (int i = 0; ok && i < k; ++i)
      ok = bind(og.at(i, k), oh.at(sigma[i], v)) && bind(og.at(k, i), oh.at(v, sigma[i]));
    if (!ok)
      for (int a : added) {
        h2g[g2h[a]] = -1;
        g2h[a] = -1;
      }
    return ok ? std::optional<std::vector<int>>(std::move(added))
              : std::optional<std::vector<int>>();
  };

  std::optional<Perm> found;
  auto leaf_check = [&]() {
    Perm s = Perm::from_images(sigma);
    Perm sinv = s.inverse();
    for (const Perm& g : G.generators())
      if (!H.contains(conjugate(g, s))) return false;
    for (const Perm& h : H.generators())
      if (!G.contains(conjugate(h, sinv))) return false;
    found = s;
    return true;
  };

  std::function<bool(int)> dfs = [&](int k) -> bool {
    if (k == n) return leaf_check();
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      auto added = compatible(k, v);
      if (!added) continue;
      sigma[k] = v;
      used[v] = 1;
      if (dfs(k + 1)) return true;
      used[v] = 0;
      sigma[k] = -1;
      for (int a : *added) {
        h2g[g2h[a]] = -1;
        g2h[a] = -1;
      }
    }
    return false;
  };
  if (dfs(0)) return found;
  return std::nullopt;
}

}  // namespace arcstab
