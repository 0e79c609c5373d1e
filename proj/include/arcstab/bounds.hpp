#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "arcstab/action.hpp"
#include "arcstab/bigint.hpp"
#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/perm_group.hpp"

namespace arcstab {

inline int smallest_prime_factor(long long x) {
  if (x <= 1) return 2;
  for (long long d = 2; d * d <= x; ++d)
    if (x % d == 0) return static_cast<int>(d);
  return static_cast<int>(x);
}

// The refined stabiliser bound |L_w|^floor((n-2)/p).
inline BigInt bound_value(const BigInt& local_stab_order, int n, int p) {
  require(n >= 2 && p >= 2, Errc::precondition, "bound needs n >= 2 and p >= 2");
  if (local_stab_order == 1) return 1;
  return bigint_pow(local_stab_order, static_cast<unsigned long long>((n - 2) / p));
}

struct BoundStep {
  int x = -1;              // chosen non-fixed vertex adjacent to the grown set
  int w = -1;              // its smallest neighbour inside the set
  std::vector<int> orbit;  // orbit of x under the current stabiliser
};

// Constructive certificate that the arc-stabiliser order is bounded by
// |L_w|^m: a chain of vertex sets S_0 = {u,v} growing by whole orbits until
// the pointwise stabiliser dies, with every claimed condition re-verified.
struct BoundCertificate {
  int u = 0, v = 0;
  std::vector<std::vector<int>> sets;  // S_0 .. S_m, each sorted
  std::vector<BigInt> orders;          // |G_0| >= ... >= |G_m| = 1
  std::vector<BoundStep> steps;        // m entries
  BigInt local_stab_order = 1;         // |L_w|
  int p = 2;
  BigInt bound = 1;                    // |L_w|^floor((n-2)/p)

  int step_count() const { return static_cast<int>(steps.size()); }
};

namespace detail {

// Connected component of the subgraph induced on `inside` containing start.
inline std::vector<char> induced_component(const Graph& g, const std::vector<char>& inside,
                                           int start) {
  std::vector<char> comp(g.vertex_count(), 0);
  std::queue<int> q;
  comp[start] = 1;
  q.push(start);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbours(v))
      if (inside[u] && !comp[u]) {
        comp[u] = 1;
        q.push(u);
      }
  }
  return comp;
}

}  // namespace detail

inline BoundCertificate exp_bound_certificate(const Pair& pair, int u, int v) {
  require(pair.arc_transitive, Errc::precondition, "pair is not arc-transitive");
  const Graph& graph = pair.graph;
  int n = graph.vertex_count();
  require(u >= 0 && u < n && v >= 0 && v < n && graph.adjacent(u, v), Errc::precondition,
          "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");

  BoundCertificate cert;
  cert.u = u;
  cert.v = v;
  int valency = static_cast<int>(graph.neighbours(u).size());
  BigInt local_order = local_group(pair, u).group.order();
  require(local_order % valency == 0, Errc::internal, "local group is not transitive");
  cert.local_stab_order = local_order / valency;
  cert.p = smallest_prime_factor(static_cast<long long>(cert.local_stab_order));
  cert.bound = bound_value(cert.local_stab_order, n, cert.p);

  std::vector<int> current_set = {std::min(u, v), std::max(u, v)};
  PermGroup stab = pair.group.pointwise_stabiliser(current_set);
  cert.sets.push_back(current_set);
  cert.orders.push_back(stab.order());

  while (!stab.is_trivial()) {
    std::vector<char> fixed(n, 0);
    for (int f : stab.fixed_points()) fixed[f] = 1;
    std::vector<char> comp = detail::induced_component(graph, fixed, u);
    for (int p0 : current_set)
      require(comp[p0], Errc::internal, "grown set left its fixed component");

    BoundStep step;
    for (int x = 0; x < n && step.x < 0; ++x) {
      if (comp[x] || fixed[x]) continue;
      for (int w : graph.neighbours(x))
        if (comp[w]) {
          step.x = x;
          step.w = w;
          break;
        }
    }
    require(step.x >= 0, Errc::internal, "no unfixed vertex borders the fixed component");
    step.orbit = stab.orbit_of(step.x);
    require(static_cast<int>(step.orbit.size()) >= cert.p, Errc::internal,
            "orbit shorter than the smallest local prime");

    std::vector<int> next_set;
    for (int w = 0; w < n; ++w)
      if (comp[w]) next_set.push_back(w);
    next_set.insert(next_set.end(), step.orbit.begin(), step.orbit.end());
    std::sort(next_set.begin(), next_set.end());
    next_set.erase(std::unique(next_set.begin(), next_set.end()), next_set.end());
    require(next_set.size() >= current_set.size() + cert.p, Errc::internal,
            "set grew by fewer than p vertices");

    PermGroup next_stab = stab.pointwise_stabiliser(next_set);
    require(next_stab.order() < stab.order(), Errc::internal, "stabiliser failed to shrink");
    require(stab.order() <= next_stab.order() * cert.local_stab_order, Errc::internal,
            "stabiliser dropped by more than |L_w|");

    cert.steps.push_back(std::move(step));
    cert.sets.push_back(next_set);
    cert.orders.push_back(next_stab.order());
    current_set = std::move(next_set);
    stab = std::move(next_stab);
  }

  require(cert.orders.back() == 1, Errc::internal, "chain did not end in the trivial group");
  require(static_cast<long long>(cert.step_count()) * cert.p <= n - 2, Errc::internal,
          "certificate is longer than (n-2)/p steps");
  require(cert.orders.front() <= bigint_pow(cert.local_stab_order, cert.step_count()),
          Errc::internal, "arc-stabiliser exceeds |L_w|^m");
  require(cert.orders.front() <= cert.bound, Errc::internal,
          "arc-stabiliser exceeds the claimed bound");
  return cert;
}

}  // namespace arcstab
