#pragma once

#include <utility>
#include <vector>

#include "arcstab/action.hpp"
#include "arcstab/bigint.hpp"
#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/perm_group.hpp"

namespace arcstab {

// Imprimitive wreath product R wr T acting on d*k points, where R acts on
// {0..d-1} and T on the k fibres.  Point (delta, omega) is flattened as
// d*omega + delta.  Generators: one copy of each R-generator per fibre,
// plus the T-generators permuting whole fibres.
inline PermGroup wreath_product(const PermGroup& r, const PermGroup& t) {
  require(r.is_transitive(), Errc::precondition, "bottom group is not transitive");
  require(t.is_transitive(), Errc::precondition, "top group is not transitive");
  int d = r.degree(), k = t.degree();
  int n = d * k;
  std::vector<Perm> gens;
  for (int w = 0; w < k; ++w)
    for (const Perm& rho : r.generators()) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = i;
      for (int delta = 0; delta < d; ++delta) img[d * w + delta] = d * w + rho[delta];
      gens.push_back(Perm::from_images(img));
    }
  for (const Perm& tau : t.generators()) {
    std::vector<int> img(n);
    for (int w = 0; w < k; ++w)
      for (int delta = 0; delta < d; ++delta) img[d * w + delta] = d * tau[w] + delta;
    gens.push_back(Perm::from_images(img));
  }
  PermGroup out(n, gens);
  require(out.order() == bigint_pow(r.order(), k) * t.order(), Errc::internal,
          "wreath product order differs from |R|^k * |T|");
  return out;
}

// Arc-transitive pair on the complete bipartite graph K_{k,k}: one copy of
// T on each part plus the swap matching identical labels.  The local group
// is T and the arc-stabiliser has order |T_w|^2.
inline Pair bipartite_base_pair(const PermGroup& t) {
  require(t.is_transitive(), Errc::precondition, "group is not transitive");
  int k = t.degree();
  Graph graph = complete_bipartite(k, k);
  std::vector<Perm> gens;
  for (int side = 0; side < 2; ++side)
    for (const Perm& g : t.generators()) {
      std::vector<int> img(2 * k);
      for (int i = 0; i < 2 * k; ++i) img[i] = i;
      for (int i = 0; i < k; ++i) img[side * k + i] = side * k + g[i];
      gens.push_back(Perm::from_images(img));
    }
  {
    std::vector<int> img(2 * k);
    for (int i = 0; i < k; ++i) {
      img[i] = k + i;
      img[k + i] = i;
    }
    gens.push_back(Perm::from_images(img));
  }
  Pair pair = make_pair(std::move(graph), PermGroup(2 * k, gens));
  require(pair.arc_transitive, Errc::internal, "bipartite base pair is not arc-transitive");
  BigInt tw = t.order() / BigInt(k);
  auto [u, v] = pair.first_arc();
  require(arc_stabiliser(pair, u, v).order() == tw * tw, Errc::internal,
          "bipartite base arc-stabiliser differs from |T_w|^2");
  return pair;
}

// Blow each vertex of the base pair up into an independent m-set and act by
// R wr (base group).  The arc-stabiliser order is checked against the
// closed form |H_uv| * |R|^(n/m) / m^2, where H_uv is the base
// arc-stabiliser and n the number of vertices of the product.
inline Pair wreath_pair(const PermGroup& r, const Pair& base) {
  require(base.arc_transitive, Errc::precondition, "base pair is not arc-transitive");
  require(r.is_transitive(), Errc::precondition, "bottom group is not transitive");
  int m = r.degree();
  Graph lambda = edgeless_lex_product(base.graph, m);
  PermGroup group = wreath_product(r, base.group);
  Pair pair = make_pair(std::move(lambda), std::move(group));
  require(pair.arc_transitive, Errc::internal, "wreath pair is not arc-transitive");

  auto [bu, bv] = base.first_arc();
  BigInt base_arc_stab = arc_stabiliser(base, bu, bv).order();
  auto [u, v] = pair.first_arc();
  BigInt got = arc_stabiliser(pair, u, v).order();
  int fibres = base.graph.vertex_count();  // = n/m
  BigInt expected_times_m2 = base_arc_stab * bigint_pow(r.order(), fibres);
  require(got * BigInt(m) * BigInt(m) == expected_times_m2, Errc::internal,
          "wreath arc-stabiliser differs from the closed form");
  return pair;
}

}  // namespace arcstab
