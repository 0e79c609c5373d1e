#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "arcstab/action.hpp"
#include "arcstab/bigint.hpp"
#include "arcstab/error.hpp"
#include "arcstab/f2.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/perm.hpp"
#include "arcstab/perm_group.hpp"

namespace arcstab {

// The four degree-6 permutations a, b, e, f generating the reference local
// groups of the nullspace construction (Conway-taxonomy names A4(6), 2S4(6)).
inline PermGroup a4_on_six() {
  return PermGroup(6, {parse_cycles(6, "(0 2 4)(1 3 5)"), parse_cycles(6, "(1 4)(2 5)")});
}

inline PermGroup two_s4_on_six() {
  return PermGroup(6, {parse_cycles(6, "(0 3)"), parse_cycles(6, "(0 2 4)(1 3 5)"),
                       parse_cycles(6, "(1 5)(2 4)")});
}

namespace detail {

// Right-multiplication closure of a generator set inside a finite universe;
// empty result signals that the closure exceeded the cap.
inline std::vector<Perm> closure_up_to(const std::vector<Perm>& gens, int degree,
                                       std::size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  out.push_back(Perm(degree));
  seen.insert(out[0]);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& g : gens) {
      Perm next = out[i] * g;
      if (seen.insert(next).second) {
        if (out.size() >= cap) return {};
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

// Key a subgroup by the sorted universe-indices of its elements.
inline bool subgroup_key(const std::vector<Perm>& elems,
                         const std::unordered_map<Perm, int, PermHash>& index,
                         std::vector<int>& key) {
  key.clear();
  for (const Perm& p : elems) {
    auto it = index.find(p);
    if (it == index.end()) return false;
    key.push_back(it->second);
  }
  std::sort(key.begin(), key.end());
  return true;
}

// All subgroups of the given order generated by a pair (plus a fixed batch
// of seeded random triples) of universe elements, filtered by a predicate.
template <class Keep>
std::vector<PermGroup> subgroup_search(const Graph& graph,
                                       const std::vector<Perm>& universe,
                                       const BigInt& target_order, Keep keep) {
  int n = graph.vertex_count();
  std::unordered_map<Perm, int, PermHash> index;
  for (std::size_t i = 0; i < universe.size(); ++i)
    index.emplace(universe[i], static_cast<int>(i));
  require(target_order <= BigInt(1u << 20), Errc::cap_exceeded,
          "subgroup search target order too large");
  std::size_t cap = static_cast<std::size_t>(target_order) + 1;

  std::set<std::vector<int>> found_keys;
  std::vector<PermGroup> found;
  std::vector<int> key;
  auto consider = [&](const std::vector<Perm>& gens) {
    auto elems = closure_up_to(gens, n, cap);
    if (elems.empty() || BigInt(static_cast<unsigned long long>(elems.size())) != target_order)
      return;
    if (!subgroup_key(elems, index, key)) return;
    if (found_keys.count(key)) return;
    PermGroup grp(n, gens);
    if (!keep(grp)) return;
    found_keys.insert(key);
    found.push_back(std::move(grp));
  };

  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i; j < universe.size(); ++j)
      consider({universe[i], universe[j]});
  if (!universe.empty()) {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
    for (int trial = 0; trial < 64; ++trial)
      consider({universe[pick(rng)], universe[pick(rng)], universe[pick(rng)]});
  }
  return found;
}

}  // namespace detail

// Exhaustive-plus-random search for subgroups of `within` acting regularly
// on the 2-arcs of the graph.
inline std::vector<PermGroup> two_arc_regular_subgroups(
    const Graph& graph, const PermGroup& within,
    std::size_t cap = default_element_cap()) {
  BigInt target = 0;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    BigInt d = static_cast<long long>(graph.neighbours(v).size());
    target += d * (d - 1);
  }
  return detail::subgroup_search(graph, within.elements(cap), target,
                                 [&](const PermGroup& g) {
                                   return is_two_arc_regular(make_pair(graph, g));
                                 });
}

// Search for subgroups of `within` acting regularly on arcs.
inline std::vector<PermGroup> arc_regular_subgroups(
    const Graph& graph, const PermGroup& within,
    std::size_t cap = default_element_cap()) {
  return detail::subgroup_search(graph, within.elements(cap),
                                 BigInt(graph.arc_count()),
                                 [&](const PermGroup& g) {
                                   return is_arc_regular(make_pair(graph, g));
                                 });
}

// Doubled graph plus the two groups of the nullspace construction: A is
// generated by the lifted 2-arc-regular group G together with all flips of
// N = <all-ones> + M, B by the lifted arc-regular H with the flips of M.
struct Degree6Embeddings {
  Graph lambda;
  PermGroup a;
  PermGroup b;
  BigInt m_order = 1;
};

namespace detail {

inline Perm doubled_vertex_map(int n, const Perm& g) {
  std::vector<int> img(2 * n);
  for (int v = 0; v < n; ++v)
    for (int aa = 0; aa < 2; ++aa) img[2 * v + aa] = 2 * g[v] + aa;
  return Perm::from_images(img);
}

inline Perm layer_flip(int n, const F2Vector& x) {
  std::vector<int> img(2 * n);
  for (int v = 0; v < n; ++v)
    for (int aa = 0; aa < 2; ++aa) img[2 * v + aa] = 2 * v + (aa ^ (x.get(v) ? 1 : 0));
  return Perm::from_images(img);
}

// Neighbour labelling of an even vertex 2v: with Gamma(v) = {s < t < u},
// the labels 0..5 name (0,s),(1,u),(0,t),(1,s),(0,u),(1,t) in that order —
// the labelling under which the reference local groups above are written.
inline std::vector<int> reference_labelling(const Graph& lambda, int vt) {
  require(vt % 2 == 0, Errc::precondition, "context vertex must be an even (layer-0) vertex");
  const auto& nbrs = lambda.neighbours(vt);
  require(nbrs.size() == 6, Errc::precondition, "context vertex is not 6-valent");
  for (int i = 0; i < 3; ++i)
    require(nbrs[2 * i] % 2 == 0 && nbrs[2 * i + 1] == nbrs[2 * i] + 1,
            Errc::precondition, "neighbourhood does not split into fibres");
  return {nbrs[0], nbrs[5], nbrs[2], nbrs[1], nbrs[4], nbrs[3]};
}

inline Perm label_image(const std::vector<int>& lab, const Perm& g) {
  std::vector<int> img(6, -1);
  for (int i = 0; i < 6; ++i) {
    int w = g[lab[i]];
    for (int j = 0; j < 6; ++j)
      if (lab[j] == w) img[i] = j;
    require(img[i] >= 0, Errc::internal, "stabiliser element leaves the labelled neighbourhood");
  }
  return Perm::from_images(img);
}

inline bool same_group(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return false;
  for (const Perm& p : g.generators())
    if (!h.contains(p)) return false;
  return true;
}

}  // namespace detail

inline Degree6Embeddings degree6_embeddings(const Graph& graph, const PermGroup& g,
                                            const PermGroup& h,
                                            const std::vector<F2Vector>& m_basis) {
  int n = graph.vertex_count();
  require(graph.connected(), Errc::precondition, "graph is disconnected");
  int val = 0;
  require(graph.regular(&val) && val == 3, Errc::precondition, "graph is not cubic");
  require(!m_basis.empty(), Errc::hypothesis, "neighbour-sum nullspace is trivial");
  for (const F2Vector& x : m_basis) {
    require(x.size() == n, Errc::precondition, "nullspace vector has the wrong length");
    for (int v = 0; v < n; ++v) {
      bool sum = false;
      for (int u : graph.neighbours(v)) sum ^= x.get(u);
      require(!sum, Errc::hypothesis, "vector violates the neighbour-sum condition");
    }
  }
  for (const Perm& p : h.generators())
    require(g.contains(p), Errc::hypothesis, "H is not a subgroup of G");
  require(is_two_arc_regular(make_pair(graph, g)), Errc::hypothesis,
          "G is not regular on 2-arcs");
  require(is_arc_regular(make_pair(graph, h)), Errc::hypothesis,
          "H is not regular on arcs");

  Degree6Embeddings out;
  out.lambda = edgeless_lex_product(graph, 2);
  out.m_order = bigint_pow(BigInt(2), m_basis.size());

  std::vector<Perm> a_gens, b_gens;
  F2Vector ones(n);
  for (int v = 0; v < n; ++v) ones.set(v, true);
  a_gens.push_back(detail::layer_flip(n, ones));
  for (const F2Vector& x : m_basis) {
    a_gens.push_back(detail::layer_flip(n, x));
    b_gens.push_back(detail::layer_flip(n, x));
  }
  for (const Perm& p : g.generators()) a_gens.push_back(detail::doubled_vertex_map(n, p));
  for (const Perm& p : h.generators()) b_gens.push_back(detail::doubled_vertex_map(n, p));
  out.a = PermGroup(2 * n, a_gens);
  out.b = PermGroup(2 * n, b_gens);

  require(out.a.order() == BigInt(2) * out.m_order * g.order(), Errc::internal,
          "order of A differs from 2 |M| |G|");
  require(out.b.order() == out.m_order * h.order(), Errc::internal,
          "order of B differs from |M| |H|");
  for (const Perm& bg : out.b.generators())
    for (const Perm& ag : out.a.generators())
      require(out.b.contains(conjugate(bg, ag)), Errc::internal, "B is not normal in A");

  // local images at vertex 0 under the fixed neighbour labelling
  std::vector<int> lab = detail::reference_labelling(out.lambda, 0);
  auto local_image = [&](const PermGroup& grp) {
    PermGroup stab = grp.point_stabiliser(0);
    std::vector<Perm> imgs;
    for (const Perm& p : stab.generators()) imgs.push_back(detail::label_image(lab, p));
    return PermGroup(6, imgs);
  };
  require(detail::same_group(local_image(out.a), two_s4_on_six()), Errc::internal,
          "A-side local image differs from 2S4(6)");
  require(detail::same_group(local_image(out.b), a4_on_six()), Errc::internal,
          "B-side local image differs from A4(6)");
  return out;
}

// Sandwich subgroup: C = <B, preimages in A_vt of the prescribed local
// group L>, for B normal in A with B-image <= L <= A-image at vt.
inline PermGroup sandwich_subgroup(const Graph& lambda, const PermGroup& a,
                                   const PermGroup& b, int vt, const PermGroup& l,
                                   std::size_t cap = default_element_cap()) {
  require(a.is_transitive() && b.is_transitive(), Errc::precondition,
          "both groups must be vertex-transitive");
  require(l.degree() == 6, Errc::precondition, "local group must act on 6 points");
  for (const Perm& bg : b.generators()) {
    require(a.contains(bg), Errc::precondition, "B is not a subgroup of A");
    for (const Perm& ag : a.generators())
      require(b.contains(conjugate(bg, ag)), Errc::precondition, "B is not normal in A");
  }

  std::vector<int> lab = detail::reference_labelling(lambda, vt);
  PermGroup a_stab = a.point_stabiliser(vt);
  PermGroup b_stab = b.point_stabiliser(vt);
  std::vector<Perm> a_img_gens;
  for (const Perm& p : a_stab.generators()) a_img_gens.push_back(detail::label_image(lab, p));
  PermGroup a_image(6, a_img_gens);
  for (const Perm& p : b_stab.generators())
    require(l.contains(detail::label_image(lab, p)), Errc::hypothesis,
            "sandwich condition fails: B-image not inside L");
  for (const Perm& p : l.generators())
    require(a_image.contains(p), Errc::hypothesis,
            "sandwich condition fails: L not inside A-image");

  std::vector<Perm> c_gens = b.generators();
  for (const Perm& p : a_stab.elements(cap))
    if (l.contains(detail::label_image(lab, p))) c_gens.push_back(p);
  PermGroup c(a.degree(), c_gens);

  for (const Perm& cg : c.generators())
    require(a.contains(cg), Errc::internal, "sandwich subgroup escapes A");
  PermGroup c_stab = c.point_stabiliser(vt);
  std::vector<Perm> c_img_gens;
  for (const Perm& p : c_stab.generators()) c_img_gens.push_back(detail::label_image(lab, p));
  require(detail::same_group(PermGroup(6, c_img_gens), l), Errc::internal,
          "sandwich local image differs from L");
  return c;
}

// End-to-end nullspace construction: doubles the cubic graph, embeds
// B normal in A, and cuts out the sandwich subgroup realizing L locally.
inline Pair degree6_pair(const Graph& graph, const PermGroup& h, const PermGroup& g,
                         const PermGroup& l, std::size_t cap = default_element_cap()) {
  std::vector<F2Vector> m_basis = graph_nullspace(graph);
  Degree6Embeddings emb = degree6_embeddings(graph, g, h, m_basis);
  PermGroup c = sandwich_subgroup(emb.lambda, emb.a, emb.b, 0, l, cap);
  Pair pair = make_pair(emb.lambda, std::move(c));
  require(pair.arc_transitive, Errc::internal, "sandwich pair is not arc-transitive");
  require(is_locally(pair, l), Errc::internal, "sandwich pair is not locally L");
  auto [u, v] = pair.first_arc();
  BigInt arc_stab = arc_stabiliser(pair, u, v).order();
  require(arc_stab * 48 == emb.m_order * l.order(), Errc::internal,
          "arc-stabiliser differs from |M| |L| / 48");
  return pair;
}

}  // namespace arcstab
