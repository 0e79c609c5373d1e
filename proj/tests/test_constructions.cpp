#include <catch2/catch_amalgamated.hpp>

#include "arcstab/action.hpp"
#include "arcstab/bigint.hpp"
#include "arcstab/blocks.hpp"
#include "arcstab/catalog.hpp"
#include "arcstab/constructions/covers.hpp"
#include "arcstab/constructions/degree6.hpp"
#include "arcstab/constructions/two_block.hpp"
#include "arcstab/constructions/wreath.hpp"
#include "arcstab/graph_aut.hpp"
#include "arcstab/perm_iso.hpp"

using namespace arcstab;

TEST_CASE("wreath product orders and fibre structure") {
  PermGroup w = wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(3));
  CHECK(w.degree() == 6);
  CHECK(w.order() == 24);  // 2^3 * 3
  CHECK(minimal_block(w, 0, 1).blocks ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});

  CHECK(wreath_product(PermGroup::symmetric(3), PermGroup::cyclic(2)).order() == 72);
  CHECK(wreath_product(PermGroup::cyclic(2), PermGroup::symmetric(3)).order() == 48);
}

TEST_CASE("bipartite base pair") {
  Pair base = bipartite_base_pair(PermGroup::symmetric(3));
  CHECK(base.graph.vertex_count() == 6);
  CHECK(base.graph.edge_count() == 9);
  CHECK(base.arc_transitive);
  CHECK(base.group.order() == 72);
  auto [u, v] = base.first_arc();
  CHECK(arc_stabiliser(base, u, v).order() == 4);  // |T_w|^2 = 2^2
  CHECK(is_locally(base, PermGroup::symmetric(3)));
}

TEST_CASE("wreath pair arc stabiliser satisfies the closed form") {
  Pair base = bipartite_base_pair(PermGroup::symmetric(3));
  Pair big = wreath_pair(PermGroup::cyclic(2), base);
  CHECK(big.graph.vertex_count() == 12);
  CHECK(big.group.order() == BigInt(64) * 72);  // 2^6 * |base group|
  auto [u, v] = big.first_arc();
  // |G_uv| * m^2 = |base G_uv| * |R|^fibres: 4 * 2^6 / 4 = 64
  CHECK(arc_stabiliser(big, u, v).order() == 64);

  // wreathing with Z3 over the same base
  Pair big3 = wreath_pair(PermGroup::cyclic(3), base);
  CHECK(big3.graph.vertex_count() == 18);
  auto [u3, v3] = big3.first_arc();
  CHECK(arc_stabiliser(big3, u3, v3).order() == BigInt(4) * 729 / 9);  // 4*3^6/9
}

TEST_CASE("homological double cover of the bipartite graph") {
  Graph k33 = complete_bipartite(3, 3);
  VoltageCover vc = homological_2cover(k33);
  CHECK(vc.beta == 4);  // 9 - 6 + 1
  CHECK(vc.cover.vertex_count() == 96);
  CHECK(vc.cover.connected());
  int val = 0;
  CHECK(vc.cover.regular(&val));
  CHECK(val == 3);
  // projection respects fibres: vertex (v,x) projects to v
  for (int i = 0; i < vc.cover.vertex_count(); ++i)
    CHECK(vc.projection[i] == i >> vc.beta);

  // tree edges carry voltage zero, cotree edges the basis bits
  for (auto [a, b] : vc.tree_edges) CHECK(vc.voltage(a, b) == 0);
  std::uint32_t seen = 0;
  for (auto [a, b] : vc.cotree_edges) seen |= vc.voltage(a, b);
  CHECK(seen == 0b1111);
}

TEST_CASE("cover of a cycle is the double cycle") {
  VoltageCover vc = homological_2cover(cycle(5));
  CHECK(vc.beta == 1);
  CHECK(vc.cover.vertex_count() == 10);
  int val = 0;
  CHECK(vc.cover.regular(&val));
  CHECK(val == 2);
  CHECK(vc.cover.connected());  // C10, not two C5s
}

TEST_CASE("lifting the full bipartite symmetry through the cover") {
  Graph k33 = complete_bipartite(3, 3);
  Pair base = make_pair(k33, automorphism_search(k33));
  VoltageCover vc = homological_2cover(k33);
  Pair lifted = lift_group(base, vc);
  CHECK(lifted.graph.vertex_count() == 96);
  CHECK(lifted.group.order() == BigInt(16) * 72);  // 2^beta * |G|
  CHECK(lifted.arc_transitive);
  auto [u, v] = lifted.first_arc();
  CHECK(arc_stabiliser(lifted, u, v).order() == 4);
  CHECK(is_locally(lifted, PermGroup::symmetric(3)));

  // a second cover step is out of reach by design (beta = 49)
  CHECK_THROWS_AS(homological_2cover(lifted.graph), Error);
}

TEST_CASE("two-block setup extracts the kernel data") {
  const PermGroup& d6 = catalog_group("D6").group;
  auto sys = has_two_block_system(d6);
  REQUIRE(sys.has_value());
  TwoBlockInput in = two_block_setup(d6, *sys);
  CHECK(in.k == 3);
  CHECK(in.block_a == std::vector<int>{0, 2, 4});
  CHECK(in.kernel.order() == 6);
  CHECK(in.la.order() == 1);
  CHECK(perm_order(in.r) == 3);
  CHECK(in.h[in.point_a[0]] == in.point_b[0]);

  // rejects a partition that is not a block system
  BlockSystem bad;
  bad.blocks = {{0, 1, 2}, {3, 4, 5}};
  CHECK_THROWS_AS(two_block_setup(d6, bad), Error);

  // rejects a three-cell system
  BlockSystem three;
  three.blocks = {{0, 3}, {1, 4}, {2, 5}};
  CHECK_THROWS_AS(two_block_setup(d6, three), Error);
}

TEST_CASE("two-block doubling: hexagonal local group") {
  const PermGroup& d6 = catalog_group("D6").group;
  TwoBlockInput in = two_block_setup(d6, *has_two_block_system(d6));
  Pair p = two_block_pair(in, 1, 2);
  CHECK(p.graph.vertex_count() == 12);
  CHECK(p.group.order() == 288);  // 4*1*2 * (12/2)^2
  CHECK(p.arc_transitive);
  auto [u, v] = p.first_arc();
  CHECK(arc_stabiliser(p, u, v).order() == 4);
  CHECK(is_locally(p, d6));

  CHECK_THROWS_AS(two_block_pair(in, 0, 2), Error);
  CHECK_THROWS_AS(two_block_pair(in, 1, 1), Error);
}

TEST_CASE("two-block doubling: wreath local group grows with revolutions") {
  const PermGroup& zz = catalog_group("Z2wrZ2").group;
  TwoBlockInput in = two_block_setup(zz, *has_two_block_system(zz));
  CHECK(in.k == 2);
  CHECK(in.la.order() == 2);
  Pair p = two_block_pair(in, 2, 2);
  CHECK(p.graph.vertex_count() == 16);
  CHECK(p.group.order() == 4096);
  auto [u, v] = p.first_arc();
  // |L_(A)|^(2m(l-1)) * |L_w|^m = 2^4 * 2^2
  CHECK(arc_stabiliser(p, u, v).order() == 64);
  CHECK(is_locally(p, zz));
}

TEST_CASE("degree-6 search oracles on the bipartite graph") {
  Graph k33 = complete_bipartite(3, 3);
  PermGroup aut = automorphism_search(k33);
  auto gs = two_arc_regular_subgroups(k33, aut, 1u << 20);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].order() == 36);
  CHECK(gs[1].order() == 36);

  // exactly one of the two carries arc-regular subgroups, two of them
  auto h0 = arc_regular_subgroups(k33, gs[0], 1u << 20);
  auto h1 = arc_regular_subgroups(k33, gs[1], 1u << 20);
  CHECK(h0.size() + h1.size() == 2);
  for (const auto& h : h0) CHECK(h.order() == 18);
  for (const auto& h : h1) CHECK(h.order() == 18);
}

TEST_CASE("degree-6 embeddings and the sandwich on the doubled graph") {
  Graph k33 = complete_bipartite(3, 3);
  PermGroup aut = automorphism_search(k33);
  auto gs = two_arc_regular_subgroups(k33, aut, 1u << 20);
  std::vector<PermGroup> hs;
  const PermGroup* g_used = nullptr;
  for (const auto& g : gs) {
    auto found = arc_regular_subgroups(k33, g, 1u << 20);
    if (!found.empty()) {
      hs = found;
      g_used = &g;
    }
  }
  REQUIRE(g_used != nullptr);
  REQUIRE(!hs.empty());

  auto basis = graph_nullspace(k33);
  REQUIRE(basis.size() == 4);
  Degree6Embeddings emb = degree6_embeddings(k33, *g_used, hs[0], basis);
  CHECK(emb.lambda.vertex_count() == 12);
  CHECK(emb.m_order == 16);
  CHECK(emb.a.order() == BigInt(2) * 16 * 36);
  CHECK(emb.b.order() == BigInt(16) * 18);

  // all five catalogued local groups between the two local images
  for (const char* name : {"A4(6)", "2A4(6)", "S4(6c*)", "S4(6d*)", "2S4(6)"}) {
    const PermGroup& l = catalog_group(name).group;
    Pair p = degree6_pair(k33, hs[0], *g_used, l, 1u << 20);
    CHECK(p.graph.vertex_count() == 12);
    auto [u, v] = p.first_arc();
    CHECK(arc_stabiliser(p, u, v).order() == BigInt(16) * l.order() / 48);
    CHECK(is_locally(p, l));
  }
}

TEST_CASE("sandwich with the full local group returns the ambient group") {
  Graph k33 = complete_bipartite(3, 3);
  PermGroup aut = automorphism_search(k33);
  auto gs = two_arc_regular_subgroups(k33, aut, 1u << 20);
  const PermGroup* g_used = nullptr;
  std::vector<PermGroup> hs;
  for (const auto& g : gs) {
    auto found = arc_regular_subgroups(k33, g, 1u << 20);
    if (!found.empty()) {
      hs = found;
      g_used = &g;
    }
  }
  REQUIRE(g_used != nullptr);
  Degree6Embeddings emb = degree6_embeddings(k33, *g_used, hs[0], graph_nullspace(k33));
  PermGroup c = sandwich_subgroup(emb.lambda, emb.a, emb.b, 0, two_s4_on_six(), 1u << 20);
  CHECK(c.order() == emb.a.order());
  for (const Perm& g : emb.a.generators()) CHECK(c.contains(g));
}
