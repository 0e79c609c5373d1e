#include <catch2/catch_amalgamated.hpp>

#include "arcstab/action.hpp"
#include "arcstab/graph_aut.hpp"
#include "arcstab/perm_iso.hpp"

using namespace arcstab;

TEST_CASE("pair validation") {
  Graph c4 = cycle(4);
  Pair p = make_pair(c4, PermGroup::dihedral(4));
  CHECK(p.vertex_transitive);
  CHECK(p.arc_transitive);

  // a generator that is not an automorphism is rejected with its index
  CHECK_THROWS_WITH(make_pair(c4, PermGroup(4, {parse_cycles(4, "(0 1)")})),
                    Catch::Matchers::ContainsSubstring("generator #0"));

  // rotation only: vertex- but not arc-transitive (no edge reversal)
  Pair rot = make_pair(c4, PermGroup::cyclic(4));
  CHECK(rot.vertex_transitive);
  CHECK_FALSE(rot.arc_transitive);
}

TEST_CASE("stabilisers and local action on the bipartite graph") {
  Graph k33 = complete_bipartite(3, 3);
  Pair p = make_pair(k33, automorphism_search(k33));
  REQUIRE(p.group.order() == 72);
  CHECK(p.arc_transitive);

  LocalGroup lg = local_group(p, 0);
  CHECK(lg.labelling == std::vector<int>{3, 4, 5});
  CHECK(lg.group.degree() == 3);
  CHECK(lg.group.order() == 6);  // full symmetric action on the neighbours

  CHECK(local_kernel(p, 0).order() == 2);  // |G_v| = 12 = 6 * 2
  CHECK(arc_stabiliser(p, 0, 3).order() == 4);
  CHECK_THROWS_AS(arc_stabiliser(p, 0, 1), Error);  // not an arc

  CHECK(is_locally(p, PermGroup::symmetric(3)));
  CHECK_FALSE(is_locally(p, PermGroup::cyclic(3)));
  // degree mismatch reports "no" rather than an error
  CHECK_FALSE(is_locally(p, PermGroup::symmetric(4)));
}

TEST_CASE("arc-regular and 2-arc-regular recognition") {
  Graph c5 = cycle(5);
  Pair d5 = make_pair(c5, PermGroup::dihedral(5));
  CHECK(is_arc_regular(d5));      // |D5| = 10 = #arcs
  CHECK(is_two_arc_regular(d5));  // also 10 2-arcs: sharply 2-arc-transitive
  Pair rot5 = make_pair(c5, PermGroup::cyclic(5));
  CHECK_FALSE(is_arc_regular(rot5));  // rotations never reverse an edge

  Pair k4 = make_pair(complete_graph(4), PermGroup::symmetric(4));
  CHECK(is_two_arc_regular(k4));  // 24 = 4*3*2
  CHECK_FALSE(is_arc_regular(k4));

  Graph petersen = [] {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
      e.push_back({i, (i + 1) % 5});
      e.push_back({5 + i, 5 + (i + 2) % 5});
      e.push_back({i, 5 + i});
    }
    return Graph(10, e);
  }();
  Pair pp = make_pair(petersen, automorphism_search(petersen));
  REQUIRE(pp.group.order() == 120);
  CHECK(pp.arc_transitive);
  CHECK_FALSE(is_arc_regular(pp));
  CHECK_FALSE(is_two_arc_regular(pp));  // 120 != 60: it is 3-arc-transitive
  CHECK(arc_stabiliser(pp, 0, 1).order() == 4);
}

TEST_CASE("first arc is the least edge") {
  Pair p = make_pair(cycle(6), PermGroup::cyclic(6));
  auto [u, v] = p.first_arc();
  CHECK(u == 0);
  CHECK(v == 1);
}
