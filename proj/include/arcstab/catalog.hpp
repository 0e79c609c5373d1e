#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arcstab/blocks.hpp"
#include "arcstab/constructions/degree6.hpp"
#include "arcstab/constructions/wreath.hpp"
#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/perm.hpp"
#include "arcstab/perm_group.hpp"
#include "arcstab/perm_iso.hpp"

namespace arcstab {

// Embedded transitive groups of degree at most 7, tagged with the growth
// class their local action forces (Cons / Pol / Exp / "Subexp or Exp").
struct CatalogEntry {
  std::string name;
  std::string declared_type;
  std::string provenance;
  long long declared_order = 0;
  PermGroup group;
};

struct GraphEntry {
  std::string name;
  std::string provenance;
  Graph graph;
};

// Growth-class prediction for a transitive group of degree at most 7:
// regular or primitive actions are constant-class; a degree-6 group with a
// two-cell block system is polynomial when the blockwise-trivial part
// vanishes and exponential otherwise; degree-4 imprimitive non-regular and
// the two degree-6 wreaths are exponential; the remaining degree-6 groups
// stay undecided between subexponential and exponential.
inline std::string classify_group(const PermGroup& l) {
  require(l.degree() >= 1 && l.degree() <= 7, Errc::precondition,
          "classification covers degree <= 7 only");
  require(l.is_transitive(), Errc::precondition, "group is not transitive");
  if (l.is_regular() || is_primitive(l)) return "Cons";
  if (l.degree() == 4) return "Exp";
  require(l.degree() == 6, Errc::internal, "imprimitive non-regular group of prime degree");
  if (auto two = has_two_block_system(l)) {
    PermGroup la = l.pointwise_stabiliser(two->blocks[0]);
    return la.is_trivial() ? "Pol" : "Exp";
  }
  if (is_perm_isomorphic(l, wreath_product(PermGroup::cyclic(2), PermGroup::symmetric(3))) ||
      is_perm_isomorphic(l, wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(3))))
    return "Exp";
  return "Subexp or Exp";
}

namespace detail {

inline PermGroup from_cycles(int degree, const std::vector<std::string>& words) {
  std::vector<Perm> gens;
  for (const auto& w : words) gens.push_back(parse_cycles(degree, w));
  return PermGroup(degree, gens);
}

inline void verify_two_block(const CatalogEntry& e, const std::vector<std::vector<int>>& want) {
  auto sys = has_two_block_system(e.group);
  require(sys.has_value() && sys->blocks == want, Errc::internal,
          "catalog entry " + e.name + " lost its two-cell block system");
}

inline void verify_no_two_block(const CatalogEntry& e) {
  require(!has_two_block_system(e.group).has_value(), Errc::internal,
          "catalog entry " + e.name + " unexpectedly has a two-cell block system");
  BlockSystem pairs = minimal_block(e.group, 0, 3);
  require(pairs.blocks == std::vector<std::vector<int>>({{0, 3}, {1, 4}, {2, 5}}),
          Errc::internal, "catalog entry " + e.name + " lost the antipodal pairing");
}

inline std::vector<CatalogEntry> build_catalog_groups() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string type, std::string prov, long long order,
                 PermGroup grp) {
    CatalogEntry e{std::move(name), std::move(type), std::move(prov), order, std::move(grp)};
    require(e.group.order() == BigInt(e.declared_order), Errc::internal,
            "catalog entry " + e.name + " has the wrong order");
    require(e.group.is_transitive(), Errc::internal,
            "catalog entry " + e.name + " is not transitive");
    out.push_back(std::move(e));
  };

  add("Z2", "Cons", "regular swap on two points", 2, PermGroup::cyclic(2));
  add("Z3", "Cons", "regular rotation on three points", 3, PermGroup::cyclic(3));
  add("C6", "Cons", "regular rotation of the hexagon", 6, PermGroup::cyclic(6));
  add("S3", "Cons", "natural symmetric action on three points", 6, PermGroup::symmetric(3));
  add("A4", "Cons", "alternating group on four points, 2-transitive", 12,
      from_cycles(4, {"(0 1 2)", "(0 1)(2 3)"}));
  add("S4", "Cons", "natural symmetric action on four points", 24, PermGroup::symmetric(4));
  add("D7", "Cons", "dihedral action on the 7-gon, primitive of prime degree", 14,
      PermGroup::dihedral(7));

  add("D4", "Exp", "symmetries of the square; imprimitive wreath Z2 wr Z2", 8,
      PermGroup::dihedral(4));
  add("Z2wrZ2", "Exp", "imprimitive wreath on two fibres of two; perm-isomorphic to D4", 8,
      wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(2)));
  add("D6", "Pol", "dihedral action on the hexagon; alternating two-cell system", 12,
      from_cycles(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}));
  add("Z3wrZ2", "Exp", "imprimitive wreath on two fibres of three", 18,
      wreath_product(PermGroup::cyclic(3), PermGroup::cyclic(2)));
  add("Z2wrZ3", "Exp", "imprimitive wreath on three fibres of two; equals 2A4(6)", 24,
      wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(3)));
  add("S3wrZ2", "Exp", "imprimitive wreath on two fibres of three", 72,
      wreath_product(PermGroup::symmetric(3), PermGroup::cyclic(2)));
  add("Z2wrS3", "Exp", "imprimitive wreath on three fibres of two; equals 2S4(6)", 48,
      wreath_product(PermGroup::cyclic(2), PermGroup::symmetric(3)));
  add("F18(6):2", "Exp", "order-36 group on two cells of three with a 4-cycle on top", 36,
      from_cycles(6, {"(0 1 2)", "(3 4 5)", "(0 4 1 3)(2 5)"}));
  add("F36(6)", "Exp", "order-36 group on two cells of three, no order-4 elements", 36,
      from_cycles(6, {"(0 1 2)", "(3 4 5)", "(0 3)(1 4)(2 5)", "(0 1)(3 4)"}));

  add("A4(6)", "Subexp or Exp", "A4 acting on six points; Z2^2 : C3", 12, a4_on_six());
  add("2A4(6)", "Exp", "order-24 group between A4(6) and 2S4(6) with centre of order 2", 24,
      from_cycles(6, {"(0 2 4)(1 3 5)", "(1 4)(2 5)", "(0 3)"}));
  add("S4(6c*)", "Subexp or Exp",
      "centre-free S4 on six points between A4(6) and 2S4(6); c/d label not fixed here", 24,
      from_cycles(6, {"(0 2 4)(1 3 5)", "(1 4)(2 5)", "(1 5)(2 4)"}));
  add("S4(6d*)", "Subexp or Exp",
      "centre-free S4 on six points between A4(6) and 2S4(6); c/d label not fixed here", 24,
      from_cycles(6, {"(0 2 4)(1 3 5)", "(1 4)(2 5)", "(0 3)(1 5)(2 4)"}));
  add("2S4(6)", "Exp", "double S4 on six points; equals the wreath Z2 wr S3", 48,
      two_s4_on_six());

  for (const CatalogEntry& e : out) {
    if (e.name == "D6") verify_two_block(e, {{0, 2, 4}, {1, 3, 5}});
    if (e.name == "D4") verify_two_block(e, {{0, 2}, {1, 3}});
    if (e.name == "Z2wrZ2") verify_two_block(e, {{0, 1}, {2, 3}});
    if (e.name == "Z3wrZ2" || e.name == "S3wrZ2" || e.name == "F18(6):2" ||
        e.name == "F36(6)")
      verify_two_block(e, {{0, 1, 2}, {3, 4, 5}});
    if (e.name == "A4(6)" || e.name == "2A4(6)" || e.name == "S4(6c*)" ||
        e.name == "S4(6d*)" || e.name == "2S4(6)")
      verify_no_two_block(e);
    if (e.name == "Z2wrZ3" || e.name == "Z2wrS3")
      require(minimal_block(e.group, 0, 1).blocks ==
                  std::vector<std::vector<int>>({{0, 1}, {2, 3}, {4, 5}}),
              Errc::internal, "catalog entry " + e.name + " lost its fibre system");
  }
  return out;
}

inline std::vector<GraphEntry> build_catalog_graphs() {
  std::vector<GraphEntry> out;
  out.push_back({"K4", "complete graph on four vertices", complete_graph(4)});
  out.push_back({"K33", "complete bipartite graph on 3+3 vertices", complete_bipartite(3, 3)});
  {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 8; ++v)
      for (int b : {1, 2, 4})
        if (v < (v ^ b)) e.push_back({v, v ^ b});
    out.push_back({"cube", "the 3-dimensional hypercube", Graph(8, e)});
  }
  {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
      e.push_back({i, (i + 1) % 5});
      e.push_back({5 + i, 5 + (i + 2) % 5});
      e.push_back({i, 5 + i});
    }
    out.push_back({"petersen", "Petersen graph (outer 5-cycle, inner pentagram)", Graph(10, e)});
  }
  {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 14; ++i) e.push_back({i, (i + 1) % 14});
    for (int i = 0; i < 14; i += 2) e.push_back({i, (i + 5) % 14});
    out.push_back({"heawood", "Heawood graph (point-line incidence of the Fano plane)",
                   Graph(14, e)});
  }
  {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 8; ++i) {
      e.push_back({i, (i + 1) % 8});
      e.push_back({8 + i, 8 + (i + 3) % 8});
      e.push_back({i, 8 + i});
    }
    out.push_back({"mobius-kantor", "generalized Petersen graph GP(8,3)", Graph(16, e)});
  }
  for (const GraphEntry& e : out) {
    int val = 0;
    require(e.graph.connected() && e.graph.regular(&val) && val == 3, Errc::internal,
            "catalog graph " + e.name + " is not connected cubic");
  }
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_groups() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog_groups();
  return entries;
}

inline const std::vector<GraphEntry>& catalog_graphs() {
  static const std::vector<GraphEntry> entries = detail::build_catalog_graphs();
  return entries;
}

namespace detail {

template <class T>
[[noreturn]] void unknown_catalog_name(const std::string& name, const std::vector<T>& entries,
                                       const char* what) {
  std::string msg = "unknown " + std::string(what) + " '" + name + "'; available:";
  for (const T& e : entries) msg += " " + e.name;
  fail(Errc::unknown_name, msg);
}

}  // namespace detail

inline const CatalogEntry& catalog_group(const std::string& name) {
  for (const CatalogEntry& e : catalog_groups())
    if (e.name == name) return e;
  detail::unknown_catalog_name(name, catalog_groups(), "catalog group");
}

inline const GraphEntry& catalog_graph(const std::string& name) {
  for (const GraphEntry& e : catalog_graphs())
    if (e.name == name) return e;
  detail::unknown_catalog_name(name, catalog_graphs(), "catalog graph");
}

}  // namespace arcstab
