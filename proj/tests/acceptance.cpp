// Acceptance gate: one line per criterion, exit code = number of failures.
// Every expected value is pinned as an exact integer; runtime targets are
// asserted with wall-clock checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "arcstab/arcstab.hpp"

using namespace arcstab;

namespace {

int failures = 0;

struct Criterion {
  int id;
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

void run(int id, const std::function<void(Criterion&)>& body) {
  Criterion c{id};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  std::cout << "criterion " << id << (c.ok ? " PASS" : " FAIL") << std::endl;
  if (!c.ok) {
    std::cerr << "  criterion " << id << ": " << c.why << std::endl;
    ++failures;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BigInt arc_stab_order(const Pair& pair) {
  auto [u, v] = pair.first_arc();
  return arc_stabiliser(pair, u, v).order();
}

// Pairs built by criteria 1-5, re-certified wholesale in criterion 6.
std::vector<Pair> produced;

// Sweep data handed from criteria 1 and 2 to criterion 9.
std::vector<long long> d6_sizes, zz_sizes;
std::vector<BigInt> d6_stabs, zz_stabs;

}  // namespace

int main() {
  // 1. locally-D6 pairs on C(3,2m,m-1): |G_uv| = 2^m, n = 2m*3^(m-1)
  run(1, [](Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    const PermGroup& d6 = catalog_group("D6").group;
    TwoBlockInput in = two_block_setup(d6, *has_two_block_system(d6));
    const long long want_n[] = {12, 54, 216, 810};
    const long long want_g[] = {288, 2592, 20736, 155520};
    for (int m = 2; m <= 5; ++m) {
      Pair pair = two_block_pair(in, 1, m);
      std::string at = "m=" + std::to_string(m) + ": ";
      c.expect(pair.graph.vertex_count() == want_n[m - 2], at + "wrong vertex count");
      c.expect(pair.group.order() == BigInt(want_g[m - 2]), at + "wrong group order");
      BigInt stab = arc_stab_order(pair);
      c.expect(stab == bigint_pow(BigInt(2), m), at + "arc-stabiliser is not 2^m");
      c.expect(is_locally(pair, d6), at + "pair is not locally D6");
      d6_sizes.push_back(pair.graph.vertex_count());
      d6_stabs.push_back(stab);
      produced.push_back(std::move(pair));
    }
    c.expect(seconds_since(t0) < 120.0, "sweep exceeded the 2-minute target");
  });

  // 2. locally-Z2wrZ2 pairs on C(2,4l,1): |G_uv| = 4, 64, 1024 and the
  //    closed form |L_(A)|^(n/k-4) * |L_w|^2
  run(2, [](Criterion& c) {
    const PermGroup& zz = catalog_group("Z2wrZ2").group;
    TwoBlockInput in = two_block_setup(zz, *has_two_block_system(zz));
    const long long want_stab[] = {4, 64, 1024};
    const long long want_g[] = {128, 4096, 98304};
    for (int ell = 1; ell <= 3; ++ell) {
      Pair pair = two_block_pair(in, ell, 2);
      std::string at = "l=" + std::to_string(ell) + ": ";
      int n = pair.graph.vertex_count();
      c.expect(n == 8 * ell, at + "wrong vertex count");
      c.expect(pair.group.order() == BigInt(want_g[ell - 1]), at + "wrong group order");
      BigInt stab = arc_stab_order(pair);
      c.expect(stab == BigInt(want_stab[ell - 1]), at + "wrong arc-stabiliser order");
      BigInt la = in.la.order();
      BigInt lw = zz.order() / BigInt(2 * in.k);
      c.expect(stab == bigint_pow(la, n / in.k - 4) * lw * lw,
               at + "arc-stabiliser misses the |L_(A)|^(n/k-4) |L_w|^2 form");
      c.expect(is_locally(pair, zz), at + "pair is not locally Z2wrZ2");
      zz_sizes.push_back(n);
      zz_stabs.push_back(stab);
      produced.push_back(std::move(pair));
    }
  });

  // 3. bipartite base pair on K_{3,3} plus one homological 2-cover step
  run(3, [](Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    PermGroup s3 = PermGroup::symmetric(3);
    Pair base = bipartite_base_pair(s3);
    c.expect(base.graph.vertex_count() == 6, "base is not on 6 vertices");
    c.expect(arc_stab_order(base) == 4, "base arc-stabiliser is not 4");
    VoltageCover vc = homological_2cover(base.graph);
    c.expect(vc.beta == 4, "cycle rank of K_{3,3} is not 4");
    Pair lifted = lift_group(base, vc);
    c.expect(lifted.graph.vertex_count() == 96, "cover does not have 96 vertices");
    c.expect(lifted.group.order() == BigInt(1152), "lifted group order is not 1152");
    c.expect(arc_stab_order(lifted) == 4, "lifted arc-stabiliser is not 4");
    c.expect(is_locally(lifted, s3), "lifted pair is not locally S3");
    c.expect(seconds_since(t0) < 10.0, "cover step exceeded the 10-second target");
    produced.push_back(std::move(base));
    produced.push_back(std::move(lifted));
  });

  // 4. wreath closed form |H_uv| |R|^(n/2) / 4 against the chain-computed
  //    order, on the 12-vertex product and again over the 96-vertex cover,
  //    where the orders need multi-word integers (2^96 * 1152)
  run(4, [](Criterion& c) {
    PermGroup z2 = PermGroup::cyclic(2);
    Pair base = bipartite_base_pair(PermGroup::symmetric(3));
    BigInt base_stab = arc_stab_order(base);

    Pair small = wreath_pair(z2, base);
    c.expect(small.graph.vertex_count() == 12, "product is not on 12 vertices");
    BigInt small_stab = arc_stab_order(small);
    c.expect(small_stab == 64, "12-vertex arc-stabiliser is not 64");
    c.expect(small_stab * 4 == base_stab * bigint_pow(BigInt(2), 6),
             "12-vertex closed form |H_uv| 2^6 / 4 fails");

    Pair lifted = lift_group(base, homological_2cover(base.graph));
    Pair big = wreath_pair(z2, lifted);
    c.expect(big.graph.vertex_count() == 192, "covered product is not on 192 vertices");
    BigInt lifted_stab = arc_stab_order(lifted);
    BigInt big_stab = arc_stab_order(big);
    c.expect(big_stab * 4 == lifted_stab * bigint_pow(BigInt(2), 96),
             "covered closed form |H_uv| 2^96 / 4 fails");
    c.expect(big_stab == bigint_pow(BigInt(2), 96), "covered arc-stabiliser is not 2^96");
    c.expect(big.group.order() == bigint_pow(BigInt(2), 96) * BigInt(1152),
             "covered group order is not 2^96 * 1152");
    produced.push_back(std::move(small));
    produced.push_back(std::move(big));
  });

  // 5. nullspace pipeline over the cubic catalog: frozen (|Aut|, number of
  //    2-arc-regular groups, number of (G,H) triples); all five local groups
  //    realized on every triple over a graph with nontrivial nullity; the
  //    trivial sandwich returns the full group A
  run(5, [](Criterion& c) {
    struct Frozen {
      const char* name;
      long long aut;
      int two_arc_regular;
      int triples;
    };
    const Frozen frozen[] = {{"K4", 24, 1, 1},      {"K33", 72, 2, 2},
                             {"cube", 48, 1, 2},    {"petersen", 120, 1, 0},
                             {"heawood", 336, 0, 0}, {"mobius-kantor", 96, 1, 2}};
    const char* locals[] = {"A4(6)", "2A4(6)", "S4(6c*)", "S4(6d*)", "2S4(6)"};

    for (const Frozen& f : frozen) {
      const Graph& graph = catalog_graph(f.name).graph;
      std::string at = std::string(f.name) + ": ";
      PermGroup aut = automorphism_search(graph);
      c.expect(aut.order() == BigInt(f.aut), at + "wrong automorphism group order");
      std::vector<PermGroup> gs = two_arc_regular_subgroups(graph, aut);
      c.expect(static_cast<int>(gs.size()) == f.two_arc_regular,
               at + "wrong number of 2-arc-regular groups");
      bool nontrivial_nullity = !graph_nullspace(graph).empty();
      int triples = 0;
      for (const PermGroup& g : gs) {
        std::vector<PermGroup> hs = arc_regular_subgroups(graph, g);
        triples += static_cast<int>(hs.size());
        if (!nontrivial_nullity) continue;
        for (const PermGroup& h : hs)
          for (const char* lname : locals) {
            const PermGroup& l = catalog_group(lname).group;
            Pair pair = degree6_pair(graph, h, g, l);
            std::string where = at + lname + ": ";
            c.expect(is_locally(pair, l), where + "pair is not locally L");
            BigInt m_order = bigint_pow(
                BigInt(2), static_cast<unsigned>(graph_nullspace(graph).size()));
            c.expect(arc_stab_order(pair) * 48 == m_order * l.order(),
                     where + "arc-stabiliser differs from |M| |L| / 48");
            produced.push_back(std::move(pair));
          }
      }
      c.expect(triples == f.triples, at + "wrong number of (G,H) triples");
    }

    // trivial sandwich on K_{3,3}: prescribing the full local group 2S4(6)
    // must return A itself
    const Graph& k33 = catalog_graph("K33").graph;
    PermGroup aut = automorphism_search(k33);
    std::vector<PermGroup> gs = two_arc_regular_subgroups(k33, aut);
    bool checked = false;
    for (const PermGroup& g : gs)
      for (const PermGroup& h : arc_regular_subgroups(k33, g)) {
        Degree6Embeddings emb = degree6_embeddings(k33, g, h, graph_nullspace(k33));
        PermGroup cc = sandwich_subgroup(emb.lambda, emb.a, emb.b, 0, two_s4_on_six());
        c.expect(cc.order() == emb.a.order(), "trivial sandwich has the wrong order");
        for (const Perm& p : emb.a.generators())
          c.expect(cc.contains(p), "trivial sandwich lost a generator of A");
        checked = true;
      }
    c.expect(checked, "no (G,H) triple found on K_{3,3}");
  });

  // 6. shrinking-stabiliser certificate for every pair produced above
  run(6, [](Criterion& c) {
    c.expect(!produced.empty(), "no pairs were produced by criteria 1-5");
    for (const Pair& pair : produced) {
      auto [u, v] = pair.first_arc();
      // the constructor re-verifies each proof condition and throws on any
      // violation, so reaching the return is the certificate
      BoundCertificate cert = exp_bound_certificate(pair, u, v);
      c.expect(cert.orders.front() == arc_stab_order(pair),
               "certificate front order differs from the arc-stabiliser");
      c.expect(cert.orders.front() <= cert.bound, "arc-stabiliser exceeds the bound");
      c.expect(cert.bound == bound_value(cert.local_stab_order,
                                         pair.graph.vertex_count(), cert.p),
               "certificate bound differs from |L_w|^floor((n-2)/p)");
    }
  });

  // 7. classification tags over the embedded catalog
  run(7, [](Criterion& c) {
    for (const char* name : {"C6", "S3", "A4", "S4", "D7"})
      c.expect(classify_group(catalog_group(name).group) == "Cons",
               std::string(name) + " is not Cons");
    c.expect(classify_group(catalog_group("D6").group) == "Pol", "D6 is not Pol");
    for (const char* name :
         {"D4", "Z3wrZ2", "Z2wrZ3", "S3wrZ2", "Z2wrS3", "F18(6):2", "F36(6)"})
      c.expect(classify_group(catalog_group(name).group) == "Exp",
               std::string(name) + " is not Exp");
    for (const char* name : {"A4(6)", "S4(6c*)", "S4(6d*)"})
      c.expect(classify_group(catalog_group(name).group) == "Subexp or Exp",
               std::string(name) + " is not 'Subexp or Exp'");
    for (const char* name : {"A4(6)", "2A4(6)", "S4(6c*)", "S4(6d*)", "2S4(6)"}) {
      const PermGroup& g = catalog_group(name).group;
      c.expect(!has_two_block_system(g).has_value(),
               std::string(name) + " unexpectedly has a two-cell block system");
      c.expect(minimal_block(g, 0, 3).blocks ==
                   std::vector<std::vector<int>>({{0, 3}, {1, 4}, {2, 5}}),
               std::string(name) + " misses the size-2 system {0,3},{1,4},{2,5}");
    }
  });

  // 8. engine oracles: chain order vs product closure on random groups,
  //    isomorphism tester vs brute-force relabelling, nullspace vs
  //    exhaustive enumeration
  run(8, [](Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260814u);

    auto random_perm = [&rng](int degree) {
      std::vector<int> img(degree);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      return Perm::from_images(img);
    };

    int accepted = 0;
    while (accepted < 50) {
      int degree = 4 + static_cast<int>(rng() % 5);
      std::vector<Perm> gens;
      int ngens = 2 + static_cast<int>(rng() % 2);
      for (int i = 0; i < ngens; ++i) gens.push_back(random_perm(degree));
      auto elems = detail::closure_up_to(gens, degree, 5001);
      if (elems.empty() || elems.size() > 5000) continue;  // outside the domain
      PermGroup g(degree, gens);
      c.expect(g.order() == BigInt(static_cast<unsigned long long>(elems.size())),
               "chain order differs from the exhaustive closure");
      ++accepted;
    }

    auto brute_iso = [](const PermGroup& g, const PermGroup& h) {
      if (g.degree() != h.degree() || g.order() != h.order()) return false;
      std::vector<int> img(g.degree());
      std::iota(img.begin(), img.end(), 0);
      do {
        Perm s = Perm::from_images(img);
        bool ok = true;
        for (const Perm& p : g.generators())
          if (!h.contains(conjugate(p, s))) {
            ok = false;
            break;
          }
        if (ok) return true;
      } while (std::next_permutation(img.begin(), img.end()));
      return false;
    };

    std::vector<PermGroup> pool;
    pool.push_back(catalog_group("D6").group);
    pool.push_back(catalog_group("C6").group);
    pool.push_back(catalog_group("S4(6c*)").group);
    pool.push_back(catalog_group("S4(6d*)").group);
    pool.push_back(catalog_group("Z2wrZ3").group);
    pool.push_back(catalog_group("2A4(6)").group);
    // the regular action of S3, same order and degree as C6
    pool.push_back(PermGroup(
        6, {parse_cycles(6, "(0 1 2)(3 5 4)"), parse_cycles(6, "(0 3)(1 4)(2 5)")}));

    for (const PermGroup& g : pool) {
      // conjugating never changes the action type
      Perm s = random_perm(6);
      std::vector<Perm> conj_gens;
      for (const Perm& p : g.generators()) conj_gens.push_back(conjugate(p, s));
      PermGroup g2(6, conj_gens);
      c.expect(is_perm_isomorphic(g, g2).has_value(),
               "isomorphism tester misses a conjugate copy");
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        c.expect(is_perm_isomorphic(pool[i], pool[j]).has_value() ==
                     brute_iso(pool[i], pool[j]),
                 "isomorphism tester disagrees with brute force on pair " +
                     std::to_string(i) + "," + std::to_string(j));

    std::vector<Graph> graphs;
    for (const GraphEntry& e : catalog_graphs()) graphs.push_back(e.graph);
    for (int n : {5, 6, 7, 8}) graphs.push_back(cycle(n));
    graphs.push_back(complete_graph(5));
    for (const Graph& graph : graphs) {
      int n = graph.vertex_count();
      c.expect(n <= 16, "exhaustive nullspace check limited to n <= 16");
      long long count = 0;
      for (long long mask = 0; mask < (1LL << n); ++mask) {
        bool good = true;
        for (int v = 0; v < n && good; ++v) {
          int sum = 0;
          for (int u : graph.neighbours(v)) sum ^= (mask >> u) & 1;
          good = sum == 0;
        }
        if (good) ++count;
      }
      c.expect(count == (1LL << graph_nullspace(graph).size()),
               "nullspace size differs from exhaustive enumeration");
    }
    c.expect(seconds_since(t0) < 60.0, "oracle checks exceeded the 1-minute target");
  });

  // 9. growth trends on the computed sweeps: the D6 data behaves like a
  //    polynomial bound with exponent below log2/log3, the Z2wrZ2 data keeps
  //    a per-vertex rate bounded away from zero
  run(9, [](Criterion& c) {
    c.expect(d6_sizes.size() == 4 && zz_sizes.size() == 3,
             "sweep data from criteria 1-2 is missing");
    if (d6_sizes.size() != 4 || zz_sizes.size() != 3) return;

    std::vector<double> exponent, per_vertex;
    for (std::size_t i = 0; i < d6_sizes.size(); ++i) {
      double lg = std::log(d6_stabs[i].convert_to<double>());
      exponent.push_back(lg / std::log(static_cast<double>(d6_sizes[i])));
      per_vertex.push_back(lg / static_cast<double>(d6_sizes[i]));
    }
    // exponent trend over the largest half of sampled n; the per-vertex
    // rate falls over the whole sweep
    for (std::size_t i = d6_sizes.size() / 2; i + 1 < d6_sizes.size(); ++i)
      c.expect(exponent[i + 1] >= exponent[i], "D6 exponent is not increasing");
    for (std::size_t i = 0; i + 1 < d6_sizes.size(); ++i)
      c.expect(per_vertex[i + 1] < per_vertex[i], "D6 per-vertex rate is not decreasing");
    double alpha = std::log(2.0) / std::log(3.0);
    for (double e : exponent)
      c.expect(e < alpha, "D6 exponent is not below log2/log3");
    c.expect(classify_growth(d6_sizes, d6_stabs).label == "Pol-like",
             "D6 sweep is not classified Pol-like");

    for (std::size_t i = 0; i < zz_sizes.size(); ++i) {
      double rate = std::log(zz_stabs[i].convert_to<double>()) /
                    static_cast<double>(zz_sizes[i]);
      c.expect(rate > 0.17, "Z2wrZ2 per-vertex rate is not bounded below by 0.17");
    }
    c.expect(classify_growth(zz_sizes, zz_stabs).label == "Exp-like",
             "Z2wrZ2 sweep is not classified Exp-like");
  });

  return failures;
}
