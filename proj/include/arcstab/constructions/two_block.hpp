#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "arcstab/action.hpp"
#include "arcstab/bigint.hpp"
#include "arcstab/blocks.hpp"
#include "arcstab/error.hpp"
#include "arcstab/perm.hpp"
#include "arcstab/perm_group.hpp"
#include "arcstab/px.hpp"

namespace arcstab {

// A transitive group L of degree 2k preserving a two-cell block system
// {A, B}, relabelled onto Z_k x {0,1}: point_a[i] carries label (i,0) and
// point_b[i] = point_a[i]^h carries (i,1), where h is the first generator
// swapping the blocks.  h^2 then acts as (r, r).
struct TwoBlockInput {
  PermGroup l;
  std::vector<int> block_a, block_b;
  Perm h;
  Perm r;  // degree k
  int k = 0;
  std::vector<int> point_a, point_b;
  PermGroup kernel;  // index-2 subgroup preserving each block
  PermGroup la;      // pointwise stabiliser of A
};

namespace detail {

// (a, b) parts of a block-preserving element in the Z_k x {0,1} labelling.
inline std::pair<Perm, Perm> block_parts(const TwoBlockInput& in, const Perm& g) {
  std::vector<int> apos(g.degree(), -1), bpos(g.degree(), -1);
  for (int i = 0; i < in.k; ++i) {
    apos[in.point_a[i]] = i;
    bpos[in.point_b[i]] = i;
  }
  std::vector<int> a(in.k), b(in.k);
  for (int i = 0; i < in.k; ++i) {
    a[i] = apos[g[in.point_a[i]]];
    b[i] = bpos[g[in.point_b[i]]];
    require(a[i] >= 0 && b[i] >= 0, Errc::precondition, "element does not preserve the blocks");
  }
  return {Perm::from_images(a), Perm::from_images(b)};
}

}  // namespace detail

inline TwoBlockInput two_block_setup(const PermGroup& l, const BlockSystem& blocks) {
  require(l.is_transitive(), Errc::precondition, "group is not transitive");
  require(blocks.blocks.size() == 2, Errc::precondition, "need exactly two cells");
  int n = l.degree();
  std::vector<int> a = blocks.blocks[0], b = blocks.blocks[1];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  require(static_cast<int>(a.size() + b.size()) == n && a.size() == b.size() && !a.empty(),
          Errc::precondition, "cells do not halve the domain");
  std::vector<int> side(n, -1);
  for (int p : a) {
    require(p >= 0 && p < n && side[p] < 0, Errc::precondition, "cells are not a partition");
    side[p] = 0;
  }
  for (int p : b) {
    require(p >= 0 && p < n && side[p] < 0, Errc::precondition, "cells are not a partition");
    side[p] = 1;
  }
  for (const Perm& g : l.generators()) {
    int sa = side[g[a[0]]];
    for (int p = 0; p < n; ++p)
      require(side[g[p]] == (side[p] ^ sa), Errc::precondition,
              "the two cells are not a block system");
  }

  TwoBlockInput in;
  in.l = l;
  in.block_a = a;
  in.block_b = b;
  in.k = static_cast<int>(a.size());

  // Breadth-first word enumeration for an element outside the kernel; a
  // length-1 word always suffices, since a generating set inside the kernel
  // would generate a block-fixing group.
  int hi = -1;
  for (size_t i = 0; i < l.generators().size(); ++i)
    if (side[l.generators()[i][a[0]]] == 1) {
      hi = static_cast<int>(i);
      break;
    }
  require(hi >= 0, Errc::precondition, "no generator swaps the two cells");
  in.h = l.generators()[hi];

  in.point_a = a;
  in.point_b.resize(in.k);
  for (int i = 0; i < in.k; ++i) in.point_b[i] = in.h[in.point_a[i]];

  std::vector<int> apos(n, -1);
  for (int i = 0; i < in.k; ++i) apos[in.point_a[i]] = i;
  std::vector<int> rimg(in.k);
  for (int i = 0; i < in.k; ++i) {
    int q = in.h[in.point_b[i]];
    require(side[q] == 0, Errc::internal, "h does not return block B to A");
    rimg[i] = apos[q];
  }
  in.r = Perm::from_images(rimg);

  Perm h2 = in.h * in.h;
  for (int i = 0; i < in.k; ++i)
    require(h2[in.point_a[i]] == in.point_a[in.r[i]] &&
                h2[in.point_b[i]] == in.point_b[in.r[i]],
            Errc::internal, "relabelling identity h^2 = (r,r) failed");

  // Schreier generators of the kernel over the transversal {e, h}.
  std::vector<Perm> kgens;
  Perm hinv = in.h.inverse();
  for (const Perm& g : l.generators()) {
    if (side[g[a[0]]] == 0) {
      kgens.push_back(g);
      kgens.push_back(in.h * g * hinv);
    } else {
      kgens.push_back(g * hinv);
      kgens.push_back(in.h * g);
    }
  }
  in.kernel = PermGroup(n, kgens);
  require(in.kernel.order() * 2 == l.order(), Errc::internal,
          "kernel index differs from 2");

  in.la = l.pointwise_stabiliser(a);

  // labelling identity (a, b)^h = (b^r, a), on kernel generators
  for (const Perm& kg : in.kernel.generators()) {
    auto [pa, pb] = detail::block_parts(in, kg);
    Perm conj = conjugate(kg, in.h);
    Perm br = conjugate(pb, in.r);
    for (int i = 0; i < in.k; ++i)
      require(conj[in.point_a[i]] == in.point_a[br[i]] &&
                  conj[in.point_b[i]] == in.point_b[pa[i]],
              Errc::internal, "labelling identity (a,b)^h = (b^r,a) failed");
  }
  return in;
}

namespace detail {

// Generator toolbox on C(k, rr, 1): the fibre shift s, the reflection t,
// the single-fibre maps [c]_i and the spaced products chi(c, i).
struct PXToolbox {
  int k, rr, l, m;
  int n;  // = rr * k

  Perm s() const {
    std::vector<int> img(n);
    for (int i = 0; i < rr; ++i)
      for (int u = 0; u < k; ++u) img[i * k + u] = ((i + 1) % rr) * k + u;
    return Perm::from_images(img);
  }
  Perm t() const {
    std::vector<int> img(n);
    for (int i = 0; i < rr; ++i)
      for (int u = 0; u < k; ++u) img[i * k + u] = ((rr - i) % rr) * k + u;
    return Perm::from_images(img);
  }
  Perm fibre_map(const Perm& c, int i) const {
    int f = ((i % rr) + rr) % rr;
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = j;
    for (int u = 0; u < k; ++u) img[f * k + u] = f * k + c[u];
    return Perm::from_images(img);
  }
  Perm chi(const Perm& c, int i) const {
    Perm out(n);
    for (int step = 0; step < l; ++step) out = out * fibre_map(c, i + 2 * m * step);
    return out;
  }
};

}  // namespace detail

// The two-block construction: from (L, {A,B}, h, r) build the prescribed
// automorphisms of C(k, 2lm, 1), check the generator identities they are
// claimed to satisfy, transport everything to C(k, 2lm, m-1) through the
// induced action on traversing paths, and return the resulting pair.
inline Pair two_block_pair(const TwoBlockInput& in, int ell, int m) {
  require(ell >= 1, Errc::precondition, "need l >= 1");
  require(m >= 2, Errc::precondition, "need m >= 2");
  int k = in.k;
  int rr = 2 * ell * m;
  detail::PXToolbox tb{k, rr, ell, m, rr * k};

  Perm s = tb.s(), t = tb.t();
  require(perm_power(s, rr).is_identity() && (t * t).is_identity() &&
              conjugate(s, t) == s.inverse(),
          Errc::internal, "identity check failed: dihedral relations of s and t");

  std::vector<std::pair<Perm, Perm>> kparts;
  for (const Perm& kg : in.kernel.generators()) kparts.push_back(detail::block_parts(in, kg));

  // small pool of fibre permutations for spot-checking the identities
  std::vector<Perm> pool{in.r};
  for (auto& [pa, pb] : kparts) {
    pool.push_back(pa);
    pool.push_back(pb);
  }
  for (const Perm& g : in.la.generators()) pool.push_back(detail::block_parts(in, g).second);

  for (const Perm& c : pool)
    for (const Perm& d : pool)
      for (int i : {0, 1, rr - 1}) {
        require(tb.fibre_map(c, i) * tb.fibre_map(d, i) == tb.fibre_map(c * d, i),
                Errc::internal, "identity check failed: [c]_i [d]_i = [cd]_i");
        int j = (i + m) % rr;
        require(tb.fibre_map(c, i) * tb.fibre_map(d, j) ==
                    tb.fibre_map(d, j) * tb.fibre_map(c, i),
                Errc::internal, "identity check failed: disjoint fibre maps commute");
      }
  for (const Perm& c : pool)
    for (int i : {0, 1})
      for (int j : {1, m, rr - 1}) {
        require(conjugate(tb.fibre_map(c, i), perm_power(s, j)) == tb.fibre_map(c, i + j),
                Errc::internal, "identity check failed: [c]_i^(s^j) = [c]_(i+j)");
        require(conjugate(tb.fibre_map(c, i), t) == tb.fibre_map(c, -i),
                Errc::internal, "identity check failed: [c]_i^t = [c]_(-i)");
      }
  for (const Perm& c : pool)
    for (const Perm& d : pool)
      for (int i : {0, 1}) {
        require(tb.chi(c, i + 2 * m) == tb.chi(c, i),
                Errc::internal, "identity check failed: chi(a,i) has period 2m");
        require(tb.chi(c, i) * tb.chi(d, i) == tb.chi(c * d, i),
                Errc::internal, "identity check failed: chi(a,i) chi(b,i) = chi(ab,i)");
        require(tb.chi(c, i) * tb.chi(d, i + m) == tb.chi(d, i + m) * tb.chi(c, i),
                Errc::internal, "identity check failed: chi at distinct indices mod 2m commute");
        require(conjugate(tb.chi(c, i), s) == tb.chi(c, i + 1),
                Errc::internal, "identity check failed: chi(a,i)^s = chi(a,i+1)");
        require(conjugate(tb.chi(c, i), t) == tb.chi(c, -i),
                Errc::internal, "identity check failed: chi(a,i)^t = chi(a,-i)");
      }

  Perm sigma = tb.chi(in.r, -1) * s;
  Perm tau(tb.n);
  for (int i = m + 1; i <= 2 * m - 1; ++i) tau = tau * tb.chi(in.r, i);
  tau = tau * t;

  require(sigma * conjugate(sigma, tau) == tb.chi(in.r, -1) * tb.chi(in.r, m - 1),
          Errc::internal, "identity check failed: sigma sigma^tau = chi(r,-1) chi(r,m-1)");
  require(tau.inverse() * perm_power(sigma, m) ==
              tb.chi(in.r, m) * t * perm_power(s, m),
          Errc::internal, "identity check failed: tau^-1 sigma^m = chi(r,m) t s^m");

  // M, N and the generating set of the target group
  std::vector<Perm> mgens, ngens, n0gens, gens;
  for (const Perm& g : in.la.generators()) {
    Perm b = detail::block_parts(in, g).second;
    gens.push_back(tb.fibre_map(b, 0));  // M_0 generators
    for (int i = 0; i < rr; ++i) mgens.push_back(tb.fibre_map(b, i));
  }
  for (auto& [pa, pb] : kparts) {
    n0gens.push_back(tb.chi(pa, 0) * tb.chi(pb, m));
    for (int i = 0; i < m; ++i) ngens.push_back(tb.chi(pa, i) * tb.chi(pb, i + m));
  }
  gens.insert(gens.end(), n0gens.begin(), n0gens.end());
  gens.push_back(sigma);
  gens.push_back(tau);

  PermGroup mgrp(tb.n, mgens), ngrp(tb.n, ngens);
  // sigma^(2m) picks up a residual fibre shift s^(2m) unless l = 1, so the
  // power that always lands in N is sigma^(2lm).
  require(ngrp.contains(perm_power(sigma, 2LL * ell * m)) && ngrp.contains(tau * tau) &&
              ngrp.contains(sigma * conjugate(sigma, tau)),
          Errc::internal, "identity check failed: sigma^2lm, tau^2, sigma sigma^tau lie in N");
  for (const Perm& ng : ngrp.generators())
    for (const Perm& mg : mgrp.generators())
      require(mgrp.contains(conjugate(mg, ng)), Errc::internal,
              "identity check failed: N normalises M");
  {
    std::vector<Perm> mn = mgens;
    mn.insert(mn.end(), ngens.begin(), ngens.end());
    PermGroup mngrp(tb.n, mn);
    require(mgrp.order() * ngrp.order() ==
                mngrp.order() * bigint_pow(in.la.order(), 2 * m),
            Errc::internal, "identity check failed: |M meet N| = |L_(A)|^2m");
  }

  PermGroup g_lambda(tb.n, gens);
  BigInt expected_order = BigInt(4) * ell * m *
                          bigint_pow(in.la.order(), 2 * m * (ell - 1)) *
                          bigint_pow(in.l.order() / 2, m);
  require(g_lambda.order() == expected_order, Errc::internal,
          "group order differs from 4lm |L_(A)|^(2m(l-1)) (|L|/2)^m");

  // transport to the Praeger-Xu graph on traversing (m-1)-paths
  std::vector<Perm> tgens;
  for (const Perm& g : g_lambda.generators())
    tgens.push_back(induced_px_action(k, rr, m - 1, g));
  PermGroup g_gamma(PXParams{k, rr, m - 1}.vertex_count(), tgens);
  require(g_gamma.order() == g_lambda.order(), Errc::internal,
          "induced path action is not faithful");

  // tau^-1 sigma^m fixes the all-zero path at fibre 1 and induces h on its
  // neighbourhood, matching the Z_k x {0,1} labelling
  {
    PXParams par{k, rr, m - 1};
    Perm w = induced_px_action(k, rr, m - 1, tau.inverse() * perm_power(sigma, m));
    PXVertex v{1, std::vector<int>(m - 1, 0)};
    int vi = par.index_of(v);
    require(w[vi] == vi, Errc::internal,
            "identity check failed: tau^-1 sigma^m fixes the base path");
    for (int j = 0; j < k; ++j) {
      std::vector<int> lo(m - 1, 0), hi(m - 1, 0);
      lo.front() = j;
      hi.back() = j;
      int in_j = par.index_of(PXVertex{0, lo});
      int out_j = par.index_of(PXVertex{2, hi});
      require(w[in_j] == out_j, Errc::internal,
              "identity check failed: tau^-1 sigma^m maps (j,0) to (j,1)");
      std::vector<int> lor(m - 1, 0);
      lor.front() = in.r[j];
      require(w[out_j] == par.index_of(PXVertex{0, lor}), Errc::internal,
              "identity check failed: tau^-1 sigma^m maps (j,1) to (j^r,0)");
    }
  }

  Pair pair = make_pair(praeger_xu(k, rr, m - 1), std::move(g_gamma));
  require(pair.arc_transitive, Errc::internal, "constructed pair is not arc-transitive");
  require(is_locally(pair, in.l), Errc::internal, "constructed pair is not locally L");
  auto [u, v] = pair.first_arc();
  BigInt arc_stab = arc_stabiliser(pair, u, v).order();
  BigInt l_omega = in.l.order() / BigInt(2 * k);
  require(arc_stab == bigint_pow(in.la.order(), 2 * m * (ell - 1)) * bigint_pow(l_omega, m),
          Errc::internal, "arc-stabiliser differs from |L_(A)|^(2m(l-1)) |L_w|^m");
  return pair;
}

}  // namespace arcstab
