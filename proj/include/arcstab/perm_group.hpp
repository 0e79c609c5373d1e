#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "arcstab/bigint.hpp"
#include "arcstab/error.hpp"
#include "arcstab/perm.hpp"

namespace arcstab {

// Finite permutation group given by generators, with a stabiliser chain
// (base + strong generating set) built eagerly by the deterministic
// Schreier-Sims procedure.
//
// The chain makes order, membership and stabiliser computations exact:
//   order     = product of the basic orbit lengths (multiprecision),
//   membership = sifting through the transversals,
//   point/pointwise stabilisers = rebuild with the wanted points as a
//     prescribed base prefix, then cut the chain at that depth.
//
// Base selection is deterministic: a prescribed prefix is honoured first
// (one level per point, even if the orbit there is trivial), after which
// every new base point is the smallest point moved by the witness
// permutation that required it.
class PermGroup {
 public:
  PermGroup() : degree_(0), order_(1) {}

  PermGroup(int degree, std::vector<Perm> generators)
      : PermGroup(degree, std::move(generators), std::vector<int>{}) {}

  PermGroup(int degree, std::vector<Perm> generators, const std::vector<int>& base_prefix)
      : degree_(degree) {
    require(degree >= 0, Errc::precondition, "negative degree");
    for (const Perm& g : generators) {
      require(g.degree() == degree, Errc::precondition, "generator degree mismatch");
      if (g.is_identity()) continue;
      if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
    }
    for (int p : base_prefix)
      require(p >= 0 && p < degree, Errc::precondition, "base point out of range");
    build_chain(base_prefix);
  }

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  // <(0 1 ... n-1)>
  static PermGroup cyclic(int n) {
    require(n >= 1, Errc::precondition, "cyclic: degree must be positive");
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return PermGroup(n, {Perm::from_images(img)});
  }

  static PermGroup symmetric(int n) {
    require(n >= 1, Errc::precondition, "symmetric: degree must be positive");
    if (n == 1) return trivial(1);
    std::vector<int> rot(n), swp(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n, swp[i] = i;
    std::swap(swp[0], swp[1]);
    return PermGroup(n, {Perm::from_images(rot), Perm::from_images(swp)});
  }

  // <(0 1 ... n-1), (1 n-1)(2 n-2)...>, order 2n
  static PermGroup dihedral(int n) {
    require(n >= 3, Errc::precondition, "dihedral: need n >= 3");
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n, refl[i] = (n - i) % n;
    return PermGroup(n, {Perm::from_images(rot), Perm::from_images(refl)});
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::vector<int> base() const {
    std::vector<int> b;
    b.reserve(levels_.size());
    for (const Level& l : levels_) b.push_back(l.beta);
    return b;
  }

  bool contains(const Perm& g) const {
    require(g.degree() == degree_, Errc::precondition, "membership test across degrees");
    auto [res, lvl] = sift(0, g);
    (void)lvl;
    return res.is_identity();
  }

  std::vector<int> orbit_of(int point) const {
    require(point >= 0 && point < degree_, Errc::precondition, "orbit seed out of range");
    std::vector<int> orb{point};
    std::vector<char> seen(degree_, 0);
    seen[point] = 1;
    for (size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : gens_) {
        int q = g[orb[i]];
        if (!seen[q]) {
          seen[q] = 1;
          orb.push_back(q);
        }
      }
    return orb;
  }

  // Orbit plus, for each orbit point, a group element mapping the seed there.
  std::pair<std::vector<int>, std::vector<Perm>> orbit_with_witnesses(int point) const {
    std::vector<int> orb{point};
    std::vector<Perm> wit{Perm(degree_)};
    std::vector<int> pos(degree_, -1);
    pos[point] = 0;
    for (size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : gens_) {
        int q = g[orb[i]];
        if (pos[q] < 0) {
          pos[q] = static_cast<int>(orb.size());
          orb.push_back(q);
          wit.push_back(wit[i] * g);
        }
      }
    return {orb, wit};
  }

  std::vector<std::vector<int>> orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree_, 0);
    for (int p = 0; p < degree_; ++p) {
      if (seen[p]) continue;
      auto orb = orbit_of(p);
      for (int q : orb) seen[q] = 1;
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  bool is_transitive() const {
    return degree_ <= 1 || static_cast<int>(orbit_of(0).size()) == degree_;
  }

  bool is_regular() const { return is_transitive() && order_ == degree_; }

  std::vector<int> fixed_points() const {
    std::vector<int> out;
    for (int p = 0; p < degree_; ++p) {
      bool fix = true;
      for (const Perm& g : gens_)
        if (g[p] != p) {
          fix = false;
          break;
        }
      if (fix) out.push_back(p);
    }
    return out;
  }

  PermGroup point_stabiliser(int v) const { return pointwise_stabiliser({v}); }

  // Subgroup fixing every listed point, with its own valid chain (the
  // suffix of a chain whose base starts with those points).
  PermGroup pointwise_stabiliser(std::vector<int> points) const {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (int p : points)
      require(p >= 0 && p < degree_, Errc::precondition, "stabilised point out of range");
    PermGroup refit(degree_, gens_, points);
    return refit.suffix_group(points.size());
  }

  // All elements in deterministic transversal-odometer order.
  // Throws cap-exceeded if the order is larger than `cap`.
  std::vector<Perm> elements(std::uint64_t cap = default_element_cap()) const {
    require(order_ <= cap, Errc::cap_exceeded,
            "element enumeration over cap (order " + order_.str() + ")");
    std::vector<Perm> out{Perm(degree_)};
    for (size_t li = levels_.size(); li-- > 0;) {
      const Level& l = levels_[li];
      if (l.orbit.size() == 1) continue;
      std::vector<Perm> next;
      next.reserve(out.size() * l.orbit.size());
      for (const Perm& u : l.u)
        for (const Perm& h : out) next.push_back(h * u);
      out = std::move(next);
    }
    return out;
  }

 private:
  struct Level {
    int beta = -1;
    std::vector<int> gen_idx;            // indices into sgs_ of gens fixing all shallower betas
    std::vector<int> orbit;              // discovery order, orbit[0] == beta
    std::vector<int> pos;                // point -> orbit position, -1 outside
    std::vector<Perm> u, uinv;           // transversal: beta^(u[i]) == orbit[i]
    std::unordered_set<std::uint64_t> done;  // processed (point, gen) Schreier pairs
  };

  int degree_;
  std::vector<Perm> gens_;  // deduplicated input (or inherited) generators
  std::vector<Perm> sgs_;   // strong generating set accumulated during construction
  std::vector<Level> levels_;
  BigInt order_ = 1;

  static std::uint64_t pair_key(int point, int gi) {
    return (static_cast<std::uint64_t>(point) << 21) | static_cast<std::uint64_t>(gi);
  }

  void add_level(int beta) {
    Level l;
    l.beta = beta;
    l.orbit.push_back(beta);
    l.pos.assign(degree_, -1);
    l.pos[beta] = 0;
    l.u.emplace_back(degree_);
    l.uinv.emplace_back(degree_);
    levels_.push_back(std::move(l));
  }

  bool fixes_all_base(const Perm& g) const {
    for (const Level& l : levels_)
      if (g[l.beta] != l.beta) return false;
    return true;
  }

  // Attach strong generator sgs_[idx] to a level and grow its orbit.
  void attach_gen(int li, int idx) {
    Level& l = levels_[li];
    l.gen_idx.push_back(idx);
    const Perm& g = sgs_[idx];
    size_t before = l.orbit.size();
    for (size_t i = 0; i < before; ++i) {
      int q = g[l.orbit[i]];
      if (l.pos[q] < 0) {
        l.pos[q] = static_cast<int>(l.orbit.size());
        l.orbit.push_back(q);
        l.u.push_back(l.u[i] * g);
        l.uinv.push_back(l.u.back().inverse());
      }
    }
    // close up under the full generator list of this level
    for (size_t i = before; i < l.orbit.size(); ++i)
      for (int gi : l.gen_idx) {
        const Perm& h = sgs_[gi];
        int q = h[l.orbit[i]];
        if (l.pos[q] < 0) {
          l.pos[q] = static_cast<int>(l.orbit.size());
          l.orbit.push_back(q);
          l.u.push_back(l.u[i] * h);
          l.uinv.push_back(l.u.back().inverse());
        }
      }
  }

  // Sift h through levels from `from`; returns the residue and the level at
  // which sifting stopped (levels_.size() means it ran off the chain).
  std::pair<Perm, int> sift(int from, Perm h) const {
    for (int li = from; li < static_cast<int>(levels_.size()); ++li) {
      const Level& l = levels_[li];
      int q = h[l.beta];
      if (q == l.beta) continue;
      int qi = l.pos[q];
      if (qi < 0) return {std::move(h), li};
      h = h * l.uinv[qi];
    }
    return {std::move(h), static_cast<int>(levels_.size())};
  }

  int strong_gen_level(const Perm& g) const {
    // deepest level i such that g fixes base[0..i-1]
    int i = 0;
    while (i < static_cast<int>(levels_.size()) && g[levels_[i].beta] == levels_[i].beta) ++i;
    return i;
  }

  void build_chain(const std::vector<int>& prefix) {
    for (int p : prefix) add_level(p);
    // make sure every generator moves some base point
    for (;;) {
      int best = INT_MAX;
      for (const Perm& g : gens_)
        if (fixes_all_base(g)) best = std::min(best, g.first_moved());
      if (best == INT_MAX) break;
      add_level(best);
    }
    for (const Perm& g : gens_) {
      sgs_.push_back(g);
      int idx = static_cast<int>(sgs_.size()) - 1;
      int deepest = strong_gen_level(g);
      for (int li = 0; li <= std::min(deepest, static_cast<int>(levels_.size()) - 1); ++li)
        attach_gen(li, idx);
    }
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
      int jump = process_level(i);
      if (jump < 0)
        --i;
      else
        i = jump;
    }
    order_ = 1;
    for (const Level& l : levels_) order_ *= static_cast<std::uint64_t>(l.orbit.size());
    for (Level& l : levels_) {
      l.done.clear();  // bookkeeping no longer needed
    }
  }

  // Verify one level's Schreier generators; on failure install the residue
  // as a new strong generator and report the level to re-verify.
  int process_level(int li) {
    Level& l = levels_[li];
    for (size_t pi = 0; pi < l.orbit.size(); ++pi) {
      int p = l.orbit[pi];
      for (size_t gi = 0; gi < l.gen_idx.size(); ++gi) {
        std::uint64_t key = pair_key(p, static_cast<int>(gi));
        if (l.done.count(key)) continue;
        l.done.insert(key);
        const Perm& g = sgs_[l.gen_idx[gi]];
        if (p == l.beta && g[p] == p) continue;  // Schreier gen is g, already strong
        Perm sg = l.u[pi] * g;
        int q = sg[l.beta];
        int qi = l.pos[q];
        require(qi >= 0, Errc::internal, "orbit not closed under level generators");
        Perm rem = sg * l.uinv[qi];
        if (rem.is_identity()) continue;
        auto [res, stuck] = sift(li + 1, std::move(rem));
        if (res.is_identity()) continue;
        if (stuck == static_cast<int>(levels_.size())) add_level(res.first_moved());
        sgs_.push_back(std::move(res));
        int idx = static_cast<int>(sgs_.size()) - 1;
        for (int t = li + 1; t <= stuck; ++t) attach_gen(t, idx);
        return stuck;
      }
    }
    return -1;
  }

  // Group generated by the strong generators fixing the first `k` base
  // points; reuses the already-built chain suffix.
  PermGroup suffix_group(size_t k) const {
    PermGroup out;
    out.degree_ = degree_;
    if (k >= levels_.size()) {
      out.order_ = 1;
      return out;
    }
    out.sgs_ = sgs_;
    out.levels_.assign(levels_.begin() + static_cast<long>(k), levels_.end());
    for (int gi : levels_[k].gen_idx) out.gens_.push_back(sgs_[gi]);
    out.order_ = 1;
    for (const Level& l : out.levels_) out.order_ *= static_cast<std::uint64_t>(l.orbit.size());
    return out;
  }
};

}  // namespace arcstab
