#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "arcstab/error.hpp"
#include "arcstab/perm_group.hpp"

namespace arcstab {

// Partition of {0..n-1} into blocks, canonicalised: each block ascending,
// blocks ordered by smallest element.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;

  size_t size() const { return blocks.size(); }
  bool trivial(int degree) const {
    return blocks.size() == 1 || static_cast<int>(blocks.size()) == degree;
  }
};

namespace detail {

inline int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace detail

// Finest block system of a transitive group in which `a` and `b` share a
// block (Atkinson's union-find method).
inline BlockSystem minimal_block(const PermGroup& G, int a, int b) {
  int n = G.degree();
  require(a >= 0 && a < n && b >= 0 && b < n && a != b, Errc::precondition,
          "minimal_block: need two distinct points in range");
  require(G.is_transitive(), Errc::precondition, "minimal_block: group must be transitive");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  // merge the classes of a and b, then close under the generators: whenever
  // two points share a class, so must their images
  std::vector<int> queue;
  {
    int ra = detail::uf_find(parent, a), rb = detail::uf_find(parent, b);
    parent[rb] = ra;
    queue.push_back(rb);
  }
  while (!queue.empty()) {
    int loser = queue.back();
    queue.pop_back();
    int keep = detail::uf_find(parent, loser);
    for (const Perm& g : G.generators()) {
      int x = g[loser], y = g[keep];
      int rx = detail::uf_find(parent, x), ry = detail::uf_find(parent, y);
      if (rx != ry) {
        parent[rx] = ry;
        queue.push_back(rx);
      }
    }
  }
  std::vector<std::vector<int>> by_root(n);
  for (int p = 0; p < n; ++p) by_root[detail::uf_find(parent, p)].push_back(p);
  BlockSystem sys;
  for (auto& cell : by_root)
    if (!cell.empty()) sys.blocks.push_back(std::move(cell));
  std::sort(sys.blocks.begin(), sys.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return sys;
}

inline bool is_primitive(const PermGroup& G) {
  int n = G.degree();
  require(G.is_transitive(), Errc::precondition, "primitivity is defined for transitive groups");
  if (n <= 2) return true;
  for (int b = 1; b < n; ++b)
    if (!minimal_block(G, 0, b).trivial(n)) return false;
  return true;
}

// Does G preserve a partition into exactly two blocks?  For small degrees
// the answer is decided by scanning the candidate cells through 0; above
// that only the minimal-block probes are tried, and a miss is reported as
// undecided rather than as a definite no.
inline std::optional<BlockSystem> has_two_block_system(const PermGroup& G) {
  int n = G.degree();
  require(G.is_transitive(), Errc::precondition,
          "two-block test is defined for transitive groups");
  if (n % 2 != 0 || n < 2) return std::nullopt;
  if (n <= 16) {
    // enumerate all candidate cells of size n/2 containing 0; a partition
    // preserved by every generator is preserved by the whole group
    int half = n / 2;
    std::vector<int> pool;
    for (int p = 1; p < n; ++p) pool.push_back(p);
    std::vector<int> idx(static_cast<size_t>(half - 1));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<char> in(n, 0);
      in[0] = 1;
      for (int i : idx) in[pool[static_cast<size_t>(i)]] = 1;
      bool ok = true;
      for (const Perm& g : G.generators()) {
        // g must map the cell onto itself or onto its complement
        char target = in[g[0]];
        for (int p = 1; p < n && ok; ++p)
          if (in[p] && in[g[p]] != target) ok = false;
        if (!ok) break;
      }
      if (ok) {
        BlockSystem sys;
        std::vector<int> cell, rest;
        for (int p = 0; p < n; ++p) (in[p] ? cell : rest).push_back(p);
        sys.blocks = {cell, rest};
        return sys;
      }
      // next combination
      int i = half - 2;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - 1 - (half - 1 - i)) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < half - 1; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return std::nullopt;
  }
  for (int b = 1; b < n; ++b) {
    BlockSystem sys = minimal_block(G, 0, b);
    if (sys.size() == 2) return sys;
  }
  fail(Errc::undecided, "two-block test inconclusive at this degree");
}

}  // namespace arcstab
