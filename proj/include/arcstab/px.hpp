#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/graph_aut.hpp"
#include "arcstab/perm.hpp"

namespace arcstab {

// Vertex of C(k,r,s): a traversing path through s consecutive fibres,
// stored canonically in ascending fibre direction.  `start` is the fibre
// of the first path vertex; symbols[t] is the fibre-coordinate in fibre
// start+t (mod r).  A path and its reversal decode to the same PXVertex
// because only the ascending reading is ever stored.
struct PXVertex {
  int start = 0;
  std::vector<int> symbols;

  bool operator==(const PXVertex& o) const {
    return start == o.start && symbols == o.symbols;
  }
};

struct PXParams {
  int k, r, s;

  void validate() const {
    require(k >= 1, Errc::precondition, "need k >= 1");
    require(r >= 3, Errc::precondition, "need r >= 3");
    require(s >= 1 && s <= r - 1, Errc::precondition, "need 1 <= s <= r-1");
  }

  std::int64_t vertex_count() const {
    std::int64_t t = r;
    for (int i = 0; i < s; ++i) t *= k;
    return t;
  }

  // lexicographic index by (start, symbols)
  int index_of(const PXVertex& v) const {
    std::int64_t idx = v.start;
    for (int u : v.symbols) idx = idx * k + u;
    require(idx >= 0 && idx < vertex_count(), Errc::internal, "bad path vertex");
    return static_cast<int>(idx);
  }

  PXVertex vertex_at(int index) const {
    PXVertex v;
    v.symbols.assign(s, 0);
    for (int t = s - 1; t >= 0; --t) {
      v.symbols[t] = index % k;
      index /= k;
    }
    v.start = index;
    require(v.start >= 0 && v.start < r, Errc::precondition, "vertex index out of range");
    return v;
  }

  // Base-cycle graph C(k,r,1) vertex (fibre i, coordinate u) -> index i*k+u.
  int base_index(int fibre, int u) const { return ((fibre % r + r) % r) * k + u; }

  // The s base vertices making up a path vertex, in ascending fibre order.
  std::vector<int> base_path(const PXVertex& v) const {
    std::vector<int> out(s);
    for (int t = 0; t < s; ++t) out[t] = base_index(v.start + t, v.symbols[t]);
    return out;
  }

  // Reassemble a PXVertex from an unordered set of base vertices; errors if
  // they do not form a traversing path (one vertex per fibre, fibres
  // consecutive).
  PXVertex from_base_path(const std::vector<int>& base) const {
    require(static_cast<int>(base.size()) == s, Errc::precondition,
            "traversing path must have s vertices");
    std::vector<int> coord(r, -1);
    std::vector<char> hit(r, 0);
    for (int b : base) {
      int fibre = b / k, u = b % k;
      require(fibre >= 0 && fibre < r, Errc::precondition, "base vertex out of range");
      require(!hit[fibre], Errc::hypothesis, "image is not a traversing path (repeated fibre)");
      hit[fibre] = 1;
      coord[fibre] = u;
    }
    int start = -1;
    for (int f = 0; f < r; ++f)
      if (hit[f] && !hit[(f + r - 1) % r]) {
        require(start < 0, Errc::hypothesis, "image is not a traversing path (gap)");
        start = f;
      }
    require(start >= 0, Errc::hypothesis, "image is not a traversing path");
    PXVertex v;
    v.start = start;
    v.symbols.resize(s);
    for (int t = 0; t < s; ++t) {
      int f = (start + t) % r;
      require(hit[f], Errc::hypothesis, "image is not a traversing path (gap)");
      v.symbols[t] = coord[f];
    }
    return v;
  }
};

// C(k,r,s): vertices are the traversing paths of length s-1 in C(k,r,1),
// two being adjacent iff their union is a traversing path of length s.
// Connected, 2k-valent, r*k^s vertices.
inline Graph praeger_xu(int k, int r, int s) {
  PXParams px{k, r, s};
  px.validate();
  std::int64_t n = px.vertex_count();
  require(n <= (std::int64_t{1} << 22), Errc::precondition, "Praeger-Xu graph too large");
  std::vector<std::pair<int, int>> edges;
  for (int idx = 0; idx < n; ++idx) {
    PXVertex v = px.vertex_at(idx);
    // neighbours one fibre up: drop the first symbol, append a free one
    PXVertex w;
    w.start = (v.start + 1) % r;
    w.symbols.assign(v.symbols.begin() + 1, v.symbols.end());
    w.symbols.push_back(0);
    for (int c = 0; c < k; ++c) {
      w.symbols.back() = c;
      edges.emplace_back(idx, px.index_of(w));
    }
  }
  return Graph(static_cast<int>(n), edges);
}

// Natural action of an automorphism p of C(k,r,1) on the path vertices of
// C(k,r,s): each traversing path maps to the path on the p-images.  Errors
// if p is not an automorphism, or if some image fails to be a traversing
// path (possible only for the exceptional complete-bipartite case r = 4).
inline Perm induced_px_action(int k, int r, int s, const Perm& p) {
  PXParams px{k, r, s};
  px.validate();
  require(p.degree() == r * k, Errc::precondition,
          "permutation degree does not match the base graph");
  Graph base = praeger_xu(k, r, 1);
  require(is_automorphism(base, p), Errc::precondition,
          "not an automorphism of the base graph");
  std::int64_t n = px.vertex_count();
  std::vector<int> images(static_cast<size_t>(n));
  for (int idx = 0; idx < n; ++idx) {
    std::vector<int> path = px.base_path(px.vertex_at(idx));
    for (int& b : path) b = p[b];
    images[static_cast<size_t>(idx)] = px.index_of(px.from_base_path(path));
  }
  Perm result = Perm::from_images(std::move(images));
  return result;
}

}  // namespace arcstab
