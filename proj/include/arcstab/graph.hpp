#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "arcstab/error.hpp"

namespace arcstab {

// Finite simple undirected graph on {0..n-1}, stored as sorted adjacency
// lists.  Immutable once built.
class Graph {
 public:
  Graph() : n_(0), edge_count_(0), connected_(true) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
    require(n >= 0, Errc::precondition, "negative vertex count");
    for (auto [u, v] : edges) {
      require(u >= 0 && u < n && v >= 0 && v < n, Errc::precondition,
              "edge endpoint out of range");
      require(u != v, Errc::precondition, "loops are not allowed");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    edge_count_ = 0;
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      edge_count_ += nb.size();
    }
    edge_count_ /= 2;
    connected_ = compute_connected();
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t arc_count() const { return 2 * edge_count_; }
  bool connected() const { return connected_; }

  const std::vector<int>& neighbours(int v) const {
    require(v >= 0 && v < n_, Errc::precondition, "vertex out of range");
    return adj_[v];
  }

  int valency(int v) const { return static_cast<int>(neighbours(v).size()); }

  bool adjacent(int u, int v) const {
    const auto& nb = neighbours(u);
    require(v >= 0 && v < n_, Errc::precondition, "vertex out of range");
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // True if every vertex has the same valency (reported through *val).
  bool regular(int* val = nullptr) const {
    if (n_ == 0) return true;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& nb : adj_)
      if (static_cast<int>(nb.size()) != d) return false;
    if (val) *val = d;
    return true;
  }

  // Edge list with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_;
  bool connected_;

  bool compute_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == n_;
  }
};

inline Graph cycle(int r) {
  require(r >= 3, Errc::precondition, "cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i) edges.emplace_back(i, (i + 1) % r);
  return Graph(r, edges);
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, Errc::precondition, "complete_bipartite needs nonempty parts");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

inline Graph complete_graph(int n) {
  require(n >= 1, Errc::precondition, "complete graph needs a vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Lexicographic product of g with the edgeless graph on c points: vertex
// (a, v) with a in {0..c-1} is flattened to index c*v + a, and (a1,v1) is
// adjacent to (a2,v2) iff v1 ~ v2 in g.
inline Graph edgeless_lex_product(const Graph& g, int c) {
  require(c >= 1, Errc::precondition, "need at least one copy");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    for (int a = 0; a < c; ++a)
      for (int b = 0; b < c; ++b) edges.emplace_back(c * u + a, c * v + b);
  return Graph(c * g.vertex_count(), edges);
}

}  // namespace arcstab
