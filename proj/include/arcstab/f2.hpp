#pragma once

#include <cstdint>
#include <vector>

#include "arcstab/error.hpp"
#include "arcstab/graph.hpp"

namespace arcstab {

// Vector over the field with two elements, bit-packed.
class F2Vector {
 public:
  F2Vector() : n_(0) {}
  explicit F2Vector(int n) : n_(n), w_((n + 63) / 64, 0) {
    require(n >= 0, Errc::precondition, "negative vector length");
  }

  int size() const { return n_; }

  bool get(int i) const {
    require(i >= 0 && i < n_, Errc::precondition, "bit index out of range");
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void set(int i, bool b) {
    require(i >= 0 && i < n_, Errc::precondition, "bit index out of range");
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (b)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }

  F2Vector& operator^=(const F2Vector& o) {
    require(n_ == o.n_, Errc::precondition, "length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

  bool zero() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // Lowest set bit, or -1.
  int leading() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) {
        std::uint64_t w = w_[i];
        int b = 0;
        while (!(w & 1)) w >>= 1, ++b;
        return static_cast<int>(i) * 64 + b;
      }
    return -1;
  }

  bool operator==(const F2Vector& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const F2Vector& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

// Row-major matrix over the two-element field.
class F2Matrix {
 public:
  F2Matrix(int rows, int cols) : cols_(cols), rows_(rows, F2Vector(cols)) {}

  explicit F2Matrix(std::vector<F2Vector> rows, int cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      require(r.size() == cols, Errc::precondition, "ragged matrix");
  }

  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return cols_; }
  F2Vector& row(int i) { return rows_[i]; }
  const F2Vector& row(int i) const { return rows_[i]; }

 private:
  int cols_;
  std::vector<F2Vector> rows_;
};

// In-place reduced row echelon form; returns the rank.  Pivot columns come
// out ascending, and pivot columns are cleared above as well as below, so
// the result is canonical for the row space.
inline int rref(F2Matrix& m) {
  int rank = 0;
  for (int col = 0; col < m.col_count() && rank < m.row_count(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.row_count(); ++r)
      if (m.row(r).get(col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m.row(pivot), m.row(rank));
    for (int r = 0; r < m.row_count(); ++r)
      if (r != rank && m.row(r).get(col)) m.row(r) ^= m.row(rank);
    ++rank;
  }
  return rank;
}

// Canonical basis (reduced row-echelon, pivots ascending) of the right
// nullspace {x : Mx = 0}.
inline std::vector<F2Vector> nullspace(F2Matrix m) {
  int n = m.col_count();
  int rank = rref(m);
  std::vector<int> pivot_col;
  std::vector<char> is_pivot(n, 0);
  for (int r = 0; r < rank; ++r) {
    int c = m.row(r).leading();
    pivot_col.push_back(c);
    is_pivot[c] = 1;
  }
  std::vector<F2Vector> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    F2Vector x(n);
    x.set(f, true);
    for (int r = 0; r < rank; ++r)
      if (m.row(r).get(f)) x.set(pivot_col[r], true);
    basis.push_back(std::move(x));
  }
  // already echelon by free column; reduce once more for canonical form
  F2Matrix b(std::move(basis), n);
  int brank = rref(b);
  std::vector<F2Vector> out;
  for (int r = 0; r < brank; ++r) out.push_back(b.row(r));
  return out;
}

inline F2Matrix adjacency_matrix_f2(const Graph& g) {
  int n = g.vertex_count();
  F2Matrix m(n, n);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbours(v)) m.row(v).set(u, true);
  return m;
}

// Basis of {x in F2^V : sum of x over each neighbourhood is 0}; each basis
// vector is re-verified against the defining condition.
inline std::vector<F2Vector> graph_nullspace(const Graph& g) {
  auto basis = nullspace(adjacency_matrix_f2(g));
  for (const auto& x : basis)
    for (int v = 0; v < g.vertex_count(); ++v) {
      bool s = false;
      for (int u : g.neighbours(v)) s ^= x.get(u);
      require(!s, Errc::internal, "nullspace vector fails the neighbour-sum condition");
    }
  return basis;
}

}  // namespace arcstab
