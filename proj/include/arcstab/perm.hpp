#pragma once

#include <cctype>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "arcstab/error.hpp"

namespace arcstab {

// A permutation of {0, ..., n-1}, stored as its image table.
//
// Convention used throughout: permutations act on the RIGHT, written
// exponentially, so p^(gh) = (p^g)^h.  Composition `g * h` therefore means
// "apply g first, then h", i.e. (g*h)[i] = h[g[i]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0); }

  static Perm from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
      require(v >= 0 && v < n && !seen[v], Errc::precondition,
              "image table is not a permutation");
      seen[v] = 1;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // Smallest moved point, or -1 for the identity.
  int first_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return -1;
  }

  Perm inverse() const {
    Perm inv;
    inv.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) inv.img_[img_[i]] = i;
    return inv;
  }

  friend Perm operator*(const Perm& g, const Perm& h) {
    require(g.degree() == h.degree(), Errc::precondition, "degree mismatch in composition");
    Perm out;
    out.img_.resize(g.img_.size());
    for (int i = 0; i < g.degree(); ++i) out.img_[i] = h.img_[g.img_[i]];
    return out;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

// Named alias for the operator, matching the left-to-right convention.
inline Perm compose(const Perm& g, const Perm& h) { return g * h; }

// Conjugate g^h = h^-1 g h (so that p^(g^h) = ((p^(h^-1))^g)^h).
inline Perm conjugate(const Perm& g, const Perm& h) { return h.inverse() * g * h; }

inline Perm perm_power(const Perm& g, long long e) {
  Perm out(g.degree());
  Perm base = e >= 0 ? g : g.inverse();
  unsigned long long k = e >= 0 ? static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(-e);
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

inline int perm_order(const Perm& g) {
  // Lcm of cycle lengths; degrees here are small enough for int.
  int n = g.degree();
  std::vector<char> done(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    int len = 0, j = i;
    do {
      done[j] = 1;
      j = g[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

// Cycle notation, e.g. "(0 2 4)(1 3 5)"; the identity prints as "()".
inline std::string to_cycles(const Perm& g) {
  std::ostringstream out;
  std::vector<char> done(g.degree(), 0);
  bool any = false;
  for (int i = 0; i < g.degree(); ++i) {
    if (done[i] || g[i] == i) {
      done[i] = 1;
      continue;
    }
    any = true;
    out << '(' << i;
    done[i] = 1;
    for (int j = g[i]; j != i; j = g[j]) {
      out << ' ' << j;
      done[j] = 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

inline Perm parse_cycles(int degree, const std::string& text) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> touched(degree, 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    require(text[pos] == '(', Errc::parse, "expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      require(std::isdigit(static_cast<unsigned char>(text[pos])), Errc::parse,
              "expected point in cycle notation: " + text);
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      require(v < degree, Errc::parse, "point out of range in cycle notation: " + text);
      require(!touched[v], Errc::parse, "repeated point in cycle notation: " + text);
      touched[v] = 1;
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    require(pos < text.size(), Errc::parse, "unterminated cycle: " + text);
    ++pos;  // ')'
    for (size_t i = 0; i + 1 < cyc.size(); ++i) img[cyc[i]] = cyc[i + 1];
    if (cyc.size() > 1) img[cyc.back()] = cyc.front();
    skip_ws();
  }
  return Perm::from_images(std::move(img));
}

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.images()) h = h * 1099511628211ull + static_cast<size_t>(v) + 1;
    return h;
  }
};

}  // namespace arcstab
