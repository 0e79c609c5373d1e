#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arcstab {

// Group orders overflow 64 bits quickly (a wreath product over a 96-vertex
// base already has order 2^96 * 1152), so all order arithmetic is exact
// multiprecision.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_pow(BigInt base, std::uint64_t exp) {
  BigInt out = 1;
  while (exp) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

// Default cap for element enumeration and exhaustive searches.
// Overridable per call site, via --cap in the CLI, or globally through
// the ARCSTAB_ELEM_CAP environment variable.
inline std::uint64_t default_element_cap() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("ARCSTAB_ELEM_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(1000000);
  }();
  return cap;
}

}  // namespace arcstab
