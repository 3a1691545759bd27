#pragma once

// Test-only oracles. Nothing here calls into the library's arithmetic beyond
// constructing values, so the checks they back stay independent of the code
// paths under test.

#include "sumprod/exact.hpp"
#include "sumprod/quad.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

// Integer square root by Newton iteration on plain 64-bit integers.
inline i64 isqrt64(i64 n) {
  if (n < 2) return n;
  i64 x = n;
  i64 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

inline bool is_square64(i64 n) {
  if (n < 0) return false;
  const i64 r = isqrt64(n);
  return r * r == n;
}

// No p^2 | m for any 2 <= p <= sqrt|m|, by plain trial division.
inline bool squarefree64(i64 m) {
  if (m == 0) return false;
  if (m < 0) m = -m;
  for (i64 p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

// Largest f with f^2 | m, by scanning downward.
inline std::pair<i64, i64> kernel64(i64 m) {
  const i64 mag = m < 0 ? -m : m;
  for (i64 f = isqrt64(mag); f >= 1; --f)
    if (mag % (f * f) == 0) return {m / (f * f), f};
  return {m, 1};
}

// O_K membership via trace and norm; the library uses coordinates.
inline bool integral_by_trace_norm(const sumprod::QuadElem& x) {
  const sumprod::Rat tr = 2 * x.a();
  const sumprod::Rat nm = x.a() * x.a() - x.b() * x.b() * sumprod::Rat(x.d());
  return tr.get_den() == 1 && nm.get_den() == 1;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  sumprod::Rat rat(long num_mag, long den_max) {
    return sumprod::make_rat(sumprod::Int(range(-num_mag, num_mag)), sumprod::Int(range(1, den_max)));
  }
  sumprod::Rat nonzero_rat(long num_mag, long den_max) {
    for (;;) {
      sumprod::Rat q = rat(num_mag, den_max);
      if (sgn(q) != 0) return q;
    }
  }
  sumprod::QuadElem quad(const sumprod::Int& d, long num_mag = 20, long den_max = 4) {
    return sumprod::QuadElem(rat(num_mag, den_max), rat(num_mag, den_max), d);
  }
};

// Square-free d values used as test fields.
inline const std::vector<long>& sample_fields() {
  static const std::vector<long> ds{-7, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 13, 17, 21, 101};
  return ds;
}

}  // namespace oracle
