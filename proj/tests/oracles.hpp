#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// brute-force double-loop shell enumeration, brute-force generator sums for
// eigenform coefficients, and a quadratic-residue Kronecker check.

#include <algorithm>
#include <utility>
#include <vector>

#include "qlat/qfield.hpp"

namespace oracles {

// All (u, v) with a u^2 + b u v + c v^2 = m by plain double loop.
inline std::vector<std::pair<long long, long long>> brute_shell(long long a, long long b,
                                                                long long c, long long m) {
  std::vector<std::pair<long long, long long>> out;
  if (m == 0) return {{0, 0}};
  long long bound = 2 * qlat::isqrt(m) + 2;  // |u|,|v| <= 2 sqrt(m) for reduced forms
  for (long long u = -bound; u <= bound; ++u)
    for (long long v = -bound; v <= bound; ++v)
      if (a * u * u + b * u * v + c * v * v == m && !(u == 0 && v == 0))
        out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

// Generator classes (a, b) with n = a^2 + d b^2, one per +- pair, plus the
// odd half-integral classes with 4n = a^2 + d b^2 when -d = 1 (mod 4).
struct GenClass {
  long long a, b;
  bool half;
};

inline std::vector<GenClass> generator_classes(const qlat::QuadField& K, long long n) {
  std::vector<GenClass> out;
  for (long long b = 0; K.d * b * b <= n; ++b) {
    long long rest = n - K.d * b * b;
    long long a;
    if (!qlat::is_square(rest, &a)) continue;
    if (b == 0) {
      out.push_back({a, 0, false});
    } else {
      out.push_back({a, b, false});
      if (a != 0) out.push_back({-a, b, false});
    }
  }
  if (K.ring_case == qlat::RingCase::OneMod4) {
    for (long long b = 1; K.d * b * b <= 4 * n; b += 2) {
      long long rest = 4 * n - K.d * b * b;
      long long a;
      if (!qlat::is_square(rest, &a) || a % 2 == 0) continue;
      out.push_back({a, b, true});
      out.push_back({-a, b, true});
    }
  }
  return out;
}

// Sum of generator squares over the principal ideals of norm n: each class
// (a, b) contributes the rational part of (a + b sqrt(-d))^2 (quartered for
// half-integral generators); the sqrt(-d) parts cancel pairwise.
inline qlat::Rat principal_generator_sum(const qlat::QuadField& K, long long n) {
  qlat::Rat sum(0);
  for (const auto& g : generator_classes(K, n)) {
    qlat::Rat re = qlat::to_rat(g.a * g.a - K.d * g.b * g.b);
    sum += g.half ? re / 4 : re;
  }
  return sum;
}

// Does x^2 = dK (mod p) have a solution?  Legendre oracle for odd p not
// dividing dK.
inline bool has_sqrt_mod(long long dK, long long p) {
  long long r = ((dK % p) + p) % p;
  for (long long x = 0; x < p; ++x)
    if ((x * x) % p == r) return true;
  return false;
}

}  // namespace oracles
