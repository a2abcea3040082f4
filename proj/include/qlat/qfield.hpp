#pragma once

// Imaginary quadratic fields Q(sqrt(-d)): fundamental discriminant, prime
// splitting, multiplicative ideal counting, and the reduced-form class group.

#include <stdexcept>
#include <vector>

#include "qlat/forms.hpp"

namespace qlat {

enum class RingCase {
  TwoThreeMod4,  // -d = 2, 3 (mod 4): O_K = Z + Z sqrt(-d), dK = -4d
  OneMod4,       // -d = 1 (mod 4):    O_K = Z + Z (1+sqrt(-d))/2, dK = -d
};

enum class SplitType { Split, Inert, Ramified };

struct QuadField {
  long long d = 0;
  long long dK = 0;
  RingCase ring_case = RingCase::TwoThreeMod4;
  int class_number = 0;
  std::vector<BinaryForm> forms;  // reduced representatives, principal first
};

inline QuadField field_from_d(long long d) {
  if (d < 1) throw std::domain_error("field_from_d: d must be positive");
  if (!is_squarefree(d)) throw std::domain_error("field_from_d: d must be square-free");
  QuadField K;
  K.d = d;
  long long r = ((-d) % 4 + 4) % 4;
  if (r == 1) {
    K.ring_case = RingCase::OneMod4;
    K.dK = -d;
  } else {
    K.ring_case = RingCase::TwoThreeMod4;
    K.dK = -4 * d;
  }
  K.forms = reduced_forms(K.dK);
  K.class_number = static_cast<int>(K.forms.size());
  return K;
}

// Kronecker symbol with the fundamental discriminant on top.
inline int kronecker_symbol(long long dK, long long n) { return kronecker(dK, n); }

inline SplitType prime_splitting(const QuadField& K, long long p) {
  if (p < 2) throw std::domain_error("prime_splitting: p must be a prime");
  if (K.dK % p == 0) return SplitType::Ramified;
  return kronecker(K.dK, p) == 1 ? SplitType::Split : SplitType::Inert;
}

// Number of integral ideals of norm n, multiplicative over prime powers:
// split p^e -> e+1, inert -> (1+(-1)^e)/2, ramified -> 1.
inline long long ideal_count(const QuadField& K, long long n) {
  if (n < 1) throw std::domain_error("ideal_count: n must be positive");
  long long count = 1;
  long long rem = n;
  for (long long p = 2; p * p <= rem; ++p) {
    if (rem % p) continue;
    int e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    switch (prime_splitting(K, p)) {
      case SplitType::Split: count *= e + 1; break;
      case SplitType::Inert: if (e % 2) return 0; break;
      case SplitType::Ramified: break;
    }
  }
  if (rem > 1) {
    switch (prime_splitting(K, rem)) {
      case SplitType::Split: count *= 2; break;
      case SplitType::Inert: return 0;
      case SplitType::Ramified: break;
    }
  }
  return count;
}

enum class RepShape { Integral, HalfIntegral };

// One representation n = a^2 + d b^2 (Integral) or 4n = a^2 + d b^2 with
// a, b both odd (HalfIntegral), up to (a, b) ~ (-a, -b).
struct NormRep {
  long long a = 0, b = 0;
  RepShape shape = RepShape::Integral;

  bool operator==(const NormRep&) const = default;
};

// All representations of n by generators of principal ideals, one per unit
// class.  HalfIntegral reps (the (a + b sqrt(-d))/2 generators) only occur
// for -d = 1 (mod 4) and only with a, b odd; even ones reduce to Integral.
inline std::vector<NormRep> principal_norm_representations(const QuadField& K, long long n) {
  if (n < 1) throw std::domain_error("principal_norm_representations: n must be positive");
  std::vector<NormRep> out;
  auto canonical = [](long long a, long long b) { return b > 0 || (b == 0 && a >= 0); };
  long long bmax = isqrt(n / K.d);
  for (long long b = -bmax; b <= bmax; ++b) {
    long long rest = n - K.d * b * b;
    long long a;
    if (!is_square(rest, &a)) continue;
    for (long long s : (a == 0 ? std::vector<long long>{0} : std::vector<long long>{a, -a})) {
      if (canonical(s, b)) out.push_back({s, b, RepShape::Integral});
    }
  }
  if (K.ring_case == RingCase::OneMod4) {
    long long m4 = 4 * n;
    bmax = isqrt(m4 / K.d);
    for (long long b = -bmax; b <= bmax; ++b) {
      if (b % 2 == 0) continue;
      long long rest = m4 - K.d * b * b;
      long long a;
      if (!is_square(rest, &a) || a % 2 == 0) continue;
      for (long long s : {a, -a}) {
        if (canonical(s, b)) out.push_back({s, b, RepShape::HalfIntegral});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NormRep& x, const NormRep& y) {
    return std::tuple(static_cast<int>(x.shape), x.b, x.a) <
           std::tuple(static_cast<int>(y.shape), y.b, y.a);
  });
  return out;
}

}  // namespace qlat
