#pragma once

// Positive definite binary quadratic forms and reduced-form enumeration.

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qlat/arith.hpp"

namespace qlat {

struct BinaryForm {
  long long a = 0, b = 0, c = 0;

  long long disc() const { return b * b - 4 * a * c; }
  long long value(long long u, long long v) const {
    return a * u * u + b * u * v + c * v * v;
  }
  bool is_positive_definite() const { return a > 0 && c > 0 && disc() < 0; }

  // |b| <= a <= c, with b >= 0 when |b| = a or a = c.
  bool is_reduced() const {
    if (!is_positive_definite()) return false;
    long long ab = b < 0 ? -b : b;
    if (ab > a || a > c) return false;
    if (b < 0 && (ab == a || a == c)) return false;
    return true;
  }

  bool operator==(const BinaryForm&) const = default;
  auto operator<=>(const BinaryForm&) const = default;
};

// All reduced forms of discriminant `disc` (< 0), principal form first when
// present, then ascending by (a, b).
inline std::vector<BinaryForm> reduced_forms(long long disc) {
  if (disc >= 0) throw std::domain_error("reduced_forms: discriminant must be negative");
  long long r = ((disc % 4) + 4) % 4;
  if (r != 0 && r != 1) return {};
  std::vector<BinaryForm> out;
  long long amax = isqrt(-disc / 3);
  for (long long a = 1; a <= amax; ++a) {
    for (long long b = -a; b <= a; ++b) {
      long long num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      BinaryForm f{a, b, c};
      if (f.is_reduced()) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end(), [](const BinaryForm& x, const BinaryForm& y) {
    return std::tuple(x.a != 1, x.a, x.b) < std::tuple(y.a != 1, y.a, y.b);
  });
  return out;
}

}  // namespace qlat
