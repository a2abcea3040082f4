#pragma once

// Spherical t-design certification for lattice shells.  In dimension 2 the
// harmonic space of degree j is spanned by Re (x+iy)^j and Im (x+iy)^j, so a
// shell is a t-design iff the complex power sums of degree 1..t all vanish;
// the test runs on the exact sums from harmonic_power_sum.

#include <optional>
#include <string>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat {

// Fisher-type minimum size of a t-design on S^{n-1}: with s = floor(t/2),
// C(n-1+s, s) + C(n+s-2, s-1) for even t and 2 C(n-1+s, s) for odd t.
inline Int fisher_bound(int n, int t) {
  if (n < 2 || t < 1) throw std::domain_error("fisher_bound: need n >= 2, t >= 1");
  long long s = t / 2;
  if (t % 2 == 0) return binomial(n - 1 + s, s) + binomial(n + s - 2, s - 1);
  return 2 * binomial(n - 1 + s, s);
}

struct DesignVerdict {
  long long m = 0;
  size_t shell_size = 0;
  int max_strength = 0;                // largest t with the shell a t-design (capped)
  std::optional<int> failing_degree;   // first j with nonzero power sum, if <= cap
};

namespace detail {

inline bool is_antipodal(const std::vector<std::pair<long long, long long>>& pts) {
  for (const auto& [u, v] : pts) {
    if (!std::binary_search(pts.begin(), pts.end(), std::pair(-u, -v))) return false;
  }
  return true;
}

// Strength scan up to cap over the exact power sums of one shell.
inline DesignVerdict scan_strength(const IdealLattice& L, long long m, int cap) {
  auto pts = shell(L, m);
  if (pts.empty()) throw std::domain_error("design test: empty shell");
  DesignVerdict verdict;
  verdict.m = m;
  verdict.shell_size = pts.size();
  const bool antipodal = is_antipodal(pts);
  const long long a = L.form.a, b = L.form.b;
  const Int D = to_int(L.radicand());
  // running powers w^j per point, w = alpha + beta i sqrt(D)
  std::vector<std::pair<Int, Int>> w, cur;
  w.reserve(pts.size());
  for (const auto& [u, v] : pts) w.emplace_back(to_int(2 * a * u + b * v), to_int(-v));
  cur = w;
  for (int j = 1; j <= cap; ++j) {
    Int re = 0, im = 0;
    if (!(antipodal && j % 2 == 1)) {
      for (const auto& [x, y] : cur) {
        re += x;
        im += y;
      }
    }
    if (re != 0 || im != 0) {
      verdict.failing_degree = j;
      return verdict;
    }
    verdict.max_strength = j;
    if (j == cap) break;
    for (size_t i = 0; i < cur.size(); ++i) {
      Int nre = cur[i].first * w[i].first - cur[i].second * w[i].second * D;
      Int nim = cur[i].first * w[i].second + cur[i].second * w[i].first;
      cur[i] = {std::move(nre), std::move(nim)};
    }
  }
  return verdict;
}

}  // namespace detail

inline bool is_t_design(const IdealLattice& L, long long m, int t) {
  if (t < 1) throw std::domain_error("is_t_design: t must be >= 1");
  return detail::scan_strength(L, m, t).max_strength >= t;
}

inline DesignVerdict max_strength(const IdealLattice& L, long long m, int cap = 12) {
  if (cap < 1) throw std::domain_error("max_strength: cap must be >= 1");
  return detail::scan_strength(L, m, cap);
}

// Conjectured trichotomy of 2-dimensional discriminants.
enum class DiscClass { HexagonalSquare, SquareSquare, Other };

inline DiscClass classify_disc(long long disc) {
  long long r;
  if (disc % 3 == 0 && is_square(-disc / 3, &r)) return DiscClass::HexagonalSquare;
  if (disc % 4 == 0 && is_square(-disc / 4, &r)) return DiscClass::SquareSquare;
  return DiscClass::Other;
}

inline std::string disc_class_tag(DiscClass c) {
  switch (c) {
    case DiscClass::HexagonalSquare: return "k2*(-3)";
    case DiscClass::SquareSquare: return "k2*(-4)";
    default: return "other";
  }
}

struct ScanRow {
  long long disc = 0;
  BinaryForm form;
  long long m = 0;
  DesignVerdict verdict;
  DiscClass disc_class = DiscClass::Other;
};

// Every reduced form with disc_min <= b^2-4ac < 0 (fundamental or not) and
// every nonempty shell m <= norm_bound whose strength reaches at least 2.
// Rows ordered by (disc descending from -1, form, m).
inline std::vector<ScanRow> scan_forms(long long disc_min, long long norm_bound,
                                       int strength_cap = 12) {
  if (disc_min >= 0 || norm_bound < 1 || strength_cap < 2)
    throw std::domain_error("scan_forms: need disc_min < 0, norm_bound >= 1, cap >= 2");
  std::vector<ScanRow> rows;
  for (long long disc = -3; disc >= disc_min; --disc) {
    for (const BinaryForm& f : reduced_forms(disc)) {
      IdealLattice L = lattice_from_form(f);
      DenseSeries dense = dense_series(L, norm_bound);
      for (long long m = 1; m <= norm_bound; ++m) {
        if (dense.count[m] == 0) continue;
        // degree-2 sums already on hand; skip the full scan when they fail
        if (dense.sq_num[m] != 0 || dense.xy_num[m] != 0) continue;
        DesignVerdict v = max_strength(L, m, strength_cap);
        if (v.max_strength >= 2) {
          rows.push_back({disc, f, m, v, classify_disc(disc)});
        }
      }
    }
  }
  return rows;
}

}  // namespace qlat
