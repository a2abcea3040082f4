#pragma once

// Ideal lattices as embedded binary quadratic forms.  For a form (a, b, c)
// with D = 4ac - b^2 > 0, the lattice vector (u, v) is embedded at
//
//     x = (2au + bv) / (2 sqrt a),   y = -v sqrt(D) / (2 sqrt a),
//
// so that x^2 + y^2 = a u^2 + b u v + c v^2 exactly.  The y sign follows the
// conjugate basis [a, (b - sqrt(b^2-4ac))/2]; it is what the reference
// q-expansions of the xy-weighted series of Q(sqrt(-23)) use.  Writing
// alpha = 2au + bv and beta = -v, the complex embedding scaled by 2 sqrt(a)
// is w = alpha + beta i sqrt(D), an algebraic integer, and every weighted
// coefficient below is an exact element of Q + Q sqrt(D):
//
//     x^2 - y^2 = (alpha^2 - beta^2 D) / (4a)
//     x y       = (alpha beta / (4a)) sqrt(D)
//     (x + iy)^j = w^j / (4a)^{j/2}   for even j.

#include <string>
#include <utility>
#include <vector>

#include "qlat/qfield.hpp"
#include "qlat/qseries.hpp"

namespace qlat {

struct IdealLattice {
  BinaryForm form;
  long long disc = 0;  // b^2 - 4ac, negative
  std::string class_label;

  long long radicand() const { return -disc; }
  long long norm(long long u, long long v) const { return form.value(u, v); }
};

inline IdealLattice lattice_from_form(const BinaryForm& f, std::string label = {}) {
  if (!f.is_positive_definite())
    throw std::domain_error("lattice_from_form: form must be positive definite");
  return IdealLattice{f, f.disc(), std::move(label)};
}

inline std::string class_label(const QuadField& K, int index) {
  if (index == 0) return "o";
  if (K.class_number == 2) return "a";
  return "a" + std::to_string(index);
}

inline IdealLattice lattice_for_class(const QuadField& K, int class_index) {
  if (class_index < 0 || class_index >= K.class_number)
    throw std::out_of_range("lattice_for_class: class index out of range");
  return lattice_from_form(K.forms[class_index], class_label(K, class_index));
}

namespace detail {

inline void check_enumeration_bounds(const BinaryForm& f, long long N) {
  if (N < 0) throw std::domain_error("enumeration: negative bound");
  if (f.a > 1000000 || f.c > 1000000 || 4 * f.a > 1000000000000000LL / (N + 1))
    throw std::domain_error("enumeration: bound too large for exact 64-bit scan");
}

// Visit every nonzero (u, v) with 0 < form(u,v) <= N.
template <typename F>
void for_each_point(const BinaryForm& f, long long N, F&& visit) {
  check_enumeration_bounds(f, N);
  const long long D = -f.disc();
  const long long vmax = isqrt(4 * f.a * N / D);
  for (long long v = -vmax; v <= vmax; ++v) {
    const long long disc = 4 * f.a * N - D * v * v;
    const long long r = isqrt(disc);
    // u in [(-bv - r)/(2a), (-bv + r)/(2a)]
    long long lo = -f.b * v - r, hi = -f.b * v + r;
    long long ulo = lo >= 0 ? (lo + 2 * f.a - 1) / (2 * f.a) : -((-lo) / (2 * f.a));
    long long uhi = hi >= 0 ? hi / (2 * f.a) : -((-hi + 2 * f.a - 1) / (2 * f.a));
    for (long long u = ulo; u <= uhi; ++u) {
      if (u == 0 && v == 0) continue;
      long long n = f.value(u, v);
      if (n >= 1 && n <= N) visit(u, v, n);
    }
  }
}

}  // namespace detail

// Exactly the (u, v) with form(u, v) = m, lexicographic; m = 0 gives {(0,0)}.
inline std::vector<std::pair<long long, long long>> shell(const IdealLattice& L,
                                                          long long m) {
  if (m < 0) throw std::domain_error("shell: negative norm");
  if (m == 0) return {{0, 0}};
  detail::check_enumeration_bounds(L.form, m);
  const long long a = L.form.a, b = L.form.b;
  const long long D = L.radicand();
  std::vector<std::pair<long long, long long>> out;
  const long long vmax = isqrt(4 * a * m / D);
  for (long long v = -vmax; v <= vmax; ++v) {
    const long long disc = 4 * a * m - D * v * v;
    long long r;
    if (!is_square(disc, &r)) continue;
    for (long long num : (r == 0 ? std::vector<long long>{-b * v}
                                 : std::vector<long long>{-b * v - r, -b * v + r})) {
      if (num % (2 * a) == 0) out.emplace_back(num / (2 * a), v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Dense series data from one enumeration pass: shell counts plus the two
// degree-2 weighted sums as integer numerators over the common denominator 4a.
struct DenseSeries {
  long long order = 0;
  long long four_a = 0;
  std::vector<long long> count;   // |shell(m)|
  std::vector<long long> sq_num;  // 4a * sum over shell of (x^2 - y^2)
  std::vector<long long> xy_num;  // 4a * (sqrt(D)-coefficient of sum of x*y)
};

inline DenseSeries dense_series(const IdealLattice& L, long long N) {
  detail::check_enumeration_bounds(L.form, N);
  DenseSeries out;
  out.order = N;
  out.four_a = 4 * L.form.a;
  out.count.assign(N + 1, 0);
  out.sq_num.assign(N + 1, 0);
  out.xy_num.assign(N + 1, 0);
  out.count[0] = 1;
  const long long a = L.form.a, b = L.form.b, D = L.radicand();
  detail::for_each_point(L.form, N, [&](long long u, long long v, long long n) {
    const long long alpha = 2 * a * u + b * v;
    const long long beta = -v;
    out.count[n] += 1;
    out.sq_num[n] += alpha * alpha - beta * beta * D;
    out.xy_num[n] += alpha * beta;
  });
  return out;
}

inline QSeries<Int> theta_series(const IdealLattice& L, long long N) {
  if (N < 1) throw std::domain_error("theta_series: N must be >= 1");
  DenseSeries d = dense_series(L, N);
  QSeries<Int> s(N);
  for (long long m = 0; m <= N; ++m) {
    if (d.count[m]) s.set(m, to_int(d.count[m]));
  }
  return s;
}

// Degree-2 harmonic weights.  SquareDiff is x^2 - y^2, Product is x y,
// HalfSquareDiff is (x^2 - y^2)/2 (the class-number-1 eigenform weight).
enum class Harmonic { SquareDiff, HalfSquareDiff, Product };

inline QSeries<QuadValue> weighted_theta(const IdealLattice& L, Harmonic P, long long N) {
  if (N < 1) throw std::domain_error("weighted_theta: N must be >= 1");
  DenseSeries d = dense_series(L, N);
  const long long D = L.radicand();
  QSeries<QuadValue> s(N);
  for (long long m = 1; m <= N; ++m) {
    switch (P) {
      case Harmonic::SquareDiff:
        s.set(m, QuadValue(to_rat(d.sq_num[m], d.four_a)));
        break;
      case Harmonic::HalfSquareDiff:
        s.set(m, QuadValue(to_rat(d.sq_num[m], 2 * d.four_a)));
        break;
      case Harmonic::Product:
        s.set(m, QuadValue(Rat(0), to_rat(d.xy_num[m], d.four_a), D));
        break;
    }
  }
  return s;
}

// Sum over the norm-m shell of (x + iy)^j, exact (real, imaginary) parts in
// Q(sqrt(D)).  Odd-degree sums vanish on the (antipodal) shells and are
// returned as exact zeros.
inline std::pair<QuadValue, QuadValue> harmonic_power_sum(const IdealLattice& L,
                                                          long long m, int j) {
  if (m < 1 || j < 1) throw std::domain_error("harmonic_power_sum: need m >= 1, j >= 1");
  const long long a = L.form.a, b = L.form.b;
  const Int D = to_int(L.radicand());
  Int re_sum = 0, im_sum = 0;  // sum of w^j = X + Y i sqrt(D), w = alpha + beta i sqrt(D)
  for (const auto& [u, v] : shell(L, m)) {
    const Int alpha = to_int(2 * a * u + b * v);
    const Int beta = to_int(-v);
    Int re = alpha, im = beta;
    for (int k = 1; k < j; ++k) {
      // (re + im i sqrt D)(alpha + beta i sqrt D)
      Int nre = re * alpha - im * beta * D;
      Int nim = re * beta + im * alpha;
      re = std::move(nre);
      im = std::move(nim);
    }
    re_sum += re;
    im_sum += im;
  }
  if (j % 2 == 1) {
    if (re_sum != 0 || im_sum != 0)
      throw std::logic_error("harmonic_power_sum: odd-degree sum nonzero on antipodal shell");
    return {QuadValue(Rat(0)), QuadValue(Rat(0))};
  }
  Int scale = 1;
  for (int k = 0; k < j / 2; ++k) scale *= to_int(4 * a);
  Rat re_q(re_sum, scale), im_q(im_sum, scale);
  re_q.canonicalize();
  im_q.canonicalize();
  return {QuadValue(re_q), QuadValue(Rat(0), im_q, L.radicand())};
}

}  // namespace qlat
