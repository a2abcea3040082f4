#pragma once

// The class-number-3 solver for d = 23.  The three exact series
//
//   S0 = (1/2) Theta_{L_o,  x^2-y^2}
//   S1 =   2   Theta_{L_a1, x^2-y^2}          (the two mirror classes agree)
//   S2 = (4/sqrt 23) Theta_{L_a, x y}, the sign with negative leading term
//
// span the space containing the three weight-3 eigenforms.  Imposing the
// prime-power recursion at p = 2 and multiplicativity at 6 on
// f = S0 + a S1 + b S2 eliminates to one integer cubic per unknown; the
// p = 3 recursion is checked to be implied.  Roots are paired by recursion
// residuals and the numeric eigenforms are the paired combinations.

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "qlat/hecke.hpp"

namespace qlat {

struct H3Result {
  std::array<long long, 4> cubic_a{};  // descending coefficients, content 1
  std::array<long long, 4> cubic_b{};
  std::array<double, 3> roots_a{};     // ascending
  std::array<double, 3> roots_b{};
  std::array<int, 3> pairing{};        // roots_a[i] pairs with roots_b[pairing[i]]
  std::array<double, 3> residuals{};   // recursion residuals of each pair
  std::vector<QSeries<double>> forms;  // the three numeric eigenforms
  QSeries<Rat> s0{1}, s1{1}, s2{1};    // exact combination basis
};

namespace h3_detail {

// sparse bivariate polynomials in (a, b) with rational coefficients
using Poly2 = std::map<std::pair<int, int>, Rat>;

inline Poly2 mul(const Poly2& p, const Poly2& q) {
  Poly2 r;
  for (const auto& [pe, pc] : p)
    for (const auto& [qe, qc] : q)
      r[{pe.first + qe.first, pe.second + qe.second}] += pc * qc;
  return r;
}

inline Poly2& add_scaled(Poly2& p, const Poly2& q, const Rat& s) {
  for (const auto& [e, c] : q) p[e] += s * c;
  return p;
}

inline void prune(Poly2& p) {
  for (auto it = p.begin(); it != p.end();) {
    it = it->second == 0 ? p.erase(it) : std::next(it);
  }
}

// univariate rational polynomial as dense coefficient vector, low degree first
using Poly1 = std::vector<Rat>;

inline void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly1 mul(const Poly1& p, const Poly1& q) {
  if (p.empty() || q.empty()) return {};
  Poly1 r(p.size() + q.size() - 1, Rat(0));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// remainder of p modulo a monic cubic m (m[3] == 1)
inline Poly1 mod_cubic(Poly1 p, const Poly1& m) {
  trim(p);
  while (p.size() > 3) {
    Rat lead = p.back();
    size_t d = p.size() - 1;
    p.pop_back();
    for (int k = 0; k < 3; ++k) p[d - 3 + k] -= lead * m[k];
    trim(p);
  }
  return p;
}

inline std::array<long long, 4> integerize_cubic(const Poly1& c) {
  if (c.size() != 4 || c[3] == 0) throw std::logic_error("h3: eliminant is not a cubic");
  Int lcm = 1;
  for (const Rat& x : c) {
    Int den = x.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::array<Int, 4> num;
  Int content = 0;
  for (int i = 0; i < 4; ++i) {
    Rat scaled = c[i] * Rat(lcm);
    scaled.canonicalize();
    num[i] = scaled.get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), num[i].get_mpz_t());
    content = g;
  }
  if (content == 0) throw std::logic_error("h3: zero cubic");
  std::array<long long, 4> out{};
  int sign = num[3] < 0 ? -1 : 1;
  for (int i = 0; i < 4; ++i) {
    Int v = sign * num[i] / content;
    if (!v.fits_slong_p()) throw std::overflow_error("h3: cubic coefficient");
    out[3 - i] = v.get_si();  // descending order
  }
  return out;
}

inline double eval_cubic(const std::array<long long, 4>& c, double x) {
  return ((c[0] * x + c[1]) * x + c[2]) * x + c[3];
}

// three real roots, ascending, bisection then Newton to ~1e-14 residual
inline std::array<double, 3> real_cubic_roots(const std::array<long long, 4>& c) {
  const double c3 = static_cast<double>(c[0]);
  // critical points of the cubic
  double qa = 3 * c[0], qb = 2 * c[1], qc = c[2];
  double disc = qb * qb - 4 * qa * qc;
  if (disc <= 0) throw std::domain_error("h3: cubic does not have three real roots");
  double x1 = (-qb - std::sqrt(disc)) / (2 * qa);
  double x2 = (-qb + std::sqrt(disc)) / (2 * qa);
  if (x1 > x2) std::swap(x1, x2);
  double bound = 1.0;
  for (int i = 1; i < 4; ++i)
    bound = std::max(bound, std::abs(static_cast<double>(c[i]) / c3));
  bound += 1.0;
  std::array<std::pair<double, double>, 3> brackets = {
      {{-bound, x1}, {x1, x2}, {x2, bound}}};
  std::array<double, 3> roots{};
  for (int i = 0; i < 3; ++i) {
    auto [lo, hi] = brackets[i];
    double flo = eval_cubic(c, lo);
    if (flo == 0) { roots[i] = lo; continue; }
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (1 + std::abs(lo)); ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = eval_cubic(c, mid);
      if (fm == 0) { lo = hi = mid; break; }
      if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; } else { hi = mid; }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {
      double fx = eval_cubic(c, x);
      double dfx = (3.0 * c[0] * x + 2.0 * c[1]) * x + c[2];
      if (dfx == 0) break;
      x -= fx / dfx;
    }
    roots[i] = x;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace h3_detail

inline H3Result h3_eigenforms(long long N) {
  using namespace h3_detail;
  if (N < 9) throw std::domain_error("h3_eigenforms: need N >= 9 for the constraints");
  QuadField K = field_from_d(23);
  if (K.class_number != 3) throw std::logic_error("h3_eigenforms: unexpected class group");

  H3Result res;
  DenseSeries o = dense_series(lattice_for_class(K, 0), N);
  DenseSeries a1 = dense_series(lattice_for_class(K, 1), N);
  DenseSeries a2 = dense_series(lattice_for_class(K, 2), N);

  res.s0 = QSeries<Rat>(N);
  res.s1 = QSeries<Rat>(N);
  res.s2 = QSeries<Rat>(N);
  for (long long m = 1; m <= N; ++m) {
    res.s0.set(m, to_rat(o.sq_num[m], 2 * o.four_a));
    res.s1.set(m, to_rat(2 * a1.sq_num[m], a1.four_a));
  }
  // xy series of the two mirror classes are negatives of each other; the
  // combination uses the one whose leading coefficient is negative
  QSeries<Rat> xy1(N), xy2(N);
  for (long long m = 1; m <= N; ++m) {
    xy1.set(m, to_rat(4 * a1.xy_num[m], a1.four_a));
    xy2.set(m, to_rat(4 * a2.xy_num[m], a2.four_a));
  }
  long long lead = xy1.leading_exponent();
  res.s2 = (lead <= N && xy1.at(lead) < 0) ? xy1 : xy2;
  if (res.s2.leading_exponent() > N || res.s2.at(res.s2.leading_exponent()) >= 0)
    throw std::logic_error("h3_eigenforms: xy series sign normalization failed");

  if (res.s0.leading_exponent() == res.s1.leading_exponent() ||
      res.s0.leading_exponent() == res.s2.leading_exponent() ||
      res.s1.leading_exponent() == res.s2.leading_exponent())
    throw std::domain_error("h3_eigenforms: combination series are linearly dependent");

  // f(m) as a linear polynomial in (a, b)
  auto f = [&](long long m) {
    Poly2 p;
    p[{0, 0}] = res.s0.at(m);
    p[{1, 0}] = res.s1.at(m);
    p[{0, 1}] = res.s2.at(m);
    prune(p);
    return p;
  };
  const Rat chi2(kronecker(K.dK, 2)), chi3(kronecker(K.dK, 3));

  // C2: f(4) - f(2)^2 + chi(2) 4 f(1) = 0
  Poly2 C2 = f(4);
  add_scaled(C2, mul(f(2), f(2)), Rat(-1));
  add_scaled(C2, f(1), chi2 * 4);
  prune(C2);
  // C6: f(6) - f(2) f(3) = 0
  Poly2 C6 = f(6);
  add_scaled(C6, mul(f(2), f(3)), Rat(-1));
  prune(C6);
  // C3: f(9) - f(3)^2 + chi(3) 9 f(1) = 0
  Poly2 C3 = f(9);
  add_scaled(C3, mul(f(3), f(3)), Rat(-1));
  add_scaled(C3, f(1), chi3 * 9);
  prune(C3);

  // C2 is linear in b: b = bpoly(a)
  Rat bcoef = C2.count({0, 1}) ? C2[{0, 1}] : Rat(0);
  for (const auto& [e, c] : C2)
    if (e.second > 1 || (e.second == 1 && e.first > 0))
      throw std::logic_error("h3_eigenforms: first constraint is not linear in b");
  if (bcoef == 0) throw std::logic_error("h3_eigenforms: cannot eliminate b");
  Poly1 bpoly(3, Rat(0));
  for (const auto& [e, c] : C2)
    if (e.second == 0) bpoly[e.first] = -c / bcoef;

  // substitute b into a bivariate polynomial -> univariate in a
  auto substitute = [&](const Poly2& p) {
    Poly1 out;
    for (const auto& [e, c] : p) {
      Poly1 term{c};
      for (int k = 0; k < e.first; ++k) term = mul(term, Poly1{Rat(0), Rat(1)});
      for (int k = 0; k < e.second; ++k) term = mul(term, bpoly);
      if (term.size() > out.size()) out.resize(term.size(), Rat(0));
      for (size_t i = 0; i < term.size(); ++i) out[i] += term[i];
    }
    trim(out);
    return out;
  };

  Poly1 cubic = substitute(C6);
  res.cubic_a = integerize_cubic(cubic);

  Poly1 monic(4);
  for (int i = 0; i < 4; ++i) monic[i] = cubic[i] / cubic[3];
  if (!mod_cubic(substitute(C3), monic).empty())
    throw std::logic_error("h3_eigenforms: p=3 constraint is not implied by the cubic");

  // b-cubic from the image of bpoly over the three roots: elementary
  // symmetric functions via traces in Q[a]/(cubic)
  Rat e1 = -monic[2], e2 = monic[1], e3 = -monic[0];
  std::array<Rat, 7> pw;  // power sums of the a-roots
  pw[0] = 3;
  pw[1] = e1;
  pw[2] = e1 * pw[1] - 2 * e2;
  for (int k = 3; k < 7; ++k) pw[k] = e1 * pw[k - 1] - e2 * pw[k - 2] + e3 * pw[k - 3];
  auto trace = [&](const Poly1& p) {
    Rat t(0);
    for (size_t i = 0; i < p.size(); ++i) t += p[i] * pw[i];
    return t;
  };
  Poly1 b1 = mod_cubic(bpoly, monic);
  Poly1 b2 = mod_cubic(mul(b1, b1), monic);
  Poly1 b3 = mod_cubic(mul(b2, b1), monic);
  Rat t1 = trace(b1), t2 = trace(b2), t3 = trace(b3);
  Rat E1 = t1;
  Rat E2 = (E1 * t1 - t2) / 2;
  Rat E3 = (t3 - E1 * t2 + E2 * t1) / 3;
  res.cubic_b = integerize_cubic(Poly1{-E3, E2, -E1, Rat(1)});

  res.roots_a = real_cubic_roots(res.cubic_a);
  res.roots_b = real_cubic_roots(res.cubic_b);

  // pair roots by the numeric recursion residuals at p = 2 and p = 3
  auto coeff = [&](const QSeries<Rat>& s, long long m) { return s.at(m).get_d(); };
  auto residual = [&](double a, double b) {
    auto fm = [&](long long m) {
      return coeff(res.s0, m) + a * coeff(res.s1, m) + b * coeff(res.s2, m);
    };
    double r2 = fm(4) - fm(2) * fm(2) + chi2.get_d() * 4 * fm(1);
    double r3 = fm(9) - fm(3) * fm(3) + chi3.get_d() * 9 * fm(1);
    return std::abs(r2) + std::abs(r3);
  };
  std::array<bool, 3> used{};
  for (int i = 0; i < 3; ++i) {
    int best = -1;
    for (int j = 0; j < 3; ++j) {
      double r = residual(res.roots_a[i], res.roots_b[j]);
      if (r < 1e-6) {
        if (best != -1) throw std::logic_error("h3_eigenforms: ambiguous root pairing");
        best = j;
      }
    }
    if (best == -1 || used[best]) throw std::logic_error("h3_eigenforms: root pairing failed");
    used[best] = true;
    res.pairing[i] = best;
    res.residuals[i] = residual(res.roots_a[i], res.roots_b[best]);
  }

  for (int i = 0; i < 3; ++i) {
    QSeries<double> form(N);
    for (long long m = 1; m <= N; ++m) {
      double v = coeff(res.s0, m) + res.roots_a[i] * coeff(res.s1, m) +
                 res.roots_b[res.pairing[i]] * coeff(res.s2, m);
      form.set(m, v);
    }
    res.forms.push_back(std::move(form));
  }
  return res;
}

}  // namespace qlat
