#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qlat/h3.hpp"
#include "qlat/hecke.hpp"
#include "qlat/reference_tables.hpp"

using namespace qlat;

namespace {

bool matches(const Eigenform& f, std::initializer_list<std::pair<long long, long long>> terms) {
  for (auto [m, c] : terms) {
    if (f.at(m) != to_int(c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("class number 1 eigenform for d=2") {
  Eigenform f = eigenform_h1(field_from_d(2), 9);
  REQUIRE(matches(f, {{1, 1}, {2, -2}, {3, -2}, {4, 4}, {5, 0}, {6, 4}, {7, 0}, {8, -8}, {9, -5}}));
  REQUIRE_THROWS_AS(eigenform_h1(field_from_d(5), 9), std::domain_error);
}

TEST_CASE("class number 2 eigenforms for d=5") {
  QuadField K = field_from_d(5);
  Eigenform v1 = eigenform_h2(K, 9, 1);
  REQUIRE(matches(v1, {{1, 1}, {2, 2}, {3, -4}, {4, 4}, {5, -5}, {6, -8}, {7, 4}, {8, 8}, {9, 7}}));
  Eigenform v2 = eigenform_h2(K, 9, 2);
  REQUIRE(matches(v2, {{1, 1}, {2, -2}, {3, 4}, {4, 4}, {5, -5}, {6, -8}, {7, -4}, {8, -8}, {9, 7}}));
  REQUIRE_THROWS_AS(eigenform_h2(field_from_d(2), 9, 1), std::domain_error);
  REQUIRE_THROWS_AS(eigenform_h2(K, 9, 3), std::domain_error);
}

TEST_CASE("d=15 variant 1 matches the reference ramified coefficient") {
  Eigenform f = eigenform_h2(field_from_d(15), 9, 1);
  REQUIRE(f.at(3) == -3);
}

TEST_CASE("derived combination scalings") {
  auto [c1a, c2a] = derive_c1_c2(field_from_d(5), 200);
  REQUIRE(c1a == Rat(1, 2));
  REQUIRE(c2a == Rat(1, 2));
  auto [c1b, c2b] = derive_c1_c2(field_from_d(15), 200);
  REQUIRE(c2b == Rat(2));
  auto [c1c, c2c] = derive_c1_c2(field_from_d(403), 200);
  REQUIRE(c2c == Rat(11, 9));
  REQUIRE_THROWS_AS(derive_c1_c2(field_from_d(2), 200), std::domain_error);
  // re-derivation across every class-number-2 field agrees with the fixture
  for (const auto& row : ref::h2_fields) {
    auto [c1, c2] = derive_c1_c2(field_from_d(row.d), 200);
    REQUIRE(c1 == Rat(1, 2));
    REQUIRE(c2 == to_rat(row.c2_num, row.c2_den));
  }
}

TEST_CASE("two variants agree up to sign by norm class") {
  for (long long d : {5LL, 15LL, 115LL}) {
    QuadField K = field_from_d(d);
    Eigenform v1 = eigenform_h2(K, 200, 1), v2 = eigenform_h2(K, 200, 2);
    DenseSeries o = dense_series(lattice_for_class(K, 0), 200);
    DenseSeries a = dense_series(lattice_for_class(K, 1), 200);
    for (long long n = 1; n <= 200; ++n) {
      if (o.count[n] > 0) {
        REQUIRE(v1.at(n) == v2.at(n));
      } else if (a.count[n] > 0) {
        REQUIRE(v1.at(n) == -v2.at(n));
      } else {
        REQUIRE(v1.at(n) == 0);
        REQUIRE(v2.at(n) == 0);
      }
    }
  }
}

TEST_CASE("eigenform support is the ideal-norm support") {
  for (long long d : {2LL, 7LL, 5LL, 91LL}) {
    QuadField K = field_from_d(d);
    Eigenform f = K.class_number == 1 ? eigenform_h1(K, 300) : eigenform_h2(K, 300, 1);
    for (long long n = 1; n <= 300; ++n) {
      REQUIRE((f.at(n) != 0) == (ideal_count(K, n) > 0));
    }
  }
}

TEST_CASE("class number 1 coefficients equal the generator-sum oracle") {
  for (long long d : {2LL, 7LL, 11LL, 19LL}) {
    QuadField K = field_from_d(d);
    Eigenform f = eigenform_h1(K, 300);
    for (long long n = 1; n <= 300; ++n) {
      REQUIRE(Rat(f.at(n)) == oracles::principal_generator_sum(K, n));
    }
  }
}

TEST_CASE("hecke_extend reproduces eigenforms from prime data") {
  for (long long d : {2LL, 5LL}) {
    QuadField K = field_from_d(d);
    Eigenform f = K.class_number == 1 ? eigenform_h1(K, 300) : eigenform_h2(K, 300, 1);
    std::map<long long, Rat> primes;
    for (long long p = 2; p <= 300; ++p) {
      if (is_prime(p)) primes[p] = Rat(f.at(p));
    }
    auto chi = [&](long long p) { return f.chi(p); };
    QSeries<Rat> ext = hecke_extend(primes, chi, 3, 300);
    for (long long n = 1; n <= 300; ++n) REQUIRE(ext.at(n) == Rat(f.at(n)));
  }
}

TEST_CASE("hecke_extend recursion spot values") {
  // a(3) = -2, chi(3) = 1, weight 3: a(9) = (-2)^2 - 9 = -5; a(6) = a(2)a(3)
  std::map<long long, Rat> primes{{2, Rat(-2)}, {3, Rat(-2)}, {5, Rat(0)}, {7, Rat(0)}};
  auto chi = [](long long p) { return kronecker(-8, p); };
  QSeries<Rat> s = hecke_extend(primes, chi, 3, 10);
  REQUIRE(s.at(9) == -5);
  REQUIRE(s.at(6) == 4);
  REQUIRE(s.at(1) == 1);
  // inert p with a(p) = 0: a(p^2) = p^2
  std::map<long long, Rat> missing{{2, Rat(1)}};
  REQUIRE_THROWS_AS(hecke_extend(missing, chi, 3, 10), std::domain_error);
}

TEST_CASE("inert prime squares take the value p^2") {
  QuadField K = field_from_d(2);
  Eigenform f = eigenform_h1(K, 30);
  REQUIRE(f.at(25) == 25);  // 5 inert in Q(sqrt(-2))
  REQUIRE(Rat(f.at(25)) == oracles::principal_generator_sum(K, 25));
}

TEST_CASE("multiplicativity check and fault detection") {
  QuadField K = field_from_d(2);
  Eigenform f = eigenform_h1(K, 500);
  REQUIRE(check_multiplicativity(f, 500).pass);

  Eigenform bad = f;
  bad.coeffs.set(6, bad.at(6) + 1);
  auto res = check_multiplicativity(bad, 500);
  REQUIRE_FALSE(res.pass);
  REQUIRE(res.detail.find("a(2*3)") != std::string::npos);
}

TEST_CASE("multiplicativity across both d=5 variants") {
  QuadField K = field_from_d(5);
  REQUIRE(check_multiplicativity(eigenform_h2(K, 500, 1), 500).pass);
  REQUIRE(check_multiplicativity(eigenform_h2(K, 500, 2), 500).pass);
}

TEST_CASE("ramanujan bound") {
  QuadField K = field_from_d(2);
  Eigenform f = eigenform_h1(K, 200);
  REQUIRE(ramanujan_check(f, 200).pass);

  Eigenform bad = f;
  bad.coeffs.set(3, to_int(6));  // |a(p)| = 2p violates the strict bound
  auto res = ramanujan_check(bad, 200);
  REQUIRE_FALSE(res.pass);
  REQUIRE(res.detail.find("p=3") != std::string::npos);
}

TEST_CASE("sine formula via the Chebyshev recurrence") {
  QuadField K2 = field_from_d(2);
  Eigenform f2 = eigenform_h1(K2, 100);
  REQUIRE(sine_formula_check(f2, 3, 4).pass);  // includes a(9) = -5 at alpha = 2

  QuadField K5 = field_from_d(5);
  Eigenform f5 = eigenform_h2(K5, 100, 1);
  REQUIRE(sine_formula_check(f5, 3, 3).pass);  // a(27) = 8
  REQUIRE(f5.at(27) == 8);

  REQUIRE_THROWS_AS(sine_formula_check(f2, 5, 3), std::domain_error);  // 5 inert

  Eigenform bad = f2;
  bad.coeffs.set(9, to_int(1));
  REQUIRE_FALSE(sine_formula_check(bad, 3, 4).pass);
}

TEST_CASE("nonvanishing scan") {
  QuadField K = field_from_d(2);
  Eigenform f = eigenform_h1(K, 100);
  auto rep = nonvanishing_scan(f, K, 100);
  REQUIRE(rep.pass);
  bool saw3 = false, saw11 = false;
  for (auto [p, ap] : rep.witnesses) {
    if (p == 3) { saw3 = true; REQUIRE(ap == -2); }
    if (p == 11) { saw11 = true; REQUIRE(ap == 14); }
  }
  REQUIRE(saw3);
  REQUIRE(saw11);

  Eigenform bad = f;
  bad.coeffs.set(11, to_int(11));  // a(p) = p must be rejected
  REQUIRE_FALSE(nonvanishing_scan(bad, K, 100).pass);
}

TEST_CASE("generator-sum oracle confirms prime powers for class number 2") {
  for (long long d : {5LL, 15LL, 91LL}) {
    QuadField K = field_from_d(d);
    const auto& fix = [&]() -> const ref::H2Field& {
      for (const auto& r : ref::h2_fields)
        if (r.d == d) return r;
      throw std::logic_error("missing fixture");
    }();
    Eigenform f = eigenform_h2(K, 250, 1);
    DenseSeries o = dense_series(lattice_for_class(K, 0), 250);
    for (long long p = 2; p <= 15; ++p) {
      if (!is_prime(p)) continue;
      for (long long q = p; q <= 200; q *= p) {
        if (ideal_count(K, q) == 0) continue;
        if (o.count[q] > 0) {
          // principal norm: direct generator sum
          REQUIRE(Rat(f.at(q)) == oracles::principal_generator_sum(K, q));
        } else if (q % fix.ram_norm == 0 && q == fix.ram_norm * fix.ram_norm) {
          REQUIRE(Rat(f.at(fix.ram_norm) * f.at(fix.ram_norm)) ==
                  oracles::principal_generator_sum(K, q));
        } else if (std::gcd(q, fix.ram_norm) == 1) {
          // nonprincipal norm: multiply by the ramified nonprincipal prime
          REQUIRE(Rat(f.at(q) * f.at(fix.ram_norm)) ==
                  oracles::principal_generator_sum(K, q * fix.ram_norm));
        }
      }
    }
  }
}

TEST_CASE("h3 solver reproduces the d=23 reference data") {
  H3Result r = h3_eigenforms(50);
  REQUIRE(r.cubic_a == ref::h3_cubic_a);
  REQUIRE(r.cubic_b == ref::h3_cubic_b);
  for (int i = 0; i < 3; ++i) {
    REQUIRE(std::abs(r.roots_a[i] - ref::h3_roots_a[i]) < 1e-5);
    REQUIRE(std::abs(r.roots_b[i] - ref::h3_roots_b[i]) < 1e-5);
    REQUIRE(r.residuals[i] < 1e-6);
  }
  REQUIRE(r.pairing == ref::h3_pairing);
  REQUIRE(std::abs(r.forms[0].at(2) - (-3.72545)) < 1e-4);
  REQUIRE(std::abs(r.forms[0].at(3) - 4.24943) < 1e-4);
  REQUIRE(r.forms[0].at(1) == 1.0);
  REQUIRE_THROWS_AS(h3_eigenforms(5), std::domain_error);
}

TEST_CASE("h3 numeric eigenforms are multiplicative within tolerance") {
  H3Result r = h3_eigenforms(100);
  for (const auto& f : r.forms) {
    for (long long m = 2; m <= 10; ++m) {
      for (long long n = m + 1; m * n <= 100; ++n) {
        if (std::gcd(m, n) != 1) continue;
        double lhs = f.at(m * n);
        double rhs = f.at(m) * f.at(n);
        REQUIRE(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}
