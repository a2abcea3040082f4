#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "qlat/arith.hpp"

using namespace qlat;

TEST_CASE("isqrt is the exact floor square root") {
  for (long long n = 0; n <= 5000; ++n) {
    long long r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  REQUIRE(isqrt(4611686014132420609LL) == 2147483647LL);
  REQUIRE(isqrt(4611686014132420608LL) == 2147483646LL);
  REQUIRE_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("squarefree detection") {
  REQUIRE(is_squarefree(1));
  REQUIRE(is_squarefree(2));
  REQUIRE(is_squarefree(2 * 3 * 5 * 7));
  REQUIRE_FALSE(is_squarefree(4));
  REQUIRE_FALSE(is_squarefree(12));
  REQUIRE_FALSE(is_squarefree(49));
}

TEST_CASE("factor sieve agrees with trial division") {
  FactorSieve sieve(2000);
  for (long long n = 2; n <= 2000; ++n) {
    long long prod = 1;
    for (auto [p, e] : sieve.factor(n)) {
      REQUIRE(sieve.is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    REQUIRE(prod == n);
  }
  REQUIRE(sieve.primes().front() == 2);
  REQUIRE_THROWS_AS(sieve.factor(2001), std::out_of_range);
}

TEST_CASE("kronecker symbol examples") {
  REQUIRE(kronecker(-20, 3) == 1);
  REQUIRE(kronecker(-8, 2) == 0);
  REQUIRE(kronecker(-20, 11) == -1);
  REQUIRE(kronecker(-23, 2) == 1);  // -23 = 1 (mod 8)
  REQUIRE(kronecker(-20, 1) == 1);
}

TEST_CASE("kronecker matches the quadratic residue oracle at odd primes") {
  for (long long dK : {-8LL, -20LL, -23LL, -7LL, -43LL, -88LL}) {
    for (long long p = 3; p < 120; p += 2) {
      if (!is_prime(p) || dK % p == 0) continue;
      int expected = oracles::has_sqrt_mod(dK, p) ? 1 : -1;
      REQUIRE(kronecker(dK, p) == expected);
    }
  }
}

TEST_CASE("kronecker is completely multiplicative and periodic") {
  for (long long dK : {-8LL, -20LL, -23LL}) {
    for (long long m = 1; m <= 40; ++m) {
      for (long long n = 1; n <= 40; ++n) {
        REQUIRE(kronecker(dK, m * n) == kronecker(dK, m) * kronecker(dK, n));
      }
    }
    for (long long n = 1; n <= 200; ++n) {
      if (std::gcd(n, -dK) != 1) continue;
      REQUIRE(kronecker(dK, n) == kronecker(dK, n + (-dK)));
      REQUIRE(kronecker(dK, n) != 0);
    }
  }
}

TEST_CASE("exact rational square roots") {
  REQUIRE(*exact_sqrt(Rat(1, 4)) == Rat(1, 2));
  REQUIRE(*exact_sqrt(Rat(121, 81)) == Rat(11, 9));
  REQUIRE(*exact_sqrt(Rat(0)) == 0);
  REQUIRE_FALSE(exact_sqrt(Rat(1, 2)).has_value());
  REQUIRE_FALSE(exact_sqrt(Rat(-4)).has_value());
}

TEST_CASE("binomial values") {
  REQUIRE(binomial(2, 1) == 2);
  REQUIRE(binomial(1, 0) == 1);
  REQUIRE(binomial(10, 5) == 252);
  REQUIRE(binomial(3, 5) == 0);
}
