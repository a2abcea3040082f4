#pragma once

// Elementary integer and rational helpers shared across the library:
// exact integer square roots, a prime sieve with smallest-prime-factor
// factorisation, the Kronecker symbol, and exact square roots of rationals.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qlat {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long overloads; route through long (LP64).
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long num, long long den = 1) {
  Rat q(to_int(num), to_int(den));
  q.canonicalize();
  return q;
}

// Floor square root of a nonnegative long long, exact.
inline long long isqrt(long long n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  if (n == 0) return 0;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_square(long long n, long long* root = nullptr) {
  if (n < 0) return false;
  long long r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

inline bool is_squarefree(long long n) {
  if (n < 1) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

// Smallest-prime-factor sieve; factorisations in O(log n) after O(N) setup.
class FactorSieve {
 public:
  explicit FactorSieve(long long limit) : spf_(static_cast<size_t>(limit) + 1, 0) {
    for (long long i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        for (long long j = i; j <= limit; j += i) {
          if (spf_[j] == 0) spf_[j] = i;
        }
        primes_.push_back(i);
      }
    }
  }

  long long limit() const { return static_cast<long long>(spf_.size()) - 1; }
  const std::vector<long long>& primes() const { return primes_; }

  bool is_prime(long long n) const { return n >= 2 && spf_at(n) == n; }

  // (prime, exponent) pairs, ascending primes.
  std::vector<std::pair<long long, int>> factor(long long n) const {
    if (n < 1) throw std::domain_error("factor: argument must be positive");
    std::vector<std::pair<long long, int>> out;
    while (n > 1) {
      long long p = spf_at(n);
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }

 private:
  long long spf_at(long long n) const {
    if (n < 2 || n >= static_cast<long long>(spf_.size()))
      throw std::out_of_range("FactorSieve: value beyond sieve limit");
    return spf_[static_cast<size_t>(n)];
  }

  std::vector<long long> spf_;
  std::vector<long long> primes_;
};

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

// Kronecker symbol (a/n) for n >= 1, completely multiplicative in n.
inline int kronecker(long long a, long long n) {
  if (n <= 0) throw std::domain_error("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    long long r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  a %= n;
  if (a < 0) a += n;
  // reciprocity loop on odd n
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Exact square root of a nonnegative rational, if one exists.
inline std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace qlat
