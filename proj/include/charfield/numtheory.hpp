#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace charfield {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonicalizes after every operation we perform).
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
Rational ratio(std::int64_t num, std::int64_t den);

/// Formats as "num/den"; the denominator is always written.
std::string to_string(const Rational& r);

/// Accepts "num/den" or "num". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t value;  // prime^exponent
};

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Nonnegative residue of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

/// Factorization in increasing prime order; factorize(1) is empty.
std::vector<PrimePower> factorize(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Exponent of the largest power of p dividing n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

/// Splits n = p^a * m with p not dividing m; returns (a, m).
std::pair<int, std::int64_t> split_prime_part(std::int64_t n, std::int64_t p);

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// Smallest primitive root modulo the prime q.
std::int64_t primitive_root(std::int64_t q);

bool is_squarefree(std::int64_t n);

/// Solves x = r1 mod m1, x = r2 mod m2 for coprime moduli; result in [0, m1*m2).
std::int64_t crt(std::int64_t r1, std::int64_t m1, std::int64_t r2, std::int64_t m2);

}  // namespace charfield
