#include "charfield/numtheory.hpp"

#include <stdexcept>

namespace charfield {

Rational ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      r = Rational(BigInt(text, 10));
    } else {
      BigInt num(text.substr(0, slash), 10);
      BigInt den(text.substr(slash + 1), 10);
      if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
      r = Rational(num, den);
      r.canonicalize();
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  __int128 result = 1;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("not invertible modulo " + std::to_string(m));
  return mod(old_s, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::pair<int, std::int64_t> split_prime_part(std::int64_t n, std::int64_t p) {
  int a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return {a, n};
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (gcd(a, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  if (m == 1) return 1;
  std::int64_t order = euler_phi(m);
  for (const auto& pp : factorize(order)) {
    while (order % pp.prime == 0 && pow_mod(a, order / pp.prime, m) == 1) order /= pp.prime;
  }
  return order;
}

std::int64_t primitive_root(std::int64_t q) {
  if (q == 2) return 1;
  const auto factors = factorize(q - 1);
  for (std::int64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (const auto& pp : factors) {
      if (pow_mod(g, (q - 1) / pp.prime, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::domain_error("no primitive root modulo " + std::to_string(q));
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& pp : factorize(n < 0 ? -n : n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

std::int64_t crt(std::int64_t r1, std::int64_t m1, std::int64_t r2, std::int64_t m2) {
  const std::int64_t m = m1 * m2;
  if (m == 1) return 0;
  const std::int64_t t = mod((r2 - r1) % m2 * inverse_mod(m1, m2), m2);
  return mod(r1 + m1 * t, m);
}

}  // namespace charfield
