#include "charfield/modular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "charfield/numtheory.hpp"

namespace charfield {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t result = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t q) {
  return static_cast<std::uint64_t>(inverse_mod(static_cast<std::int64_t>(a % q), static_cast<std::int64_t>(q)));
}

std::vector<std::size_t> row_reduce(ModMatrix& m) {
  const std::uint64_t q = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const std::uint64_t inv = invmod(m(row, col), q);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = mulmod(m(row, c), inv, q);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const std::uint64_t factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) = (m(r, c) + q - mulmod(factor, m(row, c), q)) % q;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<ModVector> nullspace(const ModMatrix& m) {
  ModMatrix r = m;
  const auto pivots = row_reduce(r);
  const std::uint64_t q = m.modulus();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ModVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (q - r(i, free)) % q;
    basis.push_back(std::move(v));
  }
  return basis;
}

ModVector characteristic_polynomial(const ModMatrix& m) {
  const std::size_t n = m.rows();
  const std::uint64_t q = m.modulus();
  if (m.cols() != n) throw std::invalid_argument("characteristic_polynomial: matrix is not square");
  ModMatrix h = m;
  // Reduce to upper Hessenberg form by similarity transformations.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && h(i, k - 1) == 0) ++i;
    if (i == n) continue;
    if (i != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, k));
    }
    const std::uint64_t inv = invmod(h(k, k - 1), q);
    for (std::size_t r = k + 1; r < n; ++r) {
      const std::uint64_t u = mulmod(h(r, k - 1), inv, q);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) = (h(r, c) + q - mulmod(u, h(k, c), q)) % q;
      for (std::size_t c = 0; c < n; ++c) h(c, k) = (h(c, k) + mulmod(u, h(c, r), q)) % q;
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_{i,m} (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<ModVector> p(n + 1);
  p[0] = {1 % q};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    ModVector cur(mm + 1, 0);
    const std::uint64_t diag = h(mm - 1, mm - 1);
    for (std::size_t d = 0; d < p[mm - 1].size(); ++d) {
      cur[d + 1] = (cur[d + 1] + p[mm - 1][d]) % q;
      cur[d] = (cur[d] + q - mulmod(diag, p[mm - 1][d], q)) % q;
    }
    std::uint64_t t = 1 % q;
    for (std::size_t i = mm - 1; i >= 1; --i) {
      t = mulmod(t, h(i, i - 1), q);
      const std::uint64_t coeff = mulmod(h(i - 1, mm - 1), t, q);
      if (coeff != 0) {
        for (std::size_t d = 0; d < p[i - 1].size(); ++d) {
          cur[d] = (cur[d] + q - mulmod(coeff, p[i - 1][d], q)) % q;
        }
      }
    }
    p[mm] = std::move(cur);
  }
  return p[n];
}

std::vector<std::uint64_t> roots_by_scan(const ModVector& poly, std::uint64_t q) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (mulmod(acc, x, q) + *it) % q;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (coefficients lowest degree first)

namespace {

using Poly = ModVector;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& g, std::uint64_t p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = invmod(g.back(), p);
  while (a.size() >= g.size()) {
    const std::uint64_t factor = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) a[shift + i] = (a[shift + i] + p - mulmod(factor, g[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(prod), g, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& g, std::uint64_t p) {
  Poly result = poly_mod({1}, g, p);
  base = poly_mod(std::move(base), g, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, g, p);
    base = poly_mulmod(base, base, g, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& g, std::uint64_t p) {
  const std::size_t f = g.size() - 1;
  Poly h = poly_mod({0, 1}, g, p);  // x
  for (std::size_t i = 1; i <= f / 2; ++i) {
    h = poly_powmod(h, p, g, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    const Poly common = poly_gcd(g, diff, p);
    if (common.size() != 1) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtensionField

ExtensionField::ExtensionField(std::uint32_t p, int f) : p_(p), f_(f) {
  if (!is_prime(p)) throw std::invalid_argument("ExtensionField: characteristic must be prime");
  if (f < 1) throw std::invalid_argument("ExtensionField: degree must be positive");
  for (std::uint64_t counter = 0;; ++counter) {
    Poly g(f + 1, 0);
    g[f] = 1;
    std::uint64_t c = counter;
    bool overflow = false;
    for (int i = 0; i < f; ++i) {
      g[i] = c % p;
      c /= p;
    }
    if (c != 0) overflow = true;
    if (overflow) throw std::logic_error("ExtensionField: no irreducible polynomial found");
    if (f > 1 && g[0] == 0) continue;
    if (is_irreducible(g, p)) {
      modulus_ = std::move(g);
      break;
    }
  }
}

ExtensionField::Element ExtensionField::one() const { return from_integer(1); }

ExtensionField::Element ExtensionField::from_integer(std::int64_t k) const {
  Element e = zero();
  e[0] = static_cast<std::uint32_t>(mod(k, p_));
  return e;
}

ExtensionField::Element ExtensionField::from_index(std::uint64_t index) const {
  Element e = zero();
  for (int i = 0; i < f_ && index > 0; ++i) {
    e[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const {
  Element out(f_);
  for (int i = 0; i < f_; ++i) out[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[i]) + b[i]) % p_);
  return out;
}

ExtensionField::Element ExtensionField::scale(const Element& a, std::uint32_t k) const {
  Element out(f_);
  for (int i = 0; i < f_; ++i) out[i] = static_cast<std::uint32_t>(mulmod(a[i], k % p_, p_));
  return out;
}

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const {
  Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  trim(pa);
  trim(pb);
  const Poly prod = poly_mulmod(pa, pb, modulus_, p_);
  Element out = zero();
  for (std::size_t i = 0; i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

ExtensionField::Element ExtensionField::pow(const Element& a, const mpz_class& e) const {
  if (e < 0) throw std::invalid_argument("ExtensionField::pow: negative exponent");
  Element result = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

mpz_class ExtensionField::multiplicative_group_order() const {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), p_, static_cast<unsigned long>(f_));
  return n - 1;
}

ExtensionField::Element ExtensionField::root_of_unity(std::uint64_t order) const {
  const mpz_class group_order = multiplicative_group_order();
  if (order == 0 || group_order % mpz_class(std::to_string(order)) != 0) {
    throw std::invalid_argument("ExtensionField::root_of_unity: order does not divide p^f - 1");
  }
  const mpz_class cofactor = group_order / mpz_class(std::to_string(order));
  const auto primes = factorize(static_cast<std::int64_t>(order));
  const Element unit = one();
  for (std::uint64_t idx = 1;; ++idx) {
    const Element w = pow(from_index(idx), cofactor);
    if (w == zero()) continue;
    bool exact = true;
    for (const auto& pp : primes) {
      if (pow(w, mpz_class(std::to_string(order / pp.prime))) == unit) {
        exact = false;
        break;
      }
    }
    if (exact) return w;
  }
}

}  // namespace charfield
