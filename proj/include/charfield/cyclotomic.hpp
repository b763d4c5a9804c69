#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "charfield/numtheory.hpp"

namespace charfield {

/// An element of the cyclotomic field Q_n, stored in the Zumbroich basis.
///
/// Each term is a pair (exponent, coefficient) meaning coefficient * zeta_n^exponent,
/// where every exponent belongs to the Zumbroich basis of Q_n and no
/// coefficient is zero. Terms are kept sorted by exponent, so two elements at
/// the same modulus are equal exactly when their term lists are equal.
///
/// Binary arithmetic embeds both operands into Q_lcm first. Results are never
/// descended automatically; use conductor_of_element() or at_modulus() for that.
class CycElt {
 public:
  using Term = std::pair<int, Rational>;

  /// Zero at modulus 1.
  CycElt() = default;

  /// The rational r as an element of Q_n.
  explicit CycElt(const Rational& r, int n = 1);
  explicit CycElt(long r, int n = 1) : CycElt(Rational(r), n) {}

  /// zeta_n^j, j reduced modulo n.
  static CycElt root_of_unity(int n, std::int64_t j);

  /// Sum of coeffs[i] * zeta_n^i over all i in [0, n); reduces to canonical form.
  static CycElt from_powers(int n, const std::vector<Rational>& coeffs);

  /// Builds from already-canonical terms. Throws std::invalid_argument if an
  /// exponent is outside the Zumbroich basis, repeated, or has a zero coefficient.
  static CycElt from_terms(int n, std::vector<Term> terms);

  int modulus() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of basis element zeta_n^exponent (zero when absent).
  Rational coefficient(int exponent) const;

  CycElt& operator+=(const CycElt& other);
  CycElt& operator-=(const CycElt& other);
  CycElt& operator*=(const CycElt& other);
  CycElt& operator*=(const Rational& scalar);

  friend CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
  friend CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
  friend CycElt operator*(const CycElt& a, const CycElt& b);
  friend CycElt operator*(CycElt a, const Rational& s) { return a *= s; }
  friend CycElt operator*(const Rational& s, CycElt a) { return a *= s; }
  CycElt operator-() const;

  /// Mathematical equality (operands at different moduli are compared in Q_lcm).
  friend bool operator==(const CycElt& a, const CycElt& b);

  /// Total order used for deterministic sorting: modulus, then term lists.
  /// Only meaningful between elements at the same modulus.
  friend std::strong_ordering compare_canonical(const CycElt& a, const CycElt& b);

 private:
  friend class CycAccumulator;
  static std::optional<CycElt> multiply_small_integral(const CycElt& a, const CycElt& b);
  int n_ = 1;
  std::vector<Term> terms_;
};

/// sum_k w_k a_k conj(b_k) computed exactly at modulus n.
CycElt hermitian_sum(std::span<const CycElt> a, std::span<const CycElt> b, std::span<const std::int64_t> w, int n);

/// Accumulator over the powers of zeta_n used to build canonical forms.
/// Coefficients are stored only for the exponents actually touched.
class CycAccumulator {
 public:
  explicit CycAccumulator(int n);
  void add(std::int64_t exponent, const Rational& coeff);
  /// Reduces to the Zumbroich basis and resets the accumulator.
  CycElt finish();

 private:
  int n_;
  std::vector<int> slot_;         // exponent -> index into touched_/coeffs_, or -1
  std::vector<int> touched_;
  std::vector<Rational> coeffs_;  // parallel to touched_
};

/// True when zeta_n^exponent is a Zumbroich basis element of Q_n.
bool is_basis_exponent(int n, int exponent);

/// Zumbroich basis exponents of Q_n in increasing order; size is phi(n).
std::vector<int> zumbroich_basis(int n);

/// Image of x under zeta -> zeta^k. Throws std::domain_error if gcd(k, n) != 1.
CycElt galois(const CycElt& x, std::int64_t k);

/// Complex conjugate, galois(x, -1).
CycElt conjugate(const CycElt& x);

/// The residue k modulo n with k = 1 mod the odd part of n and
/// k = 1 + 2^e mod the 2-part of n.
std::int64_t sigma_exponent(std::int64_t n, int e);

/// Fixes odd-order roots of unity and raises 2-power roots to the (1 + 2^e)-th power.
CycElt sigma_e(const CycElt& x, int e);

/// x viewed in Q_N (N must be a multiple of x.modulus()).
CycElt embed(const CycElt& x, int N);

/// x rewritten at modulus m. Throws std::domain_error if x is not in Q_m.
CycElt at_modulus(const CycElt& x, int m);

/// Smallest m dividing modulus(x) with x in Q_m, and x rewritten at modulus m.
std::pair<int, CycElt> conductor_of_element(const CycElt& x);

bool is_rational(const CycElt& x);

/// Throws std::domain_error when x is not rational.
Rational to_rational(const CycElt& x);

/// True when every Zumbroich coefficient is an integer, i.e. x is an algebraic integer.
bool is_integral(const CycElt& x);

}  // namespace charfield
