#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace charfield {

/// Dense matrix over the prime field F_q, entries kept in [0, q).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t q) : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return q_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t q_ = 2;
  std::vector<std::uint64_t> data_;
};

using ModVector = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q);
std::uint64_t invmod(std::uint64_t a, std::uint64_t q);

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(ModMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<ModVector> nullspace(const ModMatrix& m);

/// Characteristic polynomial det(x I - m), coefficients from x^0 upwards (monic).
ModVector characteristic_polynomial(const ModMatrix& m);

/// All roots of a polynomial in F_q by exhaustive evaluation (q small).
std::vector<std::uint64_t> roots_by_scan(const ModVector& poly, std::uint64_t q);

/// The finite field F_{p^f} = F_p[x]/(g) for the first monic irreducible g of
/// degree f in lexicographic coefficient order. Elements are coefficient
/// vectors of length f, lowest degree first.
class ExtensionField {
 public:
  using Element = std::vector<std::uint32_t>;

  ExtensionField(std::uint32_t p, int f);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return f_; }
  const ModVector& defining_polynomial() const { return modulus_; }

  Element zero() const { return Element(f_, 0); }
  Element one() const;
  Element from_integer(std::int64_t k) const;
  /// The element whose coefficient vector is the base-p digits of `index`.
  Element from_index(std::uint64_t index) const;

  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, std::uint32_t k) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, const mpz_class& e) const;

  /// First element (by from_index order) whose (p^f-1)/order-th power has
  /// multiplicative order exactly `order`; returns that power. `order` must divide p^f - 1.
  Element root_of_unity(std::uint64_t order) const;

  mpz_class multiplicative_group_order() const;

 private:
  std::uint32_t p_;
  int f_;
  ModVector modulus_;  // monic, length f + 1
};

}  // namespace charfield
