#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "charfield/cyclotomic.hpp"
#include "charfield/groups.hpp"

namespace charfield {

/// Values of a class function, one per conjugacy class.
using ClassFunction = std::vector<CycElt>;

/// The irreducible complex characters of a finite group. Row 0 is the trivial
/// character; every value lives at modulus `classes.exponent`.
struct CharacterTable {
  std::string name;
  std::int64_t order = 1;
  std::shared_ptr<const FiniteGroup> group;  // null for ingested tables
  ClassData classes;
  std::vector<ClassFunction> rows;

  int exponent() const { return classes.exponent; }
  std::int64_t degree(std::size_t row) const;
  std::vector<std::int64_t> degrees() const;
};

/// Class-algebra structure constants: a(i, j, k) counts pairs (x, y) in
/// K_i x K_j with x y equal to the fixed representative of K_k. With this
/// convention sum_k a(i, j, k) |K_k| = |K_i| |K_j|.
class ClassConstants {
 public:
  explicit ClassConstants(std::size_t classes) : r_(classes), data_(classes * classes * classes, 0) {}
  std::size_t classes() const { return r_; }
  std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * r_ + j) * r_ + k]; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * r_ + j) * r_ + k]; }

 private:
  std::size_t r_;
  std::vector<std::int64_t> data_;
};

ClassConstants class_constants(const FiniteGroup& g, const ClassData& classes);

/// Smallest prime q = 1 mod exponent with q > 2 * ceil(sqrt(order)).
std::int64_t dixon_prime(std::int64_t order, int exponent);

/// Character table by the Dixon-Schneider method: common eigenvectors of the
/// class matrices over F_q, then a discrete Fourier lift of each value to Q_e.
/// Rows are sorted by degree and then by canonical value encoding, with the
/// trivial character first.
CharacterTable dixon_table(const FiniteGroup& g);

/// Character table of C_n ⋊ <hgens> by Clifford theory: one row per H-orbit
/// on Irr(C_n) and irreducible character of the orbit's stabilizer, induced
/// from the extension to C_n ⋊ H_j. Rows follow orbit order (smallest
/// representative first), then the stabilizer's character order.
CharacterTable metacyclic_table(int n, std::span<const std::int64_t> hgens);

/// Induced class function from a subgroup (sorted element indices) with a
/// function on it given element-wise, aligned with `subgroup`.
ClassFunction induce(const FiniteGroup& g, const ClassData& classes, std::span<const int> subgroup,
                     std::span<const CycElt> values);

/// A linear character of a subgroup induced up; alias of induce() kept for
/// callers that want the homomorphism precondition checked.
ClassFunction induce_linear(const FiniteGroup& g, const ClassData& classes, std::span<const int> subgroup,
                            std::span<const CycElt> values);

/// Restriction of an ambient class function to a subgroup, on the subgroup's classes.
ClassFunction restrict_to(const ClassFunction& f, const ClassData& ambient_classes, const Subgroup& sub,
                          const ClassData& sub_classes);

/// (1/|G|) sum_g f1(g) conj(f2(g)).
CycElt inner_product(const ClassFunction& f1, const ClassFunction& f2, const ClassData& classes);

/// Multiplicities of each irreducible in f. Throws std::domain_error when f
/// is not a character of the table's group.
std::vector<std::int64_t> decompose(const ClassFunction& f, const CharacterTable& table);

/// Exact check of both orthogonality relations.
bool check_orthogonality(const CharacterTable& table);

/// Structural checks on an ingested table; throws std::invalid_argument with
/// the first failed condition.
void validate_table(const CharacterTable& table);

/// Canonical row comparison used for sorting and set comparison.
bool row_less(const ClassFunction& a, const ClassFunction& b);

/// True when both tables have the same rows up to ordering.
bool same_row_set(const CharacterTable& a, const CharacterTable& b);

}  // namespace charfield
