#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "charfield/cyclotomic.hpp"

namespace charfield {

/// A subgroup of (Z/n)^*, stored as its full sorted element set.
class ResidueSubgroup {
 public:
  /// Validates closure under multiplication, presence of 1 and coprimality.
  ResidueSubgroup(int n, std::vector<int> elements);

  /// The subgroup generated by gens (each coprime to n).
  static ResidueSubgroup generated(int n, std::span<const std::int64_t> gens);
  static ResidueSubgroup trivial(int n);
  static ResidueSubgroup units(int n);
  /// Kernel of the reduction (Z/n)^* -> (Z/m)^*, m dividing n.
  static ResidueSubgroup kernel_to(int n, int m);

  int modulus() const { return n_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::int64_t k) const;
  bool is_subset_of(const ResidueSubgroup& other) const;

  /// Image under reduction to modulus m (m dividing n).
  ResidueSubgroup image(int m) const;
  /// Full preimage in (Z/N)^* (n dividing N).
  ResidueSubgroup preimage(int N) const;

  /// Small deterministic generating set: greedy over the sorted elements.
  std::vector<int> generators() const;

  friend bool operator==(const ResidueSubgroup&, const ResidueSubgroup&) = default;

 private:
  int n_;
  std::vector<int> elements_;
};

ResidueSubgroup intersect(const ResidueSubgroup& a, const ResidueSubgroup& b);

/// All subgroups of (Z/n)^*, sorted by size then elements.
std::vector<ResidueSubgroup> all_subgroups(int n);

/// An abelian number field, realized as the fixed field in Q_n of a subgroup
/// of (Z/n)^* = Gal(Q_n/Q). Always conductor-normalized: n is the conductor.
class AbelianField {
 public:
  /// Fixed field of `fixer` inside Q_{fixer.modulus()}, normalized.
  static AbelianField fixed_field(const ResidueSubgroup& fixer);

  int conductor() const { return fixer_.modulus(); }
  const ResidueSubgroup& fixer() const { return fixer_; }
  std::int64_t degree() const;

  friend bool operator==(const AbelianField&, const AbelianField&) = default;

 private:
  explicit AbelianField(ResidueSubgroup fixer) : fixer_(std::move(fixer)) {}
  ResidueSubgroup fixer_;
};

/// Q_n (normalized, so Q_{2m} with m odd comes back as Q_m).
AbelianField cyclotomic_field(int n);

/// The field generated by the given values (the field of values when the
/// values are a character's row).
AbelianField field_from_values(std::span<const CycElt> values);

/// The smallest field containing both.
AbelianField compositum(const AbelianField& a, const AbelianField& b);

/// The largest field contained in both.
AbelianField intersection(const AbelianField& a, const AbelianField& b);

inline std::int64_t degree(const AbelianField& f) { return f.degree(); }

/// True when `sub` is contained in `super`.
bool is_subfield(const AbelianField& sub, const AbelianField& super);

/// Q(sqrt d) for squarefree d not in {0, 1}; throws std::invalid_argument otherwise.
AbelianField quadratic_field(std::int64_t d);

/// sqrt(d) as a cyclotomic element, built from quadratic Gauss sums and
/// checked by squaring.
CycElt sqrt_of_integer(std::int64_t d);

/// Conductor split as p^a * m with p not dividing m; returns (a, m).
std::pair<int, std::int64_t> conductor_parts(const AbelianField& f, std::int64_t p);

/// Membership in F_p: with conductor n = p^a m, p does not divide
/// [Q_n : <Q_m, F>].
bool in_class_Fp(const AbelianField& f, std::int64_t p);

/// The narrower condition: p does not divide [Q_{p^a} : Q_{p^a} ∩ F].
bool in_local_subclass(const AbelianField& f, std::int64_t p);

/// A spanning set of the fixed field (Gauss periods of the basis under the fixer).
std::vector<CycElt> fixed_field_generators(const AbelianField& f);

}  // namespace charfield
