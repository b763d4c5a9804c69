#pragma once

#include <cstdint>
#include <vector>

#include "charfield/chartab.hpp"
#include "charfield/modular.hpp"

namespace charfield {

/// Ring homomorphism from the cyclotomic integers of Q_e onto a subring of
/// GF(p^f): with e = p^b e', zeta_{p^b} goes to 1 and zeta_{e'} to a fixed
/// primitive e'-th root u. Its kernel is a maximal ideal above p.
class IdealReduction {
 public:
  /// `root_power` selects u = u0^root_power for the canonical root u0; it must
  /// be coprime to e'. Different choices give different ideals above p.
  IdealReduction(std::int64_t p, int e, std::uint64_t root_power = 1);

  std::int64_t prime() const { return p_; }
  int exponent() const { return e_; }
  int p_part_exponent() const { return b_; }
  int prime_to_p_part() const { return e_prime_; }
  const ExtensionField& field() const { return field_; }

  /// Image of x (embedded at modulus e); throws std::domain_error when a
  /// coefficient is not an integer.
  ExtensionField::Element reduce(const CycElt& x) const;

 private:
  std::int64_t p_;
  int e_;
  int b_;
  int e_prime_;
  std::int64_t shift_;  // (p^b)^{-1} mod e'
  ExtensionField field_;
  std::vector<ExtensionField::Element> powers_;  // u^k for k < e'
};

/// omega_chi(K_j) = |K_j| chi(g_j) / chi(1) for every class. Throws
/// std::domain_error when a value is not an algebraic integer.
std::vector<CycElt> central_character(const CharacterTable& table, std::size_t row);

struct BlockPartition {
  std::int64_t p = 2;
  std::vector<int> block_of;  // per row; ids in order of first appearance
  std::vector<int> defect;    // per block
  std::vector<int> height;    // per row
  int principal_block = 0;

  int block_count() const { return static_cast<int>(defect.size()); }
  std::vector<std::vector<std::size_t>> members() const;
};

BlockPartition block_partition(const CharacterTable& table, std::int64_t p, std::uint64_t root_power = 1);

std::vector<std::size_t> height_zero_rows(const BlockPartition& blocks);
std::vector<std::size_t> height_zero_rows(const CharacterTable& table, std::int64_t p);

}  // namespace charfield
