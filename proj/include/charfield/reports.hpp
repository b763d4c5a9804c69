#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charfield/blocks.hpp"
#include "charfield/chartab.hpp"
#include "charfield/fields.hpp"

namespace charfield {

/// Field-of-values data for one row of a table at a prime p.
struct CharacterFieldReport {
  std::string group;
  std::size_t row;
  std::int64_t degree;
  int block;
  int height;
  AbelianField field;
  int conductor;
  int a;           // conductor = p^a m
  std::int64_t m;  // p'-part of the conductor
  bool theorem_containment;  // Q_{p^a} inside <Q_m, Q(chi)>
  bool sigma1_fixed;
  bool p_rational;  // a == 0
};

CharacterFieldReport char_field_report(const CharacterTable& table, const BlockPartition& blocks, std::size_t row);

/// Reports for the height-zero rows of one table.
struct GroupCheck {
  std::string group;
  std::int64_t p;
  std::int64_t order;
  std::vector<CharacterFieldReport> reports;
  std::size_t violations = 0;
};

GroupCheck verify_theorem_A(const CharacterTable& table, std::int64_t p);

/// True when the containment Q_{2^a} <= <Q_{2m}, Q(chi)> holds whenever
/// Q_{2^a} <= <Q_{2n'}, Q(chi)> with n' the odd part of |G| (only rows with a >= 2
/// constrain anything).
bool odd_part_descent_holds(const CharacterFieldReport& report, std::int64_t group_order);

/// Witness that F is the field of values of a height-zero character of C_n ⋊ Gal(Q_n/F).
struct RealizerCertificate {
  AbelianField field;
  std::int64_t p;
  int n;
  std::vector<int> h_elements;
  std::vector<int> h_generators;
  std::string group_spec;
  std::int64_t group_order = 0;
  std::size_t row = 0;
  std::int64_t degree = 0;
  bool verified_field = false;
  bool verified_height_zero = false;
  /// Recomputed from a Dixon-Schneider table of the same group.
  bool cross_checked = false;
  std::size_t dixon_row = 0;

  bool valid() const { return verified_field && verified_height_zero; }
};

/// Builds C_n ⋊ Gal(Q_n/F), induces a faithful linear character of C_n and
/// verifies field and height. Throws std::invalid_argument when F is not in
/// the class F_p. With `cross_check` the row is located again in an
/// independently computed Dixon-Schneider table.
RealizerCertificate realize_field(const AbelianField& field, std::int64_t p, bool cross_check = true);

struct CorollaryCRow {
  std::int64_t d;
  bool in_F2;
  bool expected;  // d odd
};

/// Every squarefree d with |d| <= dmax and d not in {0, 1}, ascending.
std::vector<CorollaryCRow> corollary_c_sweep(std::int64_t dmax);

struct SigmaRow {
  std::size_t row;
  std::int64_t degree;
  int height;
  bool sigma1_fixed;
  bool two_rational;
  bool height_zero() const { return height == 0; }
  /// Height-zero rows must have sigma1_fixed == two_rational.
  bool exception() const { return height == 0 && sigma1_fixed != two_rational; }
};

std::vector<SigmaRow> sigma_check(const CharacterTable& table);

/// True when sigma_e with e = 1 fixes every value of the row.
bool sigma1_fixed(const ClassFunction& row);

}  // namespace charfield
