#include "charfield/reports.hpp"

#include <stdexcept>

namespace charfield {

namespace {

std::int64_t prime_power(std::int64_t p, int a) {
  std::int64_t out = 1;
  for (int i = 0; i < a; ++i) out *= p;
  return out;
}

bool cyclotomic_inside(std::int64_t k, const AbelianField& base, const AbelianField& field) {
  return is_subfield(cyclotomic_field(static_cast<int>(k)), compositum(base, field));
}

}  // namespace

bool sigma1_fixed(const ClassFunction& row) {
  for (const auto& v : row) {
    if (!(sigma_e(v, 1) == v)) return false;
  }
  return true;
}

CharacterFieldReport char_field_report(const CharacterTable& table, const BlockPartition& blocks, std::size_t row) {
  const auto& values = table.rows.at(row);
  AbelianField field = field_from_values(values);
  const auto [a, m] = conductor_parts(field, blocks.p);
  const bool containment = cyclotomic_inside(prime_power(blocks.p, a), cyclotomic_field(static_cast<int>(m)), field);
  return CharacterFieldReport{
      .group = table.name,
      .row = row,
      .degree = table.degree(row),
      .block = blocks.block_of.at(row),
      .height = blocks.height.at(row),
      .field = field,
      .conductor = field.conductor(),
      .a = a,
      .m = m,
      .theorem_containment = containment,
      .sigma1_fixed = sigma1_fixed(values),
      .p_rational = a == 0,
  };
}

GroupCheck verify_theorem_A(const CharacterTable& table, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("verify_theorem_A: p must be prime");
  GroupCheck check{.group = table.name, .p = p, .order = table.order, .reports = {}, .violations = 0};
  const BlockPartition blocks = block_partition(table, p);
  for (std::size_t row : height_zero_rows(blocks)) {
    check.reports.push_back(char_field_report(table, blocks, row));
    if (!check.reports.back().theorem_containment) ++check.violations;
  }
  return check;
}

bool odd_part_descent_holds(const CharacterFieldReport& report, std::int64_t group_order) {
  if (report.a < 2) return true;
  const std::int64_t odd_order = split_prime_part(group_order, 2).second;
  const std::int64_t two_a = prime_power(2, report.a);
  const bool wide = cyclotomic_inside(two_a, cyclotomic_field(static_cast<int>(2 * odd_order)), report.field);
  if (!wide) return true;
  return cyclotomic_inside(two_a, cyclotomic_field(static_cast<int>(2 * report.m)), report.field);
}

RealizerCertificate realize_field(const AbelianField& field, std::int64_t p, bool cross_check) {
  if (!is_prime(p)) throw std::invalid_argument("realize_field: p must be prime");
  if (!in_class_Fp(field, p)) {
    throw std::invalid_argument("realize_field: the field is not in the class F_" + std::to_string(p));
  }
  const int n = field.conductor();
  const auto gens = field.fixer().generators();
  const std::vector<std::int64_t> hgens(gens.begin(), gens.end());
  const CharacterTable table = metacyclic_table(n, hgens);
  const FiniteGroup& g = *table.group;

  // The normal cyclic subgroup: translations x -> x + c, with the faithful
  // linear character c -> zeta_n^c.
  std::vector<int> translations;
  std::vector<CycElt> lambda;
  for (int idx = 0; idx < static_cast<int>(g.order()); ++idx) {
    const auto [c, h] = affine_coordinates(g, idx, n);
    if (h != 1 % n) continue;
    translations.push_back(idx);
    lambda.push_back(CycElt::root_of_unity(n, c));
  }
  const ClassFunction induced = induce_linear(g, table.classes, translations, lambda);

  const auto locate = [&](const CharacterTable& t) {
    const auto mult = decompose(induced, t);
    std::size_t found = t.rows.size();
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] == 0) continue;
      if (mult[i] != 1 || found != t.rows.size()) {
        throw std::logic_error("realize_field: induced character is not irreducible");
      }
      found = i;
    }
    if (found == t.rows.size()) throw std::logic_error("realize_field: induced character is zero");
    return found;
  };

  RealizerCertificate cert{.field = field,
                           .p = p,
                           .n = n,
                           .h_elements = field.fixer().elements(),
                           .h_generators = gens,
                           .group_spec = g.name(),
                           .group_order = table.order};
  cert.row = locate(table);
  cert.degree = table.degree(cert.row);
  cert.verified_field = field_from_values(table.rows[cert.row]) == field;
  cert.verified_height_zero = block_partition(table, p).height[cert.row] == 0;

  if (cross_check) {
    const CharacterTable dixon = dixon_table(g);
    cert.dixon_row = locate(dixon);
    const auto& row = dixon.rows[cert.dixon_row];
    cert.cross_checked = row == table.rows[cert.row] && field_from_values(row) == field &&
                         block_partition(dixon, p).height[cert.dixon_row] == 0;
  }
  return cert;
}

std::vector<CorollaryCRow> corollary_c_sweep(std::int64_t dmax) {
  if (dmax < 2) throw std::invalid_argument("corollary_c_sweep: dmax must be at least 2");
  std::vector<CorollaryCRow> out;
  for (std::int64_t d = -dmax; d <= dmax; ++d) {
    if (d == 0 || d == 1) continue;
    if (!is_squarefree(d < 0 ? -d : d)) continue;
    out.push_back({d, in_class_Fp(quadratic_field(d), 2), d % 2 != 0});
  }
  return out;
}

std::vector<SigmaRow> sigma_check(const CharacterTable& table) {
  const BlockPartition blocks = block_partition(table, 2);
  std::vector<SigmaRow> out;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    const AbelianField field = field_from_values(table.rows[row]);
    out.push_back({row, table.degree(row), blocks.height[row], sigma1_fixed(table.rows[row]),
                   conductor_parts(field, 2).first == 0});
  }
  return out;
}

}  // namespace charfield
