#include "charfield/blocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace charfield {

namespace {

ExtensionField make_field(std::int64_t p, int e) {
  const auto [b, e_prime] = split_prime_part(e, p);
  (void)b;
  const int f = e_prime == 1 ? 1 : static_cast<int>(multiplicative_order(p % e_prime, e_prime));
  return ExtensionField(static_cast<std::uint32_t>(p), f);
}

}  // namespace

IdealReduction::IdealReduction(std::int64_t p, int e, std::uint64_t root_power)
    : p_(p), e_(e), field_(make_field(p, e)) {
  if (!is_prime(p)) throw std::invalid_argument("IdealReduction: p must be prime");
  const auto [b, e_prime] = split_prime_part(e, p);
  b_ = b;
  e_prime_ = static_cast<int>(e_prime);
  if (gcd(static_cast<std::int64_t>(root_power % static_cast<std::uint64_t>(e_prime_)), e_prime_) != 1 && e_prime_ > 1) {
    throw std::invalid_argument("IdealReduction: root power must be coprime to " + std::to_string(e_prime_));
  }
  std::int64_t pb = 1;
  for (int i = 0; i < b_; ++i) pb *= p;
  shift_ = inverse_mod(pb % e_prime_, e_prime_);
  const auto u = field_.pow(field_.root_of_unity(static_cast<std::uint64_t>(e_prime_)),
                            mpz_class(static_cast<unsigned long>(root_power)));
  powers_.push_back(field_.one());
  for (int k = 1; k < e_prime_; ++k) powers_.push_back(field_.mul(powers_.back(), u));
}

ExtensionField::Element IdealReduction::reduce(const CycElt& x) const {
  const CycElt y = x.modulus() == e_ ? x : embed(x, e_);
  auto out = field_.zero();
  for (const auto& [exp, c] : y.terms()) {
    if (c.get_den() != 1) throw std::domain_error("IdealReduction: value is not an algebraic integer");
    const mpz_class r = c.get_num() % mpz_class(static_cast<long>(p_));
    long residue = r.get_si();
    if (residue < 0) residue += p_;
    if (residue == 0) continue;
    const std::int64_t k = static_cast<std::int64_t>(exp) % e_prime_ * shift_ % e_prime_;
    out = field_.add(out, field_.scale(powers_[k], static_cast<std::uint32_t>(residue)));
  }
  return out;
}

std::vector<CycElt> central_character(const CharacterTable& table, std::size_t row) {
  const auto& values = table.rows.at(row);
  const std::int64_t degree = table.degree(row);
  std::vector<CycElt> omega;
  for (std::size_t k = 0; k < values.size(); ++k) {
    CycElt w = values[k] * ratio(table.classes.sizes[k], degree);
    if (!is_integral(w)) {
      throw std::domain_error("central character of row " + std::to_string(row) + " is not integral at class " +
                              std::to_string(k));
    }
    omega.push_back(std::move(w));
  }
  return omega;
}

std::vector<std::vector<std::size_t>> BlockPartition::members() const {
  std::vector<std::vector<std::size_t>> out(defect.size());
  for (std::size_t i = 0; i < block_of.size(); ++i) out[block_of[i]].push_back(i);
  return out;
}

BlockPartition block_partition(const CharacterTable& table, std::int64_t p, std::uint64_t root_power) {
  if (!is_prime(p)) throw std::invalid_argument("block_partition: p must be prime");
  const IdealReduction reduction(p, table.exponent(), root_power);
  BlockPartition bp;
  bp.p = p;
  std::map<std::vector<ExtensionField::Element>, int> ids;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    std::vector<ExtensionField::Element> key;
    for (const auto& w : central_character(table, row)) key.push_back(reduction.reduce(w));
    auto [it, inserted] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
    bp.block_of.push_back(it->second);
  }
  const int blocks = static_cast<int>(ids.size());
  const int order_val = valuation(table.order, p);
  std::vector<int> min_val(blocks, order_val);
  std::vector<int> deg_val;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    deg_val.push_back(valuation(table.degree(row), p));
    min_val[bp.block_of[row]] = std::min(min_val[bp.block_of[row]], deg_val.back());
  }
  for (int b = 0; b < blocks; ++b) bp.defect.push_back(order_val - min_val[b]);
  for (std::size_t row = 0; row < table.rows.size(); ++row) bp.height.push_back(deg_val[row] - min_val[bp.block_of[row]]);
  bp.principal_block = bp.block_of.empty() ? 0 : bp.block_of[0];
  return bp;
}

std::vector<std::size_t> height_zero_rows(const BlockPartition& blocks) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.height.size(); ++i) {
    if (blocks.height[i] == 0) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> height_zero_rows(const CharacterTable& table, std::int64_t p) {
  return height_zero_rows(block_partition(table, p));
}

}  // namespace charfield
