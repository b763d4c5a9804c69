#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "charfield/blocks.hpp"
#include "charfield/specs.hpp"

using namespace charfield;

namespace {

// Block relation without finite fields: chi ~ psi exactly when every
// (omega_chi - omega_psi) / pi is an algebraic integer, where pi generates the
// prime above p in the ring of integers of the value field. pi = p when the
// values are rational or p is inert (2 in Q(sqrt 5), 2 in Q(zeta_3)); for
// p = 3 over Q(zeta_3) it is 1 - zeta_3.
std::vector<int> congruence_oracle(const CharacterTable& t, std::int64_t p, const CycElt& inv_pi) {
  std::vector<std::vector<CycElt>> omega;
  for (std::size_t i = 0; i < t.rows.size(); ++i) omega.push_back(central_character(t, i));
  std::vector<int> block(t.rows.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (block[i] >= 0) continue;
    block[i] = next;
    for (std::size_t j = i + 1; j < t.rows.size(); ++j) {
      bool same = true;
      for (std::size_t k = 0; k < t.classes.count() && same; ++k) {
        same = is_integral((omega[i][k] - omega[j][k]) * inv_pi);
      }
      if (same) block[j] = next;
    }
    ++next;
  }
  return block;
}

std::vector<int> congruence_oracle(const CharacterTable& t, std::int64_t p) {
  return congruence_oracle(t, p, CycElt(Rational(1, p)));
}

const std::vector<std::string> kBlockSpecs = {"cyclic:12",  "dihedral:12", "dihedral:20", "semidihedral:16",
                                              "quaternion:24", "sym:3",    "sym:4",       "sym:5",
                                              "alt:4",      "alt:5",       "sl2:3",       "sl2:5",
                                              "meta:12:11", "meta:20:3",   "meta:21:2",   "meta:39:4"};

}  // namespace

TEST(CentralCharacter, Examples) {
  const CharacterTable t = dixon_table(symmetric(3));
  const auto trivial = central_character(t, 0);
  for (std::size_t k = 0; k < trivial.size(); ++k) EXPECT_EQ(trivial[k], CycElt(Rational(t.classes.sizes[k])));
  std::size_t row2 = 0;
  while (t.degree(row2) != 2) ++row2;
  const auto omega = central_character(t, row2);
  for (std::size_t k = 0; k < omega.size(); ++k) {
    if (t.classes.orders[k] == 3) EXPECT_EQ(omega[k], CycElt(-1));
    if (t.classes.orders[k] == 2) EXPECT_EQ(omega[k], CycElt(0));
  }
}

TEST(CentralCharacter, RejectsNonIntegralValues) {
  CharacterTable t = dixon_table(symmetric(3));
  t.rows[2][1] = CycElt(Rational(1, 3), 6);
  EXPECT_THROW(central_character(t, 2), std::domain_error);
}

TEST(Blocks, OracleAgreesOnRationalAndGoldenRatioTables) {
  for (const char* spec : {"sym:3", "sym:4", "sym:5"}) {
    const CharacterTable t = dixon_table(parse_group(spec));
    for (std::int64_t p : {2, 3, 5}) EXPECT_EQ(block_partition(t, p).block_of, congruence_oracle(t, p)) << spec << " " << p;
  }
  const CharacterTable a4 = dixon_table(alternating(4));
  EXPECT_EQ(block_partition(a4, 2).block_of, congruence_oracle(a4, 2));
  // (1 - zeta_3)(1 - zeta_3^2) = 3
  const CycElt inv_pi3 = (CycElt(1) - CycElt::root_of_unity(3, 2)) * Rational(1, 3);
  EXPECT_EQ((CycElt(1) - CycElt::root_of_unity(3, 1)) * inv_pi3, CycElt(1));
  EXPECT_EQ(block_partition(a4, 3).block_of, congruence_oracle(a4, 3, inv_pi3));
  EXPECT_EQ(block_partition(a4, 3).block_of, (std::vector<int>{0, 0, 0, 1}));
  const CharacterTable a5 = dixon_table(alternating(5));
  EXPECT_EQ(block_partition(a5, 2).block_of, congruence_oracle(a5, 2));
}

TEST(Blocks, S4AtTwo) {
  const CharacterTable t = dixon_table(symmetric(4));
  ASSERT_EQ(t.degrees(), (std::vector<std::int64_t>{1, 1, 2, 3, 3}));
  const auto oracle = congruence_oracle(t, 2);
  EXPECT_EQ(*std::max_element(oracle.begin(), oracle.end()), 0);
  const BlockPartition b = block_partition(t, 2);
  EXPECT_EQ(b.block_count(), 1);
  EXPECT_EQ(b.defect, std::vector<int>{3});
  EXPECT_EQ(b.height, (std::vector<int>{0, 0, 1, 0, 0}));
  std::vector<std::int64_t> hz;
  for (auto r : height_zero_rows(b)) hz.push_back(t.degree(r));
  EXPECT_EQ(hz, (std::vector<std::int64_t>{1, 1, 3, 3}));
}

TEST(Blocks, A5AtTwo) {
  const CharacterTable t = dixon_table(alternating(5));
  ASSERT_EQ(t.degrees(), (std::vector<std::int64_t>{1, 3, 3, 4, 5}));
  const auto oracle = congruence_oracle(t, 2);
  EXPECT_EQ(oracle, (std::vector<int>{0, 0, 0, 1, 0}));
  const BlockPartition b = block_partition(t, 2);
  EXPECT_EQ(b.block_of, oracle);
  EXPECT_EQ(b.defect, (std::vector<int>{2, 0}));
  EXPECT_EQ(b.height, (std::vector<int>{0, 0, 0, 0, 0}));
}

TEST(Blocks, S3AtThreeAndFive) {
  const CharacterTable t = dixon_table(symmetric(3));
  EXPECT_EQ(congruence_oracle(t, 3), (std::vector<int>{0, 0, 0}));
  const BlockPartition b = block_partition(t, 3);
  EXPECT_EQ(b.block_count(), 1);
  EXPECT_EQ(b.defect, std::vector<int>{1});
  EXPECT_EQ(b.height, (std::vector<int>{0, 0, 0}));
  const BlockPartition b5 = block_partition(t, 5);
  EXPECT_EQ(b5.block_count(), 3);
  EXPECT_EQ(b5.defect, (std::vector<int>{0, 0, 0}));
}

TEST(Blocks, HeightZeroRows) {
  const CharacterTable sd = dixon_table(semidihedral(16));
  const auto hz = height_zero_rows(sd, 2);
  ASSERT_EQ(hz.size(), 4u);
  for (auto r : hz) EXPECT_EQ(sd.degree(r), 1);
  const BlockPartition b = block_partition(sd, 2);
  EXPECT_EQ(b.block_count(), 1);
  EXPECT_EQ(b.defect, std::vector<int>{4});
  const CharacterTable ab = dixon_table(cyclic(12));
  for (std::int64_t p : {2, 3, 5}) EXPECT_EQ(height_zero_rows(ab, p).size(), 12u);
}

TEST(Blocks, AxiomsOnSampleGroups) {
  for (const auto& spec : kBlockSpecs) {
    const CharacterTable t = table_for_spec(spec);
    for (std::int64_t p : {2, 3, 5, 7}) {
      const BlockPartition b = block_partition(t, p);
      ASSERT_EQ(b.block_of.size(), t.rows.size());
      EXPECT_EQ(b.principal_block, b.block_of[0]) << spec;
      const auto members = b.members();
      for (int blk = 0; blk < b.block_count(); ++blk) {
        ASSERT_FALSE(members[blk].empty());
        const bool has_zero =
            std::any_of(members[blk].begin(), members[blk].end(), [&](std::size_t r) { return b.height[r] == 0; });
        EXPECT_TRUE(has_zero) << spec << " p=" << p << " block " << blk;
        EXPECT_GE(b.defect[blk], 0);
      }
      if (t.order % p != 0) {
        EXPECT_EQ(b.block_count(), static_cast<int>(t.classes.count())) << spec << " p=" << p;
        for (int d : b.defect) EXPECT_EQ(d, 0);
      }
      // A different primitive root selects a different ideal above p; the
      // partition must not change.
      const int e_prime = static_cast<int>(split_prime_part(t.exponent(), p).second);
      for (std::uint64_t r = 2; r < static_cast<std::uint64_t>(e_prime) && r < 8; ++r) {
        if (gcd(static_cast<std::int64_t>(r), e_prime) != 1) continue;
        EXPECT_EQ(block_partition(t, p, r).block_of, b.block_of) << spec << " p=" << p << " r=" << r;
      }
    }
  }
}

TEST(Blocks, GaloisConjugationFixingPPrimeRootsPreservesBlocks) {
  for (const auto& spec : kBlockSpecs) {
    const CharacterTable t = table_for_spec(spec);
    const int e = t.exponent();
    for (std::int64_t p : {2, 3}) {
      const BlockPartition b = block_partition(t, p);
      const std::int64_t e_pp = split_prime_part(e, p).second;
      for (int k = 1; k < e; ++k) {
        if (gcd(k, e) != 1 || (k - 1) % e_pp != 0) continue;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
          ClassFunction image;
          for (const auto& v : t.rows[i]) image.push_back(galois(v, k));
          const auto it = std::find(t.rows.begin(), t.rows.end(), image);
          ASSERT_NE(it, t.rows.end());
          EXPECT_EQ(b.block_of[it - t.rows.begin()], b.block_of[i]) << spec << " p=" << p << " k=" << k;
        }
      }
    }
  }
}

TEST(Blocks, RelationIsEquivalence) {
  for (const char* spec : {"sym:4", "sl2:5", "meta:20:3"}) {
    const CharacterTable t = table_for_spec(spec);
    const IdealReduction red(2, t.exponent());
    std::vector<std::vector<ExtensionField::Element>> keys;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      std::vector<ExtensionField::Element> key;
      for (const auto& w : central_character(t, i)) key.push_back(red.reduce(w));
      keys.push_back(key);
    }
    const BlockPartition b = block_partition(t, 2);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      for (std::size_t j = 0; j < keys.size(); ++j) {
        EXPECT_EQ(keys[i] == keys[j], b.block_of[i] == b.block_of[j]);
      }
    }
  }
}

TEST(Reduction, IsRingHomomorphismOnIntegers) {
  const IdealReduction red(3, 24);
  EXPECT_EQ(red.p_part_exponent(), 1);
  EXPECT_EQ(red.prime_to_p_part(), 8);
  const ExtensionField& f = red.field();
  for (int i = 0; i < 24; ++i) {
    for (int j = 0; j < 24; ++j) {
      const CycElt a = CycElt::root_of_unity(24, i) + CycElt(2, 24);
      const CycElt b = CycElt::root_of_unity(24, j) - CycElt::root_of_unity(24, 3 * j);
      EXPECT_EQ(red.reduce(a * b), f.mul(red.reduce(a), red.reduce(b)));
      EXPECT_EQ(red.reduce(a + b), f.add(red.reduce(a), red.reduce(b)));
    }
  }
  // zeta_3 maps to 1 at p = 3.
  EXPECT_EQ(red.reduce(CycElt::root_of_unity(3, 1)), f.one());
}

TEST(Heights, NormalSubgroupConstituentsOfHeightZeroCharacters) {
  struct Pair {
    std::string spec;
    bool derived;  // N = derived subgroup, otherwise the translations of meta:n
    int n;
  };
  const std::vector<Pair> pairs = {{"sym:3", true, 0},       {"sym:4", true, 0},       {"sym:5", true, 0},
                                   {"sl2:3", true, 0},       {"meta:12:11", false, 12}, {"meta:20:3", false, 20},
                                   {"meta:21:2", false, 21}, {"dihedral:16", true, 0}};
  for (const auto& pr : pairs) {
    const FiniteGroup g = parse_group(pr.spec);
    const CharacterTable t = dixon_table(g);
    std::vector<int> elems;
    if (pr.derived) {
      elems = derived_subgroup(g);
    } else {
      for (int x = 0; x < static_cast<int>(g.order()); ++x) {
        if (affine_coordinates(g, x, pr.n).second == 1 % pr.n) elems.push_back(x);
      }
    }
    ASSERT_TRUE(is_normal(g, elems));
    const Subgroup n = make_subgroup(g, elems);
    const CharacterTable nt = dixon_table(n.group);
    for (std::int64_t p : {2, 3, 5}) {
      const BlockPartition bg = block_partition(t, p);
      const BlockPartition bn = block_partition(nt, p);
      for (std::size_t row : height_zero_rows(bg)) {
        const auto mult = decompose(restrict_to(t.rows[row], t.classes, n, nt.classes), nt);
        for (std::size_t i = 0; i < mult.size(); ++i) {
          if (mult[i] > 0) EXPECT_EQ(bn.height[i], 0) << pr.spec << " p=" << p << " row " << row;
        }
      }
    }
  }
}
