#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "charfield/groups.hpp"
#include "charfield/specs.hpp"

using namespace charfield;

namespace {

// Classes by brute-force conjugation over the whole group.
std::vector<std::set<int>> brute_force_classes(const FiniteGroup& g) {
  std::vector<std::set<int>> out;
  std::vector<char> seen(g.order(), 0);
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int y = 0; y < static_cast<int>(g.order()); ++y) cls.insert(g.mul(g.mul(y, x), g.inv(y)));
    for (int c : cls) seen[c] = 1;
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<int> brute_force_center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool central = true;
    for (int y = 0; y < static_cast<int>(g.order()) && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

int count_involutions(const FiniteGroup& g) {
  int n = 0;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) n += g.element_order(x) == 2;
  return n;
}

const std::vector<std::string> kSampleSpecs = {
    "cyclic:1", "cyclic:12", "dihedral:10", "dihedral:24", "semidihedral:16", "quaternion:8", "quaternion:24",
    "sym:3",    "sym:4",     "alt:4",       "alt:5",       "sl2:3",           "sl2:5",        "meta:12:11",
    "meta:20:3", "meta:21:2", "perm:(1,2)(3,4);(1,3)"};

}  // namespace

TEST(PermutationGroups, Closure) {
  EXPECT_EQ(FiniteGroup::from_permutation_generators({parse_cycles("(1,2)"), parse_cycles("(1,2,3)")}).order(), 6u);
  EXPECT_EQ(FiniteGroup::from_permutation_generators({parse_cycles("(1,2,3,4,5)"), parse_cycles("(3,4,5)")}).order(), 60u);
  EXPECT_EQ(FiniteGroup::from_permutation_generators({}).order(), 1u);
}

TEST(PermutationGroups, CapExceeded) {
  EXPECT_THROW(FiniteGroup::from_permutation_generators({parse_cycles("(1,2)"), parse_cycles("(1,2,3,4,5)")}, "s5", 100),
               std::length_error);
}

TEST(NamedGroups, OrdersAndInvariants) {
  const FiniteGroup sd16 = semidihedral(16);
  EXPECT_EQ(sd16.order(), 16u);
  EXPECT_EQ(exponent(sd16), 8);
  const FiniteGroup s = sl2(5);
  EXPECT_EQ(s.order(), 120u);
  EXPECT_EQ(center(s).size(), 2u);
  EXPECT_EQ(center(s), brute_force_center(s));
  EXPECT_EQ(conjugacy_classes(cyclic(12)).count(), 12u);
  EXPECT_EQ(generalized_quaternion(8).order(), 8u);
  EXPECT_EQ(sl2(3).order(), 24u);
  EXPECT_EQ(derived_subgroup(symmetric(4)).size(), 12u);
}

TEST(NamedGroups, DicyclicOfOrder24) {
  const FiniteGroup q = generalized_quaternion(24);
  EXPECT_EQ(q.order(), 24u);
  EXPECT_EQ(count_involutions(q), 1);
  EXPECT_EQ(conjugacy_classes(q).count(), 9u);
  EXPECT_EQ(center(q).size(), 2u);
}

TEST(Semidirect, Examples) {
  const std::int64_t minus_one[] = {11};
  const FiniteGroup d = semidirect_cn_h(12, minus_one);
  EXPECT_EQ(d.order(), 24u);
  // dihedral of order 24: 12 reflections plus the central rotation.
  EXPECT_EQ(count_involutions(d), 13);
  EXPECT_EQ(count_involutions(d), count_involutions(dihedral(24)));
  const std::int64_t three[] = {3};
  EXPECT_EQ(semidirect_cn_h(20, three).order(), static_cast<std::size_t>(20 * multiplicative_order(3, 20)));
  EXPECT_EQ(semidirect_cn_h(20, three).order(), 80u);
  EXPECT_EQ(conjugacy_classes(semidirect_cn_h(9, {})).count(), 9u);
  const std::int64_t bad[] = {4};
  EXPECT_THROW(semidirect_cn_h(12, bad), std::invalid_argument);
}

TEST(Semidirect, NormalCyclicSubgroup) {
  for (const char* spec : {"meta:12:11", "meta:20:3", "meta:21:2", "meta:40:3,7", "meta:35:4"}) {
    const FiniteGroup g = parse_group(spec);
    const int n = std::stoi(std::string(spec).substr(5));
    std::vector<int> translations;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      if (affine_coordinates(g, x, n).second == 1 % n) translations.push_back(x);
    }
    EXPECT_EQ(static_cast<int>(translations.size()), n) << spec;
    EXPECT_TRUE(is_normal(g, translations)) << spec;
    const bool has_generator = std::any_of(translations.begin(), translations.end(),
                                           [&](int x) { return g.element_order(x) == n; });
    EXPECT_TRUE(has_generator) << spec;
    EXPECT_EQ(g.order() % static_cast<std::size_t>(n), 0u);
  }
}

TEST(Classes, S4MatchesBruteForce) {
  const FiniteGroup g = symmetric(4);
  const ClassData cd = conjugacy_classes(g);
  std::multiset<std::int64_t> sizes(cd.sizes.begin(), cd.sizes.end());
  EXPECT_EQ(sizes, (std::multiset<std::int64_t>{1, 6, 3, 8, 6}));
  const auto brute = brute_force_classes(g);
  EXPECT_EQ(brute.size(), cd.count());
  for (const auto& cls : brute) {
    const int c = cd.class_of[*cls.begin()];
    for (int x : cls) EXPECT_EQ(cd.class_of[x], c);
    EXPECT_EQ(static_cast<std::int64_t>(cls.size()), cd.sizes[c]);
  }
}

TEST(Classes, ClassEquationAndPowerMapsOnSampleGroups) {
  for (const auto& spec : kSampleSpecs) {
    const FiniteGroup g = parse_group(spec);
    const ClassData cd = conjugacy_classes(g);
    EXPECT_EQ(cd.group_order(), static_cast<std::int64_t>(g.order())) << spec;
    EXPECT_EQ(cd.sizes[0], 1) << spec;
    EXPECT_EQ(cd.reps[0], 0) << spec;
    for (auto s : cd.sizes) EXPECT_EQ(static_cast<std::int64_t>(g.order()) % s, 0) << spec;
    EXPECT_EQ(static_cast<std::int64_t>(g.order()) % cd.exponent, 0) << spec;
    EXPECT_EQ(cd.exponent, exponent(g));
    EXPECT_TRUE(check_group_axioms(g)) << spec;
    // class_of(g^k) must not depend on the chosen representative.
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      const int c = cd.class_of[x];
      EXPECT_EQ(g.element_order(x), cd.orders[c]);
      for (int k = 0; k < cd.exponent; ++k) {
        ASSERT_EQ(cd.class_of[g.power(x, k)], cd.power_map[c][k]) << spec << " x=" << x << " k=" << k;
      }
    }
    // Deterministic ordering: (order, size, minimal element index).
    for (std::size_t c = 1; c < cd.count(); ++c) {
      EXPECT_LE(cd.orders[c - 1], cd.orders[c]) << spec;
    }
  }
}

TEST(Classes, CyclicGroupsHaveSingletonClasses) {
  for (int n = 1; n <= 30; ++n) {
    const ClassData cd = conjugacy_classes(cyclic(n));
    EXPECT_EQ(cd.count(), static_cast<std::size_t>(n));
  }
}

TEST(Subgroups, NormalClosureAndSubgroupWrapper) {
  const FiniteGroup g = symmetric(4);
  const std::vector<int> a4 = derived_subgroup(g);
  EXPECT_TRUE(is_normal(g, a4));
  const Subgroup sub = make_subgroup(g, a4, "A4");
  EXPECT_EQ(sub.group.order(), 12u);
  EXPECT_EQ(conjugacy_classes(sub.group).count(), 4u);
  // The normal closure of a transposition is all of S4.
  int transposition = -1;
  for (int x = 0; x < static_cast<int>(g.order()) && transposition < 0; ++x) {
    if (g.element_order(x) == 2 && conjugacy_classes(g).sizes[conjugacy_classes(g).class_of[x]] == 6) transposition = x;
  }
  ASSERT_GE(transposition, 0);
  const int gens[] = {transposition};
  EXPECT_EQ(normal_closure(g, gens).size(), 24u);
}

TEST(Specs, ParseErrors) {
  EXPECT_THROW(parse_group("cyclic"), std::invalid_argument);
  EXPECT_THROW(parse_group("cyclic:x"), std::invalid_argument);
  EXPECT_THROW(parse_group("foo:3"), std::invalid_argument);
  EXPECT_THROW(parse_group("meta:12:4"), std::invalid_argument);
  EXPECT_EQ(parse_group("meta:12").order(), 12u);
  EXPECT_EQ(parse_group("perm:").order(), 1u);
  EXPECT_EQ(parse_group("perm:(1,2)(3,4);(1,2,3)").order(), 12u);
}
