#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace charfield {

/// A permutation of {0, ..., degree-1}, stored as its image list.
using Perm = std::vector<std::uint32_t>;

/// (a * b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm identity_perm(std::size_t degree);

/// Parses cycle notation with 1-based points, e.g. "(1,2)(3,4,5)" or "(1 2 3)".
/// An empty string or "()" is the identity.
Perm parse_cycles(const std::string& text, std::size_t degree = 0);

inline constexpr std::size_t kDefaultOrderCap = 20000;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// A fully enumerated finite permutation group. Element 0 is the identity and
/// elements are numbered in breadth-first discovery order from the generators.
class FiniteGroup {
 public:
  /// Breadth-first closure. Throws std::length_error when the order exceeds `cap`.
  static FiniteGroup from_permutation_generators(std::vector<Perm> gens, std::string name = {},
                                                 std::size_t cap = kDefaultOrderCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const Perm& perm(int a) const { return elements_[a]; }
  /// Index of p, or -1 when p is not an element.
  int index_of(const Perm& p) const;

  int mul(int a, int b) const;
  int inv(int a) const { return inverses_[a]; }
  /// g x g^{-1}
  int conjugate(int x, int g) const { return mul(mul(g, x), inv(g)); }
  int power(int a, std::int64_t k) const;
  int element_order(int a) const;

  /// Indices of the generators the group was built from (identity generators dropped).
  const std::vector<int>& generators() const { return generators_; }

 private:
  FiniteGroup() = default;
  std::string name_;
  std::size_t degree_ = 1;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inverses_;
  std::vector<int> generators_;
};

/// Conjugacy-class data. Classes are sorted by (element order, size, smallest
/// element index), so class 0 is always the identity class.
struct ClassData {
  std::vector<int> reps;               // element indices; empty for ingested tables
  std::vector<int> class_of;           // element -> class; empty for ingested tables
  std::vector<std::int64_t> sizes;
  std::vector<int> orders;             // element order per class
  std::vector<std::vector<int>> power_map;  // [class][k] = class of g^k, k in [0, exponent); -1 if unknown
  int exponent = 1;

  std::size_t count() const { return sizes.size(); }
  std::int64_t group_order() const;
  /// Class of g^{-1} for g in class c.
  int inverse_class(int c) const;
};

ClassData conjugacy_classes(const FiniteGroup& g);

/// lcm of element orders.
int exponent(const FiniteGroup& g);

/// Sorted element index sets.
std::vector<int> generate_subgroup(const FiniteGroup& g, std::span<const int> gens);
std::vector<int> center(const FiniteGroup& g);
std::vector<int> derived_subgroup(const FiniteGroup& g);
std::vector<int> normal_closure(const FiniteGroup& g, std::span<const int> gens);
bool is_normal(const FiniteGroup& g, std::span<const int> subgroup);

/// A subgroup as a group in its own right, with the map back to the ambient group.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> ambient;  // subgroup element index -> ambient element index
};

/// `elements` must be closed under multiplication.
Subgroup make_subgroup(const FiniteGroup& g, std::span<const int> elements, std::string name = {});

/// Spot-checks identity, inverses and associativity on up to `samples` triples.
bool check_group_axioms(const FiniteGroup& g, std::size_t samples = 200);

// Named constructors. Orders are group orders unless stated.
FiniteGroup cyclic(int n);
FiniteGroup dihedral(int order);
FiniteGroup semidihedral(int order);
/// Dicyclic group of order 4k (k >= 2); generalized quaternion when the order is a power of 2.
FiniteGroup generalized_quaternion(int order);
FiniteGroup symmetric(int n);
FiniteGroup alternating(int n);
/// SL(2, q) for prime q, acting on the q^2 - 1 nonzero vectors of F_q^2.
FiniteGroup sl2(int q);

/// C_n ⋊ H with H = <hgens> in (Z/n)^* acting on C_n by multiplication.
/// Realized as the affine maps x -> c + h x on Z/n, so the element (c, h)
/// sends 0 to c and 1 to c + h.
FiniteGroup semidirect_cn_h(int n, std::span<const std::int64_t> hgens);

/// Recovers (c, h) from an element of a group built by semidirect_cn_h.
std::pair<int, int> affine_coordinates(const FiniteGroup& g, int element, int n);

}  // namespace charfield
