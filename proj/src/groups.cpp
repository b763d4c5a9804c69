#include "charfield/groups.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

#include "charfield/numtheory.hpp"

namespace charfield {

// ---------------------------------------------------------------------------
// Permutations

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint32_t>(x);
  return out;
}

Perm identity_perm(std::size_t degree) {
  Perm out(degree);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

Perm parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  std::size_t max_point = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch != '(') throw std::invalid_argument("cycle notation: expected '(' in \"" + text + "\"");
    const auto close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("cycle notation: unbalanced '(' in \"" + text + "\"");
    std::vector<std::uint32_t> cycle;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      const long v = std::stol(token);
      if (v < 1) throw std::invalid_argument("cycle notation: points are 1-based");
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
      max_point = std::max<std::size_t>(max_point, static_cast<std::size_t>(v));
      token.clear();
    };
    for (std::size_t j = i + 1; j < close; ++j) {
      const char c = text[j];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        token += c;
      } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        throw std::invalid_argument(std::string("cycle notation: unexpected character '") + c + "'");
      }
    }
    flush();
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  Perm out = identity_perm(std::max(degree, max_point));
  std::vector<char> seen(out.size(), 0);
  for (const auto& cycle : cycles) {
    for (auto p : cycle) {
      if (seen[p]) throw std::invalid_argument("cycle notation: point repeated in \"" + text + "\"");
      seen[p] = 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) out[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_permutation_generators(std::vector<Perm> gens, std::string name, std::size_t cap) {
  FiniteGroup g;
  g.name_ = std::move(name);
  std::size_t degree = 1;
  for (const auto& p : gens) degree = std::max(degree, p.size());
  for (auto& p : gens) {
    std::vector<char> hit(p.size(), 0);
    for (auto x : p) {
      if (x >= p.size() || hit[x]) throw std::invalid_argument("generator is not a permutation");
      hit[x] = 1;
    }
    for (std::size_t x = p.size(); x < degree; ++x) p.push_back(static_cast<std::uint32_t>(x));
  }
  g.degree_ = degree;
  const Perm id = identity_perm(degree);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : gens) {
      Perm y = compose(g.elements_[i], s);
      if (g.index_.count(y)) continue;
      if (g.elements_.size() >= cap) {
        throw std::length_error("group order exceeds the cap of " + std::to_string(cap));
      }
      g.index_.emplace(y, static_cast<int>(g.elements_.size()));
      g.elements_.push_back(std::move(y));
    }
  }
  for (const auto& s : gens) {
    const int idx = g.index_.at(s);
    if (idx != 0 && std::find(g.generators_.begin(), g.generators_.end(), idx) == g.generators_.end()) {
      g.generators_.push_back(idx);
    }
  }
  g.inverses_.resize(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.inverses_[i] = g.index_.at(inverse(g.elements_[i]));
  return g;
}

int FiniteGroup::index_of(const Perm& p) const {
  if (p.size() != degree_) return -1;
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int a, int b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  return index_.at(compose(elements_[a], elements_[b]));
}

int FiniteGroup::power(int a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int result = 0;
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int order = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++order;
  }
  return order;
}

// ---------------------------------------------------------------------------
// Classes

std::int64_t ClassData::group_order() const { return std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0}); }

int ClassData::inverse_class(int c) const {
  if (exponent == 1) return 0;
  return power_map[c][exponent - 1];
}

ClassData conjugacy_classes(const FiniteGroup& g) {
  const int order = static_cast<int>(g.order());
  std::vector<int> raw_class(order, -1);
  std::vector<std::vector<int>> members;
  for (int x = 0; x < order; ++x) {
    if (raw_class[x] >= 0) continue;
    const int id = static_cast<int>(members.size());
    std::vector<int> orbit{x};
    raw_class[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int s : g.generators()) {
        const int y = g.conjugate(orbit[i], s);
        if (raw_class[y] < 0) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    members.push_back(std::move(orbit));
  }

  struct Key {
    int order;
    std::size_t size;
    int min_index;
    int raw;
  };
  std::vector<Key> keys;
  for (std::size_t c = 0; c < members.size(); ++c) {
    const int rep = *std::min_element(members[c].begin(), members[c].end());
    keys.push_back({g.element_order(rep), members[c].size(), rep, static_cast<int>(c)});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    return std::tie(a.order, a.size, a.min_index) < std::tie(b.order, b.size, b.min_index);
  });

  ClassData cd;
  std::vector<int> renumber(members.size());
  for (std::size_t c = 0; c < keys.size(); ++c) {
    renumber[keys[c].raw] = static_cast<int>(c);
    cd.reps.push_back(keys[c].min_index);
    cd.sizes.push_back(static_cast<std::int64_t>(keys[c].size));
    cd.orders.push_back(keys[c].order);
  }
  cd.class_of.resize(order);
  for (int x = 0; x < order; ++x) cd.class_of[x] = renumber[raw_class[x]];

  cd.exponent = 1;
  for (int o : cd.orders) cd.exponent = static_cast<int>(lcm(cd.exponent, o));
  for (int rep : cd.reps) {
    std::vector<int> row(cd.exponent);
    int pw = 0;
    for (int k = 0; k < cd.exponent; ++k) {
      row[k] = cd.class_of[pw];
      pw = g.mul(pw, rep);
    }
    cd.power_map.push_back(std::move(row));
  }
  return cd;
}

int exponent(const FiniteGroup& g) {
  int e = 1;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) e = static_cast<int>(lcm(e, g.element_order(x)));
  return e;
}

std::vector<int> generate_subgroup(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> elems{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      const int y = g.mul(elems[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool central = true;
    for (int s : g.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<int> normal_closure(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<int> current_gens(gens.begin(), gens.end());
  std::vector<int> sub = generate_subgroup(g, current_gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < current_gens.size() && !grew; ++i) {
      for (int s : g.generators()) {
        const int y = g.conjugate(current_gens[i], s);
        if (!std::binary_search(sub.begin(), sub.end(), y)) {
          current_gens.push_back(y);
          sub = generate_subgroup(g, current_gens);
          grew = true;
          break;
        }
      }
    }
  }
  return sub;
}

std::vector<int> derived_subgroup(const FiniteGroup& g) {
  std::vector<int> commutators;
  for (int a : g.generators()) {
    for (int b : g.generators()) {
      const int c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != 0) commutators.push_back(c);
    }
  }
  return normal_closure(g, commutators);
}

bool is_normal(const FiniteGroup& g, std::span<const int> subgroup) {
  std::vector<int> sorted(subgroup.begin(), subgroup.end());
  std::sort(sorted.begin(), sorted.end());
  for (int x : sorted) {
    for (int s : g.generators()) {
      if (!std::binary_search(sorted.begin(), sorted.end(), g.conjugate(x, s))) return false;
    }
  }
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::span<const int> elements, std::string name) {
  std::vector<int> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> gens;
  std::vector<int> current{0};
  for (int x : sorted) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = generate_subgroup(g, gens);
  }
  if (current != sorted) throw std::invalid_argument("make_subgroup: element set is not a subgroup");
  std::vector<Perm> perms;
  for (int s : gens) perms.push_back(g.perm(s));
  Subgroup out{FiniteGroup::from_permutation_generators(std::move(perms), std::move(name)), {}};
  if (out.group.degree() != g.degree()) {
    // Only the trivial subgroup can come back at a smaller degree.
    out.ambient = {0};
    return out;
  }
  for (int i = 0; i < static_cast<int>(out.group.order()); ++i) out.ambient.push_back(g.index_of(out.group.perm(i)));
  return out;
}

bool check_group_axioms(const FiniteGroup& g, std::size_t samples) {
  const int n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    if (g.mul(x, 0) != x || g.mul(0, x) != x) return false;
    if (g.mul(x, g.inv(x)) != 0) return false;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Named constructors

namespace {

// Left-regular representation of a group given by a multiplication rule on {0..order-1}.
FiniteGroup from_rule(int order, const std::function<int(int, int)>& rule, const std::vector<int>& gens,
                      std::string name) {
  std::vector<Perm> perms;
  for (int s : gens) {
    Perm p(order);
    for (int x = 0; x < order; ++x) p[x] = static_cast<std::uint32_t>(rule(s, x));
    perms.push_back(std::move(p));
  }
  return FiniteGroup::from_permutation_generators(std::move(perms), std::move(name));
}

Perm affine_perm(int n, std::int64_t c, std::int64_t h) {
  Perm p(n);
  for (int x = 0; x < n; ++x) p[x] = static_cast<std::uint32_t>(mod(c + h * x, n));
  return p;
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be positive");
  if (n == 1) return FiniteGroup::from_permutation_generators({}, "cyclic:1");
  return FiniteGroup::from_permutation_generators({affine_perm(n, 1, 1)}, "cyclic:" + std::to_string(n));
}

FiniteGroup dihedral(int order) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral: order must be even and positive");
  const std::string name = "dihedral:" + std::to_string(order);
  const int k = order / 2;
  if (k == 1) return FiniteGroup::from_permutation_generators({parse_cycles("(1,2)")}, name);
  if (k == 2) return FiniteGroup::from_permutation_generators({parse_cycles("(1,2)"), parse_cycles("(3,4)")}, name);
  return FiniteGroup::from_permutation_generators({affine_perm(k, 1, 1), affine_perm(k, 0, -1)}, name);
}

FiniteGroup semidihedral(int order) {
  if (order < 16 || (order & (order - 1)) != 0) {
    throw std::invalid_argument("semidihedral: order must be a power of 2, at least 16");
  }
  const int k = order / 2;
  const std::int64_t twist = k / 2 - 1;
  FiniteGroup g = FiniteGroup::from_permutation_generators({affine_perm(k, 1, 1), affine_perm(k, 0, twist)});
  g.set_name("semidihedral:" + std::to_string(order));
  return g;
}

FiniteGroup generalized_quaternion(int order) {
  if (order < 8 || order % 4 != 0) throw std::invalid_argument("quaternion: order must be a multiple of 4, at least 8");
  const int k = order / 2;  // order of a
  // Element i + k*j stands for a^i b^j; b a b^{-1} = a^{-1}, b^2 = a^{k/2}.
  auto rule = [k](int x, int y) {
    const int i1 = x % k, j1 = x / k, i2 = y % k, j2 = y / k;
    if (j1 == 0) return static_cast<int>(mod(i1 + i2, k)) + k * j2;
    if (j2 == 0) return static_cast<int>(mod(i1 - i2, k)) + k;
    return static_cast<int>(mod(i1 - i2 + k / 2, k));
  };
  return from_rule(order, rule, {1, k}, "quaternion:" + std::to_string(order));
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("sym: n must be in [1, 6]");
  const std::string name = "sym:" + std::to_string(n);
  if (n == 1) return FiniteGroup::from_permutation_generators({}, name);
  if (n == 2) return FiniteGroup::from_permutation_generators({parse_cycles("(1,2)")}, name);
  return FiniteGroup::from_permutation_generators({parse_cycles("(1,2)"), affine_perm(n, 1, 1)}, name);
}

FiniteGroup alternating(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("alt: n must be in [1, 6]");
  std::vector<Perm> gens;
  for (int i = 3; i <= n; ++i) gens.push_back(parse_cycles("(1,2," + std::to_string(i) + ")", n));
  return FiniteGroup::from_permutation_generators(std::move(gens), "alt:" + std::to_string(n));
}

FiniteGroup sl2(int q) {
  if (!is_prime(q)) throw std::invalid_argument("sl2: q must be prime");
  // Nonzero vector (a, b) is point a*q + b - 1.
  auto matrix_perm = [q](int x, int y, int z, int w) {
    Perm p(q * q - 1);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        const int a2 = static_cast<int>(mod(x * a + y * b, q));
        const int b2 = static_cast<int>(mod(z * a + w * b, q));
        p[a * q + b - 1] = static_cast<std::uint32_t>(a2 * q + b2 - 1);
      }
    }
    return p;
  };
  return FiniteGroup::from_permutation_generators({matrix_perm(1, 1, 0, 1), matrix_perm(0, -1, 1, 0)},
                                                  "sl2:" + std::to_string(q));
}

FiniteGroup semidirect_cn_h(int n, std::span<const std::int64_t> hgens) {
  if (n < 1) throw std::invalid_argument("meta: n must be positive");
  std::string name = "meta:" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < hgens.size(); ++i) {
    if (gcd(hgens[i], n) != 1) {
      throw std::invalid_argument("meta: " + std::to_string(hgens[i]) + " is not coprime to " + std::to_string(n));
    }
    name += (i ? "," : "") + std::to_string(hgens[i]);
  }
  if (n == 1) return FiniteGroup::from_permutation_generators({}, name);
  std::vector<Perm> gens{affine_perm(n, 1, 1)};
  for (auto h : hgens) gens.push_back(affine_perm(n, 0, h));
  return FiniteGroup::from_permutation_generators(std::move(gens), name);
}

std::pair<int, int> affine_coordinates(const FiniteGroup& g, int element, int n) {
  if (n == 1) return {0, 0};
  const Perm& p = g.perm(element);
  const int c = static_cast<int>(p[0]);
  const int h = static_cast<int>(mod(static_cast<int>(p[1]) - c, n));
  return {c, h};
}

}  // namespace charfield
