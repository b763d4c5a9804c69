#include "charfield/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "charfield/fields.hpp"
#include "charfield/modular.hpp"

namespace charfield {

std::int64_t CharacterTable::degree(std::size_t row) const {
  const Rational d = to_rational(rows.at(row).at(0));
  if (d.get_den() != 1 || d <= 0) throw std::domain_error("character degree is not a positive integer");
  return d.get_num().get_si();
}

std::vector<std::int64_t> CharacterTable::degrees() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(degree(i));
  return out;
}

ClassConstants class_constants(const FiniteGroup& g, const ClassData& classes) {
  const std::size_t r = classes.count();
  ClassConstants a(r);
  for (std::size_t k = 0; k < r; ++k) {
    const int z = classes.reps[k];
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      const int y = g.mul(g.inv(x), z);
      a(classes.class_of[x], classes.class_of[y], k) += 1;
    }
  }
  return a;
}

std::int64_t dixon_prime(std::int64_t order, int exponent) {
  std::int64_t root = 0;
  while (root * root < order) ++root;
  const std::int64_t bound = 2 * root;
  for (std::int64_t t = 1;; ++t) {
    const std::int64_t q = t * exponent + 1;
    if (q > bound && is_prime(q)) return q;
    if (q > (std::int64_t{1} << 31)) throw std::runtime_error("dixon_prime: no suitable prime below 2^31");
  }
}

bool row_less(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto c = compare_canonical(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

int max_modulus(const ClassFunction& f) {
  int n = 1;
  for (const auto& v : f) n = static_cast<int>(lcm(n, v.modulus()));
  return n;
}

bool is_trivial_row(const ClassFunction& row) {
  const CycElt one(Rational(1));
  return std::all_of(row.begin(), row.end(), [&](const CycElt& v) { return v == one; });
}

void sort_rows(CharacterTable& table) {
  const auto degs = table.degrees();
  std::vector<std::size_t> idx(table.rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<char> trivial(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) trivial[i] = is_trivial_row(table.rows[i]);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (trivial[a] != trivial[b]) return trivial[a] > trivial[b];
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    return row_less(table.rows[a], table.rows[b]);
  });
  std::vector<ClassFunction> sorted;
  for (auto i : idx) sorted.push_back(std::move(table.rows[i]));
  table.rows = std::move(sorted);
}

// Splits the whole space F_q^r into common eigenlines of the class matrices.
std::vector<ModVector> common_eigenlines(const std::vector<ModMatrix>& mats, std::size_t r, std::uint64_t q) {
  std::vector<ModMatrix> spaces;
  {
    ModMatrix full(r, r, q);
    for (std::size_t i = 0; i < r; ++i) full(i, i) = 1;
    spaces.push_back(std::move(full));
  }
  for (int pass = 0; pass < 4; ++pass) {
    bool all_lines = true;
    for (const auto& space : spaces) all_lines = all_lines && space.rows() == 1;
    if (all_lines) break;
    for (std::size_t mi = 1; mi < mats.size(); ++mi) {
      const ModMatrix& m = mats[mi];
      std::vector<ModMatrix> next;
      for (auto& space : spaces) {
        const std::size_t d = space.rows();
        if (d == 1) {
          next.push_back(std::move(space));
          continue;
        }
        // Basis rows are in reduced echelon form, so coordinates of a vector
        // in the span are its entries at the pivot columns.
        ModMatrix basis = space;
        const auto pivots = row_reduce(basis);
        ModMatrix action(d, d, q);
        for (std::size_t s = 0; s < d; ++s) {
          ModVector w(r, 0);
          for (std::size_t row = 0; row < r; ++row) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < r; ++c) {
              if (basis(s, c) != 0) acc = (acc + mulmod(m(row, c), basis(s, c), q)) % q;
            }
            w[row] = acc;
          }
          for (std::size_t t = 0; t < d; ++t) action(t, s) = w[pivots[t]];
        }
        const auto eigenvalues = roots_by_scan(characteristic_polynomial(action), q);
        std::size_t found = 0;
        for (auto lambda : eigenvalues) {
          ModMatrix shifted = action;
          for (std::size_t t = 0; t < d; ++t) shifted(t, t) = (shifted(t, t) + q - lambda) % q;
          const auto kernel = nullspace(shifted);
          ModMatrix sub(kernel.size(), r, q);
          for (std::size_t v = 0; v < kernel.size(); ++v) {
            for (std::size_t s = 0; s < d; ++s) {
              if (kernel[v][s] == 0) continue;
              for (std::size_t c = 0; c < r; ++c) sub(v, c) = (sub(v, c) + mulmod(kernel[v][s], basis(s, c), q)) % q;
            }
          }
          row_reduce(sub);
          found += kernel.size();
          next.push_back(std::move(sub));
        }
        if (found != d) throw std::logic_error("dixon: class matrix is not diagonalizable over F_q");
      }
      spaces = std::move(next);
    }
  }
  std::vector<ModVector> lines;
  for (const auto& space : spaces) {
    if (space.rows() != 1) throw std::logic_error("dixon: eigenspace splitting did not terminate in lines");
    ModVector v(r);
    for (std::size_t c = 0; c < r; ++c) v[c] = space(0, c);
    lines.push_back(std::move(v));
  }
  return lines;
}

}  // namespace

CharacterTable dixon_table(const FiniteGroup& g) {
  CharacterTable table;
  table.name = g.name();
  table.order = static_cast<std::int64_t>(g.order());
  table.group = std::make_shared<const FiniteGroup>(g);
  table.classes = conjugacy_classes(g);
  const ClassData& cd = table.classes;
  const std::size_t r = cd.count();
  const int e = cd.exponent;
  const std::uint64_t q = static_cast<std::uint64_t>(dixon_prime(table.order, e));

  const ClassConstants a = class_constants(g, cd);
  std::vector<ModMatrix> mats;
  for (std::size_t i = 0; i < r; ++i) {
    ModMatrix m(r, r, q);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) m(j, k) = static_cast<std::uint64_t>(a(i, j, k)) % q;
    }
    mats.push_back(std::move(m));
  }
  const auto lines = common_eigenlines(mats, r, q);
  if (lines.size() != r) throw std::logic_error("dixon: wrong number of central characters");

  const std::uint64_t s = powmod(static_cast<std::uint64_t>(primitive_root(static_cast<std::int64_t>(q))),
                                 (q - 1) / static_cast<std::uint64_t>(e), q);
  std::int64_t max_degree = 0;
  while ((max_degree + 1) * (max_degree + 1) <= table.order) ++max_degree;

  for (const auto& omega : lines) {
    if (omega[0] != 1) throw std::logic_error("dixon: central character not normalized at the identity class");
    std::uint64_t norm = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t inv_size = invmod(static_cast<std::uint64_t>(cd.sizes[k]) % q, q);
      norm = (norm + mulmod(mulmod(omega[k], omega[cd.inverse_class(static_cast<int>(k))], q), inv_size, q)) % q;
    }
    if (norm == 0) throw std::logic_error("dixon: degenerate central character");
    const std::uint64_t degree_sq = mulmod(static_cast<std::uint64_t>(table.order) % q, invmod(norm, q), q);
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= max_degree; ++d) {
      if (mulmod(d, d, q) == degree_sq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw std::logic_error("dixon: no degree recovered");

    std::vector<std::uint64_t> chi_mod(r);
    for (std::size_t k = 0; k < r; ++k) {
      chi_mod[k] = mulmod(mulmod(omega[k], static_cast<std::uint64_t>(degree), q),
                          invmod(static_cast<std::uint64_t>(cd.sizes[k]) % q, q), q);
    }

    ClassFunction row;
    for (std::size_t k = 0; k < r; ++k) {
      const int o = cd.orders[k];
      const std::uint64_t s_inv = invmod(powmod(s, static_cast<std::uint64_t>(e / o), q), q);
      std::vector<std::uint64_t> twiddle(o);
      twiddle[0] = 1;
      for (int u = 1; u < o; ++u) twiddle[u] = mulmod(twiddle[u - 1], s_inv, q);
      const std::uint64_t inv_o = invmod(static_cast<std::uint64_t>(o), q);
      CycAccumulator acc(e);
      std::int64_t total = 0;
      for (int t = 0; t < o; ++t) {
        std::uint64_t sum = 0;
        for (int j = 0; j < o; ++j) {
          sum = (sum + mulmod(chi_mod[cd.power_map[k][j]], twiddle[static_cast<std::int64_t>(j) * t % o], q)) % q;
        }
        const std::uint64_t mult = mulmod(sum, inv_o, q);
        if (static_cast<std::int64_t>(mult) > degree) throw std::logic_error("dixon: eigenvalue multiplicity out of range");
        total += static_cast<std::int64_t>(mult);
        if (mult != 0) acc.add(static_cast<std::int64_t>(t) * (e / o), Rational(static_cast<long>(mult)));
      }
      if (total != degree) throw std::logic_error("dixon: multiplicities do not sum to the degree");
      row.push_back(acc.finish());
    }
    table.rows.push_back(std::move(row));
  }
  sort_rows(table);
  return table;
}

// ---------------------------------------------------------------------------
// Metacyclic groups

namespace {

struct LinearCharacters {
  int exponent = 1;                      // values are zeta_exponent^value
  std::vector<int> elements;             // sorted residues
  std::vector<std::vector<int>> values;  // [character][element position]
};

// Irreducible characters of an abelian subgroup of (Z/n)^*, built by
// extending one generator at a time.
LinearCharacters abelian_characters(int n, const std::vector<int>& elements) {
  LinearCharacters lc;
  lc.elements = elements;
  for (int h : elements) lc.exponent = static_cast<int>(lcm(lc.exponent, multiplicative_order(h, n)));
  const int f = lc.exponent;
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);

  std::vector<int> sub{static_cast<int>(1 % n)};
  std::vector<std::vector<int>> chars{std::vector<int>(elements.size(), 0)};
  std::vector<char> in_sub(n, 0);
  in_sub[1 % n] = 1;
  for (int g : elements) {
    if (in_sub[g]) continue;
    int t = 1;
    std::int64_t gt = g;
    while (!in_sub[gt]) {
      gt = gt * g % n;
      ++t;
    }
    std::vector<int> new_sub;
    std::vector<std::vector<int>> new_chars;
    for (const auto& psi : chars) {
      const int target = psi[pos[gt]];
      if (target % t != 0) throw std::logic_error("abelian_characters: extension equation unsolvable");
      for (int k = 0; k < t; ++k) {
        const int x = target / t + k * (f / t);
        std::vector<int> ext = psi;
        for (int a : sub) {
          std::int64_t elem = a;
          for (int s = 0; s < t; ++s) {
            ext[pos[elem]] = static_cast<int>(mod(psi[pos[a]] + static_cast<std::int64_t>(s) * x, f));
            elem = elem * g % n;
          }
        }
        new_chars.push_back(std::move(ext));
      }
    }
    for (int a : sub) {
      std::int64_t elem = a;
      for (int s = 0; s < t; ++s) {
        new_sub.push_back(static_cast<int>(elem));
        elem = elem * g % n;
      }
    }
    for (int x : new_sub) in_sub[x] = 1;
    sub = std::move(new_sub);
    chars = std::move(new_chars);
  }
  lc.values = std::move(chars);
  return lc;
}

}  // namespace

CharacterTable metacyclic_table(int n, std::span<const std::int64_t> hgens) {
  const FiniteGroup g = semidirect_cn_h(n, hgens);
  CharacterTable table;
  table.name = g.name();
  table.order = static_cast<std::int64_t>(g.order());
  table.group = std::make_shared<const FiniteGroup>(g);
  table.classes = conjugacy_classes(g);
  const ClassData& cd = table.classes;
  const int e = cd.exponent;
  if (n == 1) {
    table.rows.push_back({CycElt(Rational(1), 1)});
    return table;
  }
  const auto h_elems = ResidueSubgroup::generated(n, hgens).elements();

  std::vector<std::pair<int, int>> coords;
  for (int rep : cd.reps) coords.push_back(affine_coordinates(g, rep, n));

  std::vector<char> visited(n, 0);
  for (int j = 0; j < n; ++j) {
    if (visited[j]) continue;
    std::vector<int> orbit;
    std::vector<int> stabilizer;
    for (int h : h_elems) {
      const int image = static_cast<int>(static_cast<std::int64_t>(h) * j % n);
      if (!visited[image]) {
        visited[image] = 1;
        orbit.push_back(image);
      }
      if (image == j) stabilizer.push_back(h);
    }
    std::sort(orbit.begin(), orbit.end());
    const LinearCharacters mu = abelian_characters(n, stabilizer);
    const int L = static_cast<int>(lcm(n, mu.exponent));
    for (const auto& mu_values : mu.values) {
      ClassFunction row;
      for (const auto& [c, h] : coords) {
        auto it = std::lower_bound(stabilizer.begin(), stabilizer.end(), h);
        if (it == stabilizer.end() || *it != h) {
          row.push_back(CycElt(Rational(0), e));
          continue;
        }
        const int mu_exp = mu_values[it - stabilizer.begin()];
        CycAccumulator acc(L);
        for (int jj : orbit) {
          const std::int64_t exp = (static_cast<std::int64_t>(jj) * c % n) * (L / n) +
                                   static_cast<std::int64_t>(mu_exp) * (L / mu.exponent);
          acc.add(exp, Rational(1));
        }
        row.push_back(at_modulus(acc.finish(), e));
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Induction, restriction, inner products

ClassFunction induce(const FiniteGroup& g, const ClassData& classes, std::span<const int> subgroup,
                     std::span<const CycElt> values) {
  if (subgroup.size() != values.size()) throw std::invalid_argument("induce: values must align with subgroup elements");
  const std::size_t r = classes.count();
  std::vector<CycElt> sums(r, CycElt(Rational(0), classes.exponent));
  for (std::size_t i = 0; i < subgroup.size(); ++i) sums[classes.class_of[subgroup[i]]] += values[i];
  ClassFunction out;
  const std::int64_t order = static_cast<std::int64_t>(g.order());
  for (std::size_t k = 0; k < r; ++k) {
    const Rational scale = ratio(order, classes.sizes[k] * static_cast<std::int64_t>(subgroup.size()));
    out.push_back(at_modulus(sums[k] * scale, classes.exponent));
  }
  return out;
}

ClassFunction induce_linear(const FiniteGroup& g, const ClassData& classes, std::span<const int> subgroup,
                            std::span<const CycElt> values) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < subgroup.size(); ++i) pos[subgroup[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    for (std::size_t j = 0; j < subgroup.size(); ++j) {
      const int prod = pos[g.mul(subgroup[i], subgroup[j])];
      if (prod < 0) throw std::invalid_argument("induce_linear: subgroup is not closed");
      if (!(values[prod] == values[i] * values[j])) {
        throw std::invalid_argument("induce_linear: values are not a homomorphism");
      }
    }
  }
  return induce(g, classes, subgroup, values);
}

ClassFunction restrict_to(const ClassFunction& f, const ClassData& ambient_classes, const Subgroup& sub,
                          const ClassData& sub_classes) {
  ClassFunction out;
  for (int rep : sub_classes.reps) {
    const CycElt& v = f.at(ambient_classes.class_of.at(sub.ambient.at(rep)));
    out.push_back(at_modulus(v, sub_classes.exponent));
  }
  return out;
}

CycElt inner_product(const ClassFunction& f1, const ClassFunction& f2, const ClassData& classes) {
  if (f1.size() != classes.count() || f2.size() != classes.count()) {
    throw std::invalid_argument("inner_product: class function length mismatch");
  }
  const int n = static_cast<int>(lcm(classes.exponent, lcm(max_modulus(f1), max_modulus(f2))));
  return hermitian_sum(f1, f2, classes.sizes, n) * ratio(1, classes.group_order());
}

std::vector<std::int64_t> decompose(const ClassFunction& f, const CharacterTable& table) {
  std::vector<std::int64_t> mult;
  ClassFunction rebuilt(f.size(), CycElt(Rational(0), table.exponent()));
  for (const auto& row : table.rows) {
    const CycElt ip = inner_product(f, row, table.classes);
    if (!is_rational(ip)) throw std::domain_error("decompose: non-rational multiplicity");
    const Rational m = to_rational(ip);
    if (m.get_den() != 1 || m < 0) throw std::domain_error("decompose: multiplicity is not a nonnegative integer");
    mult.push_back(m.get_num().get_si());
    for (std::size_t k = 0; k < f.size(); ++k) rebuilt[k] += row[k] * m;
  }
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!(rebuilt[k] == f[k])) throw std::domain_error("decompose: class function is not a character");
  }
  return mult;
}

bool check_orthogonality(const CharacterTable& table) {
  const ClassData& cd = table.classes;
  const std::size_t r = cd.count();
  if (table.rows.size() != r) return false;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      const CycElt ip = inner_product(table.rows[a], table.rows[b], cd);
      if (!(ip == CycElt(Rational(a == b ? 1 : 0)))) return false;
    }
  }
  const std::vector<std::int64_t> ones(r, 1);
  // Column relation: sum_chi chi(g_k) conj(chi(g_l)) = |C_G(g_k)| [k = l].
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k; l < r; ++l) {
      ClassFunction col_k, col_l;
      for (const auto& row : table.rows) {
        col_k.push_back(row[k]);
        col_l.push_back(row[l]);
      }
      const CycElt sum = hermitian_sum(col_k, col_l, ones, cd.exponent);
      const Rational expected = (k == l) ? ratio(cd.group_order(), cd.sizes[k]) : Rational(0);
      if (!(sum == CycElt(expected))) return false;
    }
  }
  return true;
}

void validate_table(const CharacterTable& table) {
  const ClassData& cd = table.classes;
  const std::size_t r = cd.count();
  if (r == 0) throw std::invalid_argument("table has no classes");
  if (table.rows.size() != r) throw std::invalid_argument("number of rows differs from number of classes");
  if (cd.group_order() != table.order) throw std::invalid_argument("class sizes do not sum to the group order");
  if (cd.sizes[0] != 1 || cd.orders[0] != 1) throw std::invalid_argument("class 0 must be the identity class");
  for (std::size_t k = 0; k < r; ++k) {
    if (cd.sizes[k] <= 0 || table.order % cd.sizes[k] != 0) throw std::invalid_argument("class size does not divide the order");
    if (cd.exponent % cd.orders[k] != 0) throw std::invalid_argument("element order does not divide the exponent");
    if (cd.power_map[k].size() != static_cast<std::size_t>(cd.exponent)) {
      throw std::invalid_argument("power map must have one slot per k below the exponent");
    }
    for (int c : cd.power_map[k]) {
      if (c < -1 || (c >= 0 && static_cast<std::size_t>(c) >= r)) {
        throw std::invalid_argument("power map refers to an unknown class");
      }
    }
  }
  for (const auto& row : table.rows) {
    if (row.size() != r) throw std::invalid_argument("row length differs from number of classes");
  }
  Rational sum_sq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (!is_rational(table.rows[i][0])) throw std::invalid_argument("degree is not rational");
    const Rational d = to_rational(table.rows[i][0]);
    if (d.get_den() != 1 || d <= 0) throw std::invalid_argument("degree is not a positive integer");
    sum_sq += d * d;
  }
  if (sum_sq != table.order) throw std::invalid_argument("sum of squared degrees differs from the group order");
  if (!is_trivial_row(table.rows[0])) throw std::invalid_argument("row 0 must be the trivial character");
  if (!check_orthogonality(table)) throw std::invalid_argument("orthogonality relations fail");
}

bool same_row_set(const CharacterTable& a, const CharacterTable& b) {
  if (a.rows.size() != b.rows.size() || a.exponent() != b.exponent()) return false;
  auto ra = a.rows;
  auto rb = b.rows;
  std::sort(ra.begin(), ra.end(), row_less);
  std::sort(rb.begin(), rb.end(), row_less);
  return ra == rb;
}

}  // namespace charfield
