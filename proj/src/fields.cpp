#include "charfield/fields.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace charfield {

namespace {

std::vector<int> closure(int n, std::vector<int> gens) {
  std::vector<char> seen(n, 0);
  std::vector<int> elems{static_cast<int>(1 % n)};
  seen[1 % n] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int g : gens) {
      const int x = static_cast<int>(static_cast<std::int64_t>(elems[i]) * g % n);
      if (!seen[x]) {
        seen[x] = 1;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> bitmap_filter(int N, int n, const std::vector<int>& base) {
  std::vector<char> member(n, 0);
  for (int k : base) member[k] = 1;
  std::vector<int> out;
  for (int k = 0; k < N; ++k) {
    if (gcd(k, N) == 1 && member[k % n]) out.push_back(k);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ResidueSubgroup

ResidueSubgroup::ResidueSubgroup(int n, std::vector<int> elements) : n_(n) {
  if (n < 1) throw std::invalid_argument("residue subgroup modulus must be positive");
  for (int& k : elements) {
    k = static_cast<int>(mod(k, n));
    if (gcd(k, n) != 1) {
      throw std::invalid_argument(std::to_string(k) + " is not a unit modulo " + std::to_string(n));
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!std::binary_search(elements.begin(), elements.end(), 1 % n)) {
    throw std::invalid_argument("residue subgroup must contain 1");
  }
  std::vector<char> member(n, 0);
  for (int k : elements) member[k] = 1;
  for (int a : elements) {
    for (int b : elements) {
      if (!member[static_cast<std::int64_t>(a) * b % n]) {
        throw std::invalid_argument("residue set is not closed under multiplication modulo " + std::to_string(n));
      }
    }
  }
  elements_ = std::move(elements);
}

ResidueSubgroup ResidueSubgroup::generated(int n, std::span<const std::int64_t> gens) {
  if (n < 1) throw std::invalid_argument("residue subgroup modulus must be positive");
  std::vector<int> reduced;
  for (std::int64_t g : gens) {
    if (gcd(g, n) != 1) {
      throw std::invalid_argument("generator " + std::to_string(g) + " is not coprime to " + std::to_string(n));
    }
    reduced.push_back(static_cast<int>(mod(g, n)));
  }
  ResidueSubgroup out = trivial(n);
  out.elements_ = closure(n, reduced);
  return out;
}

ResidueSubgroup ResidueSubgroup::trivial(int n) { return ResidueSubgroup(n, {static_cast<int>(1 % n)}); }

ResidueSubgroup ResidueSubgroup::units(int n) {
  ResidueSubgroup out = trivial(n);
  out.elements_.clear();
  for (int k = 0; k < n; ++k) {
    if (gcd(k, n) == 1) out.elements_.push_back(k);
  }
  return out;
}

ResidueSubgroup ResidueSubgroup::kernel_to(int n, int m) {
  if (m < 1 || n % m != 0) throw std::invalid_argument("kernel_to: m must divide n");
  ResidueSubgroup out = trivial(n);
  out.elements_.clear();
  for (int k = 0; k < n; ++k) {
    if (k % m == 1 % m && gcd(k, n) == 1) out.elements_.push_back(k);
  }
  return out;
}

bool ResidueSubgroup::contains(std::int64_t k) const {
  return std::binary_search(elements_.begin(), elements_.end(), static_cast<int>(mod(k, n_)));
}

bool ResidueSubgroup::is_subset_of(const ResidueSubgroup& other) const {
  if (n_ != other.n_) throw std::invalid_argument("is_subset_of: moduli differ");
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

ResidueSubgroup ResidueSubgroup::image(int m) const {
  if (m < 1 || n_ % m != 0) throw std::invalid_argument("image: m must divide the modulus");
  ResidueSubgroup out = trivial(m);
  std::set<int> img;
  for (int k : elements_) img.insert(k % m);
  out.elements_.assign(img.begin(), img.end());
  return out;
}

ResidueSubgroup ResidueSubgroup::preimage(int N) const {
  if (N < 1 || N % n_ != 0) throw std::invalid_argument("preimage: N must be a multiple of the modulus");
  ResidueSubgroup out = trivial(N);
  out.elements_ = bitmap_filter(N, n_, elements_);
  return out;
}

std::vector<int> ResidueSubgroup::generators() const {
  std::vector<int> gens;
  std::vector<int> current{static_cast<int>(1 % n_)};
  for (int k : elements_) {
    if (std::binary_search(current.begin(), current.end(), k)) continue;
    gens.push_back(k);
    current = closure(n_, gens);
  }
  return gens;
}

ResidueSubgroup intersect(const ResidueSubgroup& a, const ResidueSubgroup& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("intersect: moduli differ");
  std::vector<int> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return ResidueSubgroup(a.modulus(), std::move(common));
}

std::vector<ResidueSubgroup> all_subgroups(int n) {
  const ResidueSubgroup units = ResidueSubgroup::units(n);
  std::set<std::vector<int>> seen;
  std::deque<ResidueSubgroup> queue{ResidueSubgroup::trivial(n)};
  std::vector<ResidueSubgroup> out;
  seen.insert(queue.front().elements());
  while (!queue.empty()) {
    ResidueSubgroup s = queue.front();
    queue.pop_front();
    for (int g : units.elements()) {
      if (s.contains(g)) continue;
      const auto base = s.generators();
      std::vector<std::int64_t> gens(base.begin(), base.end());
      gens.push_back(g);
      ResidueSubgroup t = ResidueSubgroup::generated(n, gens);
      if (seen.insert(t.elements()).second) queue.push_back(t);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ResidueSubgroup& a, const ResidueSubgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

// ---------------------------------------------------------------------------
// AbelianField

AbelianField AbelianField::fixed_field(const ResidueSubgroup& fixer) {
  ResidueSubgroup u = fixer;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    const int n = u.modulus();
    for (const auto& pp : factorize(n)) {
      const int m = n / static_cast<int>(pp.prime);
      if (ResidueSubgroup::kernel_to(n, m).is_subset_of(u)) {
        u = u.image(m);
        shrunk = true;
        break;
      }
    }
  }
  return AbelianField(std::move(u));
}

std::int64_t AbelianField::degree() const {
  return euler_phi(conductor()) / static_cast<std::int64_t>(fixer_.size());
}

AbelianField cyclotomic_field(int n) { return AbelianField::fixed_field(ResidueSubgroup::trivial(n)); }

AbelianField field_from_values(std::span<const CycElt> values) {
  int N = 1;
  for (const auto& v : values) N = static_cast<int>(lcm(N, v.modulus()));
  std::vector<CycElt> embedded;
  for (const auto& v : values) {
    if (!is_rational(v)) embedded.push_back(embed(v, N));
  }
  std::vector<int> fixer;
  for (int k = 0; k < N; ++k) {
    if (gcd(k, N) != 1) continue;
    bool fixed = true;
    for (const auto& v : embedded) {
      if (!(galois(v, k) == v)) {
        fixed = false;
        break;
      }
    }
    if (fixed) fixer.push_back(k);
  }
  return AbelianField::fixed_field(ResidueSubgroup(N, std::move(fixer)));
}

AbelianField compositum(const AbelianField& a, const AbelianField& b) {
  const int N = static_cast<int>(lcm(a.conductor(), b.conductor()));
  return AbelianField::fixed_field(intersect(a.fixer().preimage(N), b.fixer().preimage(N)));
}

AbelianField intersection(const AbelianField& a, const AbelianField& b) {
  const int N = static_cast<int>(lcm(a.conductor(), b.conductor()));
  std::vector<std::int64_t> gens;
  for (int k : a.fixer().preimage(N).generators()) gens.push_back(k);
  for (int k : b.fixer().preimage(N).generators()) gens.push_back(k);
  return AbelianField::fixed_field(ResidueSubgroup::generated(N, gens));
}

bool is_subfield(const AbelianField& sub, const AbelianField& super) {
  if (super.conductor() % sub.conductor() != 0) return false;
  const int N = super.conductor();
  return super.fixer().is_subset_of(sub.fixer().preimage(N));
}

CycElt sqrt_of_integer(std::int64_t d) {
  if (d == 0) return CycElt(Rational(0));
  if (!is_squarefree(d)) throw std::invalid_argument("sqrt_of_integer: " + std::to_string(d) + " is not squarefree");
  CycElt root(Rational(1));
  std::int64_t square = 1;
  for (const auto& pp : factorize(d < 0 ? -d : d)) {
    const std::int64_t p = pp.prime;
    if (p == 2) {
      root *= CycElt::root_of_unity(8, 1) + CycElt::root_of_unity(8, 7);
      square *= 2;
      continue;
    }
    // sum_t zeta_p^{t^2} squares to p* = (-1)^{(p-1)/2} p.
    std::vector<Rational> gauss(p);
    for (std::int64_t t = 0; t < p; ++t) gauss[t * t % p] += 1;
    root *= CycElt::from_powers(static_cast<int>(p), gauss);
    square *= (p % 4 == 1) ? p : -p;
  }
  if (square != d) root *= CycElt::root_of_unity(4, 1);
  if (!(root * root == CycElt(Rational(d)))) {
    throw std::logic_error("sqrt_of_integer: Gauss sum construction failed for " + std::to_string(d));
  }
  return root;
}

AbelianField quadratic_field(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    throw std::invalid_argument("quadratic_field: d must be squarefree and not 0 or 1, got " + std::to_string(d));
  }
  const CycElt root = sqrt_of_integer(d);
  return field_from_values(std::span<const CycElt>(&root, 1));
}

std::pair<int, std::int64_t> conductor_parts(const AbelianField& f, std::int64_t p) {
  return split_prime_part(f.conductor(), p);
}

bool in_class_Fp(const AbelianField& f, std::int64_t p) {
  const auto [a, m] = conductor_parts(f, p);
  const AbelianField joined = compositum(cyclotomic_field(static_cast<int>(m)), f);
  const std::int64_t index = euler_phi(f.conductor()) / joined.degree();
  return index % p != 0;
}

bool in_local_subclass(const AbelianField& f, std::int64_t p) {
  const auto [a, m] = conductor_parts(f, p);
  std::int64_t pa = 1;
  for (int i = 0; i < a; ++i) pa *= p;
  const AbelianField local = cyclotomic_field(static_cast<int>(pa));
  const std::int64_t index = local.degree() / intersection(local, f).degree();
  return index % p != 0;
}

std::vector<CycElt> fixed_field_generators(const AbelianField& f) {
  const int n = f.conductor();
  std::vector<CycElt> out;
  for (int b : zumbroich_basis(n)) {
    CycAccumulator acc(n);
    for (int u : f.fixer().elements()) acc.add(static_cast<std::int64_t>(b) * u, Rational(1));
    out.push_back(acc.finish());
  }
  return out;
}

}  // namespace charfield
