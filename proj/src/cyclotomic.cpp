#include "charfield/cyclotomic.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace charfield {

namespace {

// One prime-power factor q = p^k of the modulus n, with what is needed to read
// off the q-component of an exponent: zeta_n^i = prod_q zeta_q^{e_q} with
// e_q = i * (n/q)^{-1} mod q. Writing e_q = j + p^{k-1} t (0 <= j < p^{k-1}),
// the Zumbroich basis keeps t = 0 for p = 2 and t in [1, p) for odd p.
struct Component {
  int p;
  int q;
  int low;    // p^{k-1}
  int inv;    // (n/q)^{-1} mod q
  int shift;  // n/p: adding it to an exponent increments t by one
};

struct ModulusInfo {
  std::vector<Component> components;
};

const ModulusInfo& modulus_info(int n) {
  thread_local std::unordered_map<int, ModulusInfo> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ModulusInfo info;
  for (const auto& pp : factorize(n)) {
    Component c;
    c.p = static_cast<int>(pp.prime);
    c.q = static_cast<int>(pp.value);
    c.low = c.q / c.p;
    c.inv = static_cast<int>(inverse_mod((n / c.q) % c.q, c.q));
    c.shift = n / c.p;
    info.components.push_back(c);
  }
  return cache.emplace(n, std::move(info)).first->second;
}

int t_digit(const Component& c, int exponent) {
  const std::int64_t eq = static_cast<std::int64_t>(exponent % c.q) * c.inv % c.q;
  return static_cast<int>(eq / c.low);
}

bool is_bad(const Component& c, int exponent) {
  const int t = t_digit(c, exponent);
  return c.p == 2 ? t == 1 : t == 0;
}

void require_modulus(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic modulus must be positive, got " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// Accumulator

CycAccumulator::CycAccumulator(int n) : n_(n) {
  require_modulus(n);
  slot_.assign(n, -1);
}

void CycAccumulator::add(std::int64_t exponent, const Rational& coeff) {
  if (coeff == 0) return;
  const int i = static_cast<int>(mod(exponent, n_));
  if (slot_[i] < 0) {
    slot_[i] = static_cast<int>(touched_.size());
    touched_.push_back(i);
    coeffs_.push_back(coeff);
    return;
  }
  coeffs_[slot_[i]] += coeff;
}

CycElt CycAccumulator::finish() {
  for (const auto& comp : modulus_info(n_).components) {
    const std::size_t count = touched_.size();
    for (std::size_t idx = 0; idx < count; ++idx) {
      const int i = touched_[idx];
      if (coeffs_[idx] == 0 || !is_bad(comp, i)) continue;
      const Rational c = coeffs_[idx];
      coeffs_[idx] = 0;
      if (comp.p == 2) {
        add(static_cast<std::int64_t>(i) + comp.shift, -c);
      } else {
        for (int s = 1; s < comp.p; ++s) add(static_cast<std::int64_t>(i) + static_cast<std::int64_t>(s) * comp.shift, -c);
      }
    }
  }
  CycElt out;
  out.n_ = n_;
  for (std::size_t idx = 0; idx < touched_.size(); ++idx) {
    if (coeffs_[idx] != 0) out.terms_.emplace_back(touched_[idx], std::move(coeffs_[idx]));
    slot_[touched_[idx]] = -1;
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const CycElt::Term& a, const CycElt::Term& b) { return a.first < b.first; });
  touched_.clear();
  coeffs_.clear();
  return out;
}

// ---------------------------------------------------------------------------
// Basis

bool is_basis_exponent(int n, int exponent) {
  require_modulus(n);
  if (exponent < 0 || exponent >= n) return false;
  for (const auto& comp : modulus_info(n).components) {
    if (is_bad(comp, exponent)) return false;
  }
  return true;
}

std::vector<int> zumbroich_basis(int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (is_basis_exponent(n, i)) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CycElt

CycElt::CycElt(const Rational& r, int n) {
  CycAccumulator acc(n);
  acc.add(0, r);
  *this = acc.finish();
}

CycElt CycElt::root_of_unity(int n, std::int64_t j) {
  CycAccumulator acc(n);
  acc.add(j, Rational(1));
  return acc.finish();
}

CycElt CycElt::from_powers(int n, const std::vector<Rational>& coeffs) {
  CycAccumulator acc(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc.add(static_cast<std::int64_t>(i), coeffs[i]);
  return acc.finish();
}

CycElt CycElt::from_terms(int n, std::vector<Term> terms) {
  require_modulus(n);
  std::sort(terms.begin(), terms.end(), [](const CycElt::Term& a, const CycElt::Term& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!is_basis_exponent(n, terms[i].first)) {
      throw std::invalid_argument("exponent " + std::to_string(terms[i].first) +
                                  " is not in the Zumbroich basis of Q_" + std::to_string(n));
    }
    if (terms[i].second == 0) throw std::invalid_argument("zero coefficient in term list");
    if (i > 0 && terms[i].first == terms[i - 1].first) throw std::invalid_argument("repeated exponent in term list");
  }
  CycElt out;
  out.n_ = n;
  out.terms_ = std::move(terms);
  return out;
}

Rational CycElt::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rational(0);
}

CycElt& CycElt::operator+=(const CycElt& other) {
  if (other.n_ != n_) {
    const int N = static_cast<int>(lcm(n_, other.n_));
    *this = embed(*this, N);
    return *this += embed(other, N);
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

CycElt& CycElt::operator-=(const CycElt& other) { return *this += -other; }

CycElt CycElt::operator-() const {
  CycElt out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

CycElt& CycElt::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= scalar;
  return *this;
}

CycElt& CycElt::operator*=(const CycElt& other) {
  *this = *this * other;
  return *this;
}

namespace {

// Sum of |coefficient| when every coefficient is an integer below 2^31, else -1.
std::int64_t small_integral_weight(const CycElt& x) {
  std::int64_t w = 0;
  for (const auto& [e, c] : x.terms()) {
    if (c.get_den() != 1 || !c.get_num().fits_sint_p()) return -1;
    const long v = c.get_num().get_si();
    if (v > (1L << 31) || v < -(1L << 31)) return -1;
    w += v < 0 ? -v : v;
  }
  return w;
}

}  // namespace

// Integer coefficients with a safe magnitude bound: multiply and reduce in
// int64 on a dense array. Reduction at an odd prime spreads a coefficient over
// p - 1 slots, so the absolute sum grows by at most that factor per component.
std::optional<CycElt> CycElt::multiply_small_integral(const CycElt& a, const CycElt& b) {
  const std::int64_t wa = small_integral_weight(a);
  const std::int64_t wb = small_integral_weight(b);
  if (wa < 0 || wb < 0) return std::nullopt;
  const int n = a.n_;
  const auto& comps = modulus_info(n).components;
  long double bound = static_cast<long double>(wa) * static_cast<long double>(wb);
  for (const auto& comp : comps) bound *= comp.p == 2 ? 1 : comp.p - 1;
  if (bound > 4.0e18L) return std::nullopt;
  std::vector<std::int64_t> dense(n, 0);
  std::vector<std::pair<int, std::int64_t>> tb;
  for (const auto& [eb, cb] : b.terms_) tb.emplace_back(eb, cb.get_num().get_si());
  for (const auto& [ea, ca] : a.terms_) {
    const std::int64_t va = ca.get_num().get_si();
    for (const auto& [eb, cb] : tb) {
      int idx = ea + eb;
      if (idx >= n) idx -= n;
      dense[idx] += va * cb;
    }
  }
  for (const auto& comp : comps) {
    for (int i = 0; i < n; ++i) {
      if (dense[i] == 0 || !is_bad(comp, i)) continue;
      const std::int64_t c = dense[i];
      dense[i] = 0;
      const int steps = comp.p == 2 ? 1 : comp.p - 1;
      int j = i;
      for (int s = 0; s < steps; ++s) {
        j += comp.shift;
        if (j >= n) j -= n;
        dense[j] -= c;
      }
    }
  }
  CycElt out;
  out.n_ = n;
  for (int i = 0; i < n; ++i) {
    if (dense[i] != 0) out.terms_.emplace_back(i, Rational(static_cast<long>(dense[i])));
  }
  return out;
}

CycElt operator*(const CycElt& a, const CycElt& b) {
  const int N = a.n_ == b.n_ ? a.n_ : static_cast<int>(lcm(a.n_, b.n_));
  if (a.is_zero() || b.is_zero()) return CycElt(Rational(0), N);
  if (a.n_ == b.n_) {
    if (auto fast = CycElt::multiply_small_integral(a, b)) return std::move(*fast);
  }
  // Monomials multiply directly at modulus N; embedding the factors first
  // would expand them into far more terms than the product has.
  const std::int64_t sa = N / a.n_, sb = N / b.n_;
  CycAccumulator acc(N);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      acc.add(ea * sa + eb * sb, prod);
    }
  }
  return acc.finish();
}

CycElt hermitian_sum(std::span<const CycElt> a, std::span<const CycElt> b, std::span<const std::int64_t> w,
                     int n) {
  if (a.size() != b.size() || a.size() != w.size()) throw std::invalid_argument("hermitian_sum: length mismatch");
  std::vector<CycElt> embedded;
  embedded.reserve(2 * a.size());
  std::vector<const CycElt*> ea, eb;
  const auto at_n = [&](const CycElt& x) -> const CycElt* {
    if (x.modulus() == n) return &x;
    embedded.push_back(embed(x, n));
    return &embedded.back();
  };
  long double bound = 0;
  bool integral = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ea.push_back(at_n(a[k]));
    eb.push_back(at_n(b[k]));
    const std::int64_t wa = small_integral_weight(*ea.back());
    const std::int64_t wb = small_integral_weight(*eb.back());
    if (wa < 0 || wb < 0) integral = false;
    bound += static_cast<long double>(wa) * wb * (w[k] < 0 ? -w[k] : w[k]);
  }
  if (!integral || bound > 4.0e18L) {
    CycElt sum(Rational(0), n);
    for (std::size_t k = 0; k < a.size(); ++k) sum += *ea[k] * conjugate(*eb[k]) * Rational(static_cast<long>(w[k]));
    return sum;
  }
  // Products of powers of zeta_n are summed unreduced; one reduction at the end.
  std::vector<std::int64_t> dense(n, 0);
  std::vector<std::pair<int, std::int64_t>> t1, t2;
  const auto load = [](const CycElt& x, std::vector<std::pair<int, std::int64_t>>& out) {
    out.clear();
    for (const auto& [e, c] : x.terms()) out.emplace_back(e, c.get_num().get_si());
  };
  for (std::size_t k = 0; k < a.size(); ++k) {
    load(*ea[k], t1);
    load(*eb[k], t2);
    for (const auto& [e1, c1] : t1) {
      const std::int64_t v1 = c1 * w[k];
      for (const auto& [e2, c2] : t2) {
        int idx = e1 - e2;
        if (idx < 0) idx += n;
        dense[idx] += v1 * c2;
      }
    }
  }
  CycAccumulator acc(n);
  for (int i = 0; i < n; ++i) {
    if (dense[i] != 0) acc.add(i, Rational(static_cast<long>(dense[i])));
  }
  return acc.finish();
}

bool operator==(const CycElt& a, const CycElt& b) {
  if (a.n_ == b.n_) return a.terms_ == b.terms_;
  const int N = static_cast<int>(lcm(a.n_, b.n_));
  return embed(a, N).terms_ == embed(b, N).terms_;
}

std::strong_ordering compare_canonical(const CycElt& a, const CycElt& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  const std::size_t common = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    const int r = cmp(a.terms_[i].second, b.terms_[i].second);
    if (r != 0) return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ---------------------------------------------------------------------------
// Galois action, embeddings, descent

CycElt galois(const CycElt& x, std::int64_t k) {
  const int n = x.modulus();
  if (gcd(k, n) != 1) {
    throw std::domain_error("galois: " + std::to_string(k) + " is not coprime to " + std::to_string(n));
  }
  const std::int64_t kk = mod(k, n);
  if (kk == 1 % n) return x;
  CycAccumulator acc(n);
  for (const auto& [e, c] : x.terms()) acc.add(e * kk % n, c);
  return acc.finish();
}

CycElt conjugate(const CycElt& x) { return galois(x, -1); }

std::int64_t sigma_exponent(std::int64_t n, int e) {
  if (e < 1) throw std::invalid_argument("sigma_e requires e >= 1");
  const auto [a, odd] = split_prime_part(n, 2);
  const std::int64_t two_part = n / odd;
  const std::int64_t twist = mod(1 + (std::int64_t{1} << std::min(e, 62)), two_part);
  return crt(1 % odd, odd, twist, two_part);
}

CycElt sigma_e(const CycElt& x, int e) { return galois(x, sigma_exponent(x.modulus(), e)); }

CycElt embed(const CycElt& x, int N) {
  const int n = x.modulus();
  if (N % n != 0) {
    throw std::invalid_argument("embed: " + std::to_string(N) + " is not a multiple of " + std::to_string(n));
  }
  if (N == n) return x;
  const std::int64_t step = N / n;
  CycAccumulator acc(N);
  for (const auto& [e, c] : x.terms()) acc.add(e * step, c);
  return acc.finish();
}

CycElt at_modulus(const CycElt& x, int m) {
  require_modulus(m);
  if (m == x.modulus()) return x;
  const int L = static_cast<int>(lcm(x.modulus(), m));
  CycElt y = embed(x, L);
  if (L == m) return y;
  // Each Zumbroich basis element of Q_m embeds into Q_L as a signed sum of
  // basis elements of Q_L, with pairwise disjoint supports.
  std::vector<CycElt::Term> terms;
  for (int b : zumbroich_basis(m)) {
    const CycElt image = embed(CycElt::root_of_unity(m, b), L);
    const auto& [j0, s0] = image.terms().front();
    Rational c = y.coefficient(j0) / s0;
    if (c != 0) terms.emplace_back(b, std::move(c));
  }
  CycElt out = CycElt::from_terms(m, std::move(terms));
  if (!(embed(out, L) == y)) {
    throw std::domain_error("at_modulus: element does not lie in Q_" + std::to_string(m));
  }
  return out;
}

std::pair<int, CycElt> conductor_of_element(const CycElt& x) {
  const int n = x.modulus();
  for (std::int64_t m : divisors(n)) {
    bool fixed = true;
    for (std::int64_t k = 1 + m; k < n && fixed; k += m) {
      if (gcd(k, n) != 1) continue;
      fixed = galois(x, k) == x;
    }
    if (fixed) return {static_cast<int>(m), at_modulus(x, static_cast<int>(m))};
  }
  return {n, x};
}

bool is_rational(const CycElt& x) {
  if (x.is_zero()) return true;
  const CycElt one(Rational(1), x.modulus());
  if (one.terms().size() != x.terms().size()) return false;
  const Rational ratio = x.terms().front().second / one.terms().front().second;
  for (std::size_t i = 0; i < x.terms().size(); ++i) {
    if (x.terms()[i].first != one.terms()[i].first) return false;
    if (x.terms()[i].second != ratio * one.terms()[i].second) return false;
  }
  return true;
}

Rational to_rational(const CycElt& x) {
  if (!is_rational(x)) throw std::domain_error("to_rational: element is not rational");
  if (x.is_zero()) return Rational(0);
  const CycElt one(Rational(1), x.modulus());
  return x.terms().front().second / one.terms().front().second;
}

bool is_integral(const CycElt& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const CycElt::Term& t) { return t.second.get_den() == 1; });
}

}  // namespace charfield
