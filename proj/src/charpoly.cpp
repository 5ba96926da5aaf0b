#include "stabrange/charpoly.hpp"

#include <algorithm>
#include <sstream>

#include "stabrange/caps.hpp"

namespace stabrange {

namespace {

void trim(CharPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int weighted_degree(const CharPoly::Exponents& e) {
  int d = 0;
  for (size_t j = 0; j < e.size(); ++j) d += static_cast<int>((j + 1) * e[j]);
  return d;
}

// Canonical display order: weighted degree descending, then the exponent
// vector compared from the highest variable down (matching how the series
// expansions are usually written out).
bool display_less(const CharPoly::Exponents& a, const CharPoly::Exponents& b) {
  int da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da > db;
  size_t m = std::max(a.size(), b.size());
  for (size_t i = m; i-- > 0;) {
    unsigned ea = i < a.size() ? a[i] : 0;
    unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

}  // namespace

CharPoly CharPoly::constant(Rat c) {
  CharPoly p;
  p.add_term({}, c);
  return p;
}

CharPoly CharPoly::variable(int j, int char_p) {
  if (j < 1) fail(errc::invalid_params, "variable index must be >= 1");
  if (char_p != 0 && !is_prime(char_p))
    fail(errc::invalid_characteristic,
         "characteristic must be 0 or prime, got " + std::to_string(char_p));
  if (char_p > 0 && j % char_p == 0)
    fail(errc::variable_in_characteristic,
         "X_" + std::to_string(j) + " is not available in characteristic " +
             std::to_string(char_p));
  CharPoly p;
  Exponents e(j, 0);
  e[j - 1] = 1;
  p.add_term(e, Rat(1));
  return p;
}

Rat CharPoly::coefficient(const Exponents& e) const {
  Exponents key = e;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second;
}

void CharPoly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  Exponents key = e;
  trim(key);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CharPoly& CharPoly::operator+=(const CharPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CharPoly& CharPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

CharPoly CharPoly::operator-() const {
  CharPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  CharPoly prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      CharPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      prod.add_term(e, ca * cb);
    }
  }
  return prod;
}

Rat CharPoly::evaluate(const Partition& lambda) const {
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      long a = part_count(lambda, static_cast<int>(j + 1));
      Rat base(a);
      for (unsigned t = 0; t < e[j]; ++t) term *= base;
    }
    total += term;
  }
  return total;
}

int CharPoly::degree() const {
  if (terms_.empty()) return kDegMinusInfinity;
  int d = kDegMinusInfinity;
  for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree(e));
  return d;
}

CharPoly binom_poly(const CharPoly& p, int k) {
  if (k < 0) fail(errc::invalid_params, "binom_poly needs k >= 0");
  CharPoly acc = CharPoly::constant(Rat(1));
  for (int t = 0; t < k; ++t)
    acc = acc * (p - CharPoly::constant(Rat(t)));
  if (k > 1) acc *= Rat(1) / Rat(factorial_int(k));
  return acc;
}

CharPoly umbral_down(const CharPoly& p) {
  CharPoly out;
  for (const auto& [e, c] : p.terms()) {
    CharPoly term = CharPoly::constant(c);
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      CharPoly x = CharPoly::variable(static_cast<int>(j + 1));
      CharPoly falling = CharPoly::constant(Rat(1));
      for (unsigned t = 0; t < e[j]; ++t)
        falling = falling * (x - CharPoly::constant(Rat(static_cast<long>(t))));
      term = term * falling;
    }
    out += term;
  }
  return out;
}

std::vector<std::pair<CharPoly::Exponents, Rat>> CharPoly::to_binomial_basis()
    const {
  std::vector<std::pair<Exponents, Rat>> out;
  CharPoly rest = *this;
  while (!rest.terms_.empty()) {
    // Lexicographically largest exponent vector is maximal under the
    // componentwise order, so subtracting its binomial-basis element only
    // introduces smaller exponents.
    auto it = std::prev(rest.terms_.end());
    Exponents e = it->first;
    Rat lead = it->second;
    Rat coeff = lead;
    CharPoly basis_elem = CharPoly::constant(Rat(1));
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      coeff *= Rat(factorial_int(e[j]));
      basis_elem =
          basis_elem * binom_poly(variable(static_cast<int>(j + 1)), e[j]);
    }
    basis_elem *= coeff;
    rest -= basis_elem;
    out.emplace_back(std::move(e), std::move(coeff));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return display_less(a.first, b.first);
  });
  return out;
}

CharPoly CharPoly::from_binomial_terms(
    const std::vector<std::pair<Exponents, Rat>>& terms) {
  CharPoly p;
  for (const auto& [e, c] : terms) {
    CharPoly elem = CharPoly::constant(c);
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      elem = elem * binom_poly(variable(static_cast<int>(j + 1)), e[j]);
    }
    p += elem;
  }
  return p;
}

std::string CharPoly::pretty() const {
  auto terms = to_binomial_basis();
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string factors;
    for (size_t j = e.size(); j-- > 0;) {
      if (e[j] == 0) continue;
      if (!factors.empty()) factors += " ";
      std::string xj = "X" + std::to_string(j + 1);
      factors += e[j] == 1 ? xj : "C(" + xj + "," + std::to_string(e[j]) + ")";
    }
    if (factors.empty()) {
      os << rat_to_string(abs_c);
    } else {
      if (abs_c != 1) os << rat_to_string(abs_c) << " ";
      os << factors;
    }
  }
  return os.str();
}

namespace {

using Series = std::vector<CharPoly>;  // coefficient of t^d at index d

Series series_product(const Series& a, const Series& b, int J) {
  Series prod(J + 1);
  for (int i = 0; i <= J; ++i) {
    for (int j = 0; i + j <= J; ++j) {
      if (a[i].is_zero() || b[j].is_zero()) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  return prod;
}

// One truncated factor (1-t^i)^(-X_i + shift) expanded through binomials:
// term at t^{a i} is binom(X_i + a - 1 + shift', a) per the two expansions.
Series truncated_factor(int i, int J, int offset) {
  // offset = -1 gives binom(X_i + a - 1, a)  [sym series]
  // offset = -2 gives binom(X_i + a - 2, a)  [coinvariant series]
  Series f(J + 1);
  CharPoly x = CharPoly::variable(i);
  for (int a = 0; a * i <= J; ++a)
    f[a * i] += binom_poly(x + CharPoly::constant(Rat(a + offset)), a);
  return f;
}

Series expand_product(int J, int offset, bool override_caps) {
  check_cap(J, kSeriesCap, override_caps, errc::series_cap_exceeded,
            "series truncation order");
  if (J < 0) fail(errc::invalid_params, "series order must be >= 0");
  Series acc(J + 1);
  acc[0] = CharPoly::constant(Rat(1));
  for (int i = 1; i <= J; ++i)
    acc = series_product(acc, truncated_factor(i, J, offset), J);
  return acc;
}

}  // namespace

std::vector<CharPoly> sym_series(int J, bool override_caps) {
  return expand_product(J, -1, override_caps);
}

std::vector<CharPoly> coinv_series(int J, bool override_caps) {
  return expand_product(J, -2, override_caps);
}

CharPoly def_poly(const std::vector<ClassFunction>& W, int h, int char_p) {
  if (char_p != 0 && !is_prime(char_p))
    fail(errc::invalid_characteristic,
         "characteristic must be 0 or prime, got " + std::to_string(char_p));
  CharPoly total;
  CharPoly x1_shifted =
      CharPoly::variable(1, char_p) - CharPoly::constant(Rat(h + 1));
  for (size_t r = 0; r < W.size(); ++r) {
    if (W[r].n() != static_cast<int>(r))
      fail(errc::size_mismatch, "W[r] must be a class function on S_r");
    for (const auto& lambda : partitions_of(static_cast<int>(r))) {
      Rat chi = W[r].value(lambda);
      if (chi == 0) continue;
      if (char_p > 0) {
        bool divisible = false;
        for (int part : lambda.parts())
          if (part % char_p == 0) divisible = true;
        if (divisible) continue;  // chi_{W_r}(lambda) reads as 0
      }
      CharPoly term = binom_poly(x1_shifted, part_count(lambda, 1));
      for (auto [j, a] : part_counts(lambda)) {
        if (j == 1) continue;
        term = term * binom_poly(CharPoly::variable(j, char_p), a);
      }
      term *= chi;
      total += term;
    }
  }
  return total;
}

}  // namespace stabrange
