#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "stabrange/partition.hpp"
#include "stabrange/rational.hpp"
#include "stabrange/symchar.hpp"

namespace stabrange {

// Polynomial in the cycle-count functions X_1, X_2, ... with exact rational
// coefficients, stored as expanded monomials. deg(X_j) = j. Binomial-basis
// form is a presentation-layer conversion.
class CharPoly {
 public:
  using Exponents = std::vector<unsigned>;  // e[0] = exponent of X_1; trimmed

  static constexpr int kDegMinusInfinity = std::numeric_limits<int>::min();

  CharPoly() = default;  // zero polynomial
  static CharPoly constant(Rat c);
  // X_j. When char_p > 0, refuses j divisible by char_p; char_p must be 0 or
  // prime.
  static CharPoly variable(int j, int char_p = 0);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  Rat coefficient(const Exponents& e) const;

  CharPoly& operator+=(const CharPoly& other);
  CharPoly& operator-=(const CharPoly& other);
  CharPoly& operator*=(const Rat& scalar);
  CharPoly operator-() const;
  friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
  friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }
  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
  friend CharPoly operator*(CharPoly a, const Rat& s) { return a *= s; }
  bool operator==(const CharPoly& other) const { return terms_ == other.terms_; }

  // P(a_1(lambda), a_2(lambda), ...) reading lambda as a cycle type.
  Rat evaluate(const Partition& lambda) const;

  // Weighted degree with deg X_j = j; kDegMinusInfinity for zero.
  int degree() const;

  // Unique expansion in the basis {prod_j binom(X_j, a_j)}; terms ordered by
  // weighted degree descending, then by highest variable index.
  std::vector<std::pair<Exponents, Rat>> to_binomial_basis() const;
  static CharPoly from_binomial_terms(
      const std::vector<std::pair<Exponents, Rat>>& terms);

  // Paper-style rendering of the binomial-basis form, e.g.
  // "X4 + X3 X1 + C(X2,2) + X2 C(X1,2) + C(X1,4) - X3 + 2 C(X1,3) - X1".
  std::string pretty() const;

  void add_term(const Exponents& e, const Rat& c);

 private:
  std::map<Exponents, Rat> terms_;
};

// Falling-factorial binomial of a polynomial: P(P-1)...(P-k+1)/k!.
CharPoly binom_poly(const CharPoly& p, int k);

// Linear operator replacing each power X_j^e by the falling factorial
// X_j(X_j-1)...(X_j-e+1), per variable independently.
CharPoly umbral_down(const CharPoly& p);

// Coefficients of t^0..t^J in prod_{i>=1} (1-t^i)^(-X_i): the character
// polynomials of n -> Sym^j of the defining representation.
std::vector<CharPoly> sym_series(int J, bool override_caps = false);

// Coefficients of t^0..t^J in prod_{i>=1} (1-t^i)^(1-X_i): the character
// polynomials of the graded pieces of the univariate coinvariant algebra.
std::vector<CharPoly> coinv_series(int J, bool override_caps = false);

// sum_{r=0}^{delta} sum_{lambda |- r} chi_{W_r}(lambda)
//   binom(X_1 - h - 1, a_1(lambda)) prod_{j>=2} binom(X_j, a_j(lambda)),
// where W[r] is a class function on S_r and h is the local-degree offset.
// In a char-p context, terms whose lambda has a part divisible by p drop out
// and variables X_j with p | j never occur.
CharPoly def_poly(const std::vector<ClassFunction>& W, int h, int char_p = 0);

}  // namespace stabrange
