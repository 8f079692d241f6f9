#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsig/rational.hpp"

namespace zsig {

// f = f1 / f2 with f1 in Z[z] and f2 the lcm of the coefficient
// denominators. The content of f1 is not removed.
struct ClearedPoly {
  std::vector<Integer> f1;  // ascending
  Integer f2;
};

// Dense polynomial over Q, coefficients in ascending order a_0..a_d.
class PolyQ {
 public:
  // Throws DomainError when the degree is below 2 or the leading
  // coefficient is zero.
  explicit PolyQ(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& constant_term() const { return coeffs_.front(); }

  // a_1 == 0: the shape the Zsigmondy and bound machinery needs.
  bool admissible() const { return coeffs_[1] == 0; }

  const ClearedPoly& cleared() const { return cleared_; }

  // Horner evaluation over the integers followed by a single reduction;
  // the result is in lowest terms.
  Rational operator()(const Rational& x) const;

  // "z^3 + 5/2" style.
  std::string to_string() const;
  // "5/2,0,0,1" style, the inverse of parse_poly's list form.
  std::string coeff_list() const;

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
  ClearedPoly cleared_;
};

// Accepts either an ascending comma-separated coefficient list
// ("5/2,0,0,1") or a sum of monomials in z ("z^3 + 5/2", "2*z^4 - z^2/3 + 1").
// Throws ParseError on malformed input, zero leading coefficient or degree < 2.
PolyQ parse_poly(std::string_view spec);

inline Rational eval(const PolyQ& f, const Rational& x) { return f(x); }

ClearedPoly clear_denominators(const PolyQ& f);

// z^d + z^e + c with d > e >= 2 and c != 0.
struct TrinomialForm {
  int d = 0;
  int e = 0;
  Rational c;
};

// z^d + c with c != 0.
struct BinomialForm {
  int d = 0;
  Rational c;
};

std::optional<TrinomialForm> as_trinomial(const PolyQ& f);
std::optional<BinomialForm> as_binomial(const PolyQ& f);

PolyQ make_trinomial(int d, int e, const Rational& c);
PolyQ make_binomial(int d, const Rational& c);

}  // namespace zsig
