#pragma once

#include <limits>
#include <map>
#include <string>

#include "zsig/orbit.hpp"
#include "zsig/poly.hpp"

namespace zsig {

// Relative slack applied to every floating-point bound, always in the
// direction that weakens the bound.
inline constexpr double kRelSlack = 1e-12;

inline double round_down(double x) { return x >= 0 ? x * (1 - kRelSlack) : x * (1 + kRelSlack); }
inline double round_up(double x) { return x >= 0 ? x * (1 + kRelSlack) : x * (1 - kRelSlack); }

enum class HeightMethod { telescoped, lemma41, ingram, family_trinomial };

std::string to_string(HeightMethod m);

// Certified enclosure lower <= hhat_f(x) <= upper. One-sided methods leave
// upper at +infinity.
struct HeightInterval {
  double lower = 0;
  double upper = std::numeric_limits<double>::infinity();
  HeightMethod method = HeightMethod::telescoped;
  int iterations = 0;  // iterates actually used
  double width() const { return upper - lower; }
};

// h(x) = log max(|num|, den); h(0) = 0.
double global_height(const Rational& x);

// log C_v at the archimedean place, with A bounded by
// sum_{j<d} |a_j/a_d|^(1/(d-j)) and B = |a_d|^(-1/d).
double local_log_C_archimedean(const PolyQ& f);

// log C_p for a prime p, computed exactly from valuations.
double local_log_C_prime(const PolyQ& f, const Integer& p);

struct GlobalC {
  double archimedean_logCv = 0;
  std::map<Integer, double> nonarch_contribs;  // only places with C_v > 1
  double total_C = 0;
};

// Sums log C_v over infinity and every prime dividing a coefficient numerator
// or denominator; all other places have C_v = 1.
GlobalC global_C(const PolyQ& f);

// [ (h(f^N x) - dC/(d-1)) / d^N, (h(f^N x) + dC/(d-1)) / d^N ], lower clipped
// at 0. When the digit budget stops iteration early the interval for the
// largest reachable N is returned and `iterations` records it.
HeightInterval canonical_height_interval(const PolyQ& f, const Rational& x, int N,
                                         const OrbitOptions& opts = {});

// Resultant of f1 against the constant f2, i.e. f2^d.
Integer resultant_with_constant(const ClearedPoly& cp, int d);

// hhat_f(x) >= d^-i [ h(f^i x) - log(|R| / D_lower) / (d-1) ] with R the
// resultant of the cleared numerator and denominator. Throws DomainError when
// D_lower <= 0.
HeightInterval lemma41_lower_bound(const PolyQ& f, const Rational& x, int i, double D_lower,
                                   const OrbitOptions& opts = {});

// Certified lower bound 1/s^d, s = max{2, |c|}, for z^d + z^e + c with
// |c| >= 1. Throws DomainError outside that family.
Rational trinomial_D_lower(const PolyQ& f);

struct DGrid {
  double half_width = 0;  // 0 selects 1 + max{2, 2 max|a_i/a_d|}
  int samples = 20001;
  int refine_rounds = 40;
};

// Non-certified estimate of min over t in R u {inf} of
// max{|f1(t)|, |f2|} / max{|t|^d, 1}. Diagnostics only.
double numeric_D_estimate(const ClearedPoly& cp, const DGrid& grid = {});

}  // namespace zsig
