#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zsig/orbit.hpp"
#include "zsig/poly.hpp"

namespace zsig {

// Index sets of coefficients whose sign agrees (P) or disagrees (N) with the
// leading term, for z -> +inf (plus) and z -> -inf (minus).
struct SignSets {
  std::vector<int> P_plus, P_minus, N_plus, N_minus;
  int n_plus = 1;
  int n_minus = 1;
};

SignSets compute_sign_sets(const PolyQ& f);

// Both admissibility inequalities at z, evaluated exactly. Throws
// DomainError when |z| < 1.
bool check_condition3(const PolyQ& f, const Rational& z);

// Checks |f^k(z)| >= |z| for k = 1..K in exact arithmetic. Requires |z| >= 1
// and check_condition3(f, z) (DomainError otherwise); false means the growth
// lemma is contradicted.
bool prop31_check(const PolyQ& f, const Rational& z, int K, const OrbitOptions& opts = {});

// Number of distinct prime factors; omega(1) = 0.
int omega(std::uint64_t n);

// Sum over distinct primes q | n of d^(n/q).
Integer s_d(unsigned d, std::uint64_t n);

// Audit of 2 omega(n) + 1 < d^(n/2) over 2 <= n <= n_max, decided exactly as
// (2 omega(n) + 1)^2 versus d^n.
struct OmegaAudit {
  unsigned d = 0;
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> equalities;  // both sides equal
  std::vector<std::uint64_t> violations;  // left side strictly larger
  bool no_strict_violations() const { return violations.empty(); }
  bool holds() const { return violations.empty() && equalities.empty(); }
};

// Requires d >= 3.
OmegaAudit omega_inequality_check(unsigned d, std::uint64_t n_max);

enum class GrowthCertificate { none, condition3, trinomial_surrogate, external };

std::string to_string(GrowthCertificate g);

struct BoundResult {
  double n_max = 0;
  long n_max_floor = 0;
  double hhat_lower_used = 0;
  double C_used = 0;
  bool certified = false;
  GrowthCertificate growth = GrowthCertificate::none;
};

struct BoundOptions {
  // The caller's hhat_lower is a proven lower bound.
  bool hhat_certified = true;
  // The caller has its own proof that |f^n(0)| >= 1 for all n.
  bool external_growth = false;
};

// n <= (2 / log d) log(d C / ((d-1) hhat_lower)) + 2 for every n in Z(f, 0),
// with C rounded up, hhat_lower rounded down and the result rounded up.
// Throws DomainError when hhat_lower <= 0.
BoundResult theorem1_bound(const PolyQ& f, double hhat_lower, double C, const BoundOptions& opts = {});

// z^d + z^(d-1) + c with |c| > 2, where |f(z)| >= |z|^(d-2) for |z| >= |c|
// stands in for the admissibility inequality.
bool trinomial_growth_surrogate(const PolyQ& f);

}  // namespace zsig
