#pragma once

#include <map>
#include <span>
#include <vector>

#include "zsig/arithmetic.hpp"
#include "zsig/orbit.hpp"

namespace zsig {

struct PrimitiveVerdict {
  int n = 0;
  bool has_primitive = false;
  // |A_n| with every prime shared with some earlier A_m removed at full
  // multiplicity.
  Integer stripped_part = 1;
  // Primes of stripped_part found by budgeted factorization.
  std::vector<Integer> witness_primes;
  bool witnesses_complete = false;
  bool is_unit = false;
};

// Verdict for index n (1-based) of a wandering orbit. witness == nullptr
// skips factoring stripped_part.
PrimitiveVerdict primitive_verdict(std::span<const OrbitEntry> orbit, int n,
                                   const FactorOptions* witness = nullptr);

struct ZsigmondyReport {
  int horizon = 0;
  std::vector<int> elements;
  std::vector<PrimitiveVerdict> per_index;  // per_index[n - 1]
  std::map<Integer, int> k_table;           // p -> k(p) = min{n : p | A_n}
};

struct ZsigOptions {
  OrbitOptions orbit;
  FactorOptions factor;
  bool witnesses = true;
  bool k_table = true;
};

// Requires an admissible f (DomainError otherwise) and a wandering orbit up to
// N (FiniteOrbitError otherwise).
ZsigmondyReport zsigmondy_set(const PolyQ& f, int N, const ZsigOptions& opts = {});

// Report for an already computed wandering orbit prefix.
ZsigmondyReport zsigmondy_report(std::span<const OrbitEntry> orbit, const ZsigOptions& opts = {});

struct RigidViolation {
  Integer prime;
  int n = 0;
  unsigned long expected = 0;
  unsigned long actual = 0;
};

// Checks v_p(A_n) = v_p(A_k(p)) when k(p) | n and 0 otherwise, for every
// tabulated p coprime to all denominators B_m.
std::vector<RigidViolation> verify_rigid_divisibility(std::span<const OrbitEntry> orbit,
                                                      const std::map<Integer, int>& k_table);

// |A_n| divides the product of |A_{n/q}| over distinct primes q | n.
bool check_zsigmondy_divisibility(std::span<const OrbitEntry> orbit, int n);

struct Cor23Result {
  double lhs = 0;  // log |A_n|
  double rhs = 0;  // sum over q | n of log |A_{n/q}|
  bool holds = false;
};

// Necessary condition for n in Z(f, 0); `holds` is decided exactly on
// integers. Requires n >= 2.
Cor23Result cor23_inequality(std::span<const OrbitEntry> orbit, int n);

// Distinct prime divisors of n in ascending order.
std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n);

}  // namespace zsig
