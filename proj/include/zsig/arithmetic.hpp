#pragma once

#include <cstdint>
#include <vector>

#include "zsig/rational.hpp"

namespace zsig {

// Miller-Rabin with the first thirteen prime bases is a proof below this
// bound (3.317e24).
const Integer& deterministic_prime_limit();

// Deterministic below deterministic_prime_limit(); above it, BPSW (base-2
// strong test plus strong Lucas) followed by `rounds` extra Miller-Rabin
// rounds with bases derived from m. Returns false for m <= 1.
bool is_prime(const Integer& m, int rounds = 64);

// Largest k with p^k | m. Throws DomainError when m == 0 or p < 2.
unsigned long v_p(const Integer& m, const Integer& p);

// Sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

enum class CofactorStatus {
  one,                   // factorization complete
  probable_prime,        // cofactor is a single prime beyond the proven range
  composite_unfactored,  // budget ran out before cofactor was split or classified
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct FactorOptions {
  std::uint32_t trial_bound = 1000000;
  // Work units: one unit is one multiplication modulo a one-limb number;
  // an operation on an L-limb number costs L units.
  std::uint64_t rho_budget = 100000000;
  int primality_rounds = 64;
  std::uint64_t seed = 0;
};

struct FactorReport {
  Integer input;
  std::vector<PrimePower> factored;  // ascending, proven primes
  Integer cofactor = 1;
  CofactorStatus status = CofactorStatus::one;

  bool complete() const { return status != CofactorStatus::composite_unfactored; }
  // All primes known to divide the input, including a probable-prime cofactor.
  std::vector<Integer> known_primes() const;
};

// Trial division up to opts.trial_bound, then Pollard rho (Brent) within
// opts.rho_budget. Deterministic in (m, opts). Throws DomainError for m < 1.
FactorReport factor(const Integer& m, const FactorOptions& opts = {});

}  // namespace zsig
