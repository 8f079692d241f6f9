#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zsig/poly.hpp"

namespace zsig {

struct OrbitOptions {
  // Largest decimal digit count allowed for any numerator or denominator.
  std::size_t digit_budget = 200000;
};

// f^n(0) = A_n / B_n in lowest terms, B_n > 0.
struct OrbitEntry {
  int n = 0;
  Rational value;
  Integer A;
  Integer B;

  Integer abs_A() const { return abs(A); }
  bool is_unit() const { return abs(A) == 1; }
};

enum class OrbitKind { wandering, preperiodic, hit_zero };

struct OrbitStatus {
  OrbitKind kind = OrbitKind::wandering;
  // f^1(0), f^2(0), ... as far as they were computed. For finite orbits the
  // last entry is the first repeated value.
  std::vector<OrbitEntry> entries;
  // f^(tail + period)(0) == f^tail(0); hit_zero is the tail == 0 case.
  int tail = 0;
  int period = 0;
  // Only set by orbit_prefix: the digit budget stopped iteration early.
  bool truncated = false;

  bool finite() const { return kind != OrbitKind::wandering; }
  // "0 -> -1 -> 0" for finite orbits; empty otherwise.
  std::string cycle_description() const;
};

// Iterates f at 0 for n = 1..N. Stops early at the first repeated value.
// Throws BudgetExceeded when an iterate outgrows the digit budget.
OrbitStatus orbit(const PolyQ& f, int N, const OrbitOptions& opts = {});

// Same as orbit() but returns the entries computed before the budget was hit,
// with truncated = true, instead of throwing.
OrbitStatus orbit_prefix(const PolyQ& f, int N, const OrbitOptions& opts = {});

// x, f(x), ..., f^N(x). Throws BudgetExceeded.
std::vector<Rational> forward_orbit(const PolyQ& f, const Rational& x, int N,
                                    const OrbitOptions& opts = {});

// Largest digit count of numerator and denominator.
std::size_t rational_digits(const Rational& x);

}  // namespace zsig
