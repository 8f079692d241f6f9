#include "zsig/zsigmondy.hpp"

#include <algorithm>
#include <string>

#include "zsig/errors.hpp"

namespace zsig {

namespace {

const OrbitEntry& entry_at(std::span<const OrbitEntry> orbit, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > orbit.size()) {
    throw DomainError("orbit index " + std::to_string(n) + " out of range");
  }
  return orbit[static_cast<std::size_t>(n) - 1];
}

}  // namespace

std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimitiveVerdict primitive_verdict(std::span<const OrbitEntry> orbit, int n,
                                   const FactorOptions* witness) {
  const OrbitEntry& target = entry_at(orbit, n);
  if (target.A == 0) throw DomainError("A_n = 0 only occurs on finite orbits");
  PrimitiveVerdict v;
  v.n = n;
  v.is_unit = target.is_unit();
  Integer r = target.abs_A();
  Integer g;
  for (int m = 1; m < n && r > 1; ++m) {
    const Integer& Am = entry_at(orbit, m).A;
    while (true) {
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), Am.get_mpz_t());
      if (g == 1) break;
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t());
    }
  }
  v.stripped_part = r;
  v.has_primitive = r > 1;
  if (witness != nullptr && v.has_primitive) {
    FactorReport rep = factor(r, *witness);
    v.witness_primes = rep.known_primes();
    v.witnesses_complete = rep.complete();
  } else {
    v.witnesses_complete = !v.has_primitive;
  }
  return v;
}

ZsigmondyReport zsigmondy_report(std::span<const OrbitEntry> orbit, const ZsigOptions& opts) {
  ZsigmondyReport rep;
  rep.horizon = static_cast<int>(orbit.size());
  FactorOptions trial_only = opts.factor;
  trial_only.rho_budget = 0;
  for (int n = 1; n <= rep.horizon; ++n) {
    PrimitiveVerdict v = primitive_verdict(orbit, n, opts.witnesses ? &opts.factor : nullptr);
    if (!v.has_primitive) rep.elements.push_back(n);
    if (opts.k_table) {
      // A witness prime is primitive at n, so k(p) = n.
      for (const auto& p : v.witness_primes) rep.k_table.emplace(p, n);
      const Integer absA = entry_at(orbit, n).abs_A();
      if (absA > 1) {
        FactorReport small = factor(absA, trial_only);
        for (const auto& pp : small.factored) {
          if (pp.prime <= opts.factor.trial_bound) rep.k_table.emplace(pp.prime, n);
        }
      }
    }
    rep.per_index.push_back(std::move(v));
  }
  return rep;
}

ZsigmondyReport zsigmondy_set(const PolyQ& f, int N, const ZsigOptions& opts) {
  if (!f.admissible()) {
    throw DomainError("a_1 != 0: the Zsigmondy machinery needs f with a_1 = 0");
  }
  OrbitStatus st = orbit(f, N, opts.orbit);
  if (st.finite()) {
    throw FiniteOrbitError("Zsigmondy set undefined for finite orbit: " + st.cycle_description());
  }
  return zsigmondy_report(st.entries, opts);
}

std::vector<RigidViolation> verify_rigid_divisibility(std::span<const OrbitEntry> orbit,
                                                      const std::map<Integer, int>& k_table) {
  std::vector<RigidViolation> out;
  const int N = static_cast<int>(orbit.size());
  for (const auto& [p, k] : k_table) {
    if (k < 1 || k > N) continue;
    bool touches_denominator = std::any_of(orbit.begin(), orbit.end(), [&](const OrbitEntry& e) {
      return mpz_divisible_p(e.B.get_mpz_t(), p.get_mpz_t()) != 0;
    });
    if (touches_denominator) continue;
    const unsigned long base = v_p(entry_at(orbit, k).A, p);
    for (int n = 1; n <= N; ++n) {
      const unsigned long expected = (n % k == 0) ? base : 0;
      const unsigned long actual = v_p(entry_at(orbit, n).A, p);
      if (actual != expected) out.push_back(RigidViolation{p, n, expected, actual});
    }
  }
  return out;
}

bool check_zsigmondy_divisibility(std::span<const OrbitEntry> orbit, int n) {
  const Integer absA = entry_at(orbit, n).abs_A();
  Integer product = 1;
  for (std::uint64_t q : distinct_prime_divisors(static_cast<std::uint64_t>(n))) {
    product *= entry_at(orbit, n / static_cast<int>(q)).abs_A();
  }
  return mpz_divisible_p(product.get_mpz_t(), absA.get_mpz_t()) != 0;
}

Cor23Result cor23_inequality(std::span<const OrbitEntry> orbit, int n) {
  if (n < 2) throw DomainError("cor23_inequality needs n >= 2");
  const Integer absA = entry_at(orbit, n).abs_A();
  Cor23Result r;
  r.lhs = log_abs(absA);
  Integer product = 1;
  for (std::uint64_t q : distinct_prime_divisors(static_cast<std::uint64_t>(n))) {
    const Integer a = entry_at(orbit, n / static_cast<int>(q)).abs_A();
    r.rhs += log_abs(a);
    product *= a;
  }
  r.holds = absA <= product;
  return r;
}

}  // namespace zsig
