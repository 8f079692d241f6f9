#include <random>

#include "doctest.h"
#include "zsig/arithmetic.hpp"
#include "zsig/errors.hpp"

using namespace zsig;

namespace {

Integer product(const FactorReport& r) {
  Integer out = r.cofactor;
  for (const auto& pp : r.factored) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    out *= pk;
  }
  return out;
}

}  // namespace

TEST_CASE("is_prime examples") {
  CHECK(is_prime(677));
  CHECK_FALSE(is_prime(458330));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK(is_prime(45833));
}

TEST_CASE("is_prime agrees with a sieve up to 10^7") {
  const std::uint32_t bound = 10000000;
  std::vector<bool> composite(bound + 1, false);
  composite[0] = composite[1] = true;
  for (std::uint32_t i = 2; static_cast<std::uint64_t>(i) * i <= bound; ++i) {
    if (composite[i]) continue;
    for (std::uint32_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  std::size_t mismatches = 0;
  for (std::uint32_t m = 0; m <= bound; ++m) {
    if (is_prime(Integer(static_cast<unsigned long>(m))) == composite[m]) ++mismatches;
  }
  CHECK(mismatches == 0);
  CHECK(primes_up_to(100).size() == 25);
}

TEST_CASE("is_prime on known large numbers") {
  // Strong pseudoprimes to many small bases.
  CHECK_FALSE(is_prime(Integer("3825123056546413051")));
  CHECK_FALSE(is_prime(Integer("318665857834031151167461")));
  CHECK_FALSE(is_prime(Integer("3317044064679887385961981")));
  // 2^89 - 1 and 2^127 - 1 are Mersenne primes; 2^67 - 1 is not.
  Integer m89 = (Integer(1) << 89) - 1, m127 = (Integer(1) << 127) - 1, m67 = (Integer(1) << 67) - 1;
  CHECK(is_prime(m89));
  CHECK(is_prime(m127));
  CHECK_FALSE(is_prime(m67));
  const Integer m107 = (Integer(1) << 107) - 1;
  CHECK(is_prime(m107));
  CHECK_FALSE(is_prime(m89 * m107));
  // Carmichael numbers.
  for (unsigned long c : {561UL, 1105UL, 1729UL, 41041UL, 825265UL}) CHECK_FALSE(is_prime(c));
}

TEST_CASE("v_p") {
  CHECK(v_p(26, 2) == 1);
  CHECK(v_p(26, 13) == 1);
  CHECK(v_p(8, 2) == 3);
  CHECK(v_p(-8, 2) == 3);
  CHECK(v_p(9, 2) == 0);
  CHECK_THROWS_AS(v_p(0, 2), DomainError);
}

TEST_CASE("v_p is additive") {
  std::mt19937_64 rng(11);
  const std::vector<unsigned long> ps{2, 3, 5, 7, 11, 13, 101};
  for (int i = 0; i < 2000; ++i) {
    const Integer a = Integer(static_cast<unsigned long>(rng() % 1000000 + 1)) * ps[rng() % ps.size()];
    const Integer b = Integer(static_cast<unsigned long>(rng() % 1000000 + 1)) * ps[rng() % ps.size()];
    for (unsigned long p : ps) CHECK(v_p(a * b, p) == v_p(a, p) + v_p(b, p));
  }
}

TEST_CASE("factor examples") {
  const FactorReport a = factor(765);
  CHECK(a.factored == std::vector<PrimePower>{{3, 2}, {5, 1}, {17, 1}});
  CHECK(a.cofactor == 1);
  CHECK(a.status == CofactorStatus::one);

  const FactorReport b = factor(677);
  CHECK(b.factored == std::vector<PrimePower>{{677, 1}});

  const FactorReport c = factor(1);
  CHECK(c.factored.empty());
  CHECK(c.cofactor == 1);
  CHECK(c.status == CofactorStatus::one);

  CHECK_THROWS_AS(factor(0), DomainError);
}

TEST_CASE("factor splits with rho beyond trial division") {
  const Integer p("1000000007"), r("998244353"), s("1000000000039");
  const FactorReport rep = factor(p * p * r * s * 12);
  CHECK(rep.status == CofactorStatus::one);
  CHECK(rep.factored ==
        std::vector<PrimePower>{{2, 2}, {3, 1}, {Integer("998244353"), 1}, {p, 2}, {s, 1}});
  CHECK(product(rep) == rep.input);
}

TEST_CASE("factor reports large probable primes in the cofactor") {
  const Integer m127 = (Integer(1) << 127) - 1;
  const Integer big = m127 * m127 * 2;  // square is split, then classified
  const FactorReport rep = factor(big * 15);
  CHECK(product(rep) == big * 15);
  // 2^127 - 1 is above the proven range, so it stays in the cofactor.
  CHECK(rep.status == CofactorStatus::composite_unfactored);
  const FactorReport pp = factor(m127 * 6);
  CHECK(pp.status == CofactorStatus::probable_prime);
  CHECK(pp.cofactor == m127);
  CHECK(pp.known_primes() == std::vector<Integer>{2, 3, m127});
}

TEST_CASE("factor respects the rho budget") {
  const Integer p = (Integer(1) << 89) - 1;
  const Integer r = (Integer(1) << 107) - 1;
  FactorOptions opts;
  opts.rho_budget = 100000;
  const FactorReport rep = factor(p * r * 7, opts);
  CHECK(rep.status == CofactorStatus::composite_unfactored);
  CHECK(rep.cofactor == p * r);
  CHECK(product(rep) == rep.input);
}

TEST_CASE("factor reconstruction and determinism") {
  std::mt19937_64 rng(3);
  FactorOptions opts;
  opts.trial_bound = 1000;
  opts.rho_budget = 2000000;
  for (int i = 0; i < 300; ++i) {
    Integer m = 1;
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < parts; ++k) m *= Integer(static_cast<unsigned long>(rng() % 100000000 + 2));
    const FactorReport a = factor(m, opts);
    CHECK(product(a) == m);
    for (const auto& pp : a.factored) {
      CHECK(is_prime(pp.prime));
      CHECK(pp.exponent >= 1);
    }
    const FactorReport b = factor(m, opts);
    CHECK(a.factored == b.factored);
    CHECK(a.cofactor == b.cofactor);
  }
}
