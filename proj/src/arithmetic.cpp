#include "zsig/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>

#include "zsig/errors.hpp"

namespace zsig {

namespace {

constexpr std::array<unsigned long, 13> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Strong probable-prime test to base a; n odd, n > a + 1.
bool strong_probable_prime(const Integer& n, const Integer& a) {
  Integer nm1 = n - 1;
  Integer d = nm1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

Integer mod_half(Integer x, const Integer& n) {
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  return x / 2;
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
bool strong_lucas_probable_prime(const Integer& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  long D = 5;
  while (true) {
    Integer dd(D);
    int j = mpz_jacobi(dd.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dd) != n) return false;
    D = D > 0 ? -(D + 2) : -D + 2;
  }
  const Integer Dz(D);
  Integer Q = (1 - Dz) / 4;
  Q %= n;
  if (Q < 0) Q += n;

  Integer d = n + 1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  Integer U = 1, V = 1, Qk = Q;
  for (long bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
    U = U * V % n;
    V = (V * V - 2 * Qk) % n;
    Qk = Qk * Qk % n;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      Integer U2 = mod_half(U + V, n);
      Integer V2 = (Dz * U + V) % n;
      if (V2 < 0) V2 += n;
      V = mod_half(V2, n);
      U = U2 % n;
      Qk = Qk * Q % n;
    }
  }
  U %= n;
  V %= n;
  if (V < 0) V += n;
  if (U == 0 || V == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    V = (V * V - 2 * Qk) % n;
    if (V < 0) V += n;
    if (V == 0) return true;
    Qk = Qk * Qk % n;
  }
  return false;
}

std::uint64_t low_word(const Integer& m) {
  return static_cast<std::uint64_t>(mpz_getlimbn(m.get_mpz_t(), 0));
}

std::uint64_t limbs(const Integer& m) {
  return std::max<std::uint64_t>(1, mpz_size(m.get_mpz_t()));
}

enum class Primality { prime, probable_prime, composite, unknown };

class WorkMeter {
 public:
  explicit WorkMeter(std::uint64_t budget) : remaining_(budget) {}
  bool charge(std::uint64_t units) {
    if (units > remaining_) {
      remaining_ = 0;
      return false;
    }
    remaining_ -= units;
    return true;
  }
  bool can_afford(std::uint64_t units) const { return units <= remaining_; }
  bool exhausted() const { return remaining_ == 0; }

 private:
  std::uint64_t remaining_;
};

Primality classify(const Integer& m, int rounds, WorkMeter& meter) {
  const std::uint64_t one_test = static_cast<std::uint64_t>(mpz_sizeinbase(m.get_mpz_t(), 2)) * limbs(m);
  const bool proven_range = m < deterministic_prime_limit();
  const std::uint64_t tests = proven_range ? kWitnessBases.size() : static_cast<std::uint64_t>(rounds) + 3;
  if (!meter.charge(one_test * tests)) return Primality::unknown;
  if (!is_prime(m, rounds)) return Primality::composite;
  return proven_range ? Primality::prime : Primality::probable_prime;
}

// Brent's variant of Pollard rho with polynomial x^2 + c.
std::optional<Integer> rho_brent(const Integer& n, std::mt19937_64& rng, WorkMeter& meter) {
  const std::uint64_t cost = 2 * limbs(n);
  constexpr std::uint64_t kBatch = 128;
  while (!meter.exhausted()) {
    Integer c = Integer(static_cast<unsigned long>(rng() % 1000000007ULL + 1)) % n;
    Integer y = Integer(static_cast<unsigned long>(rng() % 1000000007ULL)) % n;
    auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    Integer x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    bool out_of_budget = false;
    while (g == 1) {
      x = y;
      if (!meter.charge(r * cost)) {
        out_of_budget = true;
        break;
      }
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t run = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < run; ++i) {
          y = step(y);
          q = q * abs(x - y) % n;
        }
        if (!meter.charge(run * 2 * cost)) {
          out_of_budget = true;
          break;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += run;
      }
      if (out_of_budget) break;
      r *= 2;
    }
    if (out_of_budget) return std::nullopt;
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        if (!meter.charge(cost)) return std::nullopt;
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

const std::vector<std::uint32_t>& cached_primes() {
  static const std::vector<std::uint32_t> table = primes_up_to(1000000);
  return table;
}

}  // namespace

const Integer& deterministic_prime_limit() {
  static const Integer limit("3317044064679887385961981");
  return limit;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(const Integer& m, int rounds) {
  if (m < 2) return false;
  for (unsigned long p : kWitnessBases) {
    if (m == p) return true;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
  }
  if (m < 43 * 43) return true;
  if (m < deterministic_prime_limit()) {
    for (unsigned long a : kWitnessBases) {
      if (!strong_probable_prime(m, Integer(a))) return false;
    }
    return true;
  }
  if (!strong_probable_prime(m, Integer(2))) return false;
  if (!strong_lucas_probable_prime(m)) return false;
  std::mt19937_64 rng(low_word(m) ^ 0x9e3779b97f4a7c15ULL);
  gmp_randclass gen(gmp_randinit_mt);
  gen.seed(static_cast<unsigned long>(rng()));
  const Integer span = m - 4;
  for (int i = 0; i < rounds; ++i) {
    Integer a = gen.get_z_range(span) + 2;
    if (!strong_probable_prime(m, a)) return false;
  }
  return true;
}

unsigned long v_p(const Integer& m, const Integer& p) {
  if (m == 0) throw DomainError("v_p(0) is undefined");
  if (p < 2) throw DomainError("v_p needs a prime p >= 2");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

std::vector<Integer> FactorReport::known_primes() const {
  std::vector<Integer> out;
  out.reserve(factored.size() + 1);
  for (const auto& pp : factored) out.push_back(pp.prime);
  if (status == CofactorStatus::probable_prime) out.push_back(cofactor);
  std::sort(out.begin(), out.end());
  return out;
}

FactorReport factor(const Integer& m, const FactorOptions& opts) {
  if (m < 1) throw DomainError("factor needs a positive integer");
  FactorReport report;
  report.input = m;
  std::map<Integer, unsigned> found;
  Integer rest = m;

  // Trial division, batching primes so one word-sized remainder per batch
  // screens several primes at once.
  std::vector<std::uint32_t> local;
  const std::vector<std::uint32_t>* table = &cached_primes();
  if (opts.trial_bound > 1000000) {
    local = primes_up_to(opts.trial_bound);
    table = &local;
  }
  Integer p_z;
  std::size_t i = 0;
  while (i < table->size() && (*table)[i] <= opts.trial_bound && rest > 1) {
    std::uint64_t batch = 1;
    std::size_t j = i;
    while (j < table->size() && (*table)[j] <= opts.trial_bound &&
           batch <= UINT64_MAX / (*table)[j]) {
      batch *= (*table)[j];
      ++j;
    }
    const std::uint64_t rem = mpz_fdiv_ui(rest.get_mpz_t(), batch);
    for (std::size_t k = i; k < j; ++k) {
      const std::uint32_t p = (*table)[k];
      if (rem % p != 0) continue;
      p_z = p;
      unsigned e = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p_z.get_mpz_t()));
      found[p_z] += e;
    }
    // Once p^2 exceeds what is left, the remainder is 1 or prime.
    const Integer last = (*table)[j - 1];
    if (rest < last * last) break;
    i = j;
  }

  WorkMeter meter(opts.rho_budget);
  std::mt19937_64 rng(opts.seed ^ (low_word(m) * 0x2545F4914F6CDD1DULL));
  std::vector<Integer> pending;
  std::vector<Integer> uncertified;
  std::vector<Integer> unsplit;
  if (rest > 1) pending.push_back(rest);
  const Integer bound_sq = Integer(opts.trial_bound) * opts.trial_bound;
  const bool trial_done = opts.trial_bound >= 2;

  while (!pending.empty()) {
    Integer x = std::move(pending.back());
    pending.pop_back();
    if (trial_done && x < bound_sq && x <= rest) {
      // Every prime below the trial bound was already removed.
      found[x] += 1;
      continue;
    }
    Primality kind = classify(x, opts.primality_rounds, meter);
    if (kind == Primality::prime) {
      found[x] += 1;
      continue;
    }
    if (kind == Primality::probable_prime) {
      uncertified.push_back(x);
      continue;
    }
    if (kind == Primality::unknown) {
      unsplit.push_back(x);
      continue;
    }
    Integer root;
    if (mpz_perfect_square_p(x.get_mpz_t())) {
      mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    auto split = rho_brent(x, rng, meter);
    if (!split) {
      unsplit.push_back(x);
      continue;
    }
    pending.push_back(x / *split);
    pending.push_back(*split);
  }

  for (const auto& [p, e] : found) report.factored.push_back(PrimePower{p, e});
  report.cofactor = 1;
  for (const auto& u : uncertified) report.cofactor *= u;
  for (const auto& u : unsplit) report.cofactor *= u;
  if (unsplit.empty() && uncertified.empty()) {
    report.status = CofactorStatus::one;
  } else if (unsplit.empty() && uncertified.size() == 1) {
    report.status = CofactorStatus::probable_prime;
  } else {
    report.status = CofactorStatus::composite_unfactored;
  }
  return report;
}

}  // namespace zsig
