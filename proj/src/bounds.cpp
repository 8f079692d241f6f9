#include "zsig/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "zsig/errors.hpp"
#include "zsig/heights.hpp"
#include "zsig/zsigmondy.hpp"

namespace zsig {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

// Left and right side of one admissibility inequality.
bool condition_side(const PolyQ& f, const std::vector<int>& negatives, int pivot, const Rational& absz) {
  Rational lhs = 0;
  Rational power = 1;
  for (int i = pivot + 1; i <= f.degree(); ++i) {
    power *= absz;
    lhs += abs(f.coeff(i)) * power;
  }
  Rational rhs = 1;
  for (int i : negatives) rhs += abs(f.coeff(i));
  return lhs >= rhs;
}

}  // namespace

std::string to_string(GrowthCertificate g) {
  switch (g) {
    case GrowthCertificate::none: return "none";
    case GrowthCertificate::condition3: return "condition3";
    case GrowthCertificate::trinomial_surrogate: return "trinomial_surrogate";
    case GrowthCertificate::external: return "external";
  }
  return "unknown";
}

SignSets compute_sign_sets(const PolyQ& f) {
  SignSets s;
  const int d = f.degree();
  const int lead_plus = sign_of(f.leading());
  const int lead_minus = (d % 2 == 0) ? lead_plus : -lead_plus;
  for (int i = 0; i <= d; ++i) {
    const Rational& a = f.coeff(i);
    const int sg = sign_of(a);
    const int alt = (i % 2 == 0) ? sg : -sg;
    (sg == 0 || sg == lead_plus ? s.P_plus : s.N_plus).push_back(i);
    (sg == 0 || alt == lead_minus ? s.P_minus : s.N_minus).push_back(i);
  }
  auto pivot = [](const std::vector<int>& neg) {
    return neg.empty() ? 1 : std::max(1, *std::max_element(neg.begin(), neg.end()));
  };
  s.n_plus = pivot(s.N_plus);
  s.n_minus = pivot(s.N_minus);
  return s;
}

bool check_condition3(const PolyQ& f, const Rational& z) {
  const Rational absz = abs(z);
  if (absz < 1) throw DomainError("the sign-set growth condition is only defined for |z| >= 1");
  const SignSets s = compute_sign_sets(f);
  return condition_side(f, s.N_plus, s.n_plus, absz) && condition_side(f, s.N_minus, s.n_minus, absz);
}

bool prop31_check(const PolyQ& f, const Rational& z, int K, const OrbitOptions& opts) {
  if (!check_condition3(f, z)) throw DomainError("prop31_check needs z satisfying the sign-set growth condition");
  const Rational absz = abs(z);
  Rational x = z;
  for (int k = 1; k <= K; ++k) {
    x = f(x);
    if (rational_digits(x) > opts.digit_budget) throw BudgetExceeded("digit budget exceeded in prop31_check");
    if (abs(x) < absz) return false;
  }
  return true;
}

int omega(std::uint64_t n) {
  if (n == 0) throw DomainError("omega(0) is undefined");
  return static_cast<int>(distinct_prime_divisors(n).size());
}

Integer s_d(unsigned d, std::uint64_t n) {
  if (n == 0) throw DomainError("s_d needs n >= 1");
  Integer total = 0;
  for (std::uint64_t q : distinct_prime_divisors(n)) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), d, n / q);
    total += term;
  }
  return total;
}

OmegaAudit omega_inequality_check(unsigned d, std::uint64_t n_max) {
  if (d < 3) throw DomainError("omega_inequality_check needs d >= 3");
  OmegaAudit audit;
  audit.d = d;
  audit.n_max = n_max;
  // Smallest-prime-factor sieve for omega over the whole range.
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n_max; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  Integer power = d;  // d^n
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    power *= d;
    int w = 0;
    for (std::uint64_t m = n; m > 1;) {
      const std::uint32_t p = spf[m];
      ++w;
      while (m % p == 0) m /= p;
    }
    const Integer lhs_sq = Integer((2 * w + 1) * (2 * w + 1));
    const int cmp_result = cmp(lhs_sq, power);
    if (cmp_result == 0) audit.equalities.push_back(n);
    if (cmp_result > 0) audit.violations.push_back(n);
  }
  return audit;
}

bool trinomial_growth_surrogate(const PolyQ& f) {
  auto tri = as_trinomial(f);
  return tri && tri->d == tri->e + 1 && abs(tri->c) > 2;
}

BoundResult theorem1_bound(const PolyQ& f, double hhat_lower, double C, const BoundOptions& opts) {
  if (!(hhat_lower > 0)) throw DomainError("hhat_lower must be positive; the bound is vacuous otherwise");
  if (!(C > 0)) throw DomainError("C must be positive");
  if (!f.admissible()) throw DomainError("theorem1_bound requires a_1 = 0");
  const int d = f.degree();
  BoundResult r;
  r.C_used = round_up(C);
  r.hhat_lower_used = round_down(hhat_lower);
  const double ratio = round_up(d * r.C_used / ((d - 1) * r.hhat_lower_used));
  const double raw = 2.0 / std::log(static_cast<double>(d)) * std::log(ratio) + 2.0;
  r.n_max = raw + std::fabs(raw) * kRelSlack;
  r.n_max_floor = static_cast<long>(std::floor(r.n_max));

  const bool shape_ok = f.admissible() && abs(f.constant_term()) >= 1;
  if (shape_ok && check_condition3(f, f.constant_term())) {
    r.growth = GrowthCertificate::condition3;
  } else if (shape_ok && trinomial_growth_surrogate(f)) {
    r.growth = GrowthCertificate::trinomial_surrogate;
  } else if (opts.external_growth) {
    r.growth = GrowthCertificate::external;
  }
  r.certified = opts.hhat_certified && r.growth != GrowthCertificate::none;
  return r;
}

}  // namespace zsig
