#include "zsig/heights.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zsig/arithmetic.hpp"
#include "zsig/errors.hpp"

namespace zsig {

namespace {

double log_abs_rational(const Rational& x) { return log_abs(x.get_num()) - log_abs(x.get_den()); }

double log_sum_exp(const std::vector<double>& logs) {
  if (logs.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(logs.begin(), logs.end());
  double acc = 0;
  for (double l : logs) acc += std::exp(l - top);
  return top + std::log(acc);
}

// v_p of a nonzero rational.
Rational valuation(const Rational& x, const Integer& p) {
  Integer rest;
  long num = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t()));
  long den = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()));
  return Rational(num - den);
}

}  // namespace

std::string to_string(HeightMethod m) {
  switch (m) {
    case HeightMethod::telescoped: return "telescoped";
    case HeightMethod::lemma41: return "lemma41";
    case HeightMethod::ingram: return "ingram";
    case HeightMethod::family_trinomial: return "family_trinomial";
  }
  return "unknown";
}

double global_height(const Rational& x) {
  if (x == 0) return 0;
  const Integer num = abs(x.get_num());
  return log_abs(num > x.get_den() ? num : x.get_den());
}

double local_log_C_archimedean(const PolyQ& f) {
  const int d = f.degree();
  const double log_lead = log_abs_rational(f.leading());
  std::vector<double> root_terms;
  for (int j = 0; j < d; ++j) {
    const Rational& a = f.coeff(j);
    if (a == 0) continue;
    root_terms.push_back((log_abs_rational(a) - log_lead) / (d - j));
  }
  root_terms.push_back(-log_lead / d);  // B
  std::vector<double> coeff_terms;
  for (const auto& a : f.coeffs()) {
    if (a != 0) coeff_terms.push_back(log_abs_rational(a));
  }
  const double log_c = std::max({0.0, log_sum_exp(root_terms), log_sum_exp(coeff_terms)});
  return round_up(log_c);
}

double local_log_C_prime(const PolyQ& f, const Integer& p) {
  if (p < 2) throw DomainError("place must be a prime");
  const int d = f.degree();
  const Rational lead_val = valuation(f.leading(), p);
  // log|x|_p = -v_p(x) log p, so every candidate is (exponent) * log p.
  Rational best = 0;
  best = std::max(best, Rational(lead_val / d));  // B = |a_d|_p^(-1/d)
  for (int j = 0; j <= d; ++j) {
    const Rational& a = f.coeff(j);
    if (a == 0) continue;
    const Rational v = valuation(a, p);
    best = std::max(best, Rational(-v));  // |a_j|_p
    if (j < d) best = std::max(best, Rational((lead_val - v) / (d - j)));  // A
  }
  if (best == 0) return 0;
  return round_up(best.get_d() * log_abs(p));
}

GlobalC global_C(const PolyQ& f) {
  GlobalC out;
  out.archimedean_logCv = local_log_C_archimedean(f);
  std::vector<Integer> primes;
  FactorOptions fo;
  for (const auto& a : f.coeffs()) {
    if (a == 0) continue;
    for (const Integer& part : {Integer(abs(a.get_num())), Integer(a.get_den())}) {
      if (part == 1) continue;
      FactorReport rep = factor(part, fo);
      if (!rep.complete()) throw BudgetExceeded("could not factor coefficient " + part.get_str());
      for (const auto& p : rep.known_primes()) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  out.total_C = out.archimedean_logCv;
  for (const auto& p : primes) {
    const double c = local_log_C_prime(f, p);
    if (c > 0) {
      out.nonarch_contribs.emplace(p, c);
      out.total_C += c;
    }
  }
  out.total_C = round_up(out.total_C);
  return out;
}

HeightInterval canonical_height_interval(const PolyQ& f, const Rational& x, int N,
                                         const OrbitOptions& opts) {
  if (N < 0) throw DomainError("iteration count must be nonnegative");
  const int d = f.degree();
  Rational y = x;
  int used = 0;
  for (; used < N; ++used) {
    Rational next = f(y);
    if (rational_digits(next) > opts.digit_budget) break;
    y = std::move(next);
  }
  const double delta = round_up(d * global_C(f).total_C / (d - 1));
  const double scale = std::pow(static_cast<double>(d), used);
  const double h = global_height(y);
  HeightInterval out;
  out.method = HeightMethod::telescoped;
  out.iterations = used;
  out.lower = std::max(0.0, round_down((h - delta) / scale));
  out.upper = round_up((h + delta) / scale);
  return out;
}

Integer resultant_with_constant(const ClearedPoly& cp, int d) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), cp.f2.get_mpz_t(), static_cast<unsigned long>(d));
  return r;
}

HeightInterval lemma41_lower_bound(const PolyQ& f, const Rational& x, int i, double D_lower,
                                   const OrbitOptions& opts) {
  if (!(D_lower > 0)) throw DomainError("D_lower must be positive");
  if (i < 0) throw DomainError("iteration count must be nonnegative");
  const int d = f.degree();
  const std::vector<Rational> xs = forward_orbit(f, x, i, opts);
  const Integer R = resultant_with_constant(clear_denominators(f), d);
  const double log_ratio = round_up(log_abs(R) - std::log(D_lower));
  const double correction = round_up(log_ratio / (d - 1));
  HeightInterval out;
  out.method = HeightMethod::lemma41;
  out.iterations = i;
  out.lower = std::max(0.0, round_down((global_height(xs.back()) - correction) /
                                       std::pow(static_cast<double>(d), i)));
  return out;
}

Rational trinomial_D_lower(const PolyQ& f) {
  auto tri = as_trinomial(f);
  if (!tri) throw DomainError("trinomial_D_lower needs f = z^d + z^e + c");
  const Rational absc = abs(tri->c);
  if (absc < 1) throw DomainError("trinomial_D_lower needs |c| >= 1");
  const Rational s = absc > 2 ? absc : Rational(2);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), s.get_den_mpz_t(), static_cast<unsigned long>(tri->d));
  mpz_pow_ui(den.get_mpz_t(), s.get_num_mpz_t(), static_cast<unsigned long>(tri->d));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

double numeric_D_estimate(const ClearedPoly& cp, const DGrid& grid) {
  const int d = static_cast<int>(cp.f1.size()) - 1;
  std::vector<double> f1;
  for (const auto& a : cp.f1) f1.push_back(a.get_d());
  const double f2 = std::fabs(cp.f2.get_d());
  const double lead = std::fabs(f1.back());
  auto ratio = [&](double t) {
    double acc = 0;
    for (auto it = f1.rbegin(); it != f1.rend(); ++it) acc = acc * t + *it;
    return std::max(std::fabs(acc), f2) / std::max(std::pow(std::fabs(t), d), 1.0);
  };
  double T = grid.half_width;
  if (T <= 0) {
    double m = 0;
    for (int i = 0; i < d; ++i) m = std::max(m, std::fabs(f1[static_cast<std::size_t>(i)] / f1.back()));
    T = 1 + std::max(2.0, 2 * m);
  }
  const int n = std::max(grid.samples, 3);
  const double step = 2 * T / (n - 1);
  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) vals[static_cast<std::size_t>(k)] = ratio(-T + k * step);

  double best = lead;  // t = infinity
  for (int k = 0; k < n; ++k) {
    const double v = vals[static_cast<std::size_t>(k)];
    best = std::min(best, v);
    const bool local_min = (k == 0 || v <= vals[static_cast<std::size_t>(k) - 1]) &&
                           (k == n - 1 || v <= vals[static_cast<std::size_t>(k) + 1]);
    if (!local_min) continue;
    // Golden-section refinement on the bracketing cell pair.
    double lo = -T + std::max(k - 1, 0) * step;
    double hi = -T + std::min(k + 1, n - 1) * step;
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    double fa = ratio(a), fb = ratio(b);
    for (int r = 0; r < grid.refine_rounds; ++r) {
      if (fa < fb) {
        hi = b; b = a; fb = fa;
        a = hi - phi * (hi - lo); fa = ratio(a);
      } else {
        lo = a; a = b; fa = fb;
        b = lo + phi * (hi - lo); fb = ratio(b);
      }
    }
    best = std::min({best, fa, fb});
  }
  return best;
}

}  // namespace zsig
