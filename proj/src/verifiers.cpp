#include "zsig/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zsig/bounds.hpp"
#include "zsig/errors.hpp"
#include "zsig/heights.hpp"
#include "zsig/orbit.hpp"
#include "zsig/zsigmondy.hpp"

namespace zsig {

using nlohmann::ordered_json;

double sig15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

namespace {

const char* kNoPrediction = "none (hypothesis not met)";

Rational pow_q(const Rational& x, unsigned long k) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  return Rational(num, den);  // already coprime
}

// |c|^(d-1) > 2^d, decided on integers: |a|^(d-1) > 2^d b^(d-1).
bool exceeds_power_threshold(int d, const Rational& c) {
  Integer lhs, rhs, two_d;
  mpz_pow_ui(lhs.get_mpz_t(), Integer(abs(c.get_num())).get_mpz_t(), static_cast<unsigned long>(d - 1));
  mpz_pow_ui(rhs.get_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(d - 1));
  mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(d));
  return lhs > two_d * rhs;
}

TheoremVerdict start(const std::string& id, int d, int e, const Rational& c) {
  TheoremVerdict v;
  v.theorem_id = id;
  v.d = d;
  v.e = e;
  v.c = c;
  v.predicted = kNoPrediction;
  return v;
}

void fail_hypothesis(TheoremVerdict& v, const std::string& reason) {
  v.hypothesis_ok = false;
  v.predicted = kNoPrediction;
  v.details["hypothesis_failure"] = reason;
}

// Records facts and folds them into `all_ok`.
struct FactLog {
  ordered_json facts = ordered_json::object();
  bool all_ok = true;
  void add(const std::string& name, bool ok) {
    facts[name] = ok;
    all_ok = all_ok && ok;
  }
};

struct Observation {
  OrbitStatus status;
  ZsigmondyReport report;
  bool ok = false;
};

// Computes Z(f, 0) up to the requested horizon (capped by the digit budget)
// and fills horizon, observed_elements and unit_exceptions.
Observation observe(TheoremVerdict& v, const PolyQ& f, int requested, const VerifyOptions& opts) {
  Observation obs;
  obs.status = orbit_prefix(f, requested, opts.orbit);
  v.details["horizon_requested"] = requested;
  v.details["horizon_truncated"] = obs.status.truncated;
  if (obs.status.finite()) {
    v.error = "Zsigmondy set undefined for finite orbit: " + obs.status.cycle_description();
    v.horizon = 0;
    return obs;
  }
  ZsigOptions zo;
  zo.witnesses = false;
  zo.k_table = false;
  obs.report = zsigmondy_report(obs.status.entries, zo);
  v.horizon = obs.report.horizon;
  v.observed_elements = obs.report.elements;
  for (int n : obs.report.elements) {
    if (obs.report.per_index[static_cast<std::size_t>(n) - 1].is_unit) v.unit_exceptions.push_back(n);
  }
  obs.ok = true;
  return obs;
}

std::vector<int> non_unit_elements(const TheoremVerdict& v) {
  std::vector<int> out;
  for (int n : v.observed_elements) {
    if (std::find(v.unit_exceptions.begin(), v.unit_exceptions.end(), n) == v.unit_exceptions.end()) {
      out.push_back(n);
    }
  }
  return out;
}

int fact_depth(const Observation& obs, const VerifyOptions& opts) {
  return std::min(opts.fact_depth, static_cast<int>(obs.status.entries.size()));
}

const Rational& value_at(const Observation& obs, int n) {
  return obs.status.entries[static_cast<std::size_t>(n) - 1].value;
}

// n for which log|A_n| <= sum log|A_{n/q}| (the screen a member must pass).
std::vector<int> cor23_passes(const Observation& obs) {
  std::vector<int> out;
  for (int n = 2; n <= obs.report.horizon; ++n) {
    if (cor23_inequality(obs.status.entries, n).holds) out.push_back(n);
  }
  return out;
}

void record_bound(TheoremVerdict& v, const BoundResult& b, double C_family, double C_computed) {
  v.details["C_family"] = sig15(C_family);
  v.details["C_computed"] = sig15(C_computed);
  v.details["C_family_dominates"] = C_family >= C_computed;
  v.details["C_used"] = sig15(b.C_used);
  v.details["hhat_lower"] = sig15(b.hhat_lower_used);
  v.details["n_max"] = sig15(b.n_max);
  v.details["n_max_floor"] = b.n_max_floor;
  v.details["certified"] = b.certified;
  v.details["growth_certificate"] = to_string(b.growth);
}

int default_horizon(const VerifyOptions& opts, long bound_floor) {
  if (opts.horizon > 0) return opts.horizon;
  return static_cast<int>(std::max<long>(bound_floor + 4, 10));
}

bool valid_trinomial_shape(int d, int e) { return d > e && e >= 2; }

// Exact sandwich lo <= |f^n(0)| <= alpha^((d^(n-1)-1)/(d-1)) lo.
bool sandwich_holds(const Observation& obs, int d, const Rational& lo, const Rational& alpha, int depth) {
  for (int n = 1; n <= depth; ++n) {
    Integer dn;
    mpz_ui_pow_ui(dn.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n - 1));
    const Integer expo = (dn - 1) / (d - 1);
    if (!expo.fits_ulong_p()) return false;
    const Rational x = abs(value_at(obs, n));
    if (x < lo) return false;
    if (x > pow_q(alpha, expo.get_ui()) * lo) return false;
  }
  return true;
}

}  // namespace

TheoremVerdict verify_cor12(int d, const Rational& c, const VerifyOptions& opts) {
  TheoremVerdict v = start("cor12", d, 0, c);
  if (d < 2 || c == 0) {
    fail_hypothesis(v, "need d >= 2 and c != 0");
    return v;
  }
  const PolyQ f = make_binomial(d, c);
  v.polynomial = f.coeff_list();
  v.hypothesis_ok = d >= 3 && !is_integer(c) && exceeds_power_threshold(d, c);
  int requested = opts.horizon > 0 ? opts.horizon : 10;
  if (!v.hypothesis_ok) {
    fail_hypothesis(v, d < 3 ? "d < 3" : is_integer(c) ? "c is an integer" : "|c| <= 2^(d/(d-1))");
  } else {
    v.predicted = "Z=empty";
    const double hc = global_height(c);
    const double C_family = std::log(2.0) + hc;
    const double C_computed = global_C(f).total_C;
    const BoundResult b = theorem1_bound(f, hc / d, std::max(C_family, C_computed));
    v.details["hhat_route"] = "ingram: hhat(c) >= h(c)/d";
    record_bound(v, b, C_family, C_computed);
    requested = default_horizon(opts, b.n_max_floor);
  }
  Observation obs = observe(v, f, requested, opts);
  if (!obs.ok || !v.hypothesis_ok) return v;

  FactLog log;
  bool growth = true;
  for (int n = 1; n < fact_depth(obs, opts); ++n) {
    const Rational x = abs(value_at(obs, n));
    if (x > 2 && abs(value_at(obs, n + 1)) < pow_q(x, static_cast<unsigned long>(d - 1))) growth = false;
  }
  log.add("growth_|f(z)|>=|z|^(d-1)", growth);
  log.add("bound_certified", v.details["certified"].get<bool>());
  v.details["facts"] = log.facts;
  const long floor_bound = v.details["n_max_floor"].get<long>();
  v.details["certified_empty"] = log.all_ok && v.observed_elements.empty() && floor_bound <= v.horizon;
  v.consistent = log.all_ok && v.observed_elements.empty();
  return v;
}

TheoremVerdict verify_thm13(int d, int e, const Rational& c, const VerifyOptions& opts) {
  TheoremVerdict v = start("thm13", d, e, c);
  if (!valid_trinomial_shape(d, e) || c == 0) {
    fail_hypothesis(v, "need d > e >= 2 and c != 0");
    return v;
  }
  const PolyQ f = make_trinomial(d, e, c);
  v.polynomial = f.coeff_list();
  v.hypothesis_ok = abs(c) > 2;
  if (!v.hypothesis_ok) {
    fail_hypothesis(v, "|c| <= 2");
    observe(v, f, opts.horizon > 0 ? opts.horizon : 10, opts);
    return v;
  }
  v.predicted = "n <= 6";
  FactLog log;
  const double hc = global_height(c);
  const double hhat = d >= 5 ? hc / (d - 1) : hc / (3.0 * (d - 1));
  v.details["hhat_route"] = d >= 5 ? "(d-1) hhat(c) >= h(c)" : "(d-1) hhat(c) >= h(c)/3";
  const double D_lower = trinomial_D_lower(f).get_d();
  const HeightInterval l41 = lemma41_lower_bound(f, c, 1, D_lower, opts.orbit);
  v.details["lemma41_i1_lower"] = sig15(l41.lower);
  log.add("hhat_below_lemma41", hhat <= l41.lower * (1 + 1e-9) + 1e-12);
  const HeightInterval tel = canonical_height_interval(f, c, 4, opts.orbit);
  v.details["telescoped_upper"] = sig15(tel.upper);
  log.add("hhat_below_telescoped_upper", hhat <= tel.upper);

  const double C_family = std::log(2.0) + hc;
  const double C_computed = global_C(f).total_C;
  const BoundResult b = theorem1_bound(f, hhat, std::max(C_family, C_computed));
  record_bound(v, b, C_family, C_computed);
  log.add("bound_certified", b.certified);
  log.add("bound_below_7", b.n_max < 7);
  if (d > e + 1) log.add("condition3_at_c", check_condition3(f, c));

  Observation obs = observe(v, f, default_horizon(opts, b.n_max_floor), opts);
  if (!obs.ok) return v;
  if (d == e + 1) {
    bool growth = true;
    const Rational absc = abs(c);
    for (int n = 1; n < fact_depth(obs, opts); ++n) {
      const Rational x = abs(value_at(obs, n));
      if (x >= absc && abs(value_at(obs, n + 1)) < pow_q(x, static_cast<unsigned long>(d - 2))) growth = false;
    }
    log.add("growth_|f(z)|>=|z|^(d-2)", growth);
  }
  v.details["facts"] = log.facts;
  const bool within = std::all_of(v.observed_elements.begin(), v.observed_elements.end(),
                                  [&](int n) { return n <= b.n_max_floor && n <= 6; });
  v.consistent = log.all_ok && within;
  return v;
}

TheoremVerdict verify_prop51(int d, int e, const Rational& c, const VerifyOptions& opts) {
  TheoremVerdict v = start("prop51", d, e, c);
  if (!valid_trinomial_shape(d, e) || c == 0) {
    fail_hypothesis(v, "need d > e >= 2 and c != 0");
    return v;
  }
  const PolyQ f = make_trinomial(d, e, c);
  v.polynomial = f.coeff_list();
  v.hypothesis_ok = c > 1 && c < 2;
  if (!v.hypothesis_ok) {
    fail_hypothesis(v, "c not in (1, 2)");
    observe(v, f, opts.horizon > 0 ? opts.horizon : 10, opts);
    return v;
  }
  v.predicted = "n <= 7";
  FactLog log;
  const double h2c = global_height(Rational(2 * c));
  const double hhat = (d - 2) * h2c / (static_cast<double>(d) * (d - 1));
  v.details["hhat_route"] = "(d-1) hhat(c) >= (d-2) h(2c) / d";
  const HeightInterval tel = canonical_height_interval(f, c, 4, opts.orbit);
  v.details["telescoped_upper"] = sig15(tel.upper);
  log.add("hhat_below_telescoped_upper", hhat <= tel.upper);
  log.add("f(c)>2c", f(c) > 2 * c);

  const double C_family = std::log(2.0) + global_height(c);
  const double C_computed = global_C(f).total_C;
  BoundOptions bo;
  bo.external_growth = true;  // c > 1 forces every iterate above 1
  const BoundResult b = theorem1_bound(f, hhat, std::max(C_family, C_computed), bo);
  record_bound(v, b, C_family, C_computed);
  log.add("bound_certified", b.certified);
  log.add("bound_below_8", b.n_max < 8);

  Observation obs = observe(v, f, default_horizon(opts, b.n_max_floor), opts);
  if (!obs.ok) return v;
  bool above_one = true;
  for (int n = 1; n <= fact_depth(obs, opts); ++n) above_one = above_one && value_at(obs, n) > 1;
  log.add("iterates_above_1", above_one);
  v.details["facts"] = log.facts;
  const bool within = std::all_of(v.observed_elements.begin(), v.observed_elements.end(),
                                  [&](int n) { return n <= b.n_max_floor && n <= 7; });
  v.consistent = log.all_ok && within;
  return v;
}

TheoremVerdict verify_prop52(int d, int e, const Rational& c, const VerifyOptions& opts) {
  TheoremVerdict v = start("prop52", d, e, c);
  if (!valid_trinomial_shape(d, e) || c == 0) {
    fail_hypothesis(v, "need d > e >= 2 and c != 0");
    return v;
  }
  const PolyQ f = make_trinomial(d, e, c);
  v.polynomial = f.coeff_list();
  v.hypothesis_ok = c > 0 && c < 1;
  Observation obs = observe(v, f, opts.horizon > 0 ? opts.horizon : 10, opts);
  if (!v.hypothesis_ok) {
    fail_hypothesis(v, "c not in (0, 1)");
    return v;
  }
  v.predicted = "Z=empty";
  if (!obs.ok) return v;
  FactLog log;
  const Rational alpha = c * c + c + 1;
  log.add("1<alpha<3", alpha > 1 && alpha < 3);
  log.add("sandwich", sandwich_holds(obs, d, c, alpha, fact_depth(obs, opts)));
  const std::vector<int> passes = cor23_passes(obs);
  v.details["cor23_passes"] = passes;
  log.add("cor23_fails_for_n>=2", passes.empty());
  v.details["facts"] = log.facts;
  v.consistent = log.all_ok && non_unit_elements(v).empty();
  return v;
}

TheoremVerdict verify_prop53(int d, int e, const Rational& c, const VerifyOptions& opts) {
  TheoremVerdict v = start("prop53", d, e, c);
  if (!valid_trinomial_shape(d, e) || c == 0) {
    fail_hypothesis(v, "need d > e >= 2 and c != 0");
    return v;
  }
  const PolyQ f = make_trinomial(d, e, c);
  v.polynomial = f.coeff_list();
  v.hypothesis_ok = d % 2 == 1 && c > -1 && c < 0;
  Observation obs = observe(v, f, opts.horizon > 0 ? opts.horizon : 10, opts);
  if (!v.hypothesis_ok) {
    fail_hypothesis(v, d % 2 == 0 ? "d is even" : "c not in (-1, 0)");
    return v;
  }
  v.predicted = "Z=empty";
  if (!obs.ok) return v;
  FactLog log;
  const Rational absc = abs(c);
  const int depth = fact_depth(obs, opts);
  if (e % 2 == 1) {
    v.details["case"] = "I (e odd)";
    log.add("sandwich", sandwich_holds(obs, d, absc, Rational(c * c + absc + 1), depth));
  } else {
    v.details["case"] = "II (e even)";
    bool confined = true;
    bool lower = true;
    const Rational floor_value = absc * (1 - pow_q(absc, static_cast<unsigned long>(e - 1)));
    for (int n = 1; n <= depth; ++n) {
      const Rational& x = value_at(obs, n);
      confined = confined && c <= x && x < 0;
      lower = lower && abs(x) >= floor_value;
    }
    log.add("confinement_c<=f^n<0", confined);
    log.add("lower_|c|(1-|c|^(e-1))", lower);
  }
  const std::vector<int> passes = cor23_passes(obs);
  v.details["cor23_passes"] = passes;
  log.add("cor23_fails_for_n>=2", passes.empty());
  v.details["facts"] = log.facts;
  v.consistent = log.all_ok && non_unit_elements(v).empty();
  return v;
}

TheoremVerdict verify_prop54(int d, int e, const Rational& c, const VerifyOptions& opts) {
  TheoremVerdict v = start("prop54", d, e, c);
  if (!valid_trinomial_shape(d, e) || c == 0) {
    fail_hypothesis(v, "need d > e >= 2 and c != 0");
    return v;
  }
  const PolyQ f = make_trinomial(d, e, c);
  v.polynomial = f.coeff_list();
  v.hypothesis_ok = c > -2 && c < -1 && (d % 2 == 1 || e % 2 == 0);
  Observation obs = observe(v, f, opts.horizon > 0 ? opts.horizon : 10, opts);
  if (!v.hypothesis_ok) {
    fail_hypothesis(v, (c > -2 && c < -1) ? "d even and e odd" : "c not in (-2, -1)");
    return v;
  }
  v.predicted = "Z=empty";
  if (!obs.ok) return v;
  FactLog log;
  const Rational absc = abs(c);
  const int depth = fact_depth(obs, opts);
  if (d % 2 == 1) {
    v.details["case"] = "I (d odd)";
    bool ok = true;
    for (int n = 1; n <= depth; ++n) {
      const Rational& x = value_at(obs, n);
      ok = ok && x < 0 && abs(x) >= absc;
    }
    log.add("negative_and_|f^n|>=|c|", ok);
  } else {
    v.details["case"] = "II (d, e even)";
    // f^n(0) = f^(n-1)(c) >= |c|^(d^(n-1)) for n >= 2.
    bool ok = true;
    int checked = 0;
    for (int n = 2; n <= depth; ++n) {
      Integer expo;
      mpz_ui_pow_ui(expo.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n - 1));
      if (expo > 4000000) break;
      const Rational& x = value_at(obs, n);
      ok = ok && x > 0 && x >= pow_q(absc, expo.get_ui());
      ++checked;
    }
    v.details["growth_depth"] = checked + 1;
    log.add("positive_and_f^n>=|c|^(d^n)", ok);
  }
  const std::vector<int> passes = cor23_passes(obs);
  v.details["cor23_passes"] = passes;
  log.add("cor23_fails_for_n>=2", passes.empty());
  v.details["facts"] = log.facts;
  v.consistent = log.all_ok && non_unit_elements(v).empty();
  return v;
}

TheoremVerdict verify_dh(int d, const Rational& c, const VerifyOptions& opts) {
  TheoremVerdict v = start("dh", d, 0, c);
  if (d < 2 || c == 0) {
    fail_hypothesis(v, "need d >= 2 and c != 0");
    return v;
  }
  const PolyQ f = make_binomial(d, c);
  v.polynomial = f.coeff_list();
  v.hypothesis_ok = is_integer(c);
  Observation obs = observe(v, f, opts.horizon > 0 ? opts.horizon : 10, opts);
  if (!v.hypothesis_ok) {
    fail_hypothesis(v, "c is not an integer");
    return v;
  }
  const bool unit_c = abs(c) == 1;
  v.predicted = unit_c ? "max Z <= 2" : "Z=empty";
  if (!obs.ok) return v;
  v.consistent = unit_c ? std::all_of(v.observed_elements.begin(), v.observed_elements.end(),
                                      [](int n) { return n <= 2; })
                        : v.observed_elements.empty();
  return v;
}

std::string to_string(Family f) { return f == Family::binomial ? "z^d+c" : "z^d+z^e+c"; }

TheoremVerdict verify_point(Family family, int d, int e, const Rational& c, const VerifyOptions& opts) {
  if (family == Family::binomial) {
    return is_integer(c) ? verify_dh(d, c, opts) : verify_cor12(d, c, opts);
  }
  if (abs(c) > 2) return verify_thm13(d, e, c, opts);
  if (c > 1 && c < 2) return verify_prop51(d, e, c, opts);
  if (c > 0 && c < 1) return verify_prop52(d, e, c, opts);
  if (c > -1 && c < 0) return verify_prop53(d, e, c, opts);
  if (c > -2 && c < -1) return verify_prop54(d, e, c, opts);
  TheoremVerdict v = start("none", d, e, c);
  fail_hypothesis(v, "no verifier covers this constant");
  if (!valid_trinomial_shape(d, e) || c == 0) return v;
  const PolyQ f = make_trinomial(d, e, c);
  v.polynomial = f.coeff_list();
  observe(v, f, opts.horizon > 0 ? opts.horizon : 10, opts);
  return v;
}

TheoremVerdict verify_by_id(const std::string& id, int d, int e, const Rational& c, const VerifyOptions& opts) {
  if (id == "cor12") return verify_cor12(d, c, opts);
  if (id == "thm13") return verify_thm13(d, e, c, opts);
  if (id == "prop51") return verify_prop51(d, e, c, opts);
  if (id == "prop52") return verify_prop52(d, e, c, opts);
  if (id == "prop53") return verify_prop53(d, e, c, opts);
  if (id == "prop54") return verify_prop54(d, e, c, opts);
  if (id == "dh") return verify_dh(d, c, opts);
  throw DomainError("unknown theorem id '" + id + "'");
}

}  // namespace zsig
