#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle_data.hpp"
#include "zsig/bounds.hpp"
#include "zsig/errors.hpp"
#include "zsig/heights.hpp"
#include "zsig/zsigmondy.hpp"

using namespace zsig;

namespace {

Rational q(const char* s) { return parse_rational(s); }

using IntSet = std::set<int>;
IntSet as_set(const std::vector<int>& v) { return IntSet(v.begin(), v.end()); }

PolyQ random_poly(std::mt19937_64& rng, bool admissible) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), deg(2, 6);
  const int d = deg(rng);
  std::vector<Rational> co(static_cast<std::size_t>(d) + 1);
  for (auto& a : co) {
    a = Rational(num(rng), den(rng));
    a.canonicalize();
  }
  if (admissible) co[1] = 0;
  if (co.back() == 0) co.back() = 1;
  return PolyQ(co);
}

}  // namespace

TEST_CASE("sign sets") {
  const SignSets a = compute_sign_sets(parse_poly("1,0,1"));
  CHECK(as_set(a.P_plus) == IntSet{0, 1, 2});
  CHECK(as_set(a.P_minus) == IntSet{0, 1, 2});
  CHECK(a.N_plus.empty());
  CHECK(a.N_minus.empty());
  CHECK(a.n_plus == 1);
  CHECK(a.n_minus == 1);

  const SignSets b = compute_sign_sets(parse_poly("3,0,-2,1"));
  CHECK(as_set(b.P_plus) == IntSet{0, 1, 3});
  CHECK(as_set(b.N_plus) == IntSet{2});
  CHECK(b.n_plus == 2);
  CHECK(as_set(b.P_minus) == IntSet{1, 2, 3});
  CHECK(as_set(b.N_minus) == IntSet{0});
  CHECK(b.n_minus == 1);

  CHECK(compute_sign_sets(make_trinomial(5, 3, q("1/2"))).N_plus.empty());
}

TEST_CASE("sign sets partition and respect negation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const PolyQ f = random_poly(rng, t % 2 == 0);
    const int d = f.degree();
    const SignSets s = compute_sign_sets(f);
    for (const auto& [P, N] : {std::pair{s.P_plus, s.N_plus}, {s.P_minus, s.N_minus}}) {
      IntSet all = as_set(P);
      CHECK(all.size() == P.size());
      for (int i : N) CHECK(all.insert(i).second);
      CHECK(all.size() == static_cast<std::size_t>(d) + 1);
    }
    CHECK(s.n_plus == std::max(1, s.N_plus.empty() ? 1 : *std::max_element(s.N_plus.begin(), s.N_plus.end())));
    if (f.admissible()) {
      CHECK(as_set(s.P_plus).count(1));
      CHECK(as_set(s.P_minus).count(1));
    }
    // -f has the same sign pattern relative to its own leading term.
    std::vector<Rational> neg;
    for (const auto& a : f.coeffs()) neg.push_back(-a);
    const SignSets sn = compute_sign_sets(PolyQ(neg));
    CHECK(as_set(sn.P_plus) == as_set(s.P_plus));
    CHECK(as_set(sn.N_minus) == as_set(s.N_minus));
    // f(-z) swaps the plus and minus sides.
    std::vector<Rational> refl = f.coeffs();
    for (std::size_t i = 1; i < refl.size(); i += 2) refl[i] = -refl[i];
    const SignSets sr = compute_sign_sets(PolyQ(refl));
    CHECK(as_set(sr.P_plus) == as_set(s.P_minus));
    CHECK(as_set(sr.N_minus) == as_set(s.N_plus));
  }
}

TEST_CASE("sign-set growth condition") {
  CHECK(check_condition3(parse_poly("1,0,1"), 1));
  CHECK(check_condition3(parse_poly("3,0,-2,1"), 3));
  CHECK_FALSE(check_condition3(parse_poly("3,0,-2,1"), 2));
  CHECK_THROWS_AS(check_condition3(parse_poly("1,0,1"), q("1/2")), DomainError);
}

TEST_CASE("growth condition is monotone in |z|") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const PolyQ f = random_poly(rng, true);
    for (int sign : {1, -1}) {
      bool held = false;
      for (int k = 4; k <= 80; ++k) {
        const Rational z(sign * k, 4);
        const bool now = check_condition3(f, z);
        if (held) CHECK(now);
        held = held || now;
      }
    }
  }
}

TEST_CASE("growth check") {
  CHECK(prop31_check(parse_poly("1,0,1"), 1, 5));
  CHECK(prop31_check(parse_poly("3,0,-2,1"), 3, 4));
  CHECK(prop31_check(parse_poly("7/2,0,0,1"), q("7/2"), 4));
  CHECK_THROWS_AS(prop31_check(parse_poly("3,0,-2,1"), 2, 4), DomainError);
}

TEST_CASE("omega and s_d") {
  CHECK(omega(12) == 2);
  CHECK(s_d(3, 12) == 810);
  CHECK(omega(1) == 0);
  CHECK(s_d(3, 1) == 0);
  CHECK(s_d(2, 6) == 12);
  CHECK(omega(30030) == 6);
}

TEST_CASE("omega inequality audit") {
  const OmegaAudit a3 = omega_inequality_check(3, 10000);
  CHECK(a3.no_strict_violations());
  CHECK(a3.equalities == std::vector<std::uint64_t>{2});
  CHECK_FALSE(a3.holds());
  for (unsigned d : {4u, 5u}) {
    const OmegaAudit a = omega_inequality_check(d, 10000);
    CHECK(a.holds());
  }
  CHECK(omega_inequality_check(4, 2).holds());
  CHECK_THROWS_AS(omega_inequality_check(2, 10), DomainError);
}

TEST_CASE("explicit bound examples") {
  const PolyQ f = parse_poly("7/2,0,0,1");
  const double hc = std::log(7.0);
  const BoundResult b = theorem1_bound(f, hc / 3, std::log(2.0) + hc);
  const double ref = oracle()["bounds"]["cor12_d3_c7/2"]["n_max"].get<double>();
  CHECK(std::fabs(b.n_max - ref) < 1e-6);
  CHECK(b.n_max >= ref);
  CHECK(b.n_max_floor == 5);
  CHECK(b.certified);
  CHECK(b.growth == GrowthCertificate::condition3);

  // hhat_lower = dC/(d-1) gives log 1 = 0.
  const double C = 1.25;
  const BoundResult two = theorem1_bound(f, 3 * C / 2, C);
  CHECK(two.n_max == doctest::Approx(2.0).epsilon(1e-9));

  CHECK_THROWS_AS(theorem1_bound(f, 0, C), DomainError);
  CHECK_THROWS_AS(theorem1_bound(f, -1, C), DomainError);
  CHECK_THROWS_AS(theorem1_bound(parse_poly("1,2,1"), 1, C), DomainError);
}

TEST_CASE("trinomial family bound stays below 7") {
  for (int d = 3; d <= 9; ++d) {
    for (int e = 2; e < d; ++e) {
      for (const char* c : {"5/2", "-5/2", "7/3", "-11/4", "101/7", "-9/4", "1001/1000"}) {
        const Rational cq = q(c);
        if (abs(cq) <= 2) continue;
        const PolyQ f = make_trinomial(d, e, cq);
        const double hc = global_height(cq);
        const double hhat = d >= 5 ? hc / (d - 1) : hc / (3.0 * (d - 1));
        const BoundResult b = theorem1_bound(f, hhat, std::log(2.0) + hc);
        CAPTURE(f.to_string());
        CHECK(b.n_max < 7);
        CHECK(b.certified);
        if (d == e + 1) CHECK(b.growth != GrowthCertificate::none);
      }
    }
  }
  const double ref = oracle()["bounds"]["thm13_d4_e2_c5/2"]["n_max"].get<double>();
  const double hc = std::log(5.0);
  const BoundResult b = theorem1_bound(make_trinomial(4, 2, q("5/2")), hc / 9, std::log(2.0) + hc);
  CHECK(std::fabs(b.n_max - ref) < 1e-6);
  CHECK(b.n_max_floor == 6);
}

TEST_CASE("growth surrogate") {
  CHECK(trinomial_growth_surrogate(make_trinomial(4, 3, q("5/2"))));
  CHECK(trinomial_growth_surrogate(make_trinomial(3, 2, q("-7/3"))));
  CHECK_FALSE(trinomial_growth_surrogate(make_trinomial(4, 2, q("5/2"))));
  CHECK_FALSE(trinomial_growth_surrogate(make_trinomial(4, 3, q("3/2"))));
  // The surrogate itself: |f(z)| >= |z|^(d-2) once |z| >= |c| > 2.
  for (const char* c : {"5/2", "-5/2", "-7/3", "9/4"}) {
    const Rational cq = q(c);
    for (int d = 3; d <= 6; ++d) {
      const PolyQ f = make_trinomial(d, d - 1, cq);
      for (int k = 0; k < 40; ++k) {
        for (int sign : {1, -1}) {
          const Rational z = sign * (abs(cq) + Rational(k, 7));
          Rational zp = 1;
          for (int i = 0; i < d - 2; ++i) zp *= abs(z);
          CHECK(abs(f(z)) >= zp);
        }
      }
    }
  }
}

TEST_CASE("explicit bound is strictly decreasing in hhat_lower") {
  const PolyQ f = make_trinomial(5, 2, q("7/3"));
  double prev = INFINITY;
  for (double h = 0.01; h < 3; h *= 1.3) {
    const BoundResult b = theorem1_bound(f, h, 2.0);
    CHECK(b.n_max < prev);
    prev = b.n_max;
  }
}

TEST_CASE("uncertified inputs") {
  const PolyQ f = parse_poly("7/2,0,0,1");
  BoundOptions bo;
  bo.hhat_certified = false;
  CHECK_FALSE(theorem1_bound(f, 0.5, 2.0, bo).certified);
  // a_0 = 1/2: |a_0| < 1, no growth certificate without an external one.
  const PolyQ g = make_trinomial(4, 2, q("1/2"));
  CHECK_FALSE(theorem1_bound(g, 0.1, 2.0).certified);
  bo.hhat_certified = true;
  bo.external_growth = true;
  const BoundResult ext = theorem1_bound(g, 0.1, 2.0, bo);
  CHECK(ext.certified);
  CHECK(ext.growth == GrowthCertificate::external);
}

TEST_CASE("certified bounds contain the observed Zsigmondy elements") {
  for (const char* c : {"7/2", "-7/2", "9/2", "-11/3"}) {
    for (int d = 3; d <= 4; ++d) {
      const Rational cq = q(c);
      const PolyQ f = make_binomial(d, cq);
      const double hc = global_height(cq);
      const BoundResult b = theorem1_bound(f, hc / d, std::max(std::log(2.0) + hc, global_C(f).total_C));
      if (!b.certified) continue;
      ZsigOptions zo;
      zo.witnesses = false;
      zo.k_table = false;
      const ZsigmondyReport rep = zsigmondy_set(f, static_cast<int>(b.n_max_floor) + 4, zo);
      for (int n : rep.elements) CHECK(n <= b.n_max_floor);
    }
  }
}
