#include <random>

#include "doctest.h"
#include "zsig/errors.hpp"
#include "zsig/orbit.hpp"
#include "zsig/poly.hpp"

using namespace zsig;

namespace {

Rational q(const char* s) { return parse_rational(s); }

std::vector<std::string> numerators(const OrbitStatus& st) {
  std::vector<std::string> out;
  for (const auto& e : st.entries) out.push_back(e.A.get_str());
  return out;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(q("5/2") == Rational(5, 2));
  CHECK(q(" -7/3 ") == Rational(-7, 3));
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(q("-0") == 0);
  CHECK_THROWS_AS(q("1/0"), ParseError);
  CHECK_THROWS_AS(q("abc"), ParseError);
  CHECK_THROWS_AS(q("1/"), ParseError);
  CHECK_THROWS_AS(q(""), ParseError);
}

TEST_CASE("parse_poly list form") {
  const PolyQ f = parse_poly("5/2,0,0,1");
  CHECK(f.degree() == 3);
  CHECK(f.admissible());
  CHECK(f.constant_term() == Rational(5, 2));
  CHECK(f.to_string() == "z^3 + 5/2");

  const PolyQ g = parse_poly("1,0,1");
  CHECK(g.degree() == 2);
  CHECK(g.admissible());

  const PolyQ h = parse_poly("1,2,1");
  CHECK(h.degree() == 2);
  CHECK_FALSE(h.admissible());

  CHECK(parse_poly("-1,0,1").constant_term() == -1);
  CHECK(parse_poly(f.coeff_list()) == f);
}

TEST_CASE("parse_poly monomial form") {
  CHECK(parse_poly("z^3 + 5/2") == parse_poly("5/2,0,0,1"));
  CHECK(parse_poly("z^4 + z^2 + 5/2") == parse_poly("5/2,0,1,0,1"));
  CHECK(parse_poly("2*z^4 - z^2/3 + 1") == parse_poly("1,0,-1/3,0,2"));
  CHECK(parse_poly("z**3 - 2z^2 + 3") == parse_poly("3,0,-2,1"));
  CHECK(parse_poly("-z^2 + z^2 + z^3") == parse_poly("0,0,0,1"));
}

TEST_CASE("parse_poly rejects bad input") {
  CHECK_THROWS_AS(parse_poly("1,0,0"), ParseError);
  CHECK_THROWS_AS(parse_poly("1,1"), ParseError);
  CHECK_THROWS_AS(parse_poly("1,x,1"), ParseError);
  CHECK_THROWS_AS(parse_poly("z^2 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("z + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("PolyQ constructor invariants") {
  CHECK_THROWS_AS(PolyQ({Rational(1), Rational(1)}), DomainError);
  CHECK_THROWS_AS(PolyQ({Rational(1), Rational(0), Rational(0)}), DomainError);
}

TEST_CASE("eval") {
  CHECK(eval(parse_poly("1,0,1"), 0) == 1);
  CHECK(eval(parse_poly("5/2,0,0,1"), q("5/2")) == Rational(145, 8));
  CHECK(eval(parse_poly("3,0,-2,1"), 3) == 12);
  const Rational v = eval(parse_poly("1/6,0,9/4,0,2/3"), q("-3/7"));
  CHECK(v == Rational(1, 6) + Rational(9, 4) * Rational(9, 49) + Rational(2, 3) * Rational(81, 2401));
}

TEST_CASE("clear_denominators") {
  const auto a = clear_denominators(parse_poly("5/2,0,0,1"));
  CHECK(a.f2 == 2);
  CHECK(a.f1 == std::vector<Integer>{5, 0, 0, 2});
  const auto b = clear_denominators(parse_poly("1,0,1"));
  CHECK(b.f2 == 1);
  CHECK(b.f1 == std::vector<Integer>{1, 0, 1});
  const auto c = clear_denominators(parse_poly("5/2,0,1,0,1"));
  CHECK(c.f2 == 2);
  CHECK(c.f1 == std::vector<Integer>{5, 0, 2, 0, 2});
  const auto d = clear_denominators(parse_poly("1/6,0,1/4,1"));
  CHECK(d.f2 == 12);
  CHECK(d.f1 == std::vector<Integer>{2, 0, 3, 12});
}

TEST_CASE("family recognizers") {
  auto t = as_trinomial(parse_poly("5/2,0,1,0,1"));
  REQUIRE(t);
  CHECK(t->d == 4);
  CHECK(t->e == 2);
  CHECK(t->c == Rational(5, 2));
  CHECK_FALSE(as_trinomial(parse_poly("5/2,0,0,1")));
  auto b = as_binomial(parse_poly("-7/3,0,0,0,1"));
  REQUIRE(b);
  CHECK(b->d == 4);
  CHECK(b->c == Rational(-7, 3));
  CHECK(make_trinomial(5, 2, q("1/2")) == parse_poly("z^5 + z^2 + 1/2"));
  CHECK(make_binomial(3, 3) == parse_poly("3,0,0,1"));
}

TEST_CASE("orbit z^2 + 1") {
  const OrbitStatus st = orbit(parse_poly("1,0,1"), 6);
  CHECK(st.kind == OrbitKind::wandering);
  CHECK(numerators(st) == std::vector<std::string>{"1", "2", "5", "26", "677", "458330"});
  for (const auto& e : st.entries) CHECK(e.B == 1);
}

TEST_CASE("orbit z^3 + 5/2") {
  const OrbitStatus st = orbit(parse_poly("5/2,0,0,1"), 3);
  REQUIRE(st.entries.size() == 3);
  CHECK(numerators(st) == std::vector<std::string>{"5", "145", "3049905"});
  CHECK(st.entries[0].B == 2);
  CHECK(st.entries[1].B == 8);
  CHECK(st.entries[2].B == 512);
}

TEST_CASE("preperiodic detection") {
  const OrbitStatus st = orbit(parse_poly("-1,0,1"), 5);
  CHECK(st.finite());
  CHECK(st.kind == OrbitKind::hit_zero);
  CHECK(st.period == 2);
  CHECK(st.cycle_description() == "0 -> -1 -> 0");

  // 0 -> -2 -> 2 -> 2
  const OrbitStatus s2 = orbit(parse_poly("-2,0,1"), 6);
  CHECK(s2.kind == OrbitKind::preperiodic);
  CHECK(s2.tail == 2);
  CHECK(s2.period == 1);

  CHECK(orbit(parse_poly("0,0,1"), 3).kind == OrbitKind::hit_zero);
}

TEST_CASE("digit budget") {
  OrbitOptions small{50};
  CHECK_THROWS_AS(orbit(parse_poly("1,0,1"), 12, small), BudgetExceeded);
  const OrbitStatus st = orbit_prefix(parse_poly("1,0,1"), 12, small);
  CHECK(st.truncated);
  CHECK(!st.entries.empty());
  for (const auto& e : st.entries) CHECK(digits10(e.A) <= 50);
}

TEST_CASE("digits10 is exact") {
  CHECK(digits10(Integer(0)) == 1);
  CHECK(digits10(Integer(9)) == 1);
  CHECK(digits10(Integer(-10)) == 2);
  Integer p;
  for (unsigned k = 1; k < 60; ++k) {
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    CHECK(digits10(p) == k + 1);
    CHECK(digits10(Integer(p - 1)) == k);
  }
}

TEST_CASE("log_abs on huge integers") {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 7, 100000);
  CHECK(log_abs(p) == doctest::Approx(100000 * std::log(7.0)).epsilon(1e-14));
  CHECK(log_abs(Integer(-1)) == 0);
}

TEST_CASE("orbit invariants on random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6), deg(2, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = deg(rng);
    std::vector<Rational> co(static_cast<std::size_t>(d) + 1);
    for (auto& a : co) {
      a = Rational(num(rng), den(rng));
      a.canonicalize();
    }
    co[1] = 0;
    if (co.back() == 0) co.back() = 1;
    const PolyQ f(co);
    const OrbitStatus st = orbit_prefix(f, 6, OrbitOptions{3000});
    Rational prev = 0;
    for (const auto& e : st.entries) {
      CHECK(e.B >= 1);
      Integer g;
      mpz_gcd(g.get_mpz_t(), e.A.get_mpz_t(), e.B.get_mpz_t());
      CHECK(g == 1);
      CHECK(e.value == f(prev));
      prev = e.value;
    }
    if (!st.finite()) {
      for (std::size_t i = 0; i < st.entries.size(); ++i) {
        CHECK(st.entries[i].value != 0);
        for (std::size_t j = 0; j < i; ++j) CHECK(st.entries[i].value != st.entries[j].value);
      }
    }
  }
}

TEST_CASE("trinomial denominators are b^(d^(n-1))") {
  for (const char* c : {"5/2", "-2/3", "1/2", "-3/2", "-7/3"}) {
    for (auto [d, e] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 2}}) {
      const Rational cq = q(c);
      const OrbitStatus st = orbit(make_trinomial(d, e, cq), 5);
      REQUIRE_FALSE(st.finite());
      Integer dn = 1;
      for (const auto& entry : st.entries) {
        Integer expect;
        mpz_pow_ui(expect.get_mpz_t(), cq.get_den_mpz_t(), dn.get_ui());
        CHECK(entry.B == expect);
        dn *= d;
      }
    }
  }
}
