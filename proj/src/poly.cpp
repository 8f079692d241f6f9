#include "zsig/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "zsig/errors.hpp"

namespace zsig {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
}

// Recursive-descent reader for sums of rational monomials in z.
class MonomialParser {
 public:
  explicit MonomialParser(std::string_view text) : text_(text) {}

  std::map<int, Rational> parse() {
    std::map<int, Rational> terms;
    skip_ws();
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (get() == '-') ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [power, coeff] = term();
      terms[power] += sign * coeff;
      first = false;
      skip_ws();
    }
    if (first) fail("empty polynomial");
    return terms;
  }

 private:
  std::pair<int, Rational> term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rational(integer());
      have_coeff = true;
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        coeff /= den;
        skip_ws();
      }
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 'z') fail("expected 'z' after '*'");
      }
    }
    int power = 0;
    if (peek() == 'z') {
      get();
      power = 1;
      skip_ws();
      if (peek() == '^' || (peek() == '*' && peek(1) == '*')) {
        if (get() == '*') get();
        skip_ws();
        Integer p = integer();
        if (p > 1000000) fail("exponent too large");
        power = static_cast<int>(p.get_si());
        skip_ws();
      }
      if (peek() == '/') {
        get();
        skip_ws();
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        coeff /= den;
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 'z'");
    }
    coeff.canonicalize();
    return {power, coeff};
  }

  Integer integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "cannot parse polynomial '" << text_ << "' at offset " << pos_ << ": " << what;
    throw ParseError(os.str());
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string{num});
  Integer d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

std::size_t digits10(const Integer& x) {
  if (x == 0) return 1;
  // mpz_sizeinbase may overshoot by one.
  std::size_t n = mpz_sizeinbase(x.get_mpz_t(), 10);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, n - 1);
  if (mpz_cmpabs(x.get_mpz_t(), p.get_mpz_t()) < 0) --n;
  return n;
}

double log_abs(const Integer& x) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  if (coeffs_.size() < 3) throw DomainError("polynomial degree must be at least 2");
  if (coeffs_.back() == 0) throw DomainError("leading coefficient must be nonzero");
  cleared_ = clear_denominators(*this);
}

Rational PolyQ::operator()(const Rational& x) const {
  // f(A/B) = sum f1_i A^i B^(d-i) / (f2 B^d)
  const Integer& A = x.get_num();
  const Integer& B = x.get_den();
  const int d = degree();
  Integer num = cleared_.f1.back();
  Integer bpow = 1;
  for (int i = d - 1; i >= 0; --i) {
    num *= A;
    bpow *= B;
    const Integer& c = cleared_.f1[static_cast<std::size_t>(i)];
    if (c != 0) num += c * bpow;
  }
  Rational out(num, cleared_.f2 * bpow);
  out.canonicalize();
  return out;
}

std::string PolyQ::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << "z";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::string PolyQ::coeff_list() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

PolyQ parse_poly(std::string_view spec) {
  std::string_view s = trim(spec);
  if (s.empty()) throw ParseError("empty polynomial specification");
  std::vector<Rational> coeffs;
  if (s.find('z') != std::string_view::npos) {
    auto terms = MonomialParser(s).parse();
    int deg = 0;
    for (const auto& [power, c] : terms) {
      if (c != 0) deg = std::max(deg, power);
    }
    coeffs.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& [power, c] : terms) {
      if (power <= deg) coeffs[static_cast<std::size_t>(power)] = c;
    }
  } else {
    std::size_t start = 0;
    while (true) {
      auto comma = s.find(',', start);
      coeffs.push_back(parse_rational(s.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (coeffs.back() == 0) throw ParseError("leading coefficient a_d must be nonzero");
  if (coeffs.size() < 3) throw ParseError("polynomial degree must be at least 2");
  return PolyQ(std::move(coeffs));
}

ClearedPoly clear_denominators(const PolyQ& f) {
  if (!f.cleared().f1.empty()) return f.cleared();
  ClearedPoly out;
  out.f2 = 1;
  for (const auto& a : f.coeffs()) {
    mpz_lcm(out.f2.get_mpz_t(), out.f2.get_mpz_t(), a.get_den_mpz_t());
  }
  out.f1.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) {
    out.f1.push_back(a.get_num() * (out.f2 / a.get_den()));
  }
  return out;
}

std::optional<TrinomialForm> as_trinomial(const PolyQ& f) {
  const int d = f.degree();
  if (d < 3 || f.leading() != 1 || f.constant_term() == 0) return std::nullopt;
  int e = -1;
  for (int i = 1; i < d; ++i) {
    const Rational& a = f.coeff(i);
    if (a == 0) continue;
    if (a != 1 || e != -1) return std::nullopt;
    e = i;
  }
  if (e < 2) return std::nullopt;
  return TrinomialForm{d, e, f.constant_term()};
}

std::optional<BinomialForm> as_binomial(const PolyQ& f) {
  const int d = f.degree();
  if (f.leading() != 1 || f.constant_term() == 0) return std::nullopt;
  for (int i = 1; i < d; ++i) {
    if (f.coeff(i) != 0) return std::nullopt;
  }
  return BinomialForm{d, f.constant_term()};
}

PolyQ make_trinomial(int d, int e, const Rational& c) {
  if (!(d > e && e >= 2)) throw DomainError("trinomial z^d + z^e + c needs d > e >= 2");
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
  coeffs[0] = c;
  coeffs[static_cast<std::size_t>(e)] = 1;
  coeffs[static_cast<std::size_t>(d)] = 1;
  return PolyQ(std::move(coeffs));
}

PolyQ make_binomial(int d, const Rational& c) {
  if (d < 2) throw DomainError("binomial z^d + c needs d >= 2");
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
  coeffs[0] = c;
  coeffs[static_cast<std::size_t>(d)] = 1;
  return PolyQ(std::move(coeffs));
}

}  // namespace zsig
