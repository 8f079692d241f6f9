#include "zsig/orbit.hpp"

#include <map>
#include <sstream>

#include "zsig/errors.hpp"

namespace zsig {

std::size_t rational_digits(const Rational& x) {
  return std::max(digits10(x.get_num()), digits10(x.get_den()));
}

namespace {

OrbitStatus run_orbit(const PolyQ& f, int N, const OrbitOptions& opts, bool tolerate_budget) {
  if (N < 1) throw DomainError("orbit length N must be at least 1");
  OrbitStatus out;
  std::map<Rational, int> seen;
  seen.emplace(Rational(0), 0);
  Rational x = 0;
  for (int n = 1; n <= N; ++n) {
    Rational next = f(x);
    if (rational_digits(next) > opts.digit_budget) {
      if (tolerate_budget) {
        out.truncated = true;
        return out;
      }
      std::ostringstream os;
      os << "digit budget of " << opts.digit_budget << " exceeded at n = " << n;
      throw BudgetExceeded(os.str());
    }
    x = std::move(next);
    out.entries.push_back(OrbitEntry{n, x, x.get_num(), x.get_den()});
    auto [it, inserted] = seen.emplace(x, n);
    if (!inserted) {
      out.tail = it->second;
      out.period = n - it->second;
      out.kind = out.tail == 0 ? OrbitKind::hit_zero : OrbitKind::preperiodic;
      return out;
    }
  }
  return out;
}

}  // namespace

std::string OrbitStatus::cycle_description() const {
  if (!finite()) return {};
  std::ostringstream os;
  os << "0";
  for (const auto& e : entries) os << " -> " << e.value.get_str();
  return os.str();
}

OrbitStatus orbit(const PolyQ& f, int N, const OrbitOptions& opts) {
  return run_orbit(f, N, opts, false);
}

OrbitStatus orbit_prefix(const PolyQ& f, int N, const OrbitOptions& opts) {
  return run_orbit(f, N, opts, true);
}

std::vector<Rational> forward_orbit(const PolyQ& f, const Rational& x, int N,
                                    const OrbitOptions& opts) {
  std::vector<Rational> out{x};
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (int k = 1; k <= N; ++k) {
    Rational next = f(out.back());
    if (rational_digits(next) > opts.digit_budget) {
      throw BudgetExceeded("digit budget exceeded while iterating");
    }
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace zsig
