#include <atomic>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <numeric>
#include <set>
#include <thread>

#include "zsig/config.hpp"
#include "zsig/errors.hpp"
#include "zsig/verifiers.hpp"

namespace zsig {

void RunConfig::validate() const {
  if (digit_budget == 0) throw DomainError("digit budget must be positive");
  if (factor_trial_bound == 0) throw DomainError("trial-division bound must be positive");
  if (factor_rho_budget == 0) throw DomainError("rho budget must be positive");
  if (primality_rounds <= 0) throw DomainError("primality rounds must be positive");
  if (workers <= 0) throw DomainError("worker count must be positive");
}

std::string SweepPoint::key() const {
  return "d=" + std::to_string(d) + ",e=" + std::to_string(e) + ",c=" + c.get_str();
}

std::vector<SweepPoint> expand_sweep(const SweepSpec& spec) {
  std::vector<Rational> cs = spec.c_values;
  if (spec.grid) {
    const auto& g = *spec.grid;
    if (g.den_min < 1) throw DomainError("grid denominators must be positive");
    for (long num = g.num_min; num <= g.num_max; ++num) {
      for (long den = g.den_min; den <= g.den_max; ++den) {
        if (num == 0 || std::gcd(num, den) != 1) continue;
        cs.emplace_back(num, den);
      }
    }
  }
  std::vector<SweepPoint> out;
  for (int d : spec.d_values) {
    if (spec.family == Family::binomial) {
      for (const auto& c : cs) out.push_back(SweepPoint{d, 0, c});
      continue;
    }
    for (int e : spec.e_values) {
      if (!(e >= 2 && e < d)) continue;
      for (const auto& c : cs) out.push_back(SweepPoint{d, e, c});
    }
  }
  return out;
}

std::vector<TheoremVerdict> run_sweep(const SweepSpec& spec) { return run_sweep(spec, {}); }

std::vector<TheoremVerdict> run_sweep(const SweepSpec& spec, const std::vector<std::string>& skip) {
  std::vector<TheoremVerdict> out;
  run_sweep(spec, skip, [&](const SweepPoint&, const TheoremVerdict& v) { out.push_back(v); });
  return out;
}

std::size_t run_sweep(const SweepSpec& spec, const std::vector<std::string>& skip, const VerdictSink& sink) {
  spec.config.validate();
  const std::set<std::string> done(skip.begin(), skip.end());
  std::vector<SweepPoint> points;
  for (auto& p : expand_sweep(spec)) {
    if (!done.count(p.key())) points.push_back(std::move(p));
  }
  const VerifyOptions opts = VerifyOptions::from(spec.config, spec.horizon);
  std::vector<std::optional<TheoremVerdict>> results(points.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const SweepPoint& p = points[i];
      TheoremVerdict v;
      try {
        v = verify_point(spec.family, p.d, p.e, p.c, opts);
      } catch (const std::exception& ex) {
        v = TheoremVerdict{};
        v.theorem_id = "error";
        v.d = p.d;
        v.e = p.e;
        v.c = p.c;
        v.predicted = "none (hypothesis not met)";
        v.error = ex.what();
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(v);
      }
      ready.notify_one();
    }
  };
  const int workers = std::max(1, std::min<int>(spec.config.workers, static_cast<int>(points.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  // Single ordered consumer.
  for (std::size_t i = 0; i < points.size(); ++i) {
    TheoremVerdict v;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[i].has_value(); });
      v = std::move(*results[i]);
      results[i].reset();
    }
    sink(points[i], v);
  }
  for (auto& t : pool) t.join();
  return points.size();
}

}  // namespace zsig
