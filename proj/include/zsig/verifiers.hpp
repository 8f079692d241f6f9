#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zsig/config.hpp"
#include "zsig/poly.hpp"

namespace zsig {

struct TheoremVerdict {
  std::string theorem_id;  // cor12, thm13, prop51..prop54, dh, none
  std::string polynomial;  // ascending coefficient list
  int d = 0;
  int e = 0;  // 0 for z^d + c
  Rational c;
  bool hypothesis_ok = false;
  std::string predicted;
  std::vector<int> observed_elements;
  // Members of observed_elements whose numerator is +-1.
  std::vector<int> unit_exceptions;
  int horizon = 0;  // indices actually examined
  bool consistent = true;
  std::optional<std::string> error;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

struct VerifyOptions {
  OrbitOptions orbit;
  // 0 picks max(floor(bound) + 4, 10).
  int horizon = 0;
  // Deepest index for exact growth and sandwich checks.
  int fact_depth = 6;

  static VerifyOptions from(const RunConfig& cfg, int horizon = 0) {
    return VerifyOptions{cfg.orbit_options(), horizon, 6};
  }
};

// z^d + c, c non-integral, |c| > 2^(d/(d-1)): Z(f, 0) is empty.
TheoremVerdict verify_cor12(int d, const Rational& c, const VerifyOptions& opts = {});
// z^d + z^e + c, |c| > 2: every n in Z(f, 0) has n <= 6.
TheoremVerdict verify_thm13(int d, int e, const Rational& c, const VerifyOptions& opts = {});
// 1 < c < 2: every n in Z(f, 0) has n <= 7.
TheoremVerdict verify_prop51(int d, int e, const Rational& c, const VerifyOptions& opts = {});
// 0 < c < 1: Z(f, 0) is empty.
TheoremVerdict verify_prop52(int d, int e, const Rational& c, const VerifyOptions& opts = {});
// -1 < c < 0, d odd: Z(f, 0) is empty.
TheoremVerdict verify_prop53(int d, int e, const Rational& c, const VerifyOptions& opts = {});
// -2 < c < -1, d odd or e even: Z(f, 0) is empty.
TheoremVerdict verify_prop54(int d, int e, const Rational& c, const VerifyOptions& opts = {});
// z^d + c with c an integer: max Z <= 2 for c = +-1, empty otherwise.
TheoremVerdict verify_dh(int d, const Rational& c, const VerifyOptions& opts = {});

enum class Family { binomial, trinomial };

std::string to_string(Family f);

// Picks the verifier whose hypotheses match (family, d, e, c). Points no
// verifier covers get theorem_id "none" with the observed set only.
TheoremVerdict verify_point(Family family, int d, int e, const Rational& c, const VerifyOptions& opts = {});

// Runs a verifier by id ("cor12", "thm13", "prop51", ...). Throws
// DomainError for unknown ids.
TheoremVerdict verify_by_id(const std::string& id, int d, int e, const Rational& c,
                            const VerifyOptions& opts = {});

struct SweepSpec {
  Family family = Family::trinomial;
  std::vector<int> d_values;
  std::vector<int> e_values;       // ignored for binomials
  std::vector<Rational> c_values;  // explicit list, used as given
  // Optional grid num/den with num in [num_min, num_max], den in
  // [den_min, den_max], kept only when already in lowest terms.
  struct Grid {
    long num_min = 0, num_max = 0, den_min = 1, den_max = 1;
  };
  std::optional<Grid> grid;
  int horizon = 0;
  RunConfig config;
};

struct SweepPoint {
  int d = 0;
  int e = 0;
  Rational c;
  std::string key() const;
};

// Grid points in deterministic order: d, then e (e < d), then c.
std::vector<SweepPoint> expand_sweep(const SweepSpec& spec);

// One verdict per point, in expand_sweep order. Per-point failures land in
// that verdict's error field. Runs up to spec.config.workers points at once.
std::vector<TheoremVerdict> run_sweep(const SweepSpec& spec);

// Same, skipping points whose key is in `skip`.
std::vector<TheoremVerdict> run_sweep(const SweepSpec& spec, const std::vector<std::string>& skip);

// Streams verdicts to `sink` in expand_sweep order, on the calling thread,
// while workers compute ahead. Returns the number of points run.
using VerdictSink = std::function<void(const SweepPoint&, const TheoremVerdict&)>;
std::size_t run_sweep(const SweepSpec& spec, const std::vector<std::string>& skip, const VerdictSink& sink);

// 15 significant digits, the precision reports carry.
double sig15(double x);

}  // namespace zsig
