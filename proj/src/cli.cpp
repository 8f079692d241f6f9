#include "zsig/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "zsig/bounds.hpp"
#include "zsig/config.hpp"
#include "zsig/errors.hpp"
#include "zsig/heights.hpp"
#include "zsig/orbit.hpp"
#include "zsig/report.hpp"
#include "zsig/verifiers.hpp"
#include "zsig/zsigmondy.hpp"

namespace zsig {

namespace {

struct PolyArgs {
  std::string coeffs;
  std::string poly;

  PolyQ get() const {
    if (!coeffs.empty() && !poly.empty()) throw ParseError("give either --coeffs or --poly, not both");
    if (!coeffs.empty()) return parse_poly(coeffs);
    if (!poly.empty()) return parse_poly(poly);
    throw ParseError("a polynomial is required (--coeffs or --poly)");
  }
};

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw ParseError("unknown format '" + s + "'");
}

std::string arrows(std::string s) {
  for (std::size_t pos = s.find("->"); pos != std::string::npos; pos = s.find("->", pos)) {
    s.replace(pos, 2, "→");
  }
  return s;
}

std::string join(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(15) << x;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void write_flat_csv(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      write_flat_csv(out, v, key);
    } else {
      out << csv_field(key) << "," << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

int cmd_orbit(const PolyQ& f, int N, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const OrbitStatus st = orbit(f, N, cfg.orbit_options());
  if (st.finite()) {
    err << "preperiodic: " << arrows(st.cycle_description()) << "\n";
    return kExitPreperiodic;
  }
  switch (cfg.output_format) {
    case OutputFormat::json: {
      Json j;
      j["polynomial"] = f.coeff_list();
      j["N"] = N;
      j["orbit"] = to_json(st);
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "n,A,B,digits_A,digits_B\n";
      for (const auto& e : st.entries) {
        out << e.n << "," << e.A << "," << e.B << "," << digits10(e.A) << "," << digits10(e.B) << "\n";
      }
      break;
    case OutputFormat::text:
      out << "f = " << f.to_string() << "\n";
      out << std::setw(4) << "n" << "  " << std::setw(8) << "digits_A" << "  " << std::setw(8) << "digits_B"
          << "  A_n / B_n\n";
      for (const auto& e : st.entries) {
        out << std::setw(4) << e.n << "  " << std::setw(8) << digits10(e.A) << "  " << std::setw(8)
            << digits10(e.B) << "  " << e.A << " / " << e.B << "\n";
      }
      break;
  }
  return kExitOk;
}

int cmd_zsig(const PolyQ& f, int N, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!f.admissible()) throw ParseError("a_1 ≠ 0: Zsigmondy machinery requires a polynomial with a_1 = 0");
  const OrbitStatus st = orbit(f, N, cfg.orbit_options());
  if (st.finite()) {
    err << "preperiodic: " << arrows(st.cycle_description()) << "\n";
    return kExitPreperiodic;
  }
  ZsigOptions zo;
  zo.orbit = cfg.orbit_options();
  zo.factor = cfg.factor_options();
  const ZsigmondyReport rep = zsigmondy_report(st.entries, zo);
  const auto violations = verify_rigid_divisibility(st.entries, rep.k_table);
  switch (cfg.output_format) {
    case OutputFormat::json: {
      Json j;
      j["polynomial"] = f.coeff_list();
      j["report"] = to_json(rep);
      j["rigid_violations"] = violations.size();
      Json vs = Json::array();
      for (const auto& v : violations) vs.push_back(to_json(v));
      j["rigid_violation_list"] = std::move(vs);
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "n,has_primitive,is_unit,stripped_digits,witness_primes,witnesses_complete\n";
      for (const auto& v : rep.per_index) {
        std::string w;
        for (const auto& p : v.witness_primes) w += (w.empty() ? "" : " ") + p.get_str();
        out << v.n << "," << v.has_primitive << "," << v.is_unit << "," << digits10(v.stripped_part) << ","
            << w << "," << v.witnesses_complete << "\n";
      }
      break;
    case OutputFormat::text: {
      out << "f = " << f.to_string() << "\n";
      out << "horizon: " << rep.horizon << "\n";
      out << "elements: " << join(rep.elements) << "\n";
      for (const auto& v : rep.per_index) {
        out << "  n=" << v.n << "  " << (v.has_primitive ? "primitive" : "no primitive");
        if (v.is_unit) out << " (unit)";
        if (!v.witness_primes.empty()) {
          out << "  witnesses:";
          for (const auto& p : v.witness_primes) out << " " << p;
          if (!v.witnesses_complete) out << " ...";
        }
        out << "\n";
      }
      out << "k-table (" << rep.k_table.size() << " primes):";
      int shown = 0;
      for (const auto& [p, k] : rep.k_table) {
        if (shown++ == 40) {
          out << " ...";
          break;
        }
        out << " " << p << ":" << k;
      }
      out << "\n";
      out << "rigid divisibility violations: " << violations.size() << "\n";
      break;
    }
  }
  return kExitOk;
}

struct HeightChoice {
  HeightInterval interval;
  bool certified = true;
  std::optional<double> C_family;
  BoundOptions bound_opts;
  std::string route;
};

HeightChoice family_height(const PolyQ& f) {
  HeightChoice h;
  if (auto b = as_binomial(f)) {
    h.interval.lower = global_height(b->c) / b->d;
    h.interval.method = HeightMethod::ingram;
    h.C_family = std::log(2.0) + global_height(b->c);
    h.route = "hhat(c) >= h(c)/d";
    Integer lhs, rhs, two_d;
    mpz_pow_ui(lhs.get_mpz_t(), Integer(abs(b->c.get_num())).get_mpz_t(), static_cast<unsigned long>(b->d - 1));
    mpz_pow_ui(rhs.get_mpz_t(), b->c.get_den_mpz_t(), static_cast<unsigned long>(b->d - 1));
    mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(b->d));
    h.certified = b->d >= 3 && !is_integer(b->c) && lhs > two_d * rhs;
    return h;
  }
  if (auto t = as_trinomial(f)) {
    const Rational& c = t->c;
    h.interval.method = HeightMethod::family_trinomial;
    h.C_family = std::log(2.0) + global_height(c);
    if (abs(c) > 2) {
      const double hc = global_height(c);
      h.interval.lower = t->d >= 5 ? hc / (t->d - 1) : hc / (3.0 * (t->d - 1));
      h.route = t->d >= 5 ? "(d-1) hhat(c) >= h(c)" : "(d-1) hhat(c) >= h(c)/3";
      return h;
    }
    if (c > 1 && c < 2) {
      h.interval.lower = (t->d - 2) * global_height(Rational(2 * c)) / (static_cast<double>(t->d) * (t->d - 1));
      h.route = "(d-1) hhat(c) >= (d-2) h(2c)/d";
      h.bound_opts.external_growth = true;
      return h;
    }
  }
  throw DomainError("no family height bound applies to " + f.to_string());
}

int cmd_bound(const PolyQ& f, const std::string& method, int N, const RunConfig& cfg, std::ostream& out) {
  if (!f.admissible()) throw DomainError("a_1 ≠ 0: the bound requires a polynomial with a_1 = 0");
  const Rational a0 = f.constant_term();
  const GlobalC gc = global_C(f);
  HeightChoice h;
  if (method == "ingram") {
    if (!as_binomial(f)) throw DomainError("--hhat ingram applies to z^d + c only");
    h = family_height(f);
  } else if (method == "family") {
    h = family_height(f);
  } else if (method == "telescope") {
    h.interval = canonical_height_interval(f, a0, N, cfg.orbit_options());
    h.route = "telescoped interval at N = " + std::to_string(h.interval.iterations);
  } else if (method == "lemma41") {
    double D;
    if (as_trinomial(f) && abs(a0) >= 1) {
      D = round_down(trinomial_D_lower(f).get_d());
      h.route = "orbit-height lower bound, D = 1/max(2,|c|)^d";
    } else {
      D = numeric_D_estimate(f.cleared());
      h.certified = false;
      h.route = "orbit-height lower bound, D from numeric estimate (not certified)";
    }
    h.interval = lemma41_lower_bound(f, a0, N, D, cfg.orbit_options());
  } else {
    throw ParseError("unknown --hhat method '" + method + "'");
  }
  const double C_used = h.C_family ? std::max(*h.C_family, gc.total_C) : gc.total_C;
  std::optional<BoundResult> bound;
  std::string note;
  if (h.interval.lower > 0) {
    h.bound_opts.hhat_certified = h.certified;
    bound = theorem1_bound(f, h.interval.lower, C_used, h.bound_opts);
  } else {
    note = "hhat lower bound is 0: bound is vacuous";
  }

  Json j;
  j["polynomial"] = f.coeff_list();
  j["a0"] = a0.get_str();
  j["C"] = to_json(gc);
  if (h.C_family) j["C_family"] = sig15(*h.C_family);
  j["C_used"] = sig15(C_used);
  j["hhat"] = to_json(h.interval);
  j["hhat_route"] = h.route;
  j["hhat_certified"] = h.certified;
  if (bound) {
    j["bound"] = to_json(*bound);
  } else {
    j["bound"] = nullptr;
    j["note"] = note;
  }
  j["certified"] = bound ? bound->certified : false;

  switch (cfg.output_format) {
    case OutputFormat::json: out << j.dump(2) << "\n"; break;
    case OutputFormat::csv:
      out << "field,value\n";
      write_flat_csv(out, j);
      break;
    case OutputFormat::text:
      out << "f = " << f.to_string() << "\n";
      out << "log C_v at infinity: " << fmt(gc.archimedean_logCv) << "\n";
      for (const auto& [p, v] : gc.nonarch_contribs) out << "log C_v at p=" << p << ": " << fmt(v) << "\n";
      out << "C (sum of log C_v): " << fmt(gc.total_C) << "\n";
      if (h.C_family) out << "C (family constant): " << fmt(*h.C_family) << "\n";
      out << "C used: " << fmt(C_used) << "\n";
      out << "hhat(a0) in [" << fmt(h.interval.lower) << ", " << fmt(h.interval.upper) << "]  method "
          << to_string(h.interval.method) << " (" << h.route << ")\n";
      if (bound) {
        out << "n_max = " << fmt(bound->n_max) << "\n";
        out << "n <= " << bound->n_max_floor << "\n";
        out << "growth certificate: " << to_string(bound->growth) << "\n";
      } else {
        out << note << "\n";
      }
      out << "certified=" << (bound && bound->certified ? "true" : "false") << "\n";
      break;
  }
  return kExitOk;
}

void print_verdict(const TheoremVerdict& v, const RunConfig& cfg, std::ostream& out) {
  const Json j = to_json(v);
  switch (cfg.output_format) {
    case OutputFormat::json: out << j.dump(2) << "\n"; break;
    case OutputFormat::csv:
      out << "field,value\n";
      write_flat_csv(out, j);
      break;
    case OutputFormat::text:
      out << v.theorem_id << "  f = " << v.polynomial << "\n";
      out << "hypothesis_ok=" << (v.hypothesis_ok ? "true" : "false") << "\n";
      out << "predicted: " << v.predicted << "\n";
      out << "observed elements (n <= " << v.horizon << "): " << join(v.observed_elements) << "\n";
      if (!v.unit_exceptions.empty()) out << "unit exceptions: " << join(v.unit_exceptions) << "\n";
      if (v.error) out << "error: " << *v.error << "\n";
      for (const auto& [k, val] : v.details.items()) out << "  " << k << ": " << val.dump() << "\n";
      out << (v.consistent ? "consistent" : "INCONSISTENT") << "\n";
      break;
  }
}

int cmd_verify(const std::string& id, int d, int e, const std::string& c, int horizon, const RunConfig& cfg,
               std::ostream& out) {
  const TheoremVerdict v = verify_by_id(id, d, e, parse_rational(c), VerifyOptions::from(cfg, horizon));
  print_verdict(v, cfg, out);
  if (!v.consistent) return kExitInconsistent;
  if (v.error) return kExitPreperiodic;
  return kExitOk;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path, bool resume, RunConfig cfg,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(spec_path);
  if (!in) throw ParseError("cannot open sweep spec '" + spec_path + "'");
  Json spec_json;
  try {
    spec_json = Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("sweep spec is not valid JSON: ") + ex.what());
  }
  const SweepSpec spec = sweep_spec_from_json(spec_json, cfg);

  std::vector<std::string> done;
  std::size_t inconsistent = 0, errors = 0, written = 0;
  if (resume && !out_path.empty()) {
    std::ifstream prev(out_path, std::ios::binary);
    std::uintmax_t good_bytes = 0;
    for (std::string line; std::getline(prev, line);) {
      if (prev.eof()) break;  // no newline: torn by an interrupted run
      Json j;
      if (!line.empty()) {
        try {
          j = Json::parse(line);
        } catch (const nlohmann::json::exception&) {
          break;
        }
        if (j.value("v", 0) != kSchemaVersion) throw ParseError("results file has an unknown schema version");
        done.push_back(j.at("key").get<std::string>());
        if (!j.at("consistent").get<bool>()) ++inconsistent;
      }
      good_bytes += line.size() + 1;
    }
    prev.close();
    std::error_code ec;
    if (std::filesystem::exists(out_path, ec) && std::filesystem::file_size(out_path, ec) > good_bytes) {
      std::filesystem::resize_file(out_path, good_bytes, ec);
      if (ec) throw ParseError("cannot trim torn results file '" + out_path + "'");
    }
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path, resume ? std::ios::app : std::ios::trunc);
    if (!file) throw ParseError("cannot open output '" + out_path + "'");
    sink = &file;
  }
  run_sweep(spec, done, [&](const SweepPoint& p, const TheoremVerdict& v) {
    *sink << jsonl_line(p, v) << "\n";
    sink->flush();
    ++written;
    if (!v.consistent) ++inconsistent;
    if (v.error) ++errors;
  });
  err << "sweep: " << written << " new verdicts, " << done.size() << " resumed, " << inconsistent
      << " inconsistent, " << errors << " errors\n";
  return inconsistent ? kExitInconsistent : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits, Zsigmondy sets and height bounds for rational polynomials", "zsig"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "json|csv|text")->envname("ZSIG_FORMAT");
  app.add_option("--digit-budget", cfg.digit_budget, "largest digit count of any iterate")->envname("ZSIG_DIGIT_BUDGET");
  app.add_option("--workers", cfg.workers, "sweep worker threads")->envname("ZSIG_WORKERS");
  app.add_option("--seed", cfg.seed, "factoring seed")->envname("ZSIG_SEED");
  app.add_option("--trial-bound", cfg.factor_trial_bound, "trial-division bound")->envname("ZSIG_TRIAL_BOUND");
  app.add_option("--rho-budget", cfg.factor_rho_budget, "rho work budget")->envname("ZSIG_RHO_BUDGET");
  app.add_option("--rounds", cfg.primality_rounds, "probable-prime rounds")->envname("ZSIG_ROUNDS");

  PolyArgs poly;
  int N = 6;
  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("--coeffs", poly.coeffs, "ascending coefficient list a_0,a_1,...,a_d");
    sub->add_option("--poly", poly.poly, "polynomial such as 'z^3 + 5/2'");
  };

  auto* orbit_cmd = app.add_subcommand("orbit", "print f^n(0) for n = 1..N");
  add_poly(orbit_cmd);
  orbit_cmd->add_option("-N", N, "iterations")->check(CLI::PositiveNumber);

  auto* zsig_cmd = app.add_subcommand("zsig", "Zsigmondy set of the critical orbit up to N");
  add_poly(zsig_cmd);
  zsig_cmd->add_option("-N", N, "horizon")->check(CLI::PositiveNumber);

  std::string hhat = "family";
  auto* bound_cmd = app.add_subcommand("bound", "explicit bound on Zsigmondy elements");
  add_poly(bound_cmd);
  bound_cmd->add_option("--hhat", hhat, "ingram|family|telescope|lemma41");
  bound_cmd->add_option("-N", N, "iterations for telescope and lemma41")->check(CLI::NonNegativeNumber);

  std::string theorem, c_text;
  int d = 0, e = 0, horizon = 0;
  auto* verify_cmd = app.add_subcommand("verify", "check one theorem instance");
  verify_cmd->add_option("theorem", theorem, "cor12|thm13|prop51|prop52|prop53|prop54|dh")->required();
  verify_cmd->add_option("--d", d, "degree")->required();
  verify_cmd->add_option("--e", e, "middle exponent (trinomials)");
  verify_cmd->add_option("--c", c_text, "constant term")->required();
  verify_cmd->add_option("--horizon", horizon, "indices to examine (0 = automatic)");

  std::string spec_path, out_path;
  bool resume = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "verify every point of a grid, writing JSONL");
  sweep_cmd->add_option("spec", spec_path, "sweep spec JSON file")->required();
  sweep_cmd->add_option("-o,--out", out_path, "results file (stdout if omitted)");
  sweep_cmd->add_flag("--resume", resume, "skip keys already present in the results file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::CallForHelp& ex) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitParse;
  }

  try {
    cfg.output_format = parse_format(format);
    cfg.validate();
    if (orbit_cmd->parsed()) return cmd_orbit(poly.get(), N, cfg, out, err);
    if (zsig_cmd->parsed()) return cmd_zsig(poly.get(), N, cfg, out, err);
    if (bound_cmd->parsed()) return cmd_bound(poly.get(), hhat, N, cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(theorem, d, e, c_text, horizon, cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(spec_path, out_path, resume, cfg, out, err);
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& ex) {
    err << "budget exhausted: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const FiniteOrbitError& ex) {
    err << "preperiodic: " << arrows(ex.what()) << "\n";
    return kExitPreperiodic;
  }
  return kExitParse;
}

}  // namespace zsig
