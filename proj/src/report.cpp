#include "zsig/report.hpp"

#include <cmath>
#include <limits>

#include "zsig/errors.hpp"

namespace zsig {

namespace {

Json real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return sig15(x);
}

double real_from(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ParseError("bad real '" + s + "'");
  }
  return j.get<double>();
}

Integer integer_from(const Json& j) { return Integer(j.get<std::string>()); }
Rational rational_from(const Json& j) { return parse_rational(j.get<std::string>()); }

std::string kind_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::wandering: return "wandering";
    case OrbitKind::preperiodic: return "preperiodic";
    case OrbitKind::hit_zero: return "hit_zero";
  }
  return "unknown";
}

OrbitKind kind_from(const std::string& s) {
  if (s == "wandering") return OrbitKind::wandering;
  if (s == "preperiodic") return OrbitKind::preperiodic;
  if (s == "hit_zero") return OrbitKind::hit_zero;
  throw ParseError("unknown orbit kind '" + s + "'");
}

HeightMethod method_from(const std::string& s) {
  for (auto m : {HeightMethod::telescoped, HeightMethod::lemma41, HeightMethod::ingram,
                 HeightMethod::family_trinomial}) {
    if (to_string(m) == s) return m;
  }
  throw ParseError("unknown height method '" + s + "'");
}

GrowthCertificate growth_from(const std::string& s) {
  for (auto g : {GrowthCertificate::none, GrowthCertificate::condition3,
                 GrowthCertificate::trinomial_surrogate, GrowthCertificate::external}) {
    if (to_string(g) == s) return g;
  }
  throw ParseError("unknown growth certificate '" + s + "'");
}

std::vector<int> int_range(const Json& j, const char* what) {
  std::vector<int> out;
  if (j.is_array()) {
    for (const auto& x : j) out.push_back(x.get<int>());
  } else if (j.is_object()) {
    for (int v = j.at("min").get<int>(); v <= j.at("max").get<int>(); ++v) out.push_back(v);
  } else if (j.is_number_integer()) {
    out.push_back(j.get<int>());
  } else {
    throw ParseError(std::string("sweep field '") + what + "' must be a list, {min,max} or an integer");
  }
  return out;
}

}  // namespace

Json to_json(const OrbitStatus& st) {
  Json j;
  j["kind"] = kind_name(st.kind);
  j["tail"] = st.tail;
  j["period"] = st.period;
  j["truncated"] = st.truncated;
  Json entries = Json::array();
  for (const auto& e : st.entries) {
    entries.push_back(Json{{"n", e.n},
                           {"A", e.A.get_str()},
                           {"B", e.B.get_str()},
                           {"digits_A", digits10(e.A)},
                           {"digits_B", digits10(e.B)}});
  }
  j["entries"] = std::move(entries);
  return j;
}

OrbitStatus orbit_from_json(const Json& j) {
  OrbitStatus st;
  st.kind = kind_from(j.at("kind").get<std::string>());
  st.tail = j.at("tail").get<int>();
  st.period = j.at("period").get<int>();
  st.truncated = j.at("truncated").get<bool>();
  for (const auto& e : j.at("entries")) {
    OrbitEntry entry;
    entry.n = e.at("n").get<int>();
    entry.A = integer_from(e.at("A"));
    entry.B = integer_from(e.at("B"));
    entry.value = Rational(entry.A, entry.B);
    entry.value.canonicalize();
    st.entries.push_back(std::move(entry));
  }
  return st;
}

Json to_json(const PrimitiveVerdict& v) {
  Json witnesses = Json::array();
  for (const auto& p : v.witness_primes) witnesses.push_back(p.get_str());
  return Json{{"n", v.n},
              {"has_primitive", v.has_primitive},
              {"stripped_part", v.stripped_part.get_str()},
              {"witness_primes", std::move(witnesses)},
              {"witnesses_complete", v.witnesses_complete},
              {"is_unit", v.is_unit}};
}

PrimitiveVerdict primitive_verdict_from_json(const Json& j) {
  PrimitiveVerdict v;
  v.n = j.at("n").get<int>();
  v.has_primitive = j.at("has_primitive").get<bool>();
  v.stripped_part = integer_from(j.at("stripped_part"));
  for (const auto& p : j.at("witness_primes")) v.witness_primes.push_back(integer_from(p));
  v.witnesses_complete = j.at("witnesses_complete").get<bool>();
  v.is_unit = j.at("is_unit").get<bool>();
  return v;
}

Json to_json(const ZsigmondyReport& rep) {
  Json j;
  j["horizon"] = rep.horizon;
  j["elements"] = rep.elements;
  Json per = Json::array();
  for (const auto& v : rep.per_index) per.push_back(to_json(v));
  j["per_index"] = std::move(per);
  Json k = Json::object();
  for (const auto& [p, n] : rep.k_table) k[p.get_str()] = n;
  j["k_table"] = std::move(k);
  return j;
}

ZsigmondyReport zsigmondy_report_from_json(const Json& j) {
  ZsigmondyReport rep;
  rep.horizon = j.at("horizon").get<int>();
  rep.elements = j.at("elements").get<std::vector<int>>();
  for (const auto& v : j.at("per_index")) rep.per_index.push_back(primitive_verdict_from_json(v));
  for (const auto& [p, n] : j.at("k_table").items()) rep.k_table.emplace(Integer(p), n.get<int>());
  return rep;
}

Json to_json(const RigidViolation& v) {
  return Json{{"prime", v.prime.get_str()}, {"n", v.n}, {"expected", v.expected}, {"actual", v.actual}};
}

Json to_json(const GlobalC& c) {
  Json nonarch = Json::object();
  for (const auto& [p, v] : c.nonarch_contribs) nonarch[p.get_str()] = real(v);
  return Json{{"archimedean_logCv", real(c.archimedean_logCv)},
              {"nonarch_contribs", std::move(nonarch)},
              {"total_C", real(c.total_C)}};
}

GlobalC global_c_from_json(const Json& j) {
  GlobalC c;
  c.archimedean_logCv = real_from(j.at("archimedean_logCv"));
  for (const auto& [p, v] : j.at("nonarch_contribs").items()) c.nonarch_contribs.emplace(Integer(p), real_from(v));
  c.total_C = real_from(j.at("total_C"));
  return c;
}

Json to_json(const HeightInterval& h) {
  return Json{{"lower", real(h.lower)},
              {"upper", real(h.upper)},
              {"method", to_string(h.method)},
              {"iterations", h.iterations}};
}

HeightInterval height_interval_from_json(const Json& j) {
  HeightInterval h;
  h.lower = real_from(j.at("lower"));
  h.upper = real_from(j.at("upper"));
  h.method = method_from(j.at("method").get<std::string>());
  h.iterations = j.at("iterations").get<int>();
  return h;
}

Json to_json(const BoundResult& b) {
  return Json{{"n_max", real(b.n_max)},
              {"n_max_floor", b.n_max_floor},
              {"hhat_lower_used", real(b.hhat_lower_used)},
              {"C_used", real(b.C_used)},
              {"certified", b.certified},
              {"growth_certificate", to_string(b.growth)}};
}

BoundResult bound_result_from_json(const Json& j) {
  BoundResult b;
  b.n_max = real_from(j.at("n_max"));
  b.n_max_floor = j.at("n_max_floor").get<long>();
  b.hhat_lower_used = real_from(j.at("hhat_lower_used"));
  b.C_used = real_from(j.at("C_used"));
  b.certified = j.at("certified").get<bool>();
  b.growth = growth_from(j.at("growth_certificate").get<std::string>());
  return b;
}

Json to_json(const TheoremVerdict& v) {
  Json j;
  j["theorem_id"] = v.theorem_id;
  j["polynomial"] = v.polynomial;
  j["d"] = v.d;
  j["e"] = v.e;
  j["c"] = v.c.get_str();
  j["hypothesis_ok"] = v.hypothesis_ok;
  j["predicted"] = v.predicted;
  j["observed_elements"] = v.observed_elements;
  j["unit_exceptions"] = v.unit_exceptions;
  j["horizon"] = v.horizon;
  j["consistent"] = v.consistent;
  j["error"] = v.error ? Json(*v.error) : Json(nullptr);
  j["details"] = v.details;
  return j;
}

TheoremVerdict verdict_from_json(const Json& j) {
  TheoremVerdict v;
  v.theorem_id = j.at("theorem_id").get<std::string>();
  v.polynomial = j.at("polynomial").get<std::string>();
  v.d = j.at("d").get<int>();
  v.e = j.at("e").get<int>();
  v.c = rational_from(j.at("c"));
  v.hypothesis_ok = j.at("hypothesis_ok").get<bool>();
  v.predicted = j.at("predicted").get<std::string>();
  v.observed_elements = j.at("observed_elements").get<std::vector<int>>();
  v.unit_exceptions = j.at("unit_exceptions").get<std::vector<int>>();
  v.horizon = j.at("horizon").get<int>();
  v.consistent = j.at("consistent").get<bool>();
  if (!j.at("error").is_null()) v.error = j.at("error").get<std::string>();
  v.details = j.at("details");
  return v;
}

SweepSpec sweep_spec_from_json(const Json& j, const RunConfig& base) {
  SweepSpec spec;
  spec.config = base;
  try {
    const std::string family = j.value("family", std::string("trinomial"));
    if (family == "trinomial" || family == "z^d+z^e+c") {
      spec.family = Family::trinomial;
    } else if (family == "binomial" || family == "z^d+c") {
      spec.family = Family::binomial;
    } else {
      throw ParseError("unknown family '" + family + "'");
    }
    spec.d_values = int_range(j.at("d"), "d");
    if (spec.family == Family::trinomial) spec.e_values = int_range(j.at("e"), "e");
    if (j.contains("c")) {
      for (const auto& c : j.at("c")) {
        spec.c_values.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
      }
    }
    if (j.contains("c_grid")) {
      const auto& g = j.at("c_grid");
      SweepSpec::Grid grid;
      grid.num_min = g.at("num").at(0).get<long>();
      grid.num_max = g.at("num").at(1).get<long>();
      grid.den_min = g.at("den").at(0).get<long>();
      grid.den_max = g.at("den").at(1).get<long>();
      spec.grid = grid;
    }
    spec.horizon = j.value("horizon", 0);
    spec.config.digit_budget = j.value("digit_budget", spec.config.digit_budget);
    spec.config.workers = j.value("workers", spec.config.workers);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed sweep spec: ") + ex.what());
  }
  return spec;
}

std::string jsonl_line(const SweepPoint& p, const TheoremVerdict& v) {
  Json j;
  j["v"] = kSchemaVersion;
  j["key"] = p.key();
  const Json body = to_json(v);
  for (const auto& [k, val] : body.items()) j[k] = val;
  return j.dump();
}

std::string verdict_key(const TheoremVerdict& v) { return SweepPoint{v.d, v.e, v.c}.key(); }

}  // namespace zsig
