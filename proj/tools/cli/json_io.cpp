#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <set>

#include "gut/error.hpp"

namespace gut::cli {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  return j;
}

const Json& require_array(const Json& j, const std::string& path, bool nonempty = true) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (nonempty && j.empty()) throw SchemaError(path, "expected a nonempty array");
  return j;
}

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at(path, key), "required field is missing");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

void reject_unknown(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw SchemaError(at(path, key), "unknown field");
  }
}

double require_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(path, "expected a finite number");
  return v;
}

std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

GUInterval require_interval(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected a [left, right] pair");
  return {require_number(j[0], at(path, 0)), require_number(j[1], at(path, 1))};
}

std::uint64_t require_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw SchemaError(path, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

template <class Fn>
auto wrap(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const gut::Error& e) {
    if (e.kind() == ErrorKind::Configuration) throw SchemaError(path, e.what());
    throw;
  }
}

}  // namespace

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

Json number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  const double rounded = std::strtod(buf, nullptr);
  if (rounded == 0.0) return 0;  // folds -0
  if (std::trunc(rounded) == rounded && std::abs(rounded) < 1e15) {
    return static_cast<std::int64_t>(rounded);
  }
  return rounded;
}

Json interval(const GUInterval& value) { return Json::array({number(value.left()), number(value.right())}); }

DecisionProblem read_problem(const Json& doc) {
  require_object(doc, "$");
  reject_unknown(doc, "$", {"natures", "schemes", "attitude"});

  std::vector<NatureStatus> natures;
  const auto& jn = require_array(field(doc, "$", "natures"), "$.natures");
  for (std::size_t i = 0; i < jn.size(); ++i) {
    const auto path = at("$.natures", i);
    require_object(jn[i], path);
    reject_unknown(jn[i], path, {"name", "gum"});
    natures.push_back({require_string(field(jn[i], path, "name"), at(path, "name")),
                       require_interval(field(jn[i], path, "gum"), at(path, "gum"))});
  }

  std::vector<Scheme> schemes;
  const auto& js = require_array(field(doc, "$", "schemes"), "$.schemes");
  for (std::size_t i = 0; i < js.size(); ++i) {
    const auto path = at("$.schemes", i);
    require_object(js[i], path);
    reject_unknown(js[i], path, {"name", "payoffs"});
    Scheme scheme{require_string(field(js[i], path, "name"), at(path, "name")), {}};
    const auto ppath = at(path, "payoffs");
    const auto& jp = require_array(field(js[i], path, "payoffs"), ppath);
    if (jp.size() != natures.size()) {
      throw SchemaError(ppath, "expected " + std::to_string(natures.size()) + " payoffs, one per nature status");
    }
    for (std::size_t j = 0; j < jp.size(); ++j) scheme.payoffs.push_back(require_number(jp[j], at(ppath, j)));
    schemes.push_back(std::move(scheme));
  }

  std::optional<RiskAttitude> attitude;
  if (const auto* ja = optional_field(doc, "attitude")) {
    const auto text = require_string(*ja, "$.attitude");
    attitude = wrap("$.attitude", [&] { return parse_risk_attitude(text); });
  }
  return DecisionProblem(std::move(natures), std::move(schemes), attitude);
}

SpaceDocument read_space(const Json& doc) {
  require_object(doc, "$");
  reject_unknown(doc, "$", {"atoms", "gum", "mode"});
  SpaceDocument out;
  const auto& ja = require_array(field(doc, "$", "atoms"), "$.atoms", false);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < ja.size(); ++i) {
    out.atoms.push_back(require_string(ja[i], at("$.atoms", i)));
    if (!seen.insert(out.atoms.back()).second) throw SchemaError(at("$.atoms", i), "duplicate atom identifier");
  }
  const auto& jg = require_object(field(doc, "$", "gum"), "$.gum");
  for (const auto& [key, _] : jg.items()) {
    if (!seen.count(key)) throw SchemaError(at("$.gum", key), "interval assigned to an undeclared atom");
  }
  for (const auto& atom : out.atoms) {
    out.assignment.push_back(require_interval(field(jg, "$.gum", atom), at("$.gum", atom)));
  }
  if (const auto* jm = optional_field(doc, "mode")) {
    const auto text = require_string(*jm, "$.mode");
    out.mode = wrap("$.mode", [&] { return parse_measure_mode(text); });
  }
  return out;
}

ClusterDocument read_cluster(const Json& doc) {
  require_object(doc, "$");
  reject_unknown(doc, "$", {"delta", "items"});
  ClusterDocument out;
  if (const auto* jd = optional_field(doc, "delta")) {
    out.delta = require_number(*jd, "$.delta");
    if (out.delta < 0.0) throw SchemaError("$.delta", "expected a number >= 0");
  }
  const auto& ji = require_array(field(doc, "$", "items"), "$.items", false);
  for (std::size_t i = 0; i < ji.size(); ++i) out.items.push_back(require_interval(ji[i], at("$.items", i)));
  return out;
}

GenerateDocument read_generate(const Json& doc) {
  require_object(doc, "$");
  reject_unknown(doc, "$", {"k", "seed", "distributions"});
  GenerateDocument out;
  out.k = require_count(field(doc, "$", "k"), "$.k");
  if (out.k == 0) throw SchemaError("$.k", "expected a positive integer");
  if (const auto* js = optional_field(doc, "seed")) out.seed = require_count(*js, "$.seed");

  const auto& jd = require_array(field(doc, "$", "distributions"), "$.distributions");
  for (std::size_t i = 0; i < jd.size(); ++i) {
    const auto path = at("$.distributions", i);
    require_object(jd[i], path);
    reject_unknown(jd[i], path, {"family", "mu", "sigma2", "low", "high", "rate"});
    const auto family = require_string(field(jd[i], path, "family"), at(path, "family"));
    auto num = [&](const char* key) { return require_number(field(jd[i], path, key), at(path, key)); };
    auto has = [&](const char* key) { return optional_field(jd[i], key) != nullptr; };
    out.distributions.push_back(wrap(path, [&] {
      if (family == "normal") return DistributionSpec::normal(num("mu"), num("sigma2"));
      if (family == "uniform") {
        if (has("low") || has("high")) return DistributionSpec::uniform(num("low"), num("high"));
        const double mu = num("mu"), sigma2 = num("sigma2");
        if (!(sigma2 > 0.0)) throw SchemaError(at(path, "sigma2"), "expected a number > 0");
        const double half = std::sqrt(3.0 * sigma2);
        return DistributionSpec::uniform(mu - half, mu + half);
      }
      if (family == "exponential") {
        if (has("rate")) return DistributionSpec::exponential(num("rate"));
        const double mu = num("mu");
        if (!(mu > 0.0)) throw SchemaError(at(path, "mu"), "expected a number > 0");
        return DistributionSpec::exponential(1.0 / mu);
      }
      throw SchemaError(at(path, "family"), "expected one of normal, uniform, exponential");
    }));
  }
  return out;
}

Json write_decision(const DecisionProblem& problem, const DecisionReport& report) {
  const auto& schemes = problem.schemes();
  Json out = Json::object();
  out["natures"] = Json::array();
  for (const auto& n : problem.natures()) out["natures"].push_back({{"name", n.name}, {"gum", interval(n.gum)}});

  out["schemes"] = Json::array();
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    Json payoffs = Json::array();
    for (double p : schemes[i].payoffs) payoffs.push_back(number(p));
    out["schemes"].push_back({{"name", schemes[i].name},
                              {"payoffs", payoffs},
                              {"geu", interval(report.geus[i])},
                              {"gud", number(report.guds[i])}});
  }

  out["relations"] = Json::array();
  for (const auto& row : report.relations) {
    Json jrow = Json::array();
    for (auto r : row) jrow.push_back(std::string(to_string(r)));
    out["relations"].push_back(jrow);
  }

  out["comparisons"] = Json::array();
  for (const auto& c : report.comparisons) {
    out["comparisons"].push_back({{"scheme", schemes[c.index].name},
                                  {"against", schemes[c.against].name},
                                  {"relation", std::string(to_string(c.relation))}});
  }

  out["candidates"] = Json::array();
  for (auto c : report.candidates) out["candidates"].push_back(schemes[c].name);
  out["attitude"] = problem.attitude() ? Json(std::string(to_string(*problem.attitude()))) : Json(nullptr);
  out["selected"] = report.selected_name;
  out["rationale"] = std::string(to_string(report.rationale));
  out["note"] = report.note;
  return out;
}

Json write_axioms(const AxiomReport& report, const SpaceDocument& space) {
  Json out = Json::object();
  out["valid"] = report.valid();
  out["mode"] = std::string(to_string(report.mode));
  out["atoms"] = space.atoms;
  out["sum_left"] = number(report.sum_left);
  out["sum_right"] = number(report.sum_right);
  out["checks"] = Json::array();
  for (const auto& c : report.checks) {
    out["checks"].push_back({{"axiom", c.axiom}, {"ok", c.ok}, {"detail", c.detail}});
  }
  return out;
}

Json write_classes(const ClusterDocument& doc, const std::vector<IndexClass>& classes) {
  Json out = Json::object();
  out["delta"] = number(doc.delta);
  out["items"] = doc.items.size();
  out["classes"] = Json::array();
  for (const auto& cls : classes) out["classes"].push_back(cls);
  return out;
}

Json write_sequence(const GenerateDocument& doc, const std::vector<double>& sequence) {
  Json out = Json::object();
  out["k"] = doc.k;
  out["seed"] = doc.seed;
  out["distributions"] = Json::array();
  for (const auto& d : doc.distributions) {
    out["distributions"].push_back({{"family", std::string(to_string(d.family()))},
                                    {"mean", number(d.mean())},
                                    {"variance", number(d.variance())}});
  }
  Json values = Json::array();
  for (double v : sequence) values.push_back(number(v));
  out["sequence"] = std::move(values);
  return out;
}

}  // namespace gut::cli
