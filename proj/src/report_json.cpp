#include "conncert/report_json.hpp"

#include <cstdio>
#include <cstdlib>

namespace conncert {

using nlohmann::json;

double round9(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return std::strtod(buffer, nullptr);
}

std::string full_precision(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace {

json optional_real(const std::optional<double>& v) { return v ? json(round9(*v)) : json(nullptr); }
json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json girth_json(const Girth& g) { return g.is_finite() ? json(g.value()) : json("acyclic"); }

}  // namespace

json to_json(const ParamSet& p) {
  return {{"n", p.n}, {"delta", p.delta}, {"max_degree", p.max_degree}, {"girth", girth_json(p.girth)}, {"r", p.omega}, {"k", p.k}};
}

json to_json(const GraphFacts& f) {
  return {
      {"n", f.n},
      {"m", f.m},
      {"delta", f.delta},
      {"max_degree", f.max_degree},
      {"girth", girth_json(f.girth)},
      {"omega", f.omega},
      {"connected", f.connected},
      {"kappa", optional_int(f.kappa)},
      {"kappa_edge", optional_int(f.kappa_edge)},
      {"mu1", optional_real(f.mu1)},
      {"algebraic_connectivity", optional_real(f.mu)},
      {"lambda2", optional_real(f.lambda2)},
      {"q2", optional_real(f.q2)},
  };
}

json to_json(const TheoremRow& row) {
  json out = {
      {"theorem", std::string(to_string(row.theorem))},
      {"target", std::string(to_string(row.target))},
      {"status", std::string(to_string(row.status))},
      {"strict", row.strict},
      {"threshold", optional_real(row.threshold)},
      {"observed", optional_real(row.observed)},
      {"margin", optional_real(row.margin)},
  };
  if (!row.reason.empty()) out["reason"] = row.reason;
  return out;
}

json to_json(const Certificate& cert, const GraphFacts& facts, const std::string& graph6) {
  json rows = json::array();
  for (const auto& row : cert.rows) rows.push_back(to_json(row));
  json fired = json::array();
  for (const auto& row : cert.rows)
    if (row.fired()) fired.push_back(std::string(to_string(row.theorem)));
  json params = to_json(facts);
  params["k"] = cert.k;
  params["r"] = cert.r;
  json oracle = nullptr;
  if (cert.oracle) oracle = {{"value", cert.oracle->value}, {"agrees", cert.oracle->agrees}};
  return {
      {"graph6", graph6},
      {"target", std::string(to_string(cert.target))},
      {"params", params},
      {"rows", rows},
      {"fired", fired},
      {"verdict", cert.certified ? "certified" : "not_certified"},
      {"oracle", oracle},
  };
}

json to_json(const AnalysisReport& report) {
  json certs = json::array();
  for (const auto& cert : report.certificates) {
    json rows = json::array();
    for (const auto& row : cert.rows) rows.push_back(to_json(row));
    json entry = {{"target", std::string(to_string(cert.target))},
                  {"k", cert.k},
                  {"verdict", cert.certified ? "certified" : "not_certified"},
                  {"rows", rows}};
    if (cert.oracle) entry["oracle"] = {{"value", cert.oracle->value}, {"agrees", cert.oracle->agrees}};
    certs.push_back(entry);
  }
  return {{"graph6", report.graph6}, {"params", to_json(report.facts)}, {"certificates", certs}};
}

json to_json(const ComparisonReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json entry = {{"theorem", std::string(to_string(row.threshold.theorem))},
                  {"target", std::string(to_string(row.target))},
                  {"strict", row.threshold.strict},
                  {"applicable", row.threshold.applicable()},
                  {"threshold", optional_real(row.threshold.value)}};
    if (!row.threshold.reason.empty()) entry["reason"] = row.threshold.reason;
    rows.push_back(entry);
  }
  json improvements = json::array();
  for (const auto& c : report.improvements) {
    improvements.push_back({{"name", c.name},
                            {"improved", std::string(to_string(c.improved))},
                            {"baseline", std::string(to_string(c.baseline))},
                            {"preconditions_hold", c.preconditions_hold},
                            {"holds", c.holds},
                            {"improved_value", optional_real(c.improved_value)},
                            {"baseline_value", optional_real(c.baseline_value)}});
  }
  auto best = [](const std::optional<TheoremId>& id) { return id ? json(std::string(to_string(*id))) : json(nullptr); };
  return {{"params", to_json(report.params)},
          {"rows", rows},
          {"best", {{"edge", best(report.best_edge)}, {"vertex", best(report.best_vertex)}}},
          {"improvements", improvements}};
}

json to_json(const Spectrum& spectrum) {
  json values = json::array();
  for (double v : spectrum.values) values.push_back(round9(v));
  return {{"values", values}, {"residual", round9(spectrum.residual)}, {"sweeps", spectrum.sweeps}};
}

}  // namespace conncert
