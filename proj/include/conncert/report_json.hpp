#pragma once

#include <string>

#include <json.hpp>

#include "conncert/certify.hpp"
#include "conncert/spectra.hpp"

namespace conncert {

/// Machine output prints reals at 9 significant digits; rounding through the
/// decimal form keeps repeated runs byte-identical.
double round9(double value);
/// Full-precision decimal rendering (17 significant digits) for witnesses.
std::string full_precision(double value);

nlohmann::json to_json(const ParamSet& p);
nlohmann::json to_json(const GraphFacts& facts);
nlohmann::json to_json(const TheoremRow& row);
/// {graph6, params, rows[], verdict, oracle}
nlohmann::json to_json(const Certificate& cert, const GraphFacts& facts, const std::string& graph6);
nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const Spectrum& spectrum);

}  // namespace conncert
