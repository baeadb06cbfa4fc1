#pragma once

// Aggregated analysis of one input and its serializations. JSON output is
// byte-deterministic: fixed field order, no floats, no timestamps.

#include "schubert/decomposition.hpp"
#include "schubert/geometry.hpp"
#include "schubert/verify.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

inline constexpr const char* kReportSchema = "schubert-report/1";

struct AnalyzeData {
    SchubertInput input;
    StratumTable strata;
    PairTable pairs;
    std::vector<ResolutionReport> smallness;
    IHTable ih;
    std::vector<SummandTable> summands;  // p = 1..r+1
    PerverseTable perverse;
    std::map<std::pair<int, int>, LaurentPoly> stalks;  // (p,q), p asc then q asc
    std::vector<CheckResult> checks;
};

AnalyzeData analyze(const SchubertInput& in);

nlohmann::ordered_json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const AnalyzeData& data);
std::string to_text(const AnalyzeData& data);
std::string to_latex(const AnalyzeData& data);

}  // namespace schubert
