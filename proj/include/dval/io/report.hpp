#pragma once

#include <string>

#include <json.hpp>

#include "dval/algorithms/algorithms.hpp"

namespace dval {

using OrderedJson = nlohmann::ordered_json;

// Steps use 1-based indices: {"kind": "monoidal"|"swap"|"coord", "i", "j",
// "b", "m", "values_after"}.
OrderedJson trace_to_json(const Trace& trace, const FieldPresentation& field);
// Throws InputError on a malformed step.
Trace trace_from_json(const OrderedJson& j, const FieldPresentation& field);

// "T2*t^2 + T2*t^4 + O(t^7)" with exponents up to `upto`.
std::string series_prefix(const LazySeries& s, const FieldPresentation& field, long upto);

const char* verdict_name(Verdict v);
const char* terminal_name(ResidueChain::Terminal t);

OrderedJson report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

// The residue part of a report only: chains, generators, field tower.
OrderedJson chains_to_json(const AnalysisReport& report);
std::string chains_to_text(const AnalysisReport& report);

} // namespace dval
