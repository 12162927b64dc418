#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "dval/embedding/embedding.hpp"

namespace dval {

struct Document {
    Embedding embedding;
    std::vector<bool> certified_infinite; // per variable
};

// Reads the JSON embedding schema:
//   {"field": {"symbols": [...], "radical_bound": {"T4": 64}},
//    "variables": ["X1", ...],
//    "series": {"X1": {"terms": [{"c": "T2", "e": 4}],
//                      "tails": [{"coeff": "u^j", "exp": "j+3", "from": 1}],
//                      "certified_infinite": false}}}
// Throws InputError with a path-qualified message, PrecisionError when an
// image order cannot be established under `precision`.
Document parse_document(std::string_view text, long precision = default_precision);
Document load_document(const std::filesystem::path& path, long precision = default_precision);

} // namespace dval
