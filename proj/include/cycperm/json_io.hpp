#ifndef CYCPERM_JSON_IO_HPP
#define CYCPERM_JSON_IO_HPP

#include <json.hpp>

#include "cycperm/bigint.hpp"
#include "cycperm/recurrences.hpp"
#include "cycperm/report.hpp"

namespace cycperm {

using Json = nlohmann::ordered_json;

// Integers beyond 2^53 - 1 in magnitude are serialized as decimal strings so
// JSON consumers do not lose precision.
Json json_of(const BigInt& v);

// {"family": ..., "offset": ..., "rows": [[...], ...]}
Json json_of(const Triangle& t);

// {"name": ..., "range": ..., "pass": ..., "mismatches": [...],
//  "findings": [...], "details": [...]}
Json json_of(const CheckReport& r);

} // namespace cycperm

#endif
