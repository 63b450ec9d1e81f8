#include "cycperm/json_io.hpp"

namespace cycperm {

Json json_of(const BigInt& v) {
    constexpr long long kMaxExact = (1ll << 53) - 1;
    if (auto small = v.to_int64(); small && *small <= kMaxExact && *small >= -kMaxExact) {
        return *small;
    }
    return v.to_string();
}

Json json_of(const Triangle& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json jrow = Json::array();
        for (const auto& v : row) jrow.push_back(json_of(v));
        rows.push_back(std::move(jrow));
    }
    return Json{{"family", triangle_family_name(t.family)}, {"offset", t.offset},
                {"rows", std::move(rows)}};
}

Json json_of(const CheckReport& r) {
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches) {
        mismatches.push_back(
            Json{{"location", m.location}, {"expected", m.expected}, {"actual", m.actual}});
    }
    Json findings = Json::array();
    for (const auto& f : r.findings) {
        findings.push_back(Json{{"location", f.location}, {"detail", f.detail}});
    }
    return Json{{"name", r.name},
                {"range", r.range},
                {"pass", r.pass()},
                {"mismatches", std::move(mismatches)},
                {"findings", std::move(findings)},
                {"details", r.details}};
}

} // namespace cycperm
