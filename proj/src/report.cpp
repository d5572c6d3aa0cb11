#include "monolap/report.hpp"

#include <cstdio>

#include "monolap/version.hpp"

namespace monolap::report {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json base_document(const std::string& command, json config) {
    json doc;
    doc["schema"] = kJsonSchema;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    doc["config"] = std::move(config);
    return doc;
}

json to_json(const exactseq::ExactSeqReport& rep) {
    json j;
    j["name"] = rep.name;
    j["all_ok"] = rep.all_ok();
    json values = json::array();
    for (const auto& v : rep.values) values.push_back({{"n", v.n}, {"value", v.value}});
    j["values"] = values;
    json residuals = json::array();
    for (const auto& r : rep.recurrence_residuals) {
        const char* req = r.must_be == exactseq::Requirement::Zero       ? "zero"
                          : r.must_be == exactseq::Requirement::Positive ? "positive"
                                                                         : "negative";
        residuals.push_back({{"n", r.n}, {"value", r.value}, {"must_be", req}, {"ok", r.ok}});
    }
    j["recurrence_residuals"] = residuals;
    json claims = json::array();
    for (const auto& c : rep.sign_claims)
        claims.push_back({{"range", c.range}, {"claim", c.claim}, {"verified", c.verified}});
    j["sign_claims"] = claims;
    return j;
}

const char* kind_name(monorules::VerdictKind kind) {
    switch (kind) {
        case monorules::VerdictKind::Increasing: return "increasing";
        case monorules::VerdictKind::Decreasing: return "decreasing";
        case monorules::VerdictKind::UnimodalMax: return "unimodal-max";
        case monorules::VerdictKind::UnimodalMin: return "unimodal-min";
        case monorules::VerdictKind::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

const char* hsign_name(monorules::HSign sign) {
    switch (sign) {
        case monorules::HSign::Positive: return "positive";
        case monorules::HSign::Negative: return "negative";
        case monorules::HSign::Zero: return "zero";
        case monorules::HSign::Unresolved: return "unresolved";
    }
    return "unresolved";
}

json to_json(const monorules::MonotoneVerdict& verdict) {
    json j;
    j["kind"] = kind_name(verdict.kind);
    if (verdict.kind == monorules::VerdictKind::UnimodalMax ||
        verdict.kind == monorules::VerdictKind::UnimodalMin)
        j["x_star"] = verdict.x_star;
    j["h_zero_sign"] = hsign_name(verdict.h_zero_sign);
    j["multiple_sign_changes"] = verdict.multiple_sign_changes;
    if (!verdict.note.empty()) j["note"] = verdict.note;
    json ev = json::array();
    for (const auto& e : verdict.evidence)
        ev.push_back({{"x", e.x}, {"ratio", e.ratio}, {"ratio_prime", e.ratio_prime}});
    j["evidence"] = ev;
    return j;
}

json to_json(const monorules::CmReport& rep) {
    json j;
    j["mode"] = rep.mode == monorules::CmMode::CompletelyMonotonic ? "completely-monotonic"
                                                                   : "bernstein";
    j["max_order"] = rep.max_order;
    j["consistent"] = rep.consistent;
    json v = json::array();
    for (const auto& viol : rep.violations)
        v.push_back({{"x", viol.x}, {"order", viol.order}, {"value", viol.value}});
    j["violations"] = v;
    return j;
}

json to_json(const results::BoundSweepReport& rep, bool include_grid) {
    json j;
    j["suite_id"] = rep.suite_id;
    j["points"] = rep.grid.size();
    j["pass"] = rep.pass;
    j["violations"] = rep.violations.size();
    j["inconclusive"] = rep.inconclusive;
    j["min_margin"] = rep.min_margin;
    j["noise_band"] = results::BoundSweepReport::kNoiseBand;
    auto point_json = [](const results::BoundPoint& p) {
        json pj;
        pj["v"] = p.v;
        pj["x"] = p.x;
        if (p.y != 0.0) pj["y"] = p.y;
        pj["side"] = p.side;
        pj["lhs"] = p.lhs;
        pj["rhs"] = p.rhs;
        pj["margin"] = p.margin;
        return pj;
    };
    json viols = json::array();
    for (const auto& p : rep.violations) viols.push_back(point_json(p));
    j["violation_points"] = viols;
    if (include_grid) {
        json grid = json::array();
        for (const auto& p : rep.grid) grid.push_back(point_json(p));
        j["grid"] = grid;
    }
    return j;
}

std::string bound_csv(const results::BoundSweepReport& rep) {
    std::string out;
    const bool has_y = rep.suite_id == "kratio";  // the ratio suite carries both endpoints
    out += has_y ? "suite_id,v,x,y,lhs,rhs,margin\r\n" : "suite_id,v,x,lhs,rhs,margin\r\n";
    for (const auto& p : rep.grid) {
        out += rep.suite_id;
        out += ',';
        out += fmt17(p.v);
        out += ',';
        out += fmt17(p.x);
        if (has_y) {
            out += ',';
            out += fmt17(p.y);
        }
        out += ',';
        out += fmt17(p.lhs);
        out += ',';
        out += fmt17(p.rhs);
        out += ',';
        out += fmt17(p.margin);
        out += "\r\n";
    }
    return out;
}

std::string grid_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += fmt17(row[i]);
        }
        out += "\r\n";
    }
    return out;
}

} // namespace monolap::report
