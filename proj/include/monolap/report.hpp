#pragma once

#include <string>

#include "json.hpp"
#include "monolap/exactseq.hpp"
#include "monolap/monorules.hpp"
#include "monolap/results.hpp"

namespace monolap::report {

using json = nlohmann::ordered_json;

// 17 significant digits, '.' decimal separator, no locale surprises.
std::string fmt17(double v);

// {"schema": "mono-laplace/1", "tool_version": ..., "command": ..., "config": ...}
json base_document(const std::string& command, json config);

json to_json(const exactseq::ExactSeqReport& rep);
json to_json(const monorules::MonotoneVerdict& verdict);
json to_json(const monorules::CmReport& rep);
json to_json(const results::BoundSweepReport& rep, bool include_grid = false);

const char* kind_name(monorules::VerdictKind kind);
const char* hsign_name(monorules::HSign sign);

// RFC 4180: CRLF line endings, header row.
std::string bound_csv(const results::BoundSweepReport& rep);
std::string grid_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

} // namespace monolap::report
