// JSON serialization for decomposition reports.
//
// The schema is stable and deliberately small: structural integers and the
// block list only, never the dense basis or projection matrices.  A summary
// struct carries exactly the serialized fields so that a report can be
// round-tripped and compared for equality.

#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "ucr/decomposition.hpp"

namespace ucr {

using ordered_json = nlohmann::ordered_json;

struct BlockSummary {
    std::vector<int> lambda;
    unsigned long long dim = 0;
    unsigned long long mult = 0;

    bool operator==(const BlockSummary&) const = default;
};

struct ReportSummary {
    int d = 0;
    int n = 0;
    std::vector<BlockSummary> blocks;
    unsigned long long dimension_check = 0;
    unsigned long long commutant_dim = 0;
    unsigned long long interaction_dim = 0;
    unsigned long long largest_full_matrix = 0;

    bool operator==(const ReportSummary&) const = default;
};

inline ReportSummary summarize(const DecompositionReport& r) {
    ReportSummary s;
    s.d = r.d;
    s.n = r.n;
    for (const auto& b : r.blocks) s.blocks.push_back({b.lambda.parts, b.dim, b.mult});
    s.dimension_check = r.dimension_check;
    s.commutant_dim = r.commutant_dim;
    s.interaction_dim = r.interaction_dim;
    s.largest_full_matrix = r.largest_full_matrix;
    return s;
}

inline ordered_json summary_to_json(const ReportSummary& s) {
    ordered_json j;
    j["d"] = s.d;
    j["n"] = s.n;
    j["blocks"] = ordered_json::array();
    for (const auto& b : s.blocks) {
        ordered_json jb;
        jb["lambda"] = b.lambda;
        jb["dim"] = b.dim;
        jb["mult"] = b.mult;
        j["blocks"].push_back(std::move(jb));
    }
    j["dimension_check"] = s.dimension_check;
    j["commutant_dim"] = s.commutant_dim;
    j["interaction_dim"] = s.interaction_dim;
    j["largest_full_matrix"] = s.largest_full_matrix;
    return j;
}

inline ordered_json report_to_json(const DecompositionReport& r) {
    return summary_to_json(summarize(r));
}

inline ReportSummary parse_report_json(const ordered_json& j) {
    try {
        ReportSummary s;
        s.d = j.at("d").get<int>();
        s.n = j.at("n").get<int>();
        for (const auto& jb : j.at("blocks")) {
            BlockSummary b;
            b.lambda = jb.at("lambda").get<std::vector<int>>();
            b.dim = jb.at("dim").get<unsigned long long>();
            b.mult = jb.at("mult").get<unsigned long long>();
            s.blocks.push_back(std::move(b));
        }
        s.dimension_check = j.at("dimension_check").get<unsigned long long>();
        s.commutant_dim = j.at("commutant_dim").get<unsigned long long>();
        s.interaction_dim = j.at("interaction_dim").get<unsigned long long>();
        s.largest_full_matrix = j.at("largest_full_matrix").get<unsigned long long>();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report JSON does not match the schema: ")
                                    + e.what());
    }
}

inline ReportSummary parse_report_json(const std::string& text) {
    return parse_report_json(ordered_json::parse(text));
}

} // namespace ucr
