#include "edgekit/report.hpp"

#include <charconv>
#include <json.hpp>

namespace edgekit {

namespace {

std::string real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string real(const std::optional<double>& v) {
    return v ? real(*v) : std::string();
}

// Scene names come from the built-in suites, but quote anything that would
// break the row.
std::string field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string to_csv(std::span<const ComparisonRow> rows) {
    std::string out;
    bool first = true;
    for (const char* col : kReportColumns) {
        out += first ? "" : ",";
        out += col;
        first = false;
    }
    out += '\n';
    for (const ComparisonRow& r : rows) {
        const EvalReport& e = r.report;
        out += field(r.scene) + ',' + field(r.detector) + ',' + real(r.sigma) + ',' + real(r.low) + ',' +
               real(r.high) + ',' + real(r.slope_threshold) + ',' + real(e.false_positive_rate) + ',' +
               real(e.false_negative_rate) + ',' + real(e.mean_sq_distance) + ',' + std::to_string(e.detected_count) +
               ',' + std::to_string(e.truth_count) + ',' + std::to_string(e.matched_count) + ',' +
               real(e.match_tolerance) + ',' + (r.seed ? std::to_string(*r.seed) : std::string()) + '\n';
    }
    return out;
}

std::string to_json(std::span<const ComparisonRow> rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const ComparisonRow& r : rows) {
        const EvalReport& e = r.report;
        nlohmann::ordered_json rec;
        rec["scene"] = r.scene;
        rec["detector"] = r.detector;
        rec["sigma"] = r.sigma;
        rec["low"] = optional_json(r.low);
        rec["high"] = optional_json(r.high);
        rec["slope_threshold"] = optional_json(r.slope_threshold);
        rec["fp_rate"] = e.false_positive_rate;
        rec["fn_rate"] = e.false_negative_rate;
        rec["mean_sq_distance"] = e.mean_sq_distance;
        rec["detected"] = e.detected_count;
        rec["truth"] = e.truth_count;
        rec["matched"] = e.matched_count;
        rec["tolerance"] = e.match_tolerance;
        rec["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
        rec["noise"] = std::string(kNoiseAlgorithm);
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + '\n';
}

}  // namespace edgekit
