// json_io.cpp - stable JSON encoding and solution-file parsing.
#include "pugs/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pugs/bounds.hpp"

namespace pugs {

namespace {

using nlohmann::json;

// Line/column of a byte offset, for parse errors worth acting on.
std::string locate(const std::string& text, size_t byte) {
    size_t line = 1;
    size_t col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col) +
           " (byte " + std::to_string(byte) + ")";
}

json rounded(double v) { return json(round12(v)); }

}  // namespace

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string solution_to_json(const PrototypeSolution& solution) {
    json j;
    j["c"] = rounded(solution.c);
    j["counts"] = solution.counts;
    json rot = json::array();
    for (double r : solution.rotations) rot.push_back(rounded(r));
    j["rotations"] = std::move(rot);
    j["strict"] = solution.strict;
    j["total"] = solution.total_prototypes();
    return j.dump(2) + "\n";
}

PrototypeSolution solution_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("solution JSON parse error at " +
                                 locate(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                                 e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("solution JSON: top level must be an object");
    for (const char* key : {"c", "counts", "rotations"})
        if (!j.contains(key))
            throw std::runtime_error(std::string("solution JSON: missing field '") +
                                     key + "'");

    PrototypeSolution sol;
    try {
        sol.c = j.at("c").get<double>();
        sol.counts = j.at("counts").get<std::vector<int>>();
        sol.rotations = j.at("rotations").get<std::vector<double>>();
        sol.strict = j.value("strict", true);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("solution JSON: bad field type: ") +
                                 e.what());
    }
    if (sol.counts.empty())
        throw std::runtime_error("solution JSON: 'counts' must not be empty");
    if (sol.counts.size() != sol.rotations.size())
        throw std::runtime_error(
            "solution JSON: 'counts' and 'rotations' must have the same length");
    for (int v : sol.counts)
        if (v < 1)
            throw std::runtime_error("solution JSON: every count must be >= 1");
    if (!(sol.c > 0.0) || !std::isfinite(sol.c))
        throw std::runtime_error("solution JSON: 'c' must be positive and finite");
    return sol;
}

std::string report_to_json(const ClassificationReport& report) {
    json j;
    j["misclassified"] = report.misclassified;
    j["per_circle_samples"] = report.per_circle_samples;
    j["perfect"] = report.perfect();
    j["total_samples"] = report.total_samples;
    j["worst_margin"] = rounded(report.worst_margin);
    return j.dump(2) + "\n";
}

std::string bounds_to_json(int T) {
    json rows = json::array();
    long long worst_case = 0;
    for (const BoundsRow& row : bounds_table(T)) {
        json r;
        r["t"] = row.t;
        r["upper"] = rounded(row.upper);
        r["lower"] = rounded(row.lower);
        r["equal_exact"] = rounded(row.equal_exact);
        r["first_order"] = row.first_order;
        r["second_order"] = row.second_order;
        rows.push_back(std::move(r));
        worst_case += row.t == 0 ? 1 : count_from_strict_bound(row.upper);
    }
    long long theory = 0;
    for (int v : theory_sequence(T)) theory += v;

    json j;
    j["circles"] = T;
    j["rows"] = std::move(rows);
    j["totals"] = {
        {"closed_form", rounded(approx_total_closed_form(T))},
        {"equal_count", equal_count_exact(T)},
        {"theory", theory},
        {"worst_case", worst_case},
    };
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace pugs
