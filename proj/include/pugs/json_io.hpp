// json_io.hpp - JSON serialization for solutions, verification reports, and
// the bounds table, plus small file helpers.  Keys are emitted in sorted
// order and every double is snapped to 12 significant digits, so identical
// inputs always produce identical bytes.
#pragma once

#include <string>

#include "pugs/findpugs.hpp"
#include "pugs/oracle.hpp"

namespace pugs {

// Value after round-tripping through "%.12g" text; non-finite values pass
// through unchanged.
double round12(double v);

std::string solution_to_json(const PrototypeSolution& solution);

// Throws std::runtime_error; syntax errors include line/column/byte info,
// structural errors name the offending field.
PrototypeSolution solution_from_json(const std::string& text);

std::string report_to_json(const ClassificationReport& report);

// Per-circle rows for t = 0..T-1 plus the cumulative totals.
std::string bounds_to_json(int T);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace pugs
