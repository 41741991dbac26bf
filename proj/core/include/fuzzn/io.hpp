#pragma once

#include <string>

#include "fuzzn/analysis.hpp"
#include "fuzzn/fuzzy_number.hpp"
#include "fuzzn/smooth.hpp"

namespace fuzzn::io {

// Shared file format: a JSON document with a "fuzzy_number" object holding
// support, core and the left/right piece lists, and/or a "smoother_spec"
// object. Doubles are written as shortest round-trip decimals.

FuzzyNumber parse_fuzzy(const std::string& text);
FuzzyNumber load_fuzzy(const std::string& path);
std::string serialize_fuzzy(const FuzzyNumber& u);

SmootherSpec parse_smoother_spec(const std::string& text);
std::string serialize_smoother_spec(const SmootherSpec& s);

std::string analysis_csv(const AnalysisReport& report);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string format_double(double v);  // 17 significant digits (CSV cells)

}  // namespace fuzzn::io
