#pragma once

#include <string>

#include "brl/algebra.hpp"

namespace brl {

/// Full structural report for one algebra as a JSON document: flags,
/// indices, skeleton, radical, certificate, a per-filter table and the
/// scalar pairs (k, r) whose term k.x^r is boolean, radical, or both.
/// Caps of 0 mean min(|A|, 6) for the family search.
std::string analysis_report_json(const Algebra& a, int max_k = 0, int max_r = 0);

/// The same content laid out for reading in a terminal.
std::string analysis_report_text(const Algebra& a, int max_k = 0, int max_r = 0);

}  // namespace brl
