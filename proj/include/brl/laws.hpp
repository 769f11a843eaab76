#pragma once

#include <string>
#include <vector>

#include "brl/algebra.hpp"

namespace brl {

struct LawResult {
  std::string law;
  bool pass = true;
  std::string witness;  // first offending instance, empty when the law passes
};

/// Runs the cross-cutting consistency laws against one algebra. Every law
/// is a consequence of the defining axioms, so a failure points at broken
/// input tables or at a bug in this library, never at a legitimately
/// unusual algebra. Scans that would not fit a small time budget are
/// skipped and count as passing.
std::vector<LawResult> run_laws(const Algebra& a);

bool all_pass(const std::vector<LawResult>& results);

}  // namespace brl
