#pragma once

#include <string>

#include "brl/algebra.hpp"

namespace brl {

/// Syntax or consistency error in an algebra description; line is 1-based.
struct SpecFileError : BrlError {
  int line;
  SpecFileError(const std::string& what, int line);
};

/// Raised by a strict load when the tables parse but an axiom fails.
struct AxiomFailure : BrlError {
  AxiomReport report;
  AxiomFailure(std::string algebra_name, AxiomReport report);
};

/// Algebra description format, line oriented, `#` starts a comment:
///
///   algebra NAME
///   elements N1 N2 ...
///   top NAME
///   bot NAME
///   covers        # or: leq, with |A| rows of 0/1 entries
///     LOWER < UPPER
///     ...
///   mult
///     |A| rows of |A| element names
///   arrow         # optional; derived from mult and the order if absent
///     ...
///   end
///
/// Element names are free tokens that are not keywords. A strict parse
/// verifies every axiom and throws AxiomFailure on the first offence;
/// a non-strict parse only requires well-formed tables and a lattice
/// order, so callers can inspect broken inputs.
Algebra parse_algebra_text(const std::string& text, bool strict = true);

Algebra load_algebra(const std::string& path, bool strict = true);

/// Canonical text for an algebra: covers form, arrow included.
/// parse_algebra_text(format_algebra(a)) reproduces a.
std::string format_algebra(const Algebra& a);

void save_algebra(const std::string& path, const Algebra& a);

}  // namespace brl
