#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "brl/algebra.hpp"
#include "brl/filters.hpp"

namespace brl {

/// Complemented elements { b : b \/ ~b = T }, ascending. Checks the
/// expected subalgebra structure (closure under every operation, product
/// idempotent and matching meet on the skeleton) and throws logic_error
/// if the input tables break it.
std::vector<Element> boolean_skeleton(const Algebra& a);

bool is_boolean_element(const Algebra& a, Element b);

/// No nontrivial direct factorization: the skeleton is exactly {bot, top}
/// with bot != top. The one-element algebra does not count.
bool is_directly_indecomposable(const Algebra& a);

/// Quotient by the filter is directly indecomposable. Decided on the
/// original algebra: the filter is proper and every x with x \/ ~x in F
/// has x or ~x in F; cross-checked against the quotient.
bool is_di_filter(const Filter& f);

/// Exactly one maximal filter.
bool is_local(const Algebra& a);

/// Only congruences are identity and the full relation, and |A| >= 2.
bool is_simple(const Algebra& a);

/// Radical is {top}.
bool is_semisimple(const Algebra& a);

/// Least m >= 1 with x^m = x^(m+1) holding identically. Always defined
/// for a finite algebra.
int contractivity_index(const Algebra& a);

/// Least k >= 1 with k.x \/ k.~x = T holding identically, if any k <= |A|
/// works; larger k never help once the multiple chains stabilize.
std::optional<int> wl_index(const Algebra& a);

/// Least m >= 1 with x \/ ~x^m = T holding identically, if any m <= |A|
/// works.
std::optional<int> em_index(const Algebra& a);

/// Every directly indecomposable quotient is local. Computed three ways
/// (over all filters, over Stone ultrafilters, elementwise through the
/// skeleton) which must agree.
bool has_gap(const Algebra& a);

/// Skeleton of every quotient is the image of the skeleton. Always agrees
/// with has_gap; computed independently and cross-checked.
bool has_blp(const Algebra& a);

struct StructureFlags {
  bool directly_indecomposable = false;
  bool local = false;
  bool simple = false;
  bool semisimple = false;
  bool gap = false;
  bool blp = false;
  int contractivity = 0;
  std::optional<int> wl;
  std::optional<int> em;
  std::vector<Element> skeleton;
  Filter rad;
  std::optional<std::pair<int, int>> gap_cert;
};

StructureFlags analyze_structure(const Algebra& a);

}  // namespace brl
