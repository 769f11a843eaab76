#pragma once

#include <optional>
#include <vector>

#include "brl/algebra.hpp"

namespace brl {

/// Implicative filter: contains top, upward closed, closed under the product.
/// `generator` is a least element whenever the filter has one (always, here:
/// in a finite algebra every filter is the up-set of the product of its
/// members).
struct Filter {
  const Algebra* algebra = nullptr;
  ElementSet members;
  std::optional<Element> generator;

  bool contains(Element a) const { return members.contains(a); }
  int count() const { return members.count(); }
  /// Proper means the bottom element stays outside.
  bool proper() const;

  bool operator==(const Filter& other) const { return members == other.members; }
  bool operator<(const Filter& other) const;
};

/// Smallest filter containing `seed`. For an empty seed this is {top}.
Filter generate_filter(const Algebra& a, const std::vector<Element>& seed);

/// Principal filter generated by one element.
Filter principal_filter(const Algebra& a, Element g);

/// Every filter of a finite algebra, via principal generation from each
/// element, deduplicated. Sorted by (size, generator).
std::vector<Filter> all_filters(const Algebra& a);

/// Same list by brute force over all subsets. Only for cross-checking small
/// algebras; throws TooLarge above `max_size` elements.
std::vector<Filter> all_filters_exhaustive(const Algebra& a, int max_size = 12);

/// Congruence induced by a filter: x ~ y iff both arrows land in the filter.
struct Congruence {
  const Algebra* algebra = nullptr;
  /// class_of[x] is the index into `classes` of the block containing x.
  std::vector<int> class_of;
  /// Blocks listed by their least element, ascending.
  std::vector<ElementSet> classes;

  bool related(Element x, Element y) const { return class_of.at(x) == class_of.at(y); }
};

Congruence congruence_of(const Filter& f);

/// Quotient algebra together with the projection map. Element i of the
/// quotient is the block of congruence_of(f) whose least member is
/// projection-preimage-minimal; its name is that member's name in the
/// original algebra.
struct QuotientResult {
  Algebra algebra;
  std::vector<int> projection;
};

QuotientResult quotient(const Filter& f);

/// Prime: proper, and a join lands in the filter only when a joinand does.
bool is_prime(const Filter& f);

/// Maximal: proper, and no proper filter sits strictly above.
bool is_maximal(const Filter& f);

std::vector<Filter> prime_filters(const Algebra& a);
std::vector<Filter> maximal_filters(const Algebra& a);

/// Primes minimal under inclusion.
std::vector<Filter> minimal_prime_filters(const Algebra& a);

/// Intersection of the maximal filters. For the one-element algebra (which
/// has no proper filter at all) this is the whole universe.
Filter radical(const Algebra& a);

/// Membership test via multiples of powers: a is in the radical iff every
/// power of a has some multiple equal to top.
bool radical_formula_holds(const Algebra& a, Element x);

/// Radical is generated by its k-th powers: Rad = { a : a^k in Rad }.
bool is_k_radical(const Algebra& a, int k);

/// Filters generated by lattice filters of the Boolean skeleton.
std::vector<Filter> stone_filters(const Algebra& a);

/// Stone ultrafilters: generated by a skeleton element g above bottom such
/// that g falls under b or under ~b for every skeleton element b.
std::vector<Filter> stone_ultrafilters(const Algebra& a);

}  // namespace brl
