#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brl/algebra.hpp"

namespace brl {

/// Lukasiewicz chain with universe {0, ..., n}: a*b = max(0, a+b-n),
/// a->b = min(n, n-a+b). Element i sits at index i; the name is "L<n+1>".
Algebra make_lukasiewicz(int n);

/// Nine-element example: a three-by-three grid with two holes, hung
/// between the bounds. Local with radical {T,1,2,3}; 3.x^m is a boolean
/// term exactly when m >= 3.
Algebra make_w9();

/// Five-element Heyting algebra F < a,b < c < T with product = meet.
/// Directly indecomposable but with two maximal filters, so no
/// indecomposable-implies-local property anywhere above it.
Algebra make_nogap5();

/// Componentwise product; element (i, j) of the factors appears at index
/// i*|B|+j under the name "(x,y)".
Algebra direct_product(const Algebra& a, const Algebra& b);

bool is_subuniverse(const Algebra& a, const ElementSet& s);

/// Least subuniverse containing the seed (the bounds always join in).
ElementSet subuniverse_closure(const Algebra& a, const ElementSet& seed);

/// Subalgebra on the given subuniverse, keeping element names and order.
Algebra restrict_to(const Algebra& a, const ElementSet& s, const std::string& name);

Algebra subalgebra_generated(const Algebra& a, const std::vector<Element>& gens,
                             const std::string& name);

/// All subuniverses by subset scan, sorted by (size, members).
/// Throws TooLarge above max_size elements.
std::vector<ElementSet> all_subuniverses(const Algebra& a, int max_size = 20);

/// Isomorphism as an index map from a to b, if one exists. Bounds map to
/// bounds; the search backtracks over elements with matching local
/// invariants.
std::optional<std::vector<Element>> find_isomorphism(const Algebra& a, const Algebra& b);

bool is_isomorphic(const Algebra& a, const Algebra& b);

/// Quotients by every filter, deduplicated up to isomorphism, smallest
/// first. Includes the one-element image and the algebra itself.
std::vector<Algebra> homomorphic_images(const Algebra& a);

/// Fixed list of small algebras used to exercise every law in the
/// harness: chains, the two handmade examples, products and the
/// subalgebras of the nine-element one.
std::vector<Algebra> corpus_algebras();

/// Point of the MV-chain over the lexicographic product of the integers
/// with strong unit (n, 0): pairs (a, r) with (0,0) <= (a,r) <= (n,0).
struct LexElement {
  long long a = 0, r = 0;
  bool operator==(const LexElement&) const = default;
};

bool lex_valid(int n, LexElement e);
bool lex_leq(LexElement e, LexElement f);
LexElement lex_meet(int n, LexElement e, LexElement f);
LexElement lex_join(int n, LexElement e, LexElement f);
LexElement lex_mult(int n, LexElement e, LexElement f);
LexElement lex_arrow(int n, LexElement e, LexElement f);
LexElement lex_neg(int n, LexElement e);
LexElement lex_plus(int n, LexElement e, LexElement f);
LexElement lex_power(int n, LexElement e, int k);
LexElement lex_multiple(int n, int k, LexElement e);

}  // namespace brl
