#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brl/algebra.hpp"

namespace brl {

struct ParseError : BrlError {
  size_t offset;  // byte offset into the input
  ParseError(const std::string& what, size_t offset);
};

struct UnboundVariable : BrlError {
  std::string variable;
  explicit UnboundVariable(std::string variable);
};

/// Immutable term over the signature {*, ->, /\, \/, T, F} plus the
/// shorthands ~t (negation), s + t (dual sum), t^n (power) and n.t
/// (multiple). Nodes are interned, so structural equality is operator==
/// and shared subterms evaluate once.
///
/// Concrete syntax, loosest to tightest binding:
///   ->  (right assoc)   +   \/   /\   *   prefix ~ and n.   postfix ^n
class Term {
 public:
  enum class Kind { var, top, bot, mult, arrow, meet, join, neg, plus, pow, mul };

  static Term var(const std::string& name);
  static Term top();
  static Term bot();
  static Term mult(Term a, Term b);
  static Term arrow(Term a, Term b);
  static Term meet(Term a, Term b);
  static Term join(Term a, Term b);
  static Term neg(Term a);
  static Term plus(Term a, Term b);
  static Term pow(Term a, int n);  // n >= 0
  static Term mul(int n, Term a);  // n >= 0

  Kind kind() const;
  bool is_binary() const;
  const Term& lhs() const;
  const Term& rhs() const;
  const Term& child() const;  // neg, pow, mul
  int scalar() const;         // pow, mul
  const std::string& var_name() const;

  bool operator==(const Term& other) const { return node_ == other.node_; }
  const void* id() const;

  /// Distinct variable names, sorted.
  std::vector<std::string> variables() const;

  /// Same term with every shorthand unfolded into the core signature:
  /// ~t = t -> F, s + t = ~(~s * ~t), t^0 = T, t^(n+1) = t * t^n,
  /// 0.t = F, (n+1).t = t + n.t.
  Term expanded() const;

  std::string str() const;

 private:
  struct Node;
  friend struct TermFactory;
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs, rhs;
  std::vector<std::string> variables() const;
  std::string str() const;
};

/// Parses the concrete syntax above. Variables are identifiers other than
/// the reserved constants T and F. Errors carry the byte offset.
Term parse_term(const std::string& text);

/// "lhs = rhs", or the order sugar "lhs <= rhs" meaning lhs -> rhs = T.
Equation parse_equation(const std::string& text);

Element eval(const Algebra& a, const Term& t, const std::map<std::string, Element>& env);

/// Evaluates a term with exactly one variable at the given element.
Element eval_unary(const Algebra& a, const Term& t, Element value);

using Assignment = std::vector<std::pair<std::string, Element>>;

struct IdentityCheck {
  bool holds = true;
  Assignment counterexample;  // empty iff holds; first failure in
                              // lexicographic element order, variables sorted
};

IdentityCheck check_identity(const Algebra& a, const Equation& eq);

enum class BooleanBranch { top_to_top, top_to_bot };

struct BoolTermReport {
  bool is_boolean = false;
  std::optional<BooleanBranch> branch;  // set iff is_boolean
  std::optional<Element> witness;       // element whose image leaves the skeleton
};

/// A unary term is boolean for the algebra when every value lands in the
/// boolean skeleton and the images of top and bot differ.
BoolTermReport is_boolean_term(const Algebra& a, const Term& t);

/// True when { x : t(x) = top } is exactly the radical.
bool is_radical_term(const Algebra& a, const Term& t);

struct RetractionReport {
  bool values_in_skeleton = false;
  bool fixes_skeleton = false;
  bool idempotent = false;
  bool is_homomorphism = false;
  bool verdict() const {
    return values_in_skeleton && fixes_skeleton && idempotent && is_homomorphism;
  }
};

/// Four independent retraction properties of a unary term, reported
/// separately; the verdict is their conjunction.
RetractionReport is_boolean_retraction_term(const Algebra& a, const Term& t);

/// k.x^r as a term in the variable x.
Term family_term(int k, int r);

/// Smallest (k, r) in lexicographic order, k and r from 1, such that
/// b(x) = k.x^r is a boolean term for the algebra and
/// (x^k -> b(x)) * (b(x) -> k.x) = T holds identically. Bounds default
/// to |A|. nullopt when no pair qualifies within the bounds.
std::optional<std::pair<int, int>> gap_certificate(const Algebra& a, int max_k = 0, int max_r = 0);

enum class FamilyPredicate { boolean_term, radical_term, boolean_and_radical };

/// All (k, r) within the bounds whose k.x^r satisfies the predicate,
/// in lexicographic order.
std::vector<std::pair<int, int>> find_term_in_family(const Algebra& a, FamilyPredicate predicate,
                                                     int max_k, int max_r);

}  // namespace brl
