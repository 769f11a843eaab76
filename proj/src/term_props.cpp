#include <stdexcept>

#include "brl/filters.hpp"
#include "brl/structure.hpp"
#include "brl/terms.hpp"

namespace brl {

BoolTermReport is_boolean_term(const Algebra& a, const Term& t) {
  BoolTermReport r;
  for (Element x = 0; x < a.size(); ++x) {
    Element v = eval_unary(a, t, x);
    if (!is_boolean_element(a, v)) {
      r.witness = x;
      return r;
    }
  }
  Element at_top = eval_unary(a, t, a.top());
  Element at_bot = eval_unary(a, t, a.bot());
  if (at_top == at_bot) return r;

  r.is_boolean = true;
  if (at_top == a.top() && at_bot == a.bot())
    r.branch = BooleanBranch::top_to_top;
  else if (at_top == a.bot() && at_bot == a.top())
    r.branch = BooleanBranch::top_to_bot;
  else
    // Both bounds evaluate inside {bot, top}: that pair is closed under
    // every operation, so this cannot be reached on a valid algebra.
    throw std::logic_error("term maps the bounds outside {bot, top}");
  return r;
}

namespace {

bool radical_term_matches(const Algebra& a, const Term& t, const ElementSet& rad) {
  for (Element x = 0; x < a.size(); ++x)
    if ((eval_unary(a, t, x) == a.top()) != rad.contains(x)) return false;
  return true;
}

}  // namespace

bool is_radical_term(const Algebra& a, const Term& t) {
  return radical_term_matches(a, t, radical(a).members);
}

RetractionReport is_boolean_retraction_term(const Algebra& a, const Term& t) {
  const int n = a.size();
  std::vector<Element> image(n);
  for (Element x = 0; x < n; ++x) image[x] = eval_unary(a, t, x);

  RetractionReport r;
  r.values_in_skeleton = true;
  for (Element x = 0; x < n; ++x)
    if (!is_boolean_element(a, image[x])) r.values_in_skeleton = false;

  r.fixes_skeleton = true;
  for (Element b : boolean_skeleton(a))
    if (image[b] != b) r.fixes_skeleton = false;

  r.idempotent = true;
  for (Element x = 0; x < n; ++x)
    if (image[image[x]] != image[x]) r.idempotent = false;

  r.is_homomorphism = image[a.top()] == a.top() && image[a.bot()] == a.bot();
  for (Element x = 0; x < n && r.is_homomorphism; ++x)
    for (Element y = 0; y < n; ++y) {
      bool ok = image[a.mult(x, y)] == a.mult(image[x], image[y]) &&
                image[a.arrow(x, y)] == a.arrow(image[x], image[y]) &&
                image[a.meet(x, y)] == a.meet(image[x], image[y]) &&
                image[a.join(x, y)] == a.join(image[x], image[y]);
      if (!ok) {
        r.is_homomorphism = false;
        break;
      }
    }
  return r;
}

Term family_term(int k, int r) {
  if (k < 1 || r < 1) throw BrlError("family terms need k, r >= 1");
  return Term::mul(k, Term::pow(Term::var("x"), r));
}

std::optional<std::pair<int, int>> gap_certificate(const Algebra& a, int max_k, int max_r) {
  if (max_k <= 0) max_k = a.size();
  if (max_r <= 0) max_r = a.size();
  Term x = Term::var("x");
  for (int k = 1; k <= max_k; ++k)
    for (int r = 1; r <= max_r; ++r) {
      Term b = family_term(k, r);
      if (!is_boolean_term(a, b).is_boolean) continue;
      Equation sandwich{
          Term::mult(Term::arrow(Term::pow(x, k), b), Term::arrow(b, Term::mul(k, x))),
          Term::top()};
      if (check_identity(a, sandwich).holds) return std::make_pair(k, r);
    }
  return std::nullopt;
}

std::vector<std::pair<int, int>> find_term_in_family(const Algebra& a, FamilyPredicate predicate,
                                                     int max_k, int max_r) {
  if (max_k < 1 || max_r < 1) throw BrlError("family search needs positive bounds");
  ElementSet rad(a.size());
  if (predicate != FamilyPredicate::boolean_term) rad = radical(a).members;

  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= max_k; ++k)
    for (int r = 1; r <= max_r; ++r) {
      Term t = family_term(k, r);
      bool ok = true;
      if (predicate != FamilyPredicate::radical_term) ok = is_boolean_term(a, t).is_boolean;
      if (ok && predicate != FamilyPredicate::boolean_term)
        ok = radical_term_matches(a, t, rad);
      if (ok) out.emplace_back(k, r);
    }
  return out;
}

}  // namespace brl
