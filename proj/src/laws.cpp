#include "brl/laws.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brl/filters.hpp"
#include "brl/structure.hpp"
#include "brl/terms.hpp"

namespace brl {
namespace {

using Witness = std::optional<std::string>;
using LawFn = std::function<Witness(const Algebra&)>;

const std::string& en(const Algebra& a, Element e) { return a.element_name(e); }

std::string set_str(const Algebra& a, const ElementSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Element e : s.elements()) {
    if (!first) out << ", ";
    out << en(a, e);
    first = false;
  }
  out << '}';
  return out.str();
}

std::string filter_str(const Filter& f) { return set_str(*f.algebra, f.members); }

Witness identity_witness(const Algebra& a, const std::string& text) {
  IdentityCheck c = check_identity(a, parse_equation(text));
  if (c.holds) return std::nullopt;
  std::ostringstream out;
  out << "fails \"" << text << "\" at ";
  bool first = true;
  for (const auto& [var, val] : c.counterexample) {
    if (!first) out << ", ";
    out << var << " := " << en(a, val);
    first = false;
  }
  return out.str();
}

// Two-scalar laws scan k up to this, single-scalar laws up to |A| + 1.
constexpr int kScalarCap = 4;

bool in_list(const std::vector<Filter>& fs, const Filter& f) {
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

Filter skeleton_part_filter(const Algebra& a, const Filter& f) {
  std::vector<Element> seed;
  for (Element b : boolean_skeleton(a))
    if (f.contains(b)) seed.push_back(b);
  return generate_filter(a, seed);
}

bool top_join_irreducible(const Algebra& q) {
  if (q.size() < 2) return false;
  for (Element x = 0; x < q.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (x != q.top() && y != q.top() && q.join(x, y) == q.top()) return false;
  return true;
}

Witness law_axioms_hold(const Algebra& a) {
  AxiomReport rep = verify_axioms(a);
  if (rep.all_hold()) return std::nullopt;
  return rep.summary(a);
}

Witness law_order_matches_arrow_top(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != (a.arrow(x, y) == a.top()))
        return "x := " + en(a, x) + ", y := " + en(a, y);
  return std::nullopt;
}

Witness law_multiple_closed_form(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (int k = 0; k <= a.size() + 1; ++k)
      if (a.multiple(k, x) != a.neg(a.power(a.neg(x), k)))
        return "x := " + en(a, x) + ", k = " + std::to_string(k);
  return std::nullopt;
}

Witness law_multiple_absorbs_double_negation(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x) {
    Element nn = a.neg(a.neg(x));
    for (int k = 1; k <= a.size() + 1; ++k) {
      Element kx = a.multiple(k, x);
      if (kx != a.neg(a.neg(kx)) || kx != a.multiple(k, nn))
        return "x := " + en(a, x) + ", k = " + std::to_string(k);
    }
  }
  return std::nullopt;
}

Witness law_multiple_splits_sum(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (int n = 0; n <= kScalarCap; ++n)
      for (int m = 0; m <= kScalarCap; ++m)
        if (a.multiple(n + m, x) != a.plus(a.multiple(n, x), a.multiple(m, x)))
          return "x := " + en(a, x) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m);
  return std::nullopt;
}

Witness law_multiple_over_plus(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      Element s = a.plus(x, y);
      for (int k = 1; k <= kScalarCap; ++k)
        if (a.multiple(k, s) != a.plus(a.multiple(k, x), a.multiple(k, y)))
          return "x := " + en(a, x) + ", y := " + en(a, y) + ", k = " + std::to_string(k);
    }
  return std::nullopt;
}

Witness law_multiple_of_multiple(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (int n = 0; n <= kScalarCap; ++n)
      for (int m = 0; m <= kScalarCap; ++m)
        if (a.multiple(m * n, x) != a.multiple(m, a.multiple(n, x)))
          return "x := " + en(a, x) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m);
  return std::nullopt;
}

Witness law_powers_descend_multiples_ascend(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x) {
    for (int k = 0; k <= a.size(); ++k) {
      if (!a.leq(a.power(x, k + 1), a.power(x, k)) ||
          !a.leq(a.multiple(k, x), a.multiple(k + 1, x)))
        return "x := " + en(a, x) + ", k = " + std::to_string(k);
    }
    if (a.power(x, a.size() + 1) != a.power(x, a.size() + 7) ||
        a.multiple(a.size() + 1, x) != a.multiple(a.size() + 7, x))
      return "x := " + en(a, x) + " fails to stabilize";
  }
  return std::nullopt;
}

Witness law_negated_power_of_multiple(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (int n = 1; n <= kScalarCap; ++n)
      for (int m = 1; m <= kScalarCap; ++m)
        if (a.neg(a.power(a.multiple(n, x), m)) != a.multiple(m, a.power(a.neg(x), n)))
          return "x := " + en(a, x) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m);
  return std::nullopt;
}

Witness law_multiple_of_negated_power(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (int n = 1; n <= kScalarCap; ++n)
      for (int m = 1; m <= kScalarCap; ++m)
        if (a.multiple(n, a.neg(a.power(x, m))) != a.neg(a.power(x, m * n)))
          return "x := " + en(a, x) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m);
  return std::nullopt;
}

Witness law_multiple_power_monotone(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!a.leq(x, y)) continue;
      for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
          if (!a.leq(a.multiple(n, a.power(x, m)), a.multiple(n, a.power(y, m))))
            return "x := " + en(a, x) + ", y := " + en(a, y) + ", n = " + std::to_string(n) +
                   ", m = " + std::to_string(m);
    }
  return std::nullopt;
}

Witness law_family_term_sandwich(const Algebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (int k = 1; k <= kScalarCap; ++k)
      for (int r = 1; r <= kScalarCap; ++r) {
        Element mid = a.multiple(k, a.power(x, r));
        for (int m = std::max(k, r); m <= std::max(k, r) + 3; ++m)
          if (!a.leq(a.power(x, m), mid) || !a.leq(mid, a.multiple(m, x)))
            return "x := " + en(a, x) + ", k = " + std::to_string(k) + ", r = " +
                   std::to_string(r) + ", m = " + std::to_string(m);
      }
  return std::nullopt;
}

Witness law_boolean_multiple_power_fixed(const Algebra& a) {
  for (Element b : boolean_skeleton(a))
    for (int n = 1; n <= kScalarCap; ++n)
      for (int m = 1; m <= kScalarCap; ++m)
        if (a.multiple(m, a.power(b, n)) != b)
          return "b := " + en(a, b) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m);
  return std::nullopt;
}

Witness law_boolean_product_is_meet(const Algebra& a) {
  for (Element b : boolean_skeleton(a))
    for (Element x = 0; x < a.size(); ++x) {
      if (a.mult(b, x) != a.meet(b, x)) return "b := " + en(a, b) + ", x := " + en(a, x);
      if (a.arrow(b, x) != a.join(a.neg(b), x))
        return "arrow: b := " + en(a, b) + ", x := " + en(a, x);
    }
  return std::nullopt;
}

Witness law_boolean_meet_distributes(const Algebra& a) {
  for (Element b : boolean_skeleton(a))
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        if (a.meet(b, a.join(x, y)) != a.join(a.meet(b, x), a.meet(b, y)))
          return "b := " + en(a, b) + ", x := " + en(a, x) + ", y := " + en(a, y);
  return std::nullopt;
}

Witness law_boolean_median(const Algebra& a) {
  for (Element b : boolean_skeleton(a))
    for (Element x = 0; x < a.size(); ++x)
      if (a.join(a.meet(b, x), a.neg(b)) != a.join(a.neg(b), x))
        return "b := " + en(a, b) + ", x := " + en(a, x);
  return std::nullopt;
}

Witness law_skeleton_membership_test(const Algebra& a) {
  std::vector<Element> sk = boolean_skeleton(a);
  for (Element x = 0; x < a.size(); ++x) {
    bool listed = std::find(sk.begin(), sk.end(), x) != sk.end();
    bool simple_test = a.join(x, a.neg(x)) == a.top();
    if (listed != simple_test || listed != is_boolean_element(a, x)) return "x := " + en(a, x);
  }
  return std::nullopt;
}

Witness law_complement_of_boolean_unique(const Algebra& a) {
  std::vector<Element> sk = boolean_skeleton(a);
  for (Element b : sk) {
    for (Element x = 0; x < a.size(); ++x)
      if (a.join(b, x) == a.top() && a.meet(b, x) == a.bot() && x != a.neg(b))
        return "b := " + en(a, b) + ", x := " + en(a, x);
    for (Element c : sk)
      for (Element d : sk)
        if (a.meet(b, a.join(c, d)) != a.join(a.meet(b, c), a.meet(b, d)))
          return "b := " + en(a, b) + ", c := " + en(a, c) + ", d := " + en(a, d);
  }
  return std::nullopt;
}

Witness law_principal_filters_cover_all(const Algebra& a) {
  if (a.size() > 12) return std::nullopt;  // exhaustive side needs 2^|A| subsets
  std::vector<Filter> fast = all_filters(a);
  std::vector<Filter> slow = all_filters_exhaustive(a);
  if (fast.size() != slow.size())
    return "principal enumeration found " + std::to_string(fast.size()) + " of " +
           std::to_string(slow.size());
  for (const Filter& f : slow)
    if (!in_list(fast, f)) return "missing " + filter_str(f);
  return std::nullopt;
}

Witness law_filter_congruence_roundtrip(const Algebra& a) {
  for (const Filter& f : all_filters(a)) {
    Congruence c = congruence_of(f);
    int covered = 0;
    for (const ElementSet& block : c.classes) covered += block.count();
    if (covered != a.size()) return "blocks of " + filter_str(f) + " do not partition";
    if (c.classes.at(static_cast<size_t>(c.class_of.at(static_cast<size_t>(a.top())))) !=
        f.members)
      return "top class of " + filter_str(f) + " is not the filter";
  }
  return std::nullopt;
}

Witness law_quotients_satisfy_axioms(const Algebra& a) {
  for (const Filter& f : all_filters(a)) {
    Algebra q = quotient(f).algebra;
    AxiomReport rep = verify_axioms(q);
    if (!rep.all_hold()) return "quotient by " + filter_str(f) + ": " + rep.summary(q);
  }
  return std::nullopt;
}

Witness law_quotient_projection_is_homomorphism(const Algebra& a) {
  for (const Filter& f : all_filters(a)) {
    QuotientResult q = quotient(f);
    const std::vector<int>& p = q.projection;
    const Algebra& b = q.algebra;
    if (p.at(static_cast<size_t>(a.top())) != b.top() ||
        p.at(static_cast<size_t>(a.bot())) != b.bot())
      return "bounds shift under " + filter_str(f);
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        auto px = p[static_cast<size_t>(x)], py = p[static_cast<size_t>(y)];
        if (p[static_cast<size_t>(a.mult(x, y))] != b.mult(px, py) ||
            p[static_cast<size_t>(a.arrow(x, y))] != b.arrow(px, py) ||
            p[static_cast<size_t>(a.meet(x, y))] != b.meet(px, py) ||
            p[static_cast<size_t>(a.join(x, y))] != b.join(px, py))
          return "x := " + en(a, x) + ", y := " + en(a, y) + " under " + filter_str(f);
      }
  }
  return std::nullopt;
}

Witness law_quotient_filters_match_filters_above(const Algebra& a) {
  std::vector<Filter> all = all_filters(a);
  for (const Filter& f : all) {
    size_t above = 0;
    for (const Filter& g : all)
      if (f.members.subset_of(g.members)) ++above;
    size_t in_quotient = all_filters(quotient(f).algebra).size();
    if (above != in_quotient)
      return filter_str(f) + " sits under " + std::to_string(above) + " filters, quotient has " +
             std::to_string(in_quotient);
  }
  return std::nullopt;
}

Witness law_prime_iff_fsi_quotient(const Algebra& a) {
  for (const Filter& f : all_filters(a))
    if (is_prime(f) != top_join_irreducible(quotient(f).algebra)) return filter_str(f);
  return std::nullopt;
}

Witness law_maximal_iff_simple_quotient(const Algebra& a) {
  for (const Filter& f : all_filters(a))
    if (is_maximal(f) != is_simple(quotient(f).algebra)) return filter_str(f);
  return std::nullopt;
}

Witness law_maximal_by_mx_agrees(const Algebra& a) {
  for (const Filter& f : all_filters(a)) {
    if (!f.proper()) continue;
    bool by_mx = true;
    for (Element x = 0; x < a.size() && by_mx; ++x) {
      if (f.contains(x)) continue;
      bool some_negated_power = false;
      for (int n = 1; n <= a.size() && !some_negated_power; ++n)
        if (f.contains(a.neg(a.power(x, n)))) some_negated_power = true;
      by_mx = some_negated_power;
    }
    if (by_mx != is_maximal(f)) return filter_str(f);
  }
  return std::nullopt;
}

Witness law_radical_matches_power_formula(const Algebra& a) {
  Filter rad = radical(a);
  for (Element x = 0; x < a.size(); ++x)
    if (rad.contains(x) != radical_formula_holds(a, x)) return "x := " + en(a, x);
  return std::nullopt;
}

Witness law_radical_quotient_semisimple(const Algebra& a) {
  if (!is_semisimple(quotient(radical(a)).algebra)) return std::string("not semisimple");
  return std::nullopt;
}

Witness law_every_filter_is_power_closed(const Algebra& a) {
  for (int k = 1; k <= kScalarCap; ++k)
    if (!is_k_radical(a, k)) return "k = " + std::to_string(k);
  for (const Filter& f : all_filters(a))
    for (Element x = 0; x < a.size(); ++x)
      if (f.contains(x) != f.contains(a.power(x, 2)))
        return filter_str(f) + " at x := " + en(a, x);
  return std::nullopt;
}

Witness law_minimal_primes_intersect_trivially(const Algebra& a) {
  std::vector<Filter> spm = minimal_prime_filters(a);
  if (spm.empty()) return std::nullopt;  // only the one-element algebra
  ElementSet common = ElementSet::full(a.size());
  for (const Filter& p : spm) common = common.intersected(p.members);
  if (common != ElementSet::single(a.size(), a.top())) return set_str(a, common);
  return std::nullopt;
}

Witness law_stone_filters_match_definition(const Algebra& a) {
  std::vector<Filter> stone = stone_filters(a);
  for (const Filter& f : all_filters(a)) {
    bool generated_by_skeleton_part = skeleton_part_filter(a, f) == f;
    if (generated_by_skeleton_part != in_list(stone, f)) return filter_str(f);
  }
  return std::nullopt;
}

Witness law_stone_ultra_iff_skeleton_ultrafilter(const Algebra& a) {
  std::vector<Filter> ultra = stone_ultrafilters(a);
  for (const Filter& f : stone_filters(a)) {
    bool part_is_ultrafilter = f.proper();
    if (part_is_ultrafilter)
      for (Element b : boolean_skeleton(a))
        if (!f.contains(b) && !f.contains(a.neg(b))) {
          part_is_ultrafilter = false;
          break;
        }
    if (part_is_ultrafilter != in_list(ultra, f)) return filter_str(f);
  }
  return std::nullopt;
}

Witness law_stone_ultra_intersect_trivially(const Algebra& a) {
  std::vector<Filter> ultra = stone_ultrafilters(a);
  if (ultra.empty()) return std::nullopt;
  ElementSet common = ElementSet::full(a.size());
  for (const Filter& u : ultra) common = common.intersected(u.members);
  if (common != ElementSet::single(a.size(), a.top())) return set_str(a, common);
  return std::nullopt;
}

Witness law_prime_quotients_are_di(const Algebra& a) {
  for (const Filter& p : prime_filters(a))
    if (!is_directly_indecomposable(quotient(p).algebra)) return filter_str(p);
  return std::nullopt;
}

Witness law_stone_ultra_quotients_are_di(const Algebra& a) {
  for (const Filter& u : stone_ultrafilters(a))
    if (!is_directly_indecomposable(quotient(u).algebra)) return filter_str(u);
  return std::nullopt;
}

Witness law_di_quotient_gives_stone_ultra(const Algebra& a) {
  std::vector<Filter> ultra = stone_ultrafilters(a);
  for (const Filter& f : all_filters(a)) {
    if (!is_directly_indecomposable(quotient(f).algebra)) continue;
    if (!in_list(ultra, skeleton_part_filter(a, f))) return filter_str(f);
  }
  return std::nullopt;
}

Witness law_primes_contain_stone_ultra(const Algebra& a) {
  std::vector<Filter> ultra = stone_ultrafilters(a);
  for (const Filter& p : prime_filters(a)) {
    Filter part = skeleton_part_filter(a, p);
    if (!in_list(ultra, part)) return filter_str(p) + " skeleton part is not ultra";
    if (!part.members.subset_of(p.members)) return filter_str(p) + " does not contain its part";
  }
  return std::nullopt;
}

Witness law_di_filter_matches_quotient(const Algebra& a) {
  for (const Filter& f : all_filters(a)) {
    if (!f.proper()) continue;
    if (is_di_filter(f) != is_directly_indecomposable(quotient(f).algebra)) return filter_str(f);
  }
  return std::nullopt;
}

Witness law_ultra_equal_minimal_primes_when_di_prime(const Algebra& a) {
  for (const Filter& f : all_filters(a))
    if (f.proper() && is_di_filter(f) && !is_prime(f)) return std::nullopt;  // premise fails
  std::vector<Filter> ultra = stone_ultrafilters(a);
  std::vector<Filter> spm = minimal_prime_filters(a);
  std::sort(ultra.begin(), ultra.end());
  std::sort(spm.begin(), spm.end());
  if (ultra != spm) return std::string("ultrafilters differ from minimal primes");
  return std::nullopt;
}

Witness law_gap_routes_agree(const Algebra& a) {
  has_gap(a);  // throws when its three computation routes disagree
  return std::nullopt;
}

Witness law_gap_iff_blp(const Algebra& a) {
  if (has_gap(a) != has_blp(a)) return std::string("flags differ");
  return std::nullopt;
}

Witness law_wl_index_implies_gap(const Algebra& a) {
  if (wl_index(a).has_value() && !has_gap(a)) return "wl = " + std::to_string(*wl_index(a));
  return std::nullopt;
}

Witness law_gap_certificate_consequences(const Algebra& a) {
  auto cert = gap_certificate(a);
  if (!cert) return std::nullopt;
  auto [k, r] = *cert;
  if (!has_gap(a)) return "certificate (" + std::to_string(k) + ", " + std::to_string(r) + ")";
  auto wl = wl_index(a);
  if (!wl || *wl > k)
    return "certificate k = " + std::to_string(k) + " but wl = " +
           (wl ? std::to_string(*wl) : std::string("none"));
  return std::nullopt;
}

Witness law_certificate_term_consequences(const Algebra& a) {
  auto cert = gap_certificate(a);
  if (!cert) return std::nullopt;
  auto [k, r] = *cert;
  std::string id = std::to_string(k) + ".x \\/ " + std::to_string(k) + ".~x = T";
  if (!check_identity(a, parse_equation(id)).holds)
    return "certificate k = " + std::to_string(k) + " without \"" + id + "\"";
  auto b = [&](Element x) { return a.multiple(k, a.power(x, r)); };
  for (Element x = 0; x < a.size(); ++x) {
    if (!a.leq(b(a.power(x, k)), b(x))) return "b(x^k) above b(x) at x := " + en(a, x);
    for (int m = 1; m <= kScalarCap; ++m)
      if (a.multiple(m, b(x)) != b(x)) return "m.b(x) moves at x := " + en(a, x);
    if (b(b(x)) != b(x)) return "b not idempotent at x := " + en(a, x);
    Element co = a.neg(b(a.neg(x)));
    if (!a.leq(a.power(x, k), co) || !a.leq(co, a.multiple(k, x)))
      return "~b(~x) leaves the sandwich at x := " + en(a, x);
    if (!a.leq(a.multiple(k, a.power(x, k)), a.power(a.multiple(k, x), k)))
      return "k.x^k above (k.x)^k at x := " + en(a, x);
  }
  return std::nullopt;
}

Witness law_em_locality_on_di(const Algebra& a) {
  if (!is_directly_indecomposable(a)) return std::nullopt;
  int m = contractivity_index(a);
  bool boolean = is_boolean_term(a, family_term(m, m)).is_boolean;
  if (boolean != is_local(a))
    return "contractivity " + std::to_string(m) + ": boolean term flag differs from local";
  return std::nullopt;
}

Witness law_square_identity_gives_retraction(const Algebra& a) {
  int cap = std::min(a.size(), 5);
  for (int k = 1; k <= cap; ++k) {
    std::string id = std::to_string(k) + ".x^" + std::to_string(k) + " \\/ " +
                     std::to_string(k) + ".(~x)^" + std::to_string(k) + " = T";
    if (!check_identity(a, parse_equation(id)).holds) continue;
    if (!is_boolean_retraction_term(a, family_term(k, k)).verdict())
      return "k = " + std::to_string(k);
  }
  return std::nullopt;
}

Witness law_contractive_multiple_power_is_radical(const Algebra& a) {
  int m = contractivity_index(a);
  if (!is_radical_term(a, family_term(m, m))) return "m = " + std::to_string(m);
  return std::nullopt;
}

Witness law_power_boolean_iff_em(const Algebra& a) {
  if (a.size() < 2) return std::nullopt;
  Term x = Term::var("x");
  for (int m = 1; m <= a.size(); ++m) {
    bool boolean = is_boolean_term(a, Term::pow(x, m)).is_boolean;
    bool em = check_identity(a, parse_equation("x \\/ ~x^" + std::to_string(m) + " = T")).holds;
    if (boolean != em) return "m = " + std::to_string(m);
  }
  return std::nullopt;
}

Witness law_square_family_boolean_gives_wl_gap(const Algebra& a) {
  int cap = std::min(a.size(), 5);
  for (int k = 1; k <= cap; ++k) {
    if (!is_boolean_term(a, family_term(k, k)).is_boolean) continue;
    if (!has_gap(a)) return "k = " + std::to_string(k) + " boolean but no gap";
    auto wl = wl_index(a);
    if (!wl || *wl > k) return "k = " + std::to_string(k) + " boolean but wl above it";
  }
  return std::nullopt;
}

Witness law_retraction_implies_boolean_and_radical(const Algebra& a) {
  if (a.size() < 2) return std::nullopt;
  int cap = std::min(a.size(), 6);
  for (int k = 1; k <= cap; ++k)
    for (int r = 1; r <= cap; ++r) {
      Term t = family_term(k, r);
      if (!is_boolean_retraction_term(a, t).verdict()) continue;
      if (!is_boolean_term(a, t).is_boolean || !is_radical_term(a, t))
        return "k = " + std::to_string(k) + ", r = " + std::to_string(r);
    }
  return std::nullopt;
}

Witness law_boolean_radical_terms_agree_on_di(const Algebra& a) {
  if (!is_directly_indecomposable(a)) return std::nullopt;
  int cap = std::min(a.size(), 5);
  std::vector<std::pair<int, int>> hits = find_term_in_family(a, FamilyPredicate::boolean_and_radical, cap, cap);
  for (size_t i = 1; i < hits.size(); ++i) {
    Term s = family_term(hits[0].first, hits[0].second);
    Term t = family_term(hits[i].first, hits[i].second);
    for (Element x = 0; x < a.size(); ++x)
      if (eval_unary(a, s, x) != eval_unary(a, t, x))
        return "terms " + s.str() + " and " + t.str() + " differ at x := " + en(a, x);
  }
  return std::nullopt;
}

Witness law_semisimple_iff_em_index(const Algebra& a) {
  if (is_semisimple(a) != em_index(a).has_value()) return std::string("flags differ");
  return std::nullopt;
}

Witness law_simple_implies_di_local_semisimple(const Algebra& a) {
  if (!is_simple(a)) return std::nullopt;
  if (!is_directly_indecomposable(a)) return std::string("simple but decomposable");
  if (!is_local(a)) return std::string("simple but not local");
  if (!is_semisimple(a)) return std::string("simple but not semisimple");
  return std::nullopt;
}

}  // namespace

std::vector<LawResult> run_laws(const Algebra& a) {
  const std::vector<std::pair<std::string, LawFn>> laws = {
      {"axioms-hold", law_axioms_hold},
      {"order-matches-arrow-top", law_order_matches_arrow_top},
      {"residuum-curry",
       [](const Algebra& a) { return identity_witness(a, "x*y -> z = x -> (y -> z)"); }},
      {"product-distributes-over-join",
       [](const Algebra& a) { return identity_witness(a, "x*(y \\/ z) = x*y \\/ x*z"); }},
      {"triple-negation-collapse",
       [](const Algebra& a) { return identity_witness(a, "~~~x = ~x"); }},
      {"contraposition",
       [](const Algebra& a) { return identity_witness(a, "x -> y <= ~y -> ~x"); }},
      {"plus-via-arrow",
       [](const Algebra& a) { return identity_witness(a, "x + y = ~x -> ~~y"); }},
      {"one-multiple-is-double-negation",
       [](const Algebra& a) { return identity_witness(a, "1.x = ~~x"); }},
      {"multiple-closed-form", law_multiple_closed_form},
      {"multiple-absorbs-double-negation", law_multiple_absorbs_double_negation},
      {"multiple-splits-sum", law_multiple_splits_sum},
      {"multiple-over-plus", law_multiple_over_plus},
      {"multiple-of-multiple", law_multiple_of_multiple},
      {"powers-descend-multiples-ascend", law_powers_descend_multiples_ascend},
      {"negated-power-of-multiple", law_negated_power_of_multiple},
      {"multiple-of-negated-power", law_multiple_of_negated_power},
      {"multiple-power-monotone", law_multiple_power_monotone},
      {"family-term-sandwich", law_family_term_sandwich},
      {"boolean-multiple-power-fixed", law_boolean_multiple_power_fixed},
      {"boolean-product-is-meet", law_boolean_product_is_meet},
      {"boolean-meet-distributes", law_boolean_meet_distributes},
      {"boolean-median", law_boolean_median},
      {"skeleton-membership-test", law_skeleton_membership_test},
      {"complement-of-boolean-unique", law_complement_of_boolean_unique},
      {"principal-filters-cover-all", law_principal_filters_cover_all},
      {"filter-congruence-roundtrip", law_filter_congruence_roundtrip},
      {"quotients-satisfy-axioms", law_quotients_satisfy_axioms},
      {"quotient-projection-is-homomorphism", law_quotient_projection_is_homomorphism},
      {"quotient-filters-match-filters-above", law_quotient_filters_match_filters_above},
      {"prime-iff-fsi-quotient", law_prime_iff_fsi_quotient},
      {"maximal-iff-simple-quotient", law_maximal_iff_simple_quotient},
      {"maximal-by-mx-agrees", law_maximal_by_mx_agrees},
      {"radical-matches-power-formula", law_radical_matches_power_formula},
      {"radical-quotient-semisimple", law_radical_quotient_semisimple},
      {"every-filter-is-power-closed", law_every_filter_is_power_closed},
      {"minimal-primes-intersect-trivially", law_minimal_primes_intersect_trivially},
      {"stone-filters-match-definition", law_stone_filters_match_definition},
      {"stone-ultra-iff-skeleton-ultrafilter", law_stone_ultra_iff_skeleton_ultrafilter},
      {"stone-ultra-intersect-trivially", law_stone_ultra_intersect_trivially},
      {"prime-quotients-are-di", law_prime_quotients_are_di},
      {"stone-ultra-quotients-are-di", law_stone_ultra_quotients_are_di},
      {"di-quotient-gives-stone-ultra", law_di_quotient_gives_stone_ultra},
      {"primes-contain-stone-ultra", law_primes_contain_stone_ultra},
      {"di-filter-matches-quotient", law_di_filter_matches_quotient},
      {"ultra-equal-minimal-primes-when-di-prime", law_ultra_equal_minimal_primes_when_di_prime},
      {"gap-routes-agree", law_gap_routes_agree},
      {"gap-iff-blp", law_gap_iff_blp},
      {"wl-index-implies-gap", law_wl_index_implies_gap},
      {"gap-certificate-consequences", law_gap_certificate_consequences},
      {"certificate-term-consequences", law_certificate_term_consequences},
      {"power-boolean-iff-em", law_power_boolean_iff_em},
      {"square-family-boolean-gives-wl-gap", law_square_family_boolean_gives_wl_gap},
      {"em-locality-on-di", law_em_locality_on_di},
      {"square-identity-gives-retraction", law_square_identity_gives_retraction},
      {"contractive-multiple-power-is-radical", law_contractive_multiple_power_is_radical},
      {"retraction-implies-boolean-and-radical", law_retraction_implies_boolean_and_radical},
      {"boolean-radical-terms-agree-on-di", law_boolean_radical_terms_agree_on_di},
      {"semisimple-iff-em-index", law_semisimple_iff_em_index},
      {"simple-implies-di-local-semisimple", law_simple_implies_di_local_semisimple},
  };

  std::vector<LawResult> out;
  out.reserve(laws.size());
  for (const auto& [name, fn] : laws) {
    LawResult r{name, true, ""};
    try {
      if (Witness w = fn(a)) {
        r.pass = false;
        r.witness = *w;
      }
    } catch (const std::exception& ex) {
      r.pass = false;
      r.witness = std::string("exception: ") + ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool all_pass(const std::vector<LawResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const LawResult& r) { return r.pass; });
}

}  // namespace brl
