#include "brl/structure.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "brl/terms.hpp"

namespace brl {

bool is_boolean_element(const Algebra& a, Element b) {
  return a.join(b, a.neg(b)) == a.top();
}

std::vector<Element> boolean_skeleton(const Algebra& a) {
  std::vector<Element> sk;
  for (Element b = 0; b < a.size(); ++b)
    if (is_boolean_element(a, b)) sk.push_back(b);

  auto in = [&](Element x) { return std::binary_search(sk.begin(), sk.end(), x); };
  auto check = [&](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("skeleton: ") + what);
  };
  check(in(a.top()) && in(a.bot()), "missing a bound");
  for (Element b : sk) {
    check(in(a.neg(b)), "not closed under negation");
    check(a.neg(a.neg(b)) == b, "negation is not involutive");
    check(a.mult(b, b) == b, "product is not idempotent");
    check(a.meet(b, a.neg(b)) == a.bot(), "complement meets its element above bot");
    for (Element c : sk) {
      check(in(a.mult(b, c)) && in(a.arrow(b, c)) && in(a.meet(b, c)) && in(a.join(b, c)),
            "not closed under the operations");
      check(a.mult(b, c) == a.meet(b, c), "product differs from meet");
    }
  }
  return sk;
}

bool is_directly_indecomposable(const Algebra& a) { return boolean_skeleton(a).size() == 2; }

bool is_di_filter(const Filter& f) {
  assert(f.algebra);
  const Algebra& a = *f.algebra;
  bool direct = f.proper();
  for (Element x = 0; x < a.size() && direct; ++x)
    if (f.contains(a.join(x, a.neg(x))) && !f.contains(x) && !f.contains(a.neg(x)))
      direct = false;
  if (direct != is_directly_indecomposable(quotient(f).algebra))
    throw std::logic_error("filter test for indecomposable quotient disagrees with the quotient");
  return direct;
}

bool is_local(const Algebra& a) { return maximal_filters(a).size() == 1; }

bool is_simple(const Algebra& a) { return a.size() >= 2 && all_filters(a).size() == 2; }

bool is_semisimple(const Algebra& a) {
  return radical(a).members == ElementSet::single(a.size(), a.top());
}

namespace {

std::optional<int> least_index(const Algebra& a, int limit,
                               const std::function<std::string(int)>& equation) {
  for (int k = 1; k <= limit; ++k)
    if (check_identity(a, parse_equation(equation(k))).holds) return k;
  return std::nullopt;
}

}  // namespace

int contractivity_index(const Algebra& a) {
  auto m = least_index(a, a.size(), [](int k) {
    return "x^" + std::to_string(k) + " = x^" + std::to_string(k + 1);
  });
  if (!m) throw std::logic_error("powers did not stabilize");
  return *m;
}

std::optional<int> wl_index(const Algebra& a) {
  return least_index(a, a.size(), [](int k) {
    return std::to_string(k) + ".x \\/ " + std::to_string(k) + ".~x = T";
  });
}

std::optional<int> em_index(const Algebra& a) {
  return least_index(a, a.size(), [](int m) { return "x \\/ ~x^" + std::to_string(m) + " = T"; });
}

namespace {

int maximals_above(const std::vector<Filter>& maximals, const Filter& f) {
  int count = 0;
  for (const Filter& m : maximals)
    if (f.members.subset_of(m.members)) ++count;
  return count;
}

}  // namespace

bool has_gap(const Algebra& a) {
  const int n = a.size();
  std::vector<Filter> maximals = maximal_filters(a);

  bool by_quotients = true;
  for (const Filter& f : all_filters(a)) {
    QuotientResult q = quotient(f);
    if (is_directly_indecomposable(q.algebra) && !is_local(q.algebra)) {
      by_quotients = false;
      break;
    }
  }

  bool by_stone = true;
  for (const Filter& u : stone_ultrafilters(a))
    if (maximals_above(maximals, u) != 1) {
      by_stone = false;
      break;
    }

  // a^k below some complemented element below k.a, for every a.
  bool by_elements = true;
  std::vector<Element> sk = boolean_skeleton(a);
  for (Element x = 0; x < n && by_elements; ++x) {
    bool sandwiched = false;
    for (int k = 1; k <= n && !sandwiched; ++k) {
      Element xk = a.power(x, k);
      Element kx = a.multiple(k, x);
      for (Element b : sk)
        if (a.leq(xk, b) && a.leq(b, kx)) {
          sandwiched = true;
          break;
        }
    }
    if (!sandwiched) by_elements = false;
  }

  if (by_quotients != by_stone || by_quotients != by_elements)
    throw std::logic_error("the three routes to the apple property disagree");
  return by_quotients;
}

bool has_blp(const Algebra& a) {
  std::vector<Element> sk = boolean_skeleton(a);
  bool lifts = true;
  for (const Filter& f : all_filters(a)) {
    QuotientResult q = quotient(f);
    std::set<Element> quotient_sk;
    for (Element b : boolean_skeleton(q.algebra)) quotient_sk.insert(b);
    std::set<Element> image;
    for (Element b : sk) image.insert(q.projection[b]);
    if (image != quotient_sk) {
      lifts = false;
      break;
    }
  }
  if (lifts != has_gap(a))
    throw std::logic_error("skeleton lifting disagrees with the apple property");
  return lifts;
}

StructureFlags analyze_structure(const Algebra& a) {
  StructureFlags s;
  s.skeleton = boolean_skeleton(a);
  s.directly_indecomposable = s.skeleton.size() == 2;
  s.local = is_local(a);
  s.simple = is_simple(a);
  s.rad = radical(a);
  s.semisimple = s.rad.members == ElementSet::single(a.size(), a.top());
  s.gap = has_gap(a);
  s.blp = has_blp(a);
  s.contractivity = contractivity_index(a);
  s.wl = wl_index(a);
  s.em = em_index(a);
  s.gap_cert = gap_certificate(a);

  if (s.simple && !s.directly_indecomposable)
    throw std::logic_error("simple algebra with a nontrivial skeleton");
  if (s.simple && !s.local) throw std::logic_error("simple algebra that is not local");
  return s;
}

}  // namespace brl
