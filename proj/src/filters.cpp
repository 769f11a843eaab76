#include "brl/filters.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace brl {

namespace {

bool is_filter_set(const Algebra& a, const ElementSet& s) {
  const int n = a.size();
  if (!s.contains(a.top())) return false;
  for (Element x : s.elements()) {
    for (Element y = 0; y < n; ++y)
      if (a.leq(x, y) && !s.contains(y)) return false;
    for (Element y : s.elements())
      if (!s.contains(a.mult(x, y))) return false;
  }
  return true;
}

/// Every filter here has a least element: the product of all its members.
Element least_member(const Algebra& a, const ElementSet& s) {
  for (Element x : s.elements()) {
    bool below_all = true;
    for (Element y : s.elements())
      if (!a.leq(x, y)) {
        below_all = false;
        break;
      }
    if (below_all) return x;
  }
  throw std::logic_error("filter with no least element");
}

Filter make_filter(const Algebra& a, ElementSet members) {
  if (!is_filter_set(a, members)) throw std::logic_error("set is not a filter");
  Filter f;
  f.algebra = &a;
  f.generator = least_member(a, members);
  f.members = std::move(members);
  return f;
}

}  // namespace

bool Filter::proper() const {
  assert(algebra);
  return !members.contains(algebra->bot());
}

bool Filter::operator<(const Filter& other) const {
  if (members.count() != other.members.count()) return members.count() < other.members.count();
  if (generator && other.generator && *generator != *other.generator)
    return *generator < *other.generator;
  return members < other.members;
}

Filter generate_filter(const Algebra& a, const std::vector<Element>& seed) {
  const int n = a.size();
  ElementSet s = ElementSet::single(n, a.top());
  for (Element g : seed) {
    if (g < 0 || g >= n) throw InvalidElement(g, n);
    s.add(g);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto xs = s.elements();
    for (Element x : xs) {
      for (Element y : xs) {
        Element p = a.mult(x, y);
        if (!s.contains(p)) {
          s.add(p);
          changed = true;
        }
      }
      for (Element y = 0; y < n; ++y)
        if (a.leq(x, y) && !s.contains(y)) {
          s.add(y);
          changed = true;
        }
    }
  }
  return make_filter(a, std::move(s));
}

Filter principal_filter(const Algebra& a, Element g) { return generate_filter(a, {g}); }

std::vector<Filter> all_filters(const Algebra& a) {
  std::vector<Filter> out;
  for (Element g = 0; g < a.size(); ++g) {
    Filter f = principal_filter(a, g);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Filter> all_filters_exhaustive(const Algebra& a, int max_size) {
  const int n = a.size();
  if (n > max_size) throw TooLarge("subset scan over " + std::to_string(n) + " elements");
  std::vector<Filter> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ElementSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) s.add(i);
    if (is_filter_set(a, s)) out.push_back(make_filter(a, std::move(s)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Congruence congruence_of(const Filter& f) {
  assert(f.algebra);
  const Algebra& a = *f.algebra;
  const int n = a.size();
  auto related = [&](Element x, Element y) {
    return f.contains(a.arrow(x, y)) && f.contains(a.arrow(y, x));
  };
  std::vector<Element> rep(n);
  for (Element x = 0; x < n; ++x) {
    Element r = x;
    for (Element y = 0; y < x; ++y)
      if (related(x, y)) {
        r = y;
        break;
      }
    rep[x] = r;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (related(x, y) != (rep[x] == rep[y]))
        throw std::logic_error("filter relation is not an equivalence");

  Congruence c;
  c.algebra = &a;
  c.class_of.assign(n, -1);
  for (Element x = 0; x < n; ++x) {
    if (rep[x] == x) {
      ElementSet block(n);
      for (Element y = 0; y < n; ++y)
        if (rep[y] == x) block.add(y);
      c.class_of[x] = static_cast<int>(c.classes.size());
      c.classes.push_back(std::move(block));
    }
  }
  for (Element x = 0; x < n; ++x) c.class_of[x] = c.class_of[rep[x]];
  return c;
}

QuotientResult quotient(const Filter& f) {
  assert(f.algebra);
  const Algebra& a = *f.algebra;
  const int n = a.size();
  Congruence c = congruence_of(f);
  const int m = static_cast<int>(c.classes.size());

  std::vector<Element> reps(m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    reps[i] = c.classes[i].elements().front();
    names[i] = a.element_name(reps[i]);
  }

  Table mult_q(static_cast<size_t>(m) * m);
  Table arrow_q(static_cast<size_t>(m) * m);
  Relation leq_q(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      mult_q[i * m + j] = c.class_of[a.mult(reps[i], reps[j])];
      arrow_q[i * m + j] = c.class_of[a.arrow(reps[i], reps[j])];
      leq_q[i * m + j] = f.contains(a.arrow(reps[i], reps[j])) ? 1 : 0;
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      int i = c.class_of[x], j = c.class_of[y];
      if (c.class_of[a.mult(x, y)] != mult_q[i * m + j] ||
          c.class_of[a.arrow(x, y)] != arrow_q[i * m + j])
        throw std::logic_error("filter relation is not compatible with the operations");
    }

  int top_q = c.class_of[a.top()];
  if (!(c.classes[top_q] == f.members))
    throw std::logic_error("class of top differs from the filter");

  std::string qname = a.name() + "/" +
                      (f.generator ? a.element_name(*f.generator) : std::string("F"));
  Algebra q(qname, names, top_q, c.class_of[a.bot()], std::move(mult_q), std::move(leq_q),
            std::move(arrow_q));
  return QuotientResult{std::move(q), std::move(c.class_of)};
}

bool is_prime(const Filter& f) {
  assert(f.algebra);
  if (!f.proper()) return false;
  const Algebra& a = *f.algebra;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (f.contains(a.join(x, y)) && !f.contains(x) && !f.contains(y)) return false;
  return true;
}

bool is_maximal(const Filter& f) {
  assert(f.algebra);
  const Algebra& a = *f.algebra;
  const int n = a.size();
  if (!f.proper()) return false;

  bool by_extension = true;
  for (Element x = 0; x < n && by_extension; ++x) {
    if (f.contains(x)) continue;
    auto seed = f.members.elements();
    seed.push_back(x);
    if (generate_filter(a, seed).proper()) by_extension = false;
  }

  // Second route: outside elements are exactly those with some negated
  // power in the filter.
  bool by_negated_powers = true;
  for (Element x = 0; x < n && by_negated_powers; ++x) {
    bool witness = false;
    for (int k = 1; k <= n && !witness; ++k)
      if (f.contains(a.neg(a.power(x, k)))) witness = true;
    if (witness == f.contains(x)) by_negated_powers = false;
  }

  if (by_extension != by_negated_powers)
    throw std::logic_error("maximality characterizations disagree");
  return by_extension;
}

std::vector<Filter> prime_filters(const Algebra& a) {
  std::vector<Filter> out;
  for (const Filter& f : all_filters(a))
    if (is_prime(f)) out.push_back(f);
  return out;
}

std::vector<Filter> maximal_filters(const Algebra& a) {
  std::vector<Filter> out;
  for (const Filter& f : all_filters(a))
    if (is_maximal(f)) out.push_back(f);
  return out;
}

std::vector<Filter> minimal_prime_filters(const Algebra& a) {
  std::vector<Filter> primes = prime_filters(a);
  std::vector<Filter> out;
  for (const Filter& p : primes) {
    bool minimal = true;
    for (const Filter& q : primes)
      if (!(q == p) && q.members.subset_of(p.members)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(p);
  }
  if (!out.empty()) {
    ElementSet meet = ElementSet::full(a.size());
    for (const Filter& p : out) meet = meet.intersected(p.members);
    if (!(meet == ElementSet::single(a.size(), a.top())))
      throw std::logic_error("minimal primes do not intersect to {top}");
  }
  return out;
}

Filter radical(const Algebra& a) {
  ElementSet meet = ElementSet::full(a.size());
  for (const Filter& f : maximal_filters(a)) meet = meet.intersected(f.members);
  return make_filter(a, std::move(meet));
}

bool radical_formula_holds(const Algebra& a, Element x) {
  const int n = a.size();
  if (x < 0 || x >= n) throw InvalidElement(x, n);
  for (int p = 1; p <= n; ++p) {
    Element xp = a.power(x, p);
    bool reaches_top = false;
    for (int k = 1; k <= n && !reaches_top; ++k)
      if (a.multiple(k, xp) == a.top()) reaches_top = true;
    if (!reaches_top) return false;
  }
  return true;
}

bool is_k_radical(const Algebra& a, int k) {
  if (k < 1) throw BrlError("k-radical test needs k >= 1");
  Filter rad = radical(a);
  for (Element x = 0; x < a.size(); ++x)
    if (rad.contains(a.power(x, k)) != rad.contains(x)) return false;
  return true;
}

std::vector<Filter> stone_filters(const Algebra& a) {
  std::vector<Filter> out;
  for (Element b = 0; b < a.size(); ++b) {
    if (a.join(b, a.neg(b)) != a.top()) continue;
    Filter f = principal_filter(a, b);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Filter> stone_ultrafilters(const Algebra& a) {
  const int n = a.size();
  std::vector<Element> skeleton;
  for (Element b = 0; b < n; ++b)
    if (a.join(b, a.neg(b)) == a.top()) skeleton.push_back(b);

  std::vector<Filter> out;
  for (Element g : skeleton) {
    if (g == a.bot()) continue;
    bool atom = true;
    for (Element b : skeleton)
      if (!a.leq(g, b) && !a.leq(g, a.neg(b))) {
        atom = false;
        break;
      }
    if (atom) out.push_back(principal_filter(a, g));
  }
  std::sort(out.begin(), out.end());

  if (!out.empty()) {
    ElementSet meet = ElementSet::full(n);
    for (const Filter& u : out) meet = meet.intersected(u.members);
    if (!(meet == ElementSet::single(n, a.top())))
      throw std::logic_error("Stone ultrafilters do not intersect to {top}");
  }
  return out;
}

}  // namespace brl
