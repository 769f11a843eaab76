#include "brl/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "brl/filters.hpp"

namespace brl {

Algebra make_lukasiewicz(int n) {
  if (n < 1) throw BrlError("chain needs n >= 1");
  const int size = n + 1;
  std::vector<std::string> names(size);
  for (int i = 0; i < size; ++i) names[i] = std::to_string(i);
  Table mult(static_cast<size_t>(size) * size);
  Table arrow(static_cast<size_t>(size) * size);
  Relation leq(static_cast<size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      mult[a * size + b] = std::max(0, a + b - n);
      arrow[a * size + b] = std::min(n, n - a + b);
      leq[a * size + b] = a <= b ? 1 : 0;
    }
  return Algebra("L" + std::to_string(size), names, n, 0, std::move(mult), std::move(leq),
                 std::move(arrow));
}

Algebra make_w9() {
  // Indices: 0 = T, 1..7 as printed, 8 = F.
  const std::vector<std::string> names = {"T", "1", "2", "3", "4", "5", "6", "7", "F"};
  // The printed source of this table shows 6*6 = F, which contradicts
  // residuation (both 3 and 6 would be maximal with product into F) and
  // associativity ((6*6)*1 vs 6*(6*1)); 7 is the only consistent value.
  const Table mult = {
      0, 1, 2, 3, 4, 5, 6, 7, 8,  //
      1, 3, 3, 3, 5, 5, 7, 8, 8,  //
      2, 3, 3, 3, 5, 5, 7, 8, 8,  //
      3, 3, 3, 3, 5, 5, 8, 8, 8,  //
      4, 5, 5, 5, 7, 8, 7, 8, 8,  //
      5, 5, 5, 5, 8, 8, 8, 8, 8,  //
      6, 7, 7, 8, 7, 8, 7, 8, 8,  //
      7, 8, 8, 8, 8, 8, 8, 8, 8,  //
      8, 8, 8, 8, 8, 8, 8, 8, 8,
  };
  const Table arrow = {
      0, 1, 2, 3, 4, 5, 6, 7, 8,  //
      0, 0, 1, 1, 4, 4, 6, 6, 7,  //
      0, 0, 0, 1, 4, 4, 6, 6, 7,  //
      0, 0, 0, 0, 4, 4, 6, 6, 6,  //
      0, 0, 1, 1, 0, 1, 4, 4, 5,  //
      0, 0, 0, 0, 0, 0, 4, 4, 4,  //
      0, 0, 1, 1, 0, 1, 0, 1, 3,  //
      0, 0, 0, 0, 0, 0, 0, 0, 1,  //
      0, 0, 0, 0, 0, 0, 0, 0, 0,
  };
  Relation leq = close_covers(
      9, {{8, 7}, {7, 6}, {7, 5}, {5, 4}, {5, 3}, {6, 4}, {4, 1}, {3, 2}, {2, 1}, {1, 0}});
  return Algebra("W9", names, 0, 8, mult, std::move(leq), arrow);
}

Algebra make_nogap5() {
  const std::vector<std::string> names = {"F", "a", "b", "c", "T"};
  Relation leq = close_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  LatticeTables lat = derive_lattice(5, leq);
  Table mult = lat.meet;
  return Algebra("nogap5", names, 4, 0, std::move(mult), std::move(leq));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> names(n);
  Table mult(static_cast<size_t>(n) * n);
  Table arrow(static_cast<size_t>(n) * n);
  Relation leq(static_cast<size_t>(n) * n);
  auto idx = [nb](Element i, Element j) { return i * nb + j; };
  for (Element i = 0; i < na; ++i)
    for (Element j = 0; j < nb; ++j)
      names[idx(i, j)] = "(" + a.element_name(i) + "," + b.element_name(j) + ")";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element xi = x / nb, xj = x % nb, yi = y / nb, yj = y % nb;
      mult[x * n + y] = idx(a.mult(xi, yi), b.mult(xj, yj));
      arrow[x * n + y] = idx(a.arrow(xi, yi), b.arrow(xj, yj));
      leq[x * n + y] = (a.leq(xi, yi) && b.leq(xj, yj)) ? 1 : 0;
    }
  return Algebra(a.name() + "x" + b.name(), names, idx(a.top(), b.top()), idx(a.bot(), b.bot()),
                 std::move(mult), std::move(leq), std::move(arrow));
}

bool is_subuniverse(const Algebra& a, const ElementSet& s) {
  if (!s.contains(a.top()) || !s.contains(a.bot())) return false;
  for (Element x : s.elements())
    for (Element y : s.elements()) {
      if (!s.contains(a.mult(x, y)) || !s.contains(a.arrow(x, y)) ||
          !s.contains(a.meet(x, y)) || !s.contains(a.join(x, y)))
        return false;
    }
  return true;
}

ElementSet subuniverse_closure(const Algebra& a, const ElementSet& seed) {
  ElementSet s = seed;
  s.add(a.top());
  s.add(a.bot());
  bool changed = true;
  while (changed) {
    changed = false;
    auto xs = s.elements();
    for (Element x : xs)
      for (Element y : xs)
        for (Element v : {a.mult(x, y), a.arrow(x, y), a.meet(x, y), a.join(x, y)})
          if (!s.contains(v)) {
            s.add(v);
            changed = true;
          }
  }
  return s;
}

Algebra restrict_to(const Algebra& a, const ElementSet& s, const std::string& name) {
  if (!is_subuniverse(a, s)) throw BrlError("set is not a subuniverse of " + a.name());
  std::vector<Element> keep = s.elements();
  const int m = static_cast<int>(keep.size());
  std::vector<int> pos(a.size(), -1);
  for (int i = 0; i < m; ++i) pos[keep[i]] = i;

  std::vector<std::string> names(m);
  Table mult(static_cast<size_t>(m) * m);
  Table arrow(static_cast<size_t>(m) * m);
  Relation leq(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    names[i] = a.element_name(keep[i]);
    for (int j = 0; j < m; ++j) {
      mult[i * m + j] = pos[a.mult(keep[i], keep[j])];
      arrow[i * m + j] = pos[a.arrow(keep[i], keep[j])];
      leq[i * m + j] = a.leq(keep[i], keep[j]) ? 1 : 0;
    }
  }
  return Algebra(name, names, pos[a.top()], pos[a.bot()], std::move(mult), std::move(leq),
                 std::move(arrow));
}

Algebra subalgebra_generated(const Algebra& a, const std::vector<Element>& gens,
                             const std::string& name) {
  ElementSet seed(a.size());
  for (Element g : gens) {
    if (g < 0 || g >= a.size())
      throw InvalidElement("generator index " + std::to_string(g) + " is outside the universe of " +
                           a.name());
    seed.add(g);
  }
  return restrict_to(a, subuniverse_closure(a, seed), name);
}

std::vector<ElementSet> all_subuniverses(const Algebra& a, int max_size) {
  const int n = a.size();
  if (n > max_size) throw TooLarge("subset scan over " + std::to_string(n) + " elements");
  std::vector<ElementSet> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    if (!(mask & (uint64_t{1} << a.top())) || !(mask & (uint64_t{1} << a.bot()))) continue;
    ElementSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) s.add(i);
    if (is_subuniverse(a, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& x, const ElementSet& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x < y;
  });
  return out;
}

namespace {

std::array<int, 5> local_invariant(const Algebra& a, Element x) {
  const int n = a.size();
  int up = 0, down = 0;
  for (Element y = 0; y < n; ++y) {
    if (a.leq(x, y)) ++up;
    if (a.leq(y, x)) ++down;
  }
  int stab = 0;
  while (stab < n && a.power(x, stab) != a.power(x, stab + 1)) ++stab;
  int row = 0;
  for (Element y = 0; y < n; ++y) {
    Element p = a.mult(x, y);
    for (Element z = 0; z < n; ++z)
      if (a.leq(p, z)) ++row;
  }
  return {up, down, a.mult(x, x) == x ? 1 : 0, stab, row};
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const Algebra& a, const Algebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  std::vector<Element> img(n, -1);
  std::vector<bool> used(n, false);
  img[a.top()] = b.top();
  img[a.bot()] = b.bot();
  used[b.top()] = true;
  if (a.top() != a.bot()) used[b.bot()] = true;

  // Backtrack over the remaining indices in order; the bounds are pinned.
  std::vector<Element> order;
  for (Element x = 0; x < n; ++x)
    if (x != a.top() && x != a.bot()) order.push_back(x);

  std::function<bool(size_t)> solve = [&](size_t k) -> bool {
    if (k == order.size()) {
      for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v)
          if (img[a.mult(u, v)] != b.mult(img[u], img[v]) ||
              img[a.arrow(u, v)] != b.arrow(img[u], img[v]) ||
              a.leq(u, v) != b.leq(img[u], img[v]))
            return false;
      return true;
    }
    Element x = order[k];
    for (Element y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (local_invariant(a, x) != local_invariant(b, y)) continue;
      bool ok = true;
      for (Element z = 0; z < n && ok; ++z)
        if (img[z] >= 0) ok = a.leq(x, z) == b.leq(y, img[z]) && a.leq(z, x) == b.leq(img[z], y);
      if (!ok) continue;
      img[x] = y;
      used[y] = true;
      if (solve(k + 1)) return true;
      img[x] = -1;
      used[y] = false;
    }
    return false;
  };
  if (!solve(0)) return std::nullopt;
  return img;
}

bool is_isomorphic(const Algebra& a, const Algebra& b) {
  return find_isomorphism(a, b).has_value();
}

std::vector<Algebra> homomorphic_images(const Algebra& a) {
  std::vector<Algebra> out;
  for (const Filter& f : all_filters(a)) {
    Algebra q = quotient(f).algebra;
    bool fresh = true;
    for (const Algebra& seen : out)
      if (is_isomorphic(q, seen)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(),
            [](const Algebra& x, const Algebra& y) { return x.size() < y.size(); });
  return out;
}

std::vector<Algebra> corpus_algebras() {
  std::vector<Algebra> out;
  for (int n = 1; n <= 5; ++n) out.push_back(make_lukasiewicz(n));
  Algebra w9 = make_w9();
  out.push_back(make_nogap5());
  out.push_back(direct_product(w9, make_lukasiewicz(2)));
  out.push_back(direct_product(make_lukasiewicz(2), make_lukasiewicz(2)));
  out.push_back(restrict_to(w9, ElementSet::of(9, {0, 1, 3, 6, 7, 8}), "W6"));
  out.push_back(restrict_to(w9, ElementSet::of(9, {0, 1, 2, 3, 6, 7, 8}), "W7"));
  out.push_back(restrict_to(w9, ElementSet::of(9, {0, 1, 3, 4, 5, 6, 7, 8}), "W8"));
  out.push_back(restrict_to(w9, ElementSet::of(9, {0, 8}), "L2_in_W9"));
  out.push_back(std::move(w9));
  return out;
}

namespace {

void lex_check(int n, LexElement e) {
  if (n < 1) throw BrlError("chain parameter must be positive");
  if (!lex_valid(n, e))
    throw BrlError("(" + std::to_string(e.a) + "," + std::to_string(e.r) +
                   ") lies outside [(0,0),(" + std::to_string(n) + ",0)]");
}

}  // namespace

bool lex_valid(int n, LexElement e) {
  if (e.a < 0 || e.a > n) return false;
  if (e.a == 0 && e.r < 0) return false;
  if (e.a == n && e.r > 0) return false;
  return true;
}

bool lex_leq(LexElement e, LexElement f) { return e.a < f.a || (e.a == f.a && e.r <= f.r); }

LexElement lex_meet(int n, LexElement e, LexElement f) {
  lex_check(n, e);
  lex_check(n, f);
  return lex_leq(e, f) ? e : f;
}

LexElement lex_join(int n, LexElement e, LexElement f) {
  lex_check(n, e);
  lex_check(n, f);
  return lex_leq(e, f) ? f : e;
}

LexElement lex_mult(int n, LexElement e, LexElement f) {
  lex_check(n, e);
  lex_check(n, f);
  LexElement sum{e.a + f.a - n, e.r + f.r};
  return lex_leq(sum, LexElement{0, 0}) ? LexElement{0, 0} : sum;
}

LexElement lex_arrow(int n, LexElement e, LexElement f) {
  lex_check(n, e);
  lex_check(n, f);
  LexElement diff{n - e.a + f.a, f.r - e.r};
  return lex_leq(LexElement{n, 0}, diff) ? LexElement{n, 0} : diff;
}

LexElement lex_neg(int n, LexElement e) { return lex_arrow(n, e, {0, 0}); }

LexElement lex_plus(int n, LexElement e, LexElement f) {
  lex_check(n, e);
  lex_check(n, f);
  LexElement sum{e.a + f.a, e.r + f.r};
  return lex_leq(LexElement{n, 0}, sum) ? LexElement{n, 0} : sum;
}

LexElement lex_power(int n, LexElement e, int k) {
  lex_check(n, e);
  if (k < 0) throw BrlError("negative power");
  LexElement acc{n, 0};
  for (int i = 0; i < k; ++i) acc = lex_mult(n, acc, e);
  return acc;
}

LexElement lex_multiple(int n, int k, LexElement e) {
  lex_check(n, e);
  if (k < 0) throw BrlError("negative multiple");
  LexElement acc{0, 0};
  for (int i = 0; i < k; ++i) acc = lex_plus(n, acc, e);
  return acc;
}

}  // namespace brl
