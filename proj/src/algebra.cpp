#include "brl/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace brl {

namespace {

std::string pair_msg(const char* what, Element a, Element b) {
  std::ostringstream os;
  os << what << " for pair (" << a << ", " << b << ")";
  return os.str();
}

}  // namespace

NotALattice::NotALattice(Element a_, Element b_)
    : BrlError(pair_msg("no unique lattice bound", a_, b_)), a(a_), b(b_) {}

NotResiduated::NotResiduated(Element b_, Element c_)
    : BrlError(pair_msg("no residuum", b_, c_)), b(b_), c(c_) {}

ElementSet ElementSet::full(int universe_size) {
  ElementSet s(universe_size);
  for (Element e = 0; e < universe_size; ++e) s.add(e);
  return s;
}

ElementSet ElementSet::single(int universe_size, Element e) {
  ElementSet s(universe_size);
  s.add(e);
  return s;
}

ElementSet ElementSet::of(int universe_size, std::initializer_list<Element> elems) {
  ElementSet s(universe_size);
  for (Element e : elems) s.add(e);
  return s;
}

int ElementSet::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

ElementSet ElementSet::intersected(const ElementSet& other) const {
  ElementSet r(universe_size());
  for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] && other.bits_[i];
  return r;
}

ElementSet ElementSet::united(const ElementSet& other) const {
  ElementSet r(universe_size());
  for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] || other.bits_[i];
  return r;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

Relation close_covers(int n, const std::vector<std::pair<Element, Element>>& covers) {
  Relation r(static_cast<size_t>(n) * n, 0);
  auto at = [&](Element a, Element b) -> uint8_t& { return r[static_cast<size_t>(a) * n + b]; };
  for (Element e = 0; e < n; ++e) at(e, e) = 1;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw BrlError("cover pair out of range");
    at(a, b) = 1;
  }
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (!at(i, k)) continue;
      for (Element j = 0; j < n; ++j) {
        if (at(k, j)) at(i, j) = 1;
      }
    }
  }
  return r;
}

namespace {

// Greatest element of the subset (as bool mask); requires a unique candidate.
std::optional<Element> greatest_of(int n, const Relation& leq, const std::vector<char>& in) {
  auto le = [&](Element a, Element b) { return leq[static_cast<size_t>(a) * n + b] != 0; };
  std::optional<Element> best;
  for (Element z = 0; z < n; ++z) {
    if (!in[static_cast<size_t>(z)]) continue;
    bool top_of_set = true;
    for (Element w = 0; w < n; ++w) {
      if (in[static_cast<size_t>(w)] && !le(w, z)) {
        top_of_set = false;
        break;
      }
    }
    if (top_of_set) {
      if (best) return std::nullopt;  // two greatest elements: order is not antisymmetric
      best = z;
    }
  }
  return best;
}

std::optional<Element> least_of(int n, const Relation& leq, const std::vector<char>& in) {
  auto le = [&](Element a, Element b) { return leq[static_cast<size_t>(a) * n + b] != 0; };
  std::optional<Element> best;
  for (Element z = 0; z < n; ++z) {
    if (!in[static_cast<size_t>(z)]) continue;
    bool bottom_of_set = true;
    for (Element w = 0; w < n; ++w) {
      if (in[static_cast<size_t>(w)] && !le(z, w)) {
        bottom_of_set = false;
        break;
      }
    }
    if (bottom_of_set) {
      if (best) return std::nullopt;
      best = z;
    }
  }
  return best;
}

}  // namespace

LatticeTables derive_lattice(int n, const Relation& leq) {
  if (static_cast<int>(leq.size()) != n * n) throw BrlError("order relation has wrong shape");
  auto le = [&](Element a, Element b) { return leq[static_cast<size_t>(a) * n + b] != 0; };
  LatticeTables t;
  t.meet.assign(static_cast<size_t>(n) * n, 0);
  t.join.assign(static_cast<size_t>(n) * n, 0);
  std::vector<char> in(static_cast<size_t>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element z = 0; z < n; ++z) in[static_cast<size_t>(z)] = le(z, a) && le(z, b);
      auto glb = greatest_of(n, leq, in);
      if (!glb) throw NotALattice(a, b);
      t.meet[static_cast<size_t>(a) * n + b] = *glb;

      for (Element z = 0; z < n; ++z) in[static_cast<size_t>(z)] = le(a, z) && le(b, z);
      auto lub = least_of(n, leq, in);
      if (!lub) throw NotALattice(a, b);
      t.join[static_cast<size_t>(a) * n + b] = *lub;
    }
  }
  return t;
}

Table derive_arrow(int n, const Table& mult, const Relation& leq) {
  if (static_cast<int>(mult.size()) != n * n) throw BrlError("mult table has wrong shape");
  if (static_cast<int>(leq.size()) != n * n) throw BrlError("order relation has wrong shape");
  auto le = [&](Element a, Element b) { return leq[static_cast<size_t>(a) * n + b] != 0; };
  Table arrow(static_cast<size_t>(n) * n, 0);
  std::vector<char> in(static_cast<size_t>(n));
  for (Element b = 0; b < n; ++b) {
    for (Element c = 0; c < n; ++c) {
      for (Element a = 0; a < n; ++a) {
        in[static_cast<size_t>(a)] = le(mult[static_cast<size_t>(a) * n + b], c);
      }
      auto best = greatest_of(n, leq, in);
      if (!best) throw NotResiduated(b, c);
      arrow[static_cast<size_t>(b) * n + c] = *best;
    }
  }
  return arrow;
}

Algebra::Algebra(std::string name, std::vector<std::string> element_names, Element top,
                 Element bot, Table mult, Relation leq, std::optional<Table> arrow)
    : name_(std::move(name)), names_(std::move(element_names)) {
  n_ = static_cast<int>(names_.size());
  if (n_ < 1) throw BrlError("an algebra needs at least one element");
  {
    std::unordered_map<std::string, int> seen;
    for (const auto& nm : names_) {
      if (nm.empty()) throw BrlError("empty element name");
      if (!seen.emplace(nm, 1).second) throw BrlError("duplicate element name: " + nm);
    }
  }
  auto check_elem = [&](Element e, const char* what) {
    if (e < 0 || e >= n_) throw BrlError(std::string(what) + " out of range");
  };
  check_elem(top, "top");
  check_elem(bot, "bot");
  top_ = top;
  bot_ = bot;

  if (static_cast<int>(mult.size()) != n_ * n_) throw BrlError("mult table has wrong shape");
  for (Element e : mult) check_elem(e, "mult entry");
  if (static_cast<int>(leq.size()) != n_ * n_) throw BrlError("order relation has wrong shape");
  mult_ = std::move(mult);
  leq_ = std::move(leq);

  LatticeTables lt = derive_lattice(n_, leq_);
  meet_ = std::move(lt.meet);
  join_ = std::move(lt.join);

  if (arrow) {
    if (static_cast<int>(arrow->size()) != n_ * n_) throw BrlError("arrow table has wrong shape");
    for (Element e : *arrow) check_elem(e, "arrow entry");
    arrow_ = std::move(*arrow);
  } else {
    arrow_ = derive_arrow(n_, mult_, leq_);
  }

  build_chains();
}

void Algebra::build_chains() {
  pow_chain_.assign(static_cast<size_t>(n_), {});
  mul_chain_.assign(static_cast<size_t>(n_), {});
  for (Element a = 0; a < n_; ++a) {
    auto& pc = pow_chain_[static_cast<size_t>(a)];
    pc.push_back(top_);
    // cap guards against cycling tables that fail the axioms anyway
    while (static_cast<int>(pc.size()) <= n_ + 1) {
      Element next = mult(pc.back(), a);
      if (next == pc.back()) break;
      pc.push_back(next);
    }
    auto& mc = mul_chain_[static_cast<size_t>(a)];
    mc.push_back(bot_);
    while (static_cast<int>(mc.size()) <= n_ + 1) {
      Element next = plus(a, mc.back());
      if (next == mc.back()) break;
      mc.push_back(next);
    }
  }
}

Element Algebra::power(Element a, int k) const {
  const auto& chain = pow_chain_[static_cast<size_t>(a)];
  if (k < 0) throw BrlError("negative power");
  return k < static_cast<int>(chain.size()) ? chain[static_cast<size_t>(k)] : chain.back();
}

Element Algebra::multiple(int k, Element a) const {
  const auto& chain = mul_chain_[static_cast<size_t>(a)];
  if (k < 0) throw BrlError("negative multiple");
  return k < static_cast<int>(chain.size()) ? chain[static_cast<size_t>(k)] : chain.back();
}

std::optional<Element> Algebra::element_by_name(std::string_view name) const {
  for (int i = 0; i < n_; ++i) {
    if (names_[static_cast<size_t>(i)] == name) return i;
  }
  return std::nullopt;
}

ElementSet Algebra::up_set(Element a) const {
  ElementSet s(n_);
  for (Element b = 0; b < n_; ++b) {
    if (leq(a, b)) s.add(b);
  }
  return s;
}

ElementSet Algebra::down_set(Element a) const {
  ElementSet s(n_);
  for (Element b = 0; b < n_; ++b) {
    if (leq(b, a)) s.add(b);
  }
  return s;
}

bool Algebra::operator==(const Algebra& other) const {
  return name_ == other.name_ && names_ == other.names_ && top_ == other.top_ &&
         bot_ == other.bot_ && mult_ == other.mult_ && arrow_ == other.arrow_ &&
         leq_ == other.leq_;
}

bool AxiomReport::all_hold() const {
  return std::all_of(laws.begin(), laws.end(), [](const AxiomLaw& l) { return l.holds; });
}

const AxiomLaw* AxiomReport::find(std::string_view name) const {
  for (const auto& l : laws) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

std::string AxiomReport::summary(const Algebra& a) const {
  std::ostringstream os;
  for (const auto& l : laws) {
    os << l.name << ": " << (l.holds ? "ok" : "FAIL");
    if (!l.holds) {
      os << " at (";
      for (size_t i = 0; i < l.witness.size(); ++i) {
        if (i) os << ", ";
        os << a.element_name(l.witness[i]);
      }
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

AxiomReport verify_axioms(const Algebra& a) {
  const int n = a.size();
  AxiomReport report;
  auto run = [&](const char* name, auto&& body) {
    AxiomLaw law;
    law.name = name;
    body(law);
    report.laws.push_back(std::move(law));
  };
  auto fail = [](AxiomLaw& law, std::initializer_list<Element> w) {
    law.holds = false;
    law.witness.assign(w);
  };

  run("mult-commutative", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      for (Element y = x; y < n; ++y)
        if (a.mult(x, y) != a.mult(y, x)) return fail(law, {x, y});
  });
  run("mult-associative", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (a.mult(a.mult(x, y), z) != a.mult(x, a.mult(y, z))) return fail(law, {x, y, z});
  });
  run("top-is-mult-identity", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      if (a.mult(a.top(), x) != x || a.mult(x, a.top()) != x) return fail(law, {x});
  });
  run("leq-reflexive", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      if (!a.leq(x, x)) return fail(law, {x});
  });
  run("leq-antisymmetric", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (x != y && a.leq(x, y) && a.leq(y, x)) return fail(law, {x, y});
  });
  run("leq-transitive", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (!a.leq(x, y)) continue;
        for (Element z = 0; z < n; ++z)
          if (a.leq(y, z) && !a.leq(x, z)) return fail(law, {x, y, z});
      }
  });
  run("bot-is-least", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      if (!a.leq(a.bot(), x)) return fail(law, {x});
  });
  run("top-is-greatest", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      if (!a.leq(x, a.top())) return fail(law, {x});
  });
  run("meet-is-greatest-lower-bound", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        Element m = a.meet(x, y);
        if (!a.leq(m, x) || !a.leq(m, y)) return fail(law, {x, y});
        for (Element z = 0; z < n; ++z)
          if (a.leq(z, x) && a.leq(z, y) && !a.leq(z, m)) return fail(law, {x, y, z});
      }
  });
  run("join-is-least-upper-bound", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        Element j = a.join(x, y);
        if (!a.leq(x, j) || !a.leq(y, j)) return fail(law, {x, y});
        for (Element z = 0; z < n; ++z)
          if (a.leq(x, z) && a.leq(y, z) && !a.leq(j, z)) return fail(law, {x, y, z});
      }
  });
  run("residuation", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          bool prod_le = a.leq(a.mult(x, y), z);
          bool res_le = a.leq(x, a.arrow(y, z));
          if (prod_le != res_le) return fail(law, {x, y, z});
        }
  });
  run("integrality", [&](AxiomLaw& law) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!a.leq(a.mult(x, y), x)) return fail(law, {x, y});
  });

  return report;
}

}  // namespace brl
