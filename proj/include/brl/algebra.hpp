#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brl {

/// Elements of a finite algebra are indices into its universe.
using Element = int;

struct BrlError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The given order has no unique glb or lub for the pair (a, b).
struct NotALattice : BrlError {
  Element a, b;
  NotALattice(Element a, Element b);
};

/// The set {a : a*b <= c} has no greatest element, so no residuum exists.
struct NotResiduated : BrlError {
  Element b, c;
  NotResiduated(Element b, Element c);
};

/// A term predicate that needs exactly one variable got something else.
struct NotUnary : BrlError {
  using BrlError::BrlError;
};

/// An exhaustive scan was requested above its size bound.
struct TooLarge : BrlError {
  using BrlError::BrlError;
};

/// An element index or pair is outside the universe it was used against.
struct InvalidElement : BrlError {
  using BrlError::BrlError;
  InvalidElement(Element e, int universe_size)
      : BrlError("element " + std::to_string(e) + " is outside a universe of size " +
                 std::to_string(universe_size)) {}
};

/// Subset of a fixed universe, stored as a membership vector.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe_size) : bits_(universe_size, false) {}

  static ElementSet full(int universe_size);
  static ElementSet single(int universe_size, Element e);
  static ElementSet of(int universe_size, std::initializer_list<Element> elems);

  int universe_size() const { return static_cast<int>(bits_.size()); }
  bool contains(Element e) const { return bits_[static_cast<size_t>(e)]; }
  void add(Element e) { bits_.at(static_cast<size_t>(e)) = true; }
  void remove(Element e) { bits_.at(static_cast<size_t>(e)) = false; }

  int count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const ElementSet& other) const;
  ElementSet intersected(const ElementSet& other) const;
  ElementSet united(const ElementSet& other) const;
  std::vector<Element> elements() const;

  bool operator==(const ElementSet&) const = default;
  bool operator<(const ElementSet& other) const { return bits_ < other.bits_; }

 private:
  std::vector<bool> bits_;
};

/// n*n operation table, row-major: entry (a, b) sits at a*n + b.
using Table = std::vector<Element>;
/// n*n order relation, row-major, entry 1 iff row <= column.
using Relation = std::vector<uint8_t>;

/// Reflexive-transitive closure of a cover list ("a < b" pairs).
Relation close_covers(int n, const std::vector<std::pair<Element, Element>>& covers);

struct LatticeTables {
  Table meet, join;
};

/// Computes glb/lub tables from an order. Throws NotALattice on the first
/// pair without a unique bound (which also catches non-antisymmetric input).
LatticeTables derive_lattice(int n, const Relation& leq);

/// Residuum table: arrow(b, c) = max { a : mult(a, b) <= c }.
Table derive_arrow(int n, const Table& mult, const Relation& leq);

/// A finite bounded residuated lattice given by explicit operation tables.
///
/// Construction derives whatever was not supplied: meet/join always come
/// from the order, the arrow table is derived when absent. Tables are
/// validated for shape and index range but NOT for the axioms; call
/// verify_axioms for that, so that broken tables can still be reported on.
/// Instances are immutable after construction and safe to share.
class Algebra {
 public:
  Algebra(std::string name, std::vector<std::string> element_names, Element top, Element bot,
          Table mult, Relation leq, std::optional<Table> arrow = std::nullopt);

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& element_name(Element e) const { return names_[static_cast<size_t>(e)]; }
  std::optional<Element> element_by_name(std::string_view name) const;

  Element top() const { return top_; }
  Element bot() const { return bot_; }
  bool is_trivial() const { return n_ == 1; }

  bool leq(Element a, Element b) const { return leq_[idx(a, b)] != 0; }
  Element mult(Element a, Element b) const { return mult_[idx(a, b)]; }
  Element arrow(Element a, Element b) const { return arrow_[idx(a, b)]; }
  Element meet(Element a, Element b) const { return meet_[idx(a, b)]; }
  Element join(Element a, Element b) const { return join_[idx(a, b)]; }

  Element neg(Element a) const { return arrow_[idx(a, bot_)]; }
  Element plus(Element a, Element b) const { return neg(mult(neg(a), neg(b))); }

  /// a^k: top for k = 0, then a * a^(k-1). Powers descend and stabilize
  /// within |A| steps; the precomputed chain is reused beyond that.
  Element power(Element a, int k) const;

  /// k.a: bot for k = 0, then a + (k-1).a. Multiples ascend and stabilize.
  Element multiple(int k, Element a) const;

  const Table& mult_table() const { return mult_; }
  const Table& arrow_table() const { return arrow_; }
  const Table& meet_table() const { return meet_; }
  const Table& join_table() const { return join_; }
  const Relation& leq_relation() const { return leq_; }

  ElementSet up_set(Element a) const;
  ElementSet down_set(Element a) const;

  bool operator==(const Algebra& other) const;

 private:
  size_t idx(Element a, Element b) const { return static_cast<size_t>(a) * n_ + b; }
  void build_chains();

  std::string name_;
  std::vector<std::string> names_;
  int n_ = 0;
  Element top_ = 0, bot_ = 0;
  Table mult_, arrow_, meet_, join_;
  Relation leq_;
  // chains_[a] = [a^0, a^1, ..., first repeated value]; likewise for multiples
  std::vector<std::vector<Element>> pow_chain_, mul_chain_;
};

struct AxiomLaw {
  std::string name;
  bool holds = true;
  std::vector<Element> witness;  // offending tuple, empty when the law holds
};

struct AxiomReport {
  std::vector<AxiomLaw> laws;
  bool all_hold() const;
  const AxiomLaw* find(std::string_view name) const;
  std::string summary(const Algebra& a) const;
};

/// Exhaustive check of the defining laws: commutative monoid with unit top,
/// bounded lattice order, residuation, integrality. Every law appears in the
/// report exactly once, with the first offending tuple as witness.
AxiomReport verify_axioms(const Algebra& a);

}  // namespace brl
