#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctk/element_set.hpp"

namespace ctk {

using Cover = std::pair<int, int>;

/// A finite partial order on the elements 0..n-1.
///
/// The order is kept closed: `up(x)` is the principal upset ↑x and `down(x)`
/// the principal downset ↓x, both containing x. The Hasse diagram (covers)
/// is derived from the closure. Posets are immutable after construction.
class Poset {
 public:
  static constexpr int kMaxElements = ElementSet::kCapacity;

  /// The empty poset.
  Poset() = default;

  /// Reflexive-transitive closure of the pairs (i, j) read as i < j.
  /// Throws IndexError for out-of-range elements, CycleError when the closure
  /// would force x < x.
  static Poset from_relations(int n, std::span<const Cover> less_pairs);

  int size() const { return static_cast<int>(up_.size()); }
  bool empty() const { return up_.empty(); }

  bool leq(int x, int y) const { return up_[x].contains(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  ElementSet up(int x) const { return up_[x]; }
  ElementSet down(int x) const { return down_[x]; }
  ElementSet all() const { return ElementSet::full(size()); }

  ElementSet up_closure(ElementSet s) const;
  ElementSet down_closure(ElementSet s) const;
  bool is_upset(ElementSet s) const { return up_closure(s) == s; }

  /// Immediate predecessors ≺x and immediate successors of x.
  ElementSet lower_covers(int x) const { return lower_covers_[x]; }
  ElementSet upper_covers(int x) const { return upper_covers_[x]; }

  ElementSet maximal() const;
  ElementSet minimal() const;

  /// Hasse pairs (i, j) with i ⋖ j, sorted lexicographically.
  const std::vector<Cover>& covers() const { return covers_; }

  bool operator==(const Poset& other) const { return up_ == other.up_; }

 private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> lower_covers_;
  std::vector<ElementSet> upper_covers_;
  std::vector<Cover> covers_;
};

/// poset_from_covers: closure of the given strict pairs.
inline Poset poset_from_covers(int n, std::span<const Cover> pairs) {
  return Poset::from_relations(n, pairs);
}
inline Poset poset_from_covers(int n, std::initializer_list<Cover> pairs) {
  return Poset::from_relations(n, std::span<const Cover>(pairs.begin(), pairs.size()));
}

enum class Direction { up, down };

/// ↑x or ↓x. Throws IndexError for x outside the poset.
ElementSet cone(const Poset& p, int x, Direction dir);

/// Every upset exactly once, ordered by size then lexicographically.
std::vector<ElementSet> all_upsets(const Poset& p);

enum class PosetKind { singleton, chain, cotree_nonchain, coforest_noncotree, other };

std::string to_string(PosetKind kind);

struct PosetClass {
  PosetKind kind = PosetKind::other;
  std::vector<ElementSet> components;  ///< connected components, by least element
};

PosetClass classify(const Poset& p);

/// Connected components of the comparability graph, ordered by least element.
std::vector<ElementSet> components(const Poset& p);

bool is_chain(const Poset& p);
bool is_cotree(const Poset& p);
/// The empty poset counts as a co-forest.
bool is_coforest(const Poset& p);
/// Every component is a chain.
bool is_chain_union(const Poset& p);

/// Subposet induced on `elements`, relabelled 0..k-1 in ascending order.
Poset induced(const Poset& p, ElementSet elements);

struct EmbeddingWitness {
  std::vector<int> map;  ///< source element -> target element
};

/// First order embedding in smallest-image-first backtracking order, if any.
std::optional<EmbeddingWitness> order_embedding(const Poset& src, const Poset& tgt);

/// True iff `w` is injective and x ≤ y ⟺ w(x) ≤ w(y).
bool is_order_embedding(const Poset& src, const Poset& tgt, const EmbeddingWitness& w);

Poset disjoint_union(std::span<const Poset> parts);

/// Brute-force isomorphism test over all bijections (n ≤ 9, else SizeError).
bool isomorphic(const Poset& a, const Poset& b);

/// One representative per isomorphism class of posets on exactly n elements
/// (n ≤ 6), generated from naturally labelled transitive relations.
std::vector<Poset> enumerate_posets(int n);

// Text format: optional `#` comment lines, `poset <n>`, then `<i> <j>` lines
// asserting i < j. Writers emit covers only, sorted.
Poset read_poset(std::istream& in);
Poset parse_poset(const std::string& text);
void write_poset(std::ostream& out, const Poset& p);
std::string format_poset(const Poset& p);

}  // namespace ctk
