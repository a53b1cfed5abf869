#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctk/element_set.hpp"
#include "ctk/poset.hpp"

namespace ctk {

/// A finite bi-Heyting algebra of upsets of a base poset, with the lattice
/// operations and both implications stored as tables over universe indices.
///
/// Universe element i is `universe()[i]`. The bottom is ∅ and the top is the
/// whole base set.
class FiniteBHA {
 public:
  /// Assembles an algebra from explicit tables. `universe` must be closed
  /// under ∩ and ∪ and contain ∅ and the union of all members; `imp`/`coimp`
  /// are row-major size×size tables. Throws FormatError otherwise.
  FiniteBHA(std::vector<ElementSet> universe, std::vector<int> imp, std::vector<int> coimp);

  int size() const { return static_cast<int>(universe_.size()); }
  const std::vector<ElementSet>& universe() const { return universe_; }
  ElementSet element(int i) const { return universe_[i]; }
  std::optional<int> index_of(ElementSet s) const;

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int a, int b) const { return universe_[a].subset_of(universe_[b]); }

  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  /// a → b
  int imp(int a, int b) const { return imp_[a * size() + b]; }
  /// a ← b
  int coimp(int a, int b) const { return coimp_[a * size() + b]; }

 private:
  std::vector<ElementSet> universe_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<int> imp_;
  std::vector<int> coimp_;
  int bottom_ = 0;
  int top_ = 0;
};

/// Up(X) with U → V = X ∖ ↓(U ∖ V) and U ← V = ↑(U ∖ V), universe in
/// all_upsets order. Throws EmptyPosetError for the empty poset.
FiniteBHA dual_algebra(const Poset& x);

/// Both residuation laws for every triple.
bool residuation_holds(const FiniteBHA& a);

/// The eight defining equations of bi-Heyting algebras, for every
/// instantiation. Returns the 1-based number of the first failing equation,
/// or 0 when all hold.
int first_failing_equation(const FiniteBHA& a);

/// Poset of prime filters under inclusion, one point per join-irreducible j
/// (the filter ↑j); points are numbered in universe order of their j.
Poset prime_filter_poset(const FiniteBHA& a);

/// Join-irreducible elements (universe indices), ascending.
std::vector<int> join_irreducibles(const FiniteBHA& a);

struct AlgebraEmbeddingWitness {
  std::vector<int> map;  ///< source universe index -> target universe index
};

/// An injective map preserving ∧, ∨, →, ←, 0 and 1, if one exists. Images
/// of join-irreducibles are chosen by backtracking; the rest follows by joins.
std::optional<AlgebraEmbeddingWitness> algebra_embedding(const FiniteBHA& a, const FiniteBHA& b);

bool is_algebra_embedding(const FiniteBHA& a, const FiniteBHA& b, const AlgebraEmbeddingWitness& w);

// Dump format: `bha <size>`, one line per universe element listing its
// members in braces, then `imp i j -> k` and `coimp i j -> k` lines.
void write_algebra(std::ostream& out, const FiniteBHA& a);
FiniteBHA read_algebra(std::istream& in);

std::string format_element_set(ElementSet s);

}  // namespace ctk
