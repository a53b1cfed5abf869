#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ctk/multiset.hpp"
#include "ctk/poset.hpp"

namespace ctk {

/// A finite poset with a greatest element (the co-root) whose principal
/// upsets are chains; the order dual of a rooted tree.
class CoTree {
 public:
  /// Throws UsageError unless `poset` is a nonempty co-tree.
  explicit CoTree(Poset poset);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  int coroot() const { return coroot_; }

  /// Unique immediate successor of x; -1 for the co-root.
  int parent(int x) const { return parent_[x]; }
  /// Immediate predecessors ≺x, ascending.
  const std::vector<int>& children(int x) const { return children_[x]; }
  /// Distance to the co-root.
  int depth(int x) const { return depth_[x]; }
  /// Length of the longest chain below x (0 for minimal points).
  int height(int x) const { return height_[x]; }

 private:
  Poset poset_;
  int coroot_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<int> height_;
};

/// AHU encoding of the co-tree read as a rooted tree: a node is "(" followed
/// by its children's codes in sorted order, then ")".
///
/// Codes are totally ordered by node count, then lexicographically; that
/// order is the global enumeration order.
struct CanonicalCode {
  std::string text;

  int nodes() const { return static_cast<int>(text.size() / 2); }

  bool operator==(const CanonicalCode&) const = default;
  std::strong_ordering operator<=>(const CanonicalCode& other) const {
    if (auto c = text.size() <=> other.text.size(); c != 0) return c;
    return text <=> other.text;
  }
};

CanonicalCode canonical_code(const CoTree& t);
CanonicalCode canonical_code(const CoTree& t, int root);

/// Builds the co-tree of a code; elements are numbered in post-order, so the
/// co-root is the last element. Throws FormatError for malformed codes.
CoTree cotree_from_code(const CanonicalCode& code);

// Standard families. Elements are numbered bottom-up.

/// n-comb: spine c1 < ... < cn with one leaf ci' ⋖ ci; 2n elements (n ≥ 1).
CoTree comb(int n);
/// n-hcomb: the n-comb with a handle y0 below the spine; 2n+1 elements (n ≥ 0).
CoTree hcomb(int n);
/// l-element chain (l ≥ 1).
CoTree chain(int length);
/// Chain x0 > ... > xm over k+1 minimal points below xm (m+k+2 elements) for
/// k ≥ 1; tau(m, 0) is the (m+2)-chain.
CoTree tau(int m, int k);

enum class StandardKind { comb, hcomb, chain, tau };

CoTree make_standard(StandardKind kind, std::span<const int> params);

/// Largest n with C_n ↪ T, computed from the structure decomposition:
/// 0 for the singleton, 1 for longer chains, otherwise 1 + the maximum over
/// the grafted parts.
int comb_number(const CoTree& t);

/// The same quantity by direct order-embedding search for each comb.
int comb_number_bruteforce(const CoTree& t);

/// T ∈ T_n, i.e. C_n does not embed into T. Throws ParamError for n < 1.
bool in_T(const CoTree& t, int n);

/// T ∈ T_n decided by order-embedding search for C_n.
bool in_T_bruteforce(const CoTree& t, int n);

/// Chain x0 > ... > xm above the greatest branching point z = xm, and the
/// multiset of co-trees ↓y for the k+1 immediate predecessors y of z. A chain
/// of l elements decomposes as m = l-2 over a single grafted singleton.
struct Decomposition {
  int m = 0;
  int k = 0;
  Multiset<CanonicalCode> parts;
};

/// Throws SingletonError for the one-element co-tree.
Decomposition decompose(const CoTree& t);

/// Chain of m+1 points with each part's co-root attached below the bottom one.
/// Throws EmptyPartsError for no parts, ParamError for m < 0.
CoTree reconstruct(int m, std::span<const CoTree> parts);
CoTree reconstruct(int m, const Multiset<CanonicalCode>& parts);
CoTree reconstruct(const Decomposition& d);

/// Codes of every co-tree with exactly `nodes` elements, ascending.
std::vector<CanonicalCode> cotree_codes(int nodes);

/// Every isomorphism class of co-tree with at most `max_nodes` elements, once,
/// in canonical-code order; `filter` drops items when it returns false.
std::vector<CoTree> enumerate_cotrees(int max_nodes,
                                      const std::function<bool(const CoTree&)>& filter = nullptr);

}  // namespace ctk
