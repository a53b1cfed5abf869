#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctk/cotree.hpp"
#include "ctk/poset.hpp"

namespace ctk {

/// A total map between the elements of two finite posets.
struct PosetMap {
  Poset src;
  Poset tgt;
  std::vector<int> image;  ///< image[x] = f(x)

  bool surjective() const;
};

enum class MorphismCondition { none, order_preserving, up, down };

std::string to_string(MorphismCondition c);

/// Result of checking the three bi-p-morphism conditions. On failure,
/// `condition` is the first violated one and (`x`, `y`) a witnessing pair:
/// for order preservation x ≤ y with f(x) ≰ f(y); for Up/Down an element x
/// and a target point y in ↑f(x) (resp. ↓f(x)) with no preimage in ↑x
/// (resp. ↓x).
struct MorphismReport {
  bool ok = true;
  MorphismCondition condition = MorphismCondition::none;
  int x = -1;
  int y = -1;

  std::string describe() const;
};

/// Throws ShapeError when the map is not total or points outside the target.
MorphismReport check_bi_p_morphism(const PosetMap& f);

/// Every bi-p-morphism src → tgt, by exhaustive scan of all maps in
/// lexicographic order.
std::vector<PosetMap> enumerate_bi_p_morphisms(const Poset& src, const Poset& tgt);

/// target ≤p source: the lexicographically least surjective bi-p-morphism
/// source ↠ target, if one exists.
std::optional<PosetMap> leq_p(const CoTree& target, const CoTree& source);

/// Poset overload for untrusted input; throws UsageError unless both are co-trees.
std::optional<PosetMap> leq_p(const Poset& target, const Poset& source);

/// Memoized ≤p on canonical codes, usable as a multiset carrier order.
/// Not thread-safe; build it before sharing read-only.
class LeqpCache {
 public:
  bool operator()(const CanonicalCode& target, const CanonicalCode& source);

 private:
  std::map<std::pair<std::string, std::string>, bool> memo_;
};

}  // namespace ctk
