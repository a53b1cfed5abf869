#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ctk/cotree.hpp"
#include "ctk/morphism.hpp"
#include "ctk/multiset.hpp"

namespace ctk {

/// Image of a co-tree under the structure map: the τ-shaped upper part above
/// the greatest branching point and the multiset of grafted parts.
struct PiImage {
  CoTree upper;
  Multiset<CanonicalCode> parts;
  int m = 0;
  int k = 0;
};

/// Throws SingletonError for the one-element co-tree.
PiImage pi_map(const CoTree& t);

/// Componentwise order: ≤p on the upper parts and << on the parts, with ≤p
/// as the carrier order.
bool pair_leq(const PiImage& a, const PiImage& b, LeqpCache& cache);
bool pair_leq(const PiImage& a, const PiImage& b);

/// Strictly increasing list of naturals.
class FiniteSubset {
 public:
  FiniteSubset() = default;
  /// Throws ParamError unless `items` is strictly increasing and nonnegative.
  explicit FiniteSubset(std::vector<int> items);
  FiniteSubset(std::initializer_list<int> items) : FiniteSubset(std::vector<int>(items)) {}

  /// Members of {0..63} given by the bits of `mask`.
  static FiniteSubset from_mask(std::uint64_t mask);

  const std::vector<int>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  int min() const { return items_.front(); }
  int max() const { return items_.back(); }

  /// Initial segment: every element of this set is below every element of
  /// `other` that it omits, i.e. this set is a prefix of `other`.
  bool prefix_of(const FiniteSubset& other) const;
  /// The set without its least element (empty stays empty).
  FiniteSubset without_min() const;

  bool operator==(const FiniteSubset&) const = default;

 private:
  std::vector<int> items_;
};

std::string to_string(const FiniteSubset& s);

/// s ◁ t: some infinite B has s as an initial segment and t as an initial
/// segment of B minus its least element. Decided by a closed-form criterion.
bool shift_rel(const FiniteSubset& s, const FiniteSubset& t);

/// The same relation by searching B-prefixes inside {0..max(s ∪ t)+|s|+|t|+1}.
bool shift_rel_oracle(const FiniteSubset& s, const FiniteSubset& t);

/// Every i < j has pᵢ ≰ pⱼ.
template <typename T, typename Leq>
bool is_bad_fragment(const std::vector<T>& seq, Leq leq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (leq(seq[i], seq[j])) return false;
  return true;
}

/// `leq(i, j)` answers item i ≤ item j; must be a partial order on indices.
using IndexOrder = std::function<bool(int, int)>;

/// A maximum antichain (ascending indices) of a finite partial order, from a
/// minimum chain cover found by bipartite matching.
std::vector<int> max_antichain(int count, const IndexOrder& leq);

inline constexpr int kAntichainScanBound = 15;

/// Maximum antichain by scanning every subset; the lexicographically least
/// (by bitmask) among the largest. Throws SizeError above the scan bound.
std::vector<int> max_antichain_bruteforce(int count, const IndexOrder& leq);

/// Maximum ≤p-antichain among pairwise non-isomorphic co-trees.
std::vector<int> max_antichain(const std::vector<CoTree>& items);

/// Named check parameters; every check has defaults, overrides replace them.
using CheckParams = std::map<std::string, int>;

struct CheckReport {
  std::string name;
  CheckParams params;
  bool passed = true;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;  ///< observations that do not affect pass/fail
  long instances = 0;
  double wall_ms = 0;

  /// Human-readable block. Timing is omitted unless asked for, which keeps
  /// the output byte-identical across runs.
  std::string to_text(bool with_timing = false) const;
  std::string to_json(bool with_timing = false) const;
};

/// Every known check name, in reporting order.
const std::vector<std::string>& check_names();

/// Default parameters of a check. Throws UnknownCheck.
CheckParams default_params(const std::string& name);

/// Runs one check. Throws UnknownCheck for unknown names and UsageError for
/// parameters the check does not take.
CheckReport run_check(const std::string& name, const CheckParams& overrides = {});

/// Runs checks on up to `workers` threads; reports come back in input order.
/// Every override must be a parameter of every named check (UsageError).
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, int workers = 1,
                                    const CheckParams& overrides = {});

/// JSON array of the reports.
std::string reports_to_json(const std::vector<CheckReport>& reports, bool with_timing = false);

}  // namespace ctk
