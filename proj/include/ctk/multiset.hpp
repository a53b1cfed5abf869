#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "ctk/errors.hpp"
#include "ctk/matching.hpp"

namespace ctk {

/// Finite multiset over a totally ordered item type. The total order is only
/// used to store occurrences canonically; the partial order the multiset
/// relations care about is supplied separately as an oracle.
template <typename T>
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<T> items) : items_(items) { std::sort(items_.begin(), items_.end()); }
  explicit Multiset(std::vector<T> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
  }

  /// l(M): number of occurrences.
  std::size_t length() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  /// Occurrences in canonical (sorted) order; witnesses index into this list.
  const std::vector<T>& occurrences() const { return items_; }
  const T& operator[](std::size_t i) const { return items_[i]; }

  /// (item, multiplicity) pairs over the universe, multiplicities ≥ 1.
  std::vector<std::pair<T, int>> entries() const {
    std::vector<std::pair<T, int>> out;
    for (const T& item : items_) {
      if (!out.empty() && out.back().first == item)
        ++out.back().second;
      else
        out.emplace_back(item, 1);
    }
    return out;
  }

  bool operator==(const Multiset&) const = default;
  bool operator<(const Multiset& other) const { return items_ < other.items_; }

 private:
  std::vector<T> items_;
};

/// `ord(a, b)` answers a ≤ b in the carrier order.
template <typename T>
using OrderOracle = std::function<bool(const T&, const T&)>;

/// Occurrence-level map between two multisets: `assignment[i]` is the index
/// of the codomain occurrence that domain occurrence i is sent to.
struct MsetMapWitness {
  std::vector<int> assignment;
};

/// N ⪯ M: an injective f: N ↪ M with q ≤ f(q). Found as a bipartite matching
/// that saturates N (edge q-p iff q ≤ p).
template <typename T>
std::optional<MsetMapWitness> embeddable(const Multiset<T>& n, const Multiset<T>& m, const OrderOracle<T>& ord) {
  if (n.length() > m.length()) return std::nullopt;
  std::vector<std::vector<int>> adjacency(n.length());
  for (std::size_t i = 0; i < n.length(); ++i)
    for (std::size_t j = 0; j < m.length(); ++j)
      if (ord(n[i], m[j])) adjacency[i].push_back(static_cast<int>(j));
  BipartiteMatching matching = max_bipartite_matching(adjacency, static_cast<int>(m.length()));
  if (matching.size != static_cast<int>(n.length())) return std::nullopt;
  return MsetMapWitness{std::move(matching.left_mate)};
}

/// Every occurrence p of M dominates some occurrence q of N (q ≤ p).
template <typename T>
bool dominated(const Multiset<T>& n, const Multiset<T>& m, const OrderOracle<T>& ord) {
  return std::ranges::all_of(m.occurrences(), [&](const T& p) {
    return std::ranges::any_of(n.occurrences(), [&](const T& q) { return ord(q, p); });
  });
}

/// N << M: a surjective f: M ↠ N with f(p) ≤ p.
///
/// Decided as N ⪯ M plus domination. The witness inverts the embedding on its
/// image and sends every other occurrence of M to the first occurrence of N
/// below it.
template <typename T>
std::optional<MsetMapWitness> projects(const Multiset<T>& n, const Multiset<T>& m, const OrderOracle<T>& ord) {
  if (n.empty()) return m.empty() ? std::optional<MsetMapWitness>(MsetMapWitness{}) : std::nullopt;
  auto embedding = embeddable(n, m, ord);
  if (!embedding) return std::nullopt;
  std::vector<int> f(m.length(), -1);
  for (std::size_t i = 0; i < n.length(); ++i) f[embedding->assignment[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < m.length(); ++j) {
    if (f[j] >= 0) continue;
    for (std::size_t i = 0; i < n.length() && f[j] < 0; ++i)
      if (ord(n[i], m[j])) f[j] = static_cast<int>(i);
    if (f[j] < 0) return std::nullopt;
  }
  return MsetMapWitness{std::move(f)};
}

inline constexpr std::size_t kProjectsScanBound = 8;

/// N << M straight from the definition: scans every occurrence map M → N in
/// lexicographic order. Throws SizeError when l(M) exceeds the scan bound.
template <typename T>
std::optional<MsetMapWitness> projects_bruteforce(const Multiset<T>& n, const Multiset<T>& m,
                                                  const OrderOracle<T>& ord) {
  if (m.length() > kProjectsScanBound) throw SizeError("projects_bruteforce: l(M) above scan bound");
  const std::size_t nl = n.length();
  const std::size_t ml = m.length();
  if (ml == 0) return nl == 0 ? std::optional<MsetMapWitness>(MsetMapWitness{}) : std::nullopt;
  if (nl == 0) return std::nullopt;
  std::vector<int> f(ml, 0);
  while (true) {
    bool ok = true;
    std::vector<bool> hit(nl, false);
    for (std::size_t j = 0; j < ml && ok; ++j) {
      ok = ord(n[f[j]], m[j]);
      hit[f[j]] = true;
    }
    if (ok && std::ranges::all_of(hit, [](bool b) { return b; })) return MsetMapWitness{f};
    std::size_t pos = ml;
    while (pos > 0) {
      --pos;
      if (static_cast<std::size_t>(++f[pos]) < nl) break;
      f[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

/// Checks a witness returned by `projects` against the definition.
template <typename T>
bool is_projection_witness(const Multiset<T>& n, const Multiset<T>& m, const OrderOracle<T>& ord,
                           const MsetMapWitness& w) {
  if (w.assignment.size() != m.length()) return false;
  std::vector<bool> hit(n.length(), false);
  for (std::size_t j = 0; j < m.length(); ++j) {
    int i = w.assignment[j];
    if (i < 0 || static_cast<std::size_t>(i) >= n.length() || !ord(n[i], m[j])) return false;
    hit[i] = true;
  }
  return std::ranges::all_of(hit, [](bool b) { return b; });
}

/// Checks a witness returned by `embeddable` against the definition.
template <typename T>
bool is_embedding_witness(const Multiset<T>& n, const Multiset<T>& m, const OrderOracle<T>& ord,
                          const MsetMapWitness& w) {
  if (w.assignment.size() != n.length()) return false;
  std::vector<bool> used(m.length(), false);
  for (std::size_t i = 0; i < n.length(); ++i) {
    int j = w.assignment[i];
    if (j < 0 || static_cast<std::size_t>(j) >= m.length() || used[j] || !ord(n[i], m[j])) return false;
    used[j] = true;
  }
  return true;
}

}  // namespace ctk
