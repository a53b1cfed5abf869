#include "ctk/poset.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk {

Poset Poset::from_relations(int n, std::span<const Cover> less_pairs) {
  if (n < 0 || n > kMaxElements) throw SizeError("poset size must be in 0.." + std::to_string(kMaxElements));
  Poset p;
  p.up_.resize(n);
  for (int x = 0; x < n; ++x) p.up_[x] = ElementSet::single(x);
  for (auto [i, j] : less_pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw IndexError("element out of range in pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (i == j) throw CycleError("pair (" + std::to_string(i) + "," + std::to_string(i) + ") forces x < x");
    p.up_[i].insert(j);
  }
  // Warshall on bitsets: if k ∈ ↑x then ↑k ⊆ ↑x.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (p.up_[x].contains(k)) p.up_[x] |= p.up_[k];

  p.down_.assign(n, ElementSet{});
  for (int x = 0; x < n; ++x)
    p.up_[x].for_each([&](int y) { p.down_[y].insert(x); });
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (p.up_[x].contains(y) && p.up_[y].contains(x))
        throw CycleError("cycle through elements " + std::to_string(x) + " and " + std::to_string(y));

  p.lower_covers_.assign(n, ElementSet{});
  p.upper_covers_.assign(n, ElementSet{});
  for (int x = 0; x < n; ++x) {
    ElementSet strict_up = p.up_[x] - ElementSet::single(x);
    strict_up.for_each([&](int y) {
      // y covers x iff nothing strictly between.
      ElementSet between = (strict_up & p.down_[y]) - ElementSet::single(y);
      if (between.empty()) {
        p.upper_covers_[x].insert(y);
        p.lower_covers_[y].insert(x);
        p.covers_.emplace_back(x, y);
      }
    });
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

ElementSet Poset::up_closure(ElementSet s) const {
  ElementSet out;
  s.for_each([&](int x) { out |= up_[x]; });
  return out;
}

ElementSet Poset::down_closure(ElementSet s) const {
  ElementSet out;
  s.for_each([&](int x) { out |= down_[x]; });
  return out;
}

ElementSet Poset::maximal() const {
  ElementSet out;
  for (int x = 0; x < size(); ++x)
    if (up_[x].size() == 1) out.insert(x);
  return out;
}

ElementSet Poset::minimal() const {
  ElementSet out;
  for (int x = 0; x < size(); ++x)
    if (down_[x].size() == 1) out.insert(x);
  return out;
}

ElementSet cone(const Poset& p, int x, Direction dir) {
  if (x < 0 || x >= p.size()) throw IndexError("element " + std::to_string(x) + " out of range");
  return dir == Direction::up ? p.up(x) : p.down(x);
}

std::vector<ElementSet> all_upsets(const Poset& p) {
  // Upsets are in bijection with antichains (their minimal elements). Extend
  // antichains by elements of increasing index that are incomparable to all
  // chosen ones.
  std::vector<ElementSet> out;
  const int n = p.size();
  std::function<void(int, ElementSet, ElementSet)> extend = [&](int next, ElementSet antichain,
                                                                 ElementSet blocked) {
    out.push_back(p.up_closure(antichain));
    for (int x = next; x < n; ++x) {
      if (blocked.contains(x)) continue;
      ElementSet a = antichain;
      a.insert(x);
      extend(x + 1, a, blocked | p.up(x) | p.down(x));
    }
  };
  extend(0, ElementSet{}, ElementSet{});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::string to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::singleton: return "singleton";
    case PosetKind::chain: return "chain";
    case PosetKind::cotree_nonchain: return "cotree-nonchain";
    case PosetKind::coforest_noncotree: return "coforest-noncotree";
    case PosetKind::other: return "other";
  }
  return "other";
}

std::vector<ElementSet> components(const Poset& p) {
  std::vector<ElementSet> out;
  ElementSet seen;
  for (int x = 0; x < p.size(); ++x) {
    if (seen.contains(x)) continue;
    ElementSet comp = ElementSet::single(x);
    ElementSet frontier = comp;
    while (!frontier.empty()) {
      ElementSet next;
      frontier.for_each([&](int y) { next |= p.up(y) | p.down(y); });
      frontier = next - comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

namespace {

// Unique maximum, and every principal upset inside `elements` is a chain.
bool is_cotree_on(const Poset& p, ElementSet elements) {
  if (elements.empty()) return false;
  int maxima = 0;
  bool ok = true;
  elements.for_each([&](int x) {
    ElementSet up = p.up(x) & elements;
    if (up.size() == 1) ++maxima;
    up.for_each([&](int a) {
      up.for_each([&](int b) {
        if (!p.comparable(a, b)) ok = false;
      });
    });
  });
  return ok && maxima == 1;
}

bool is_chain_on(const Poset& p, ElementSet elements) {
  bool ok = true;
  elements.for_each([&](int a) {
    elements.for_each([&](int b) {
      if (!p.comparable(a, b)) ok = false;
    });
  });
  return ok;
}

}  // namespace

bool is_chain(const Poset& p) { return !p.empty() && is_chain_on(p, p.all()); }

bool is_cotree(const Poset& p) { return is_cotree_on(p, p.all()); }

bool is_coforest(const Poset& p) {
  return std::ranges::all_of(components(p), [&](ElementSet c) { return is_cotree_on(p, c); });
}

bool is_chain_union(const Poset& p) {
  return std::ranges::all_of(components(p), [&](ElementSet c) { return is_chain_on(p, c); });
}

PosetClass classify(const Poset& p) {
  PosetClass out;
  out.components = components(p);
  if (p.size() == 1) {
    out.kind = PosetKind::singleton;
  } else if (is_cotree(p)) {
    out.kind = is_chain(p) ? PosetKind::chain : PosetKind::cotree_nonchain;
  } else if (is_coforest(p)) {
    out.kind = PosetKind::coforest_noncotree;
  } else {
    out.kind = PosetKind::other;
  }
  return out;
}

Poset induced(const Poset& p, ElementSet elements) {
  std::vector<int> index = elements.elements();
  std::vector<Cover> pairs;
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = 0; b < index.size(); ++b)
      if (p.less(index[a], index[b])) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Poset::from_relations(static_cast<int>(index.size()), pairs);
}

std::optional<EmbeddingWitness> order_embedding(const Poset& src, const Poset& tgt) {
  const int n = src.size();
  const int m = tgt.size();
  if (n > m) return std::nullopt;
  std::vector<int> map(n, -1);
  ElementSet used;
  std::function<bool(int)> place = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < m; ++y) {
      if (used.contains(y)) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        ok = src.leq(z, x) == tgt.leq(map[z], y) && src.leq(x, z) == tgt.leq(y, map[z]);
      }
      if (!ok) continue;
      map[x] = y;
      used.insert(y);
      if (place(x + 1)) return true;
      used.erase(y);
    }
    map[x] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return EmbeddingWitness{std::move(map)};
}

bool is_order_embedding(const Poset& src, const Poset& tgt, const EmbeddingWitness& w) {
  if (static_cast<int>(w.map.size()) != src.size()) return false;
  std::set<int> image;
  for (int y : w.map) {
    if (y < 0 || y >= tgt.size() || !image.insert(y).second) return false;
  }
  for (int x = 0; x < src.size(); ++x)
    for (int z = 0; z < src.size(); ++z)
      if (src.leq(x, z) != tgt.leq(w.map[x], w.map[z])) return false;
  return true;
}

Poset disjoint_union(std::span<const Poset> parts) {
  std::vector<Cover> pairs;
  int offset = 0;
  for (const Poset& part : parts) {
    for (auto [i, j] : part.covers()) pairs.emplace_back(i + offset, j + offset);
    offset += part.size();
  }
  return Poset::from_relations(offset, pairs);
}

bool isomorphic(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  if (n > 9) throw SizeError("brute-force isomorphism limited to 9 elements");
  if (a.covers().size() != b.covers().size()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) ok = a.leq(x, y) == b.leq(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

// Minimum over all relabellings of the strict-relation bit string.
std::uint64_t relation_key(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p.less(x, y)) key |= std::uint64_t{1} << (perm[x] * n + perm[y]);
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Poset> enumerate_posets(int n) {
  if (n < 0 || n > 6) throw SizeError("poset enumeration limited to 6 elements");
  std::vector<Cover> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Cover> pairs;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) pairs.push_back(slots[s]);
    Poset p = Poset::from_relations(n, pairs);
    // Keep only transitively closed relation sets so each labelled order is
    // visited once.
    std::size_t strict = 0;
    for (int x = 0; x < n; ++x) strict += static_cast<std::size_t>(p.up(x).size() - 1);
    if (strict != pairs.size()) continue;
    if (seen.insert(relation_key(p)).second) out.push_back(std::move(p));
  }
  return out;
}

Poset read_poset(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Cover> pairs;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string word;
      if (!(ls >> word >> n) || word != "poset" || n < 0)
        throw FormatError("line " + std::to_string(line_no) + ": expected header `poset <n>`");
    } else {
      int i = 0;
      int j = 0;
      if (!(ls >> i >> j)) throw FormatError("line " + std::to_string(line_no) + ": expected `<i> <j>`");
      pairs.emplace_back(i, j);
    }
    std::string rest;
    if (ls >> rest) throw FormatError("line " + std::to_string(line_no) + ": trailing input");
  }
  if (n < 0) throw FormatError("missing `poset <n>` header");
  return Poset::from_relations(n, pairs);
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return read_poset(in);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "poset " << p.size() << '\n';
  for (auto [i, j] : p.covers()) out << i << ' ' << j << '\n';
}

std::string format_poset(const Poset& p) {
  std::ostringstream out;
  write_poset(out, p);
  return out.str();
}

}  // namespace ctk
