#include "ctk/duality.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ctk/errors.hpp"

namespace ctk {

namespace {

std::unordered_map<ElementSet::Mask, int> index_map(const std::vector<ElementSet>& universe) {
  std::unordered_map<ElementSet::Mask, int> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!out.emplace(universe[i].bits(), static_cast<int>(i)).second)
      throw FormatError("duplicate universe element " + format_element_set(universe[i]));
  }
  return out;
}

}  // namespace

FiniteBHA::FiniteBHA(std::vector<ElementSet> universe, std::vector<int> imp, std::vector<int> coimp)
    : universe_(std::move(universe)), imp_(std::move(imp)), coimp_(std::move(coimp)) {
  const int n = size();
  if (n == 0) throw FormatError("algebra universe is empty");
  auto index = index_map(universe_);
  auto lookup = [&](ElementSet s) {
    auto it = index.find(s.bits());
    if (it == index.end()) throw FormatError("universe not closed: missing " + format_element_set(s));
    return it->second;
  };
  ElementSet all;
  for (ElementSet s : universe_) all |= s;
  bottom_ = lookup(ElementSet{});
  top_ = lookup(all);
  meet_.resize(static_cast<std::size_t>(n) * n);
  join_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet_[a * n + b] = lookup(universe_[a] & universe_[b]);
      join_[a * n + b] = lookup(universe_[a] | universe_[b]);
    }
  const auto cells = static_cast<std::size_t>(n) * n;
  if (imp_.size() != cells || coimp_.size() != cells) throw FormatError("operation table has wrong size");
  for (std::size_t c = 0; c < cells; ++c)
    if (imp_[c] < 0 || imp_[c] >= n || coimp_[c] < 0 || coimp_[c] >= n)
      throw FormatError("operation table entry out of range");
}

std::optional<int> FiniteBHA::index_of(ElementSet s) const {
  auto it = std::ranges::find(universe_, s);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<int>(it - universe_.begin());
}

FiniteBHA dual_algebra(const Poset& x) {
  if (x.empty()) throw EmptyPosetError("dual algebra of the empty poset");
  std::vector<ElementSet> ups = all_upsets(x);
  auto index = index_map(ups);
  const int n = static_cast<int>(ups.size());
  std::vector<int> imp(static_cast<std::size_t>(n) * n);
  std::vector<int> coimp(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ElementSet diff = ups[a] - ups[b];
      imp[a * n + b] = index.at((x.all() - x.down_closure(diff)).bits());
      coimp[a * n + b] = index.at(x.up_closure(diff).bits());
    }
  return FiniteBHA(std::move(ups), std::move(imp), std::move(coimp));
}

bool residuation_holds(const FiniteBHA& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // z ≤ x → y ⟺ z ∧ x ≤ y
        if (a.leq(z, a.imp(x, y)) != a.leq(a.meet(z, x), y)) return false;
        // x ← y ≤ z ⟺ x ≤ y ∨ z
        if (a.leq(a.coimp(x, y), z) != a.leq(x, a.join(y, z))) return false;
      }
  return true;
}

int first_failing_equation(const FiniteBHA& a) {
  const int n = a.size();
  for (int p = 0; p < n; ++p) {
    if (a.imp(p, p) != a.top()) return 1;
    if (a.coimp(p, p) != a.bottom()) return 5;
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (a.meet(p, a.imp(p, q)) != a.meet(p, q)) return 2;
      if (a.meet(q, a.imp(p, q)) != q) return 3;
      if (a.join(p, a.coimp(q, p)) != a.join(p, q)) return 6;
      if (a.join(q, a.coimp(q, p)) != q) return 7;
      for (int r = 0; r < n; ++r) {
        if (a.imp(p, a.meet(q, r)) != a.meet(a.imp(p, q), a.imp(p, r))) return 4;
        if (a.coimp(a.join(q, r), p) != a.join(a.coimp(q, p), a.coimp(r, p))) return 8;
      }
    }
  return 0;
}

std::vector<int> join_irreducibles(const FiniteBHA& a) {
  std::vector<int> out;
  for (int x = 0; x < a.size(); ++x) {
    if (x == a.bottom()) continue;
    int below = a.bottom();
    for (int y = 0; y < a.size(); ++y)
      if (y != x && a.leq(y, x)) below = a.join(below, y);
    if (below != x) out.push_back(x);
  }
  return out;
}

Poset prime_filter_poset(const FiniteBHA& a) {
  std::vector<int> jis = join_irreducibles(a);
  std::vector<Cover> pairs;
  const int r = static_cast<int>(jis.size());
  // ↑j ⊆ ↑j' iff j' ≤ j.
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      if (i != k && a.leq(jis[k], jis[i])) pairs.emplace_back(i, k);
  return Poset::from_relations(r, pairs);
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteBHA& a, const FiniteBHA& b) : a_(a), b_(b), jis_(join_irreducibles(a)) {
    const int n = a_.size();
    const int r = static_cast<int>(jis_.size());
    below_.resize(n);
    ready_at_.resize(r + 1);
    for (int x = 0; x < n; ++x) {
      int last = -1;
      for (int p = 0; p < r; ++p)
        if (a_.leq(jis_[p], x)) {
          below_[x].push_back(p);
          last = p;
        }
      // ready_at_[p + 1]: determined once JIs 0..p are placed.
      ready_at_[last + 1].push_back(x);
    }
    image_.assign(n, -1);
    owner_.assign(b_.size(), -1);
  }

  std::optional<AlgebraEmbeddingWitness> run() {
    if (a_.size() > b_.size()) return std::nullopt;
    if (!settle(0)) return std::nullopt;
    if (!place(0)) return std::nullopt;
    return AlgebraEmbeddingWitness{image_};
  }

 private:
  int ji_image(int p) const { return image_[jis_[p]]; }

  // Fix images of the elements that became determined at `stage`; false on a
  // detected conflict. Undo information goes to `settled_`.
  bool settle(int stage) {
    for (int x : ready_at_[stage]) {
      if (image_[x] >= 0) continue;  // a JI placed directly
      int v = b_.bottom();
      for (int p : below_[x]) v = b_.join(v, ji_image(p));
      image_[x] = v;
      settled_.push_back(x);
    }
    for (int x : ready_at_[stage]) {
      int v = image_[x];
      if (owner_[v] >= 0 && owner_[v] != x) return false;
      owner_[v] = x;
      owned_.push_back(v);
    }
    for (int x : ready_at_[stage])
      for (int y = 0; y < a_.size(); ++y) {
        if (image_[y] < 0) continue;
        if (!agrees(a_.meet(x, y), b_.meet(image_[x], image_[y]))) return false;
        if (!agrees(a_.imp(x, y), b_.imp(image_[x], image_[y]))) return false;
        if (!agrees(a_.imp(y, x), b_.imp(image_[y], image_[x]))) return false;
        if (!agrees(a_.coimp(x, y), b_.coimp(image_[x], image_[y]))) return false;
        if (!agrees(a_.coimp(y, x), b_.coimp(image_[y], image_[x]))) return false;
      }
    return true;
  }

  bool agrees(int source_result, int target_result) const {
    return image_[source_result] < 0 || image_[source_result] == target_result;
  }

  bool place(int p) {
    if (p == static_cast<int>(jis_.size()))
      return is_algebra_embedding(a_, b_, AlgebraEmbeddingWitness{image_});
    const int j = jis_[p];
    for (int c = 0; c < b_.size(); ++c) {
      if (c == b_.bottom()) continue;
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        if (a_.leq(jis_[q], j)) ok = b_.leq(ji_image(q), c) && ji_image(q) != c;
      }
      if (!ok) continue;
      const std::size_t settled_mark = settled_.size();
      const std::size_t owned_mark = owned_.size();
      image_[j] = c;
      if (settle(p + 1) && place(p + 1)) return true;
      while (settled_.size() > settled_mark) {
        image_[settled_.back()] = -1;
        settled_.pop_back();
      }
      while (owned_.size() > owned_mark) {
        owner_[owned_.back()] = -1;
        owned_.pop_back();
      }
      image_[j] = -1;
    }
    return false;
  }

  const FiniteBHA& a_;
  const FiniteBHA& b_;
  std::vector<int> jis_;
  std::vector<std::vector<int>> below_;
  std::vector<std::vector<int>> ready_at_;
  std::vector<int> image_;
  std::vector<int> owner_;
  std::vector<int> settled_;
  std::vector<int> owned_;
};

}  // namespace

std::optional<AlgebraEmbeddingWitness> algebra_embedding(const FiniteBHA& a, const FiniteBHA& b) {
  return EmbeddingSearch(a, b).run();
}

bool is_algebra_embedding(const FiniteBHA& a, const FiniteBHA& b, const AlgebraEmbeddingWitness& w) {
  const int n = a.size();
  if (static_cast<int>(w.map.size()) != n) return false;
  std::vector<bool> used(b.size(), false);
  for (int v : w.map) {
    if (v < 0 || v >= b.size() || used[v]) return false;
    used[v] = true;
  }
  if (w.map[a.bottom()] != b.bottom() || w.map[a.top()] != b.top()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int hx = w.map[x];
      const int hy = w.map[y];
      if (w.map[a.meet(x, y)] != b.meet(hx, hy) || w.map[a.join(x, y)] != b.join(hx, hy) ||
          w.map[a.imp(x, y)] != b.imp(hx, hy) || w.map[a.coimp(x, y)] != b.coimp(hx, hy))
        return false;
    }
  return true;
}

std::string format_element_set(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

void write_algebra(std::ostream& out, const FiniteBHA& a) {
  const int n = a.size();
  out << "bha " << n << '\n';
  for (ElementSet s : a.universe()) out << format_element_set(s) << '\n';
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out << "imp " << x << ' ' << y << " -> " << a.imp(x, y) << '\n';
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out << "coimp " << x << ' ' << y << " -> " << a.coimp(x, y) << '\n';
}

namespace {

ElementSet parse_element_set(const std::string& text, int line_no) {
  auto fail = [&]() -> ElementSet {
    throw FormatError("line " + std::to_string(line_no) + ": expected an element set like {0,2}");
  };
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return fail();
  ElementSet s;
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return s;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::ranges::all_of(item, [](char c) { return c >= '0' && c <= '9'; })) return fail();
    int x = std::stoi(item);
    if (x >= ElementSet::kCapacity) return fail();
    s.insert(x);
  }
  return s;
}

}  // namespace

FiniteBHA read_algebra(std::istream& in) {
  std::string line;
  int n = -1;
  int line_no = 0;
  std::vector<ElementSet> universe;
  std::vector<int> imp;
  std::vector<int> coimp;
  bool has_imp = false;
  bool has_coimp = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (n < 0) {
      if (word != "bha" || !(ls >> n) || n < 1)
        throw FormatError("line " + std::to_string(line_no) + ": expected header `bha <size>`");
      imp.assign(static_cast<std::size_t>(n) * n, -1);
      coimp.assign(static_cast<std::size_t>(n) * n, -1);
      continue;
    }
    if (word == "imp" || word == "coimp") {
      int i = 0;
      int j = 0;
      int k = 0;
      std::string arrow;
      if (!(ls >> i >> j >> arrow >> k) || arrow != "->" || i < 0 || j < 0 || i >= n || j >= n)
        throw FormatError("line " + std::to_string(line_no) + ": expected `" + word + " i j -> k`");
      (word == "imp" ? imp : coimp)[i * n + j] = k;
      (word == "imp" ? has_imp : has_coimp) = true;
      continue;
    }
    if (static_cast<int>(universe.size()) >= n)
      throw FormatError("line " + std::to_string(line_no) + ": more universe elements than declared");
    universe.push_back(parse_element_set(word, line_no));
  }
  if (n < 0) throw FormatError("missing `bha <size>` header");
  if (static_cast<int>(universe.size()) != n) throw FormatError("fewer universe elements than declared");

  if (!has_imp || !has_coimp) {
    // No tables: recover the base order (x ≤ y iff every member holding x
    // holds y) and recompute both implications.
    ElementSet all;
    for (ElementSet s : universe) all |= s;
    if (all != ElementSet::full(all.empty() ? 0 : 64 - std::countl_zero(all.bits())))
      throw FormatError("universe members must cover 0..k-1");
    std::vector<Cover> pairs;
    const int k = all.size();
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        if (x != y && std::ranges::all_of(universe, [&](ElementSet s) { return !s.contains(x) || s.contains(y); }))
          pairs.emplace_back(x, y);
    Poset base = Poset::from_relations(k, pairs);
    auto index = index_map(universe);
    auto lookup = [&](ElementSet s) {
      auto it = index.find(s.bits());
      if (it == index.end()) throw FormatError("universe not closed under implications");
      return it->second;
    };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ElementSet diff = universe[a] - universe[b];
        if (!has_imp) imp[a * n + b] = lookup(base.all() - base.down_closure(diff));
        if (!has_coimp) coimp[a * n + b] = lookup(base.up_closure(diff));
      }
  } else if (std::ranges::find(imp, -1) != imp.end() || std::ranges::find(coimp, -1) != coimp.end()) {
    throw FormatError("incomplete operation tables");
  }
  return FiniteBHA(std::move(universe), std::move(imp), std::move(coimp));
}

}  // namespace ctk
