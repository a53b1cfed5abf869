#include "ctk/cotree.hpp"

#include <algorithm>

#include "ctk/errors.hpp"

namespace ctk {

CoTree::CoTree(Poset poset) : poset_(std::move(poset)) {
  if (!is_cotree(poset_)) throw UsageError("poset is not a co-tree");
  const int n = poset_.size();
  coroot_ = poset_.maximal().min();
  parent_.assign(n, -1);
  children_.assign(n, {});
  depth_.assign(n, 0);
  height_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    ElementSet up = poset_.upper_covers(x);
    if (!up.empty()) parent_[x] = up.min();
    children_[x] = poset_.lower_covers(x).elements();
    depth_[x] = poset_.up(x).size() - 1;
  }
  // Process by increasing |↓x| so children come first.
  std::vector<int> order(n);
  for (int x = 0; x < n; ++x) order[x] = x;
  std::ranges::sort(order, [&](int a, int b) { return poset_.down(a).size() < poset_.down(b).size(); });
  for (int x : order)
    for (int c : children_[x]) height_[x] = std::max(height_[x], height_[c] + 1);
}

CanonicalCode canonical_code(const CoTree& t, int root) {
  std::vector<std::string> kids;
  for (int c : t.children(root)) kids.push_back(canonical_code(t, c).text);
  std::ranges::sort(kids);
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return CanonicalCode{std::move(out)};
}

CanonicalCode canonical_code(const CoTree& t) { return canonical_code(t, t.coroot()); }

CoTree cotree_from_code(const CanonicalCode& code) {
  const std::string& s = code.text;
  std::vector<Cover> pairs;
  std::size_t pos = 0;
  int next_index = 0;
  // Returns the post-order index of the node starting at pos.
  auto node = [&](auto&& self) -> int {
    if (pos >= s.size() || s[pos] != '(') throw FormatError("malformed co-tree code `" + s + "`");
    ++pos;
    std::vector<int> kids;
    while (pos < s.size() && s[pos] == '(') kids.push_back(self(self));
    if (pos >= s.size() || s[pos] != ')') throw FormatError("malformed co-tree code `" + s + "`");
    ++pos;
    int me = next_index++;
    for (int k : kids) pairs.emplace_back(k, me);
    return me;
  };
  node(node);
  if (pos != s.size()) throw FormatError("trailing input in co-tree code `" + s + "`");
  return CoTree(Poset::from_relations(next_index, pairs));
}

CoTree comb(int n) {
  if (n < 1) throw ParamError("comb requires n >= 1");
  std::vector<Cover> pairs;
  for (int i = 0; i < n; ++i) {
    int leaf = 2 * i;
    int spine = 2 * i + 1;
    pairs.emplace_back(leaf, spine);
    if (i + 1 < n) pairs.emplace_back(spine, spine + 2);
  }
  return CoTree(Poset::from_relations(2 * n, pairs));
}

CoTree hcomb(int n) {
  if (n < 0) throw ParamError("hcomb requires n >= 0");
  std::vector<Cover> pairs;
  for (int i = 1; i <= n; ++i) {
    int spine = 2 * i;
    pairs.emplace_back(spine - 2, spine);  // y_{i-1} ⋖ y_i
    pairs.emplace_back(spine - 1, spine);  // y_i' ⋖ y_i
  }
  return CoTree(Poset::from_relations(2 * n + 1, pairs));
}

CoTree chain(int length) {
  if (length < 1) throw ParamError("chain requires length >= 1");
  std::vector<Cover> pairs;
  for (int i = 0; i + 1 < length; ++i) pairs.emplace_back(i, i + 1);
  return CoTree(Poset::from_relations(length, pairs));
}

CoTree tau(int m, int k) {
  if (m < 0 || k < 0) throw ParamError("tau requires m >= 0 and k >= 0");
  if (k == 0) return chain(m + 2);
  // y_0..y_k are 0..k; x_i is k+1+(m-i).
  const int xm = k + 1;
  std::vector<Cover> pairs;
  for (int j = 0; j <= k; ++j) pairs.emplace_back(j, xm);
  for (int i = 0; i < m; ++i) pairs.emplace_back(xm + i, xm + i + 1);
  return CoTree(Poset::from_relations(m + k + 2, pairs));
}

CoTree make_standard(StandardKind kind, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) throw ParamError("wrong number of parameters for standard co-tree");
  };
  switch (kind) {
    case StandardKind::comb: need(1); return comb(params[0]);
    case StandardKind::hcomb: need(1); return hcomb(params[0]);
    case StandardKind::chain: need(1); return chain(params[0]);
    case StandardKind::tau: need(2); return tau(params[0], params[1]);
  }
  throw ParamError("unknown standard co-tree kind");
}

namespace {

int comb_number_at(const CoTree& t, int v) {
  int u = v;
  int steps = 0;
  while (t.children(u).size() == 1) {
    u = t.children(u).front();
    ++steps;
  }
  if (t.children(u).empty()) return steps == 0 ? 0 : 1;
  int best = 0;
  for (int c : t.children(u)) best = std::max(best, comb_number_at(t, c));
  return best + 1;
}

}  // namespace

int comb_number(const CoTree& t) { return comb_number_at(t, t.coroot()); }

int comb_number_bruteforce(const CoTree& t) {
  int best = 0;
  for (int n = 1; 2 * n <= t.size(); ++n)
    if (order_embedding(comb(n).poset(), t.poset())) best = n;
  return best;
}

bool in_T(const CoTree& t, int n) {
  if (n < 1) throw ParamError("T_n requires n >= 1");
  return comb_number(t) < n;
}

bool in_T_bruteforce(const CoTree& t, int n) {
  if (n < 1) throw ParamError("T_n requires n >= 1");
  if (2 * n > t.size()) return true;
  return !order_embedding(comb(n).poset(), t.poset()).has_value();
}

Decomposition decompose(const CoTree& t) {
  if (t.size() == 1) throw SingletonError("cannot decompose the singleton co-tree");
  int u = t.coroot();
  int steps = 0;
  while (t.children(u).size() == 1) {
    u = t.children(u).front();
    ++steps;
  }
  Decomposition d;
  if (t.children(u).empty()) {
    d.m = t.size() - 2;
    d.k = 0;
    d.parts = Multiset<CanonicalCode>{CanonicalCode{"()"}};
    return d;
  }
  d.m = steps;
  d.k = static_cast<int>(t.children(u).size()) - 1;
  std::vector<CanonicalCode> parts;
  for (int y : t.children(u)) parts.push_back(canonical_code(t, y));
  d.parts = Multiset<CanonicalCode>(std::move(parts));
  return d;
}

CoTree reconstruct(int m, std::span<const CoTree> parts) {
  if (m < 0) throw ParamError("reconstruct requires m >= 0");
  if (parts.empty()) throw EmptyPartsError("reconstruct requires at least one part");
  std::vector<Cover> pairs;
  int offset = 0;
  std::vector<int> roots;
  for (const CoTree& part : parts) {
    for (auto [i, j] : part.poset().covers()) pairs.emplace_back(i + offset, j + offset);
    roots.push_back(part.coroot() + offset);
    offset += part.size();
  }
  // x_m = offset, x_0 = offset + m.
  for (int r : roots) pairs.emplace_back(r, offset);
  for (int i = 0; i < m; ++i) pairs.emplace_back(offset + i, offset + i + 1);
  return CoTree(Poset::from_relations(offset + m + 1, pairs));
}

CoTree reconstruct(int m, const Multiset<CanonicalCode>& parts) {
  std::vector<CoTree> trees;
  for (const auto& code : parts.occurrences()) trees.push_back(cotree_from_code(code));
  return reconstruct(m, trees);
}

CoTree reconstruct(const Decomposition& d) { return reconstruct(d.m, d.parts); }

namespace {

constexpr int kMaxEnumeratedNodes = 16;

// by_size[s] holds the sorted codes of all rooted trees with s nodes.
std::vector<std::vector<std::string>> codes_up_to(int max_nodes) {
  if (max_nodes > kMaxEnumeratedNodes) throw SizeError("co-tree enumeration limited to 16 nodes");
  std::vector<std::vector<std::string>> by_size(std::max(max_nodes, 0) + 1);
  if (max_nodes < 1) return by_size;
  by_size[1] = {"()"};
  struct Item {
    int size;
    const std::string* code;
  };
  for (int s = 2; s <= max_nodes; ++s) {
    std::vector<Item> smaller;
    for (int z = 1; z < s; ++z)
      for (const auto& c : by_size[z]) smaller.push_back({z, &c});
    std::vector<std::string> out;
    std::vector<const std::string*> picked;
    // Children multisets as nondecreasing index sequences summing to s-1.
    auto pick = [&](auto&& self, std::size_t start, int remaining) -> void {
      if (remaining == 0) {
        std::vector<std::string> kids;
        for (auto* p : picked) kids.push_back(*p);
        std::ranges::sort(kids);
        std::string code = "(";
        for (const auto& k : kids) code += k;
        code += ")";
        out.push_back(std::move(code));
        return;
      }
      for (std::size_t g = start; g < smaller.size(); ++g) {
        if (smaller[g].size > remaining) continue;
        picked.push_back(smaller[g].code);
        self(self, g, remaining - smaller[g].size);
        picked.pop_back();
      }
    };
    pick(pick, 0, s - 1);
    std::ranges::sort(out);
    by_size[s] = std::move(out);
  }
  return by_size;
}

}  // namespace

std::vector<CanonicalCode> cotree_codes(int nodes) {
  std::vector<CanonicalCode> out;
  if (nodes < 1) return out;
  auto by_size = codes_up_to(nodes);
  for (auto& c : by_size[nodes]) out.push_back(CanonicalCode{std::move(c)});
  return out;
}

std::vector<CoTree> enumerate_cotrees(int max_nodes, const std::function<bool(const CoTree&)>& filter) {
  if (max_nodes < 1) throw ParamError("enumerate_cotrees requires max_nodes >= 1");
  auto by_size = codes_up_to(max_nodes);
  std::vector<CoTree> out;
  for (int s = 1; s <= max_nodes; ++s) {
    for (const auto& c : by_size[s]) {
      CoTree t = cotree_from_code(CanonicalCode{c});
      if (!filter || filter(t)) out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace ctk
