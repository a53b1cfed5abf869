#include "ctk/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ctk/duality.hpp"
#include "ctk/errors.hpp"
#include "ctk/formula.hpp"
#include "ctk/matching.hpp"

namespace ctk {

PiImage pi_map(const CoTree& t) {
  Decomposition d = decompose(t);
  return PiImage{tau(d.m, d.k), std::move(d.parts), d.m, d.k};
}

bool pair_leq(const PiImage& a, const PiImage& b, LeqpCache& cache) {
  if (!cache(canonical_code(a.upper), canonical_code(b.upper))) return false;
  OrderOracle<CanonicalCode> ord = [&](const CanonicalCode& q, const CanonicalCode& p) { return cache(q, p); };
  return projects(a.parts, b.parts, ord).has_value();
}

bool pair_leq(const PiImage& a, const PiImage& b) {
  LeqpCache cache;
  return pair_leq(a, b, cache);
}

// ---------------------------------------------------------------------------
// Finite subsets and the shift relation

FiniteSubset::FiniteSubset(std::vector<int> items) : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i] < 0) throw ParamError("finite subsets hold naturals only");
    if (i > 0 && items_[i - 1] >= items_[i]) throw ParamError("finite subset items must strictly increase");
  }
}

FiniteSubset FiniteSubset::from_mask(std::uint64_t mask) {
  std::vector<int> items;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) items.push_back(i);
  return FiniteSubset(std::move(items));
}

bool FiniteSubset::prefix_of(const FiniteSubset& other) const {
  return items_.size() <= other.items_.size() && std::equal(items_.begin(), items_.end(), other.items_.begin());
}

FiniteSubset FiniteSubset::without_min() const {
  if (items_.empty()) return {};
  return FiniteSubset(std::vector<int>(items_.begin() + 1, items_.end()));
}

std::string to_string(const FiniteSubset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s.items()[i]);
  return out + "}";
}

bool shift_rel(const FiniteSubset& s, const FiniteSubset& t) {
  // With s empty, B may start below everything in t, but only if t avoids 0.
  if (s.empty()) return t.empty() || t.min() >= 1;
  const FiniteSubset rest = s.without_min();
  if (!t.prefix_of(rest) && !rest.prefix_of(t)) return false;
  return t.empty() || t.min() > s.min();
}

namespace {

// Grows B one element at a time. Position i of B must match s[i], and
// position i ≥ 1 must match t[i-1]; once no later position is constrained,
// any infinite tail beyond the bound completes B.
bool extend_prefix(std::vector<int>& prefix, const FiniteSubset& s, const FiniteSubset& t, int bound) {
  const std::size_t i = prefix.size();
  if (i >= s.size() && i >= t.size() + 1) return true;
  const bool s_open = i < s.size();
  const bool t_open = i >= 1 && i - 1 < t.size();
  const int start = prefix.empty() ? 0 : prefix.back() + 1;
  for (int b = start; b <= bound; ++b) {
    if (s_open && b != s.items()[i]) continue;
    if (t_open && b != t.items()[i - 1]) continue;
    prefix.push_back(b);
    if (extend_prefix(prefix, s, t, bound)) return true;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

bool shift_rel_oracle(const FiniteSubset& s, const FiniteSubset& t) {
  int top = 0;
  if (!s.empty()) top = std::max(top, s.max());
  if (!t.empty()) top = std::max(top, t.max());
  const int bound = top + static_cast<int>(s.size() + t.size()) + 1;
  std::vector<int> prefix;
  return extend_prefix(prefix, s, t, bound);
}

// ---------------------------------------------------------------------------
// Antichains

std::vector<int> max_antichain(int count, const IndexOrder& leq) {
  std::vector<std::vector<int>> adjacency(count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && leq(i, j)) adjacency[i].push_back(j);
  const BipartiteMatching matching = max_bipartite_matching(adjacency, count);

  // König: alternating reachability from unmatched left vertices.
  std::vector<bool> left_seen(count, false);
  std::vector<bool> right_seen(count, false);
  std::vector<int> queue;
  for (int i = 0; i < count; ++i)
    if (matching.left_mate[i] < 0) {
      left_seen[i] = true;
      queue.push_back(i);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : adjacency[u]) {
      if (right_seen[v] || matching.left_mate[u] == v) continue;
      right_seen[v] = true;
      const int w = matching.right_mate[v];
      if (w >= 0 && !left_seen[w]) {
        left_seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < count; ++x)
    if (left_seen[x] && !right_seen[x]) out.push_back(x);
  return out;
}

std::vector<int> max_antichain_bruteforce(int count, const IndexOrder& leq) {
  if (count > kAntichainScanBound) throw SizeError("antichain subset scan above bound");
  std::vector<std::uint32_t> comparable(count, 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && (leq(i, j) || leq(j, i))) comparable[i] |= 1u << j;
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
    if (std::popcount(mask) <= std::popcount(best)) continue;
    bool ok = true;
    for (int i = 0; i < count && ok; ++i)
      if ((mask >> i & 1) && (comparable[i] & mask)) ok = false;
    if (ok) best = mask;
  }
  std::vector<int> out;
  for (int i = 0; i < count; ++i)
    if (best >> i & 1) out.push_back(i);
  return out;
}

namespace {

std::vector<std::vector<bool>> leqp_matrix(const std::vector<CoTree>& items) {
  const std::size_t n = items.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = i == j || leq_p(items[i], items[j]).has_value();
  return leq;
}

}  // namespace

std::vector<int> max_antichain(const std::vector<CoTree>& items) {
  const auto leq = leqp_matrix(items);
  return max_antichain(static_cast<int>(items.size()), [&](int i, int j) { return bool(leq[i][j]); });
}

// ---------------------------------------------------------------------------
// Reports

namespace {

std::string indent(const std::string& text, const std::string& pad) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

std::string format_params(const CheckParams& params) {
  std::string out;
  for (const auto& [key, value] : params) out += (out.empty() ? "" : " ") + key + "=" + std::to_string(value);
  return out;
}

nlohmann::ordered_json report_json(const CheckReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.params) j["params"][key] = value;
  j["instances"] = r.instances;
  j["counterexamples"] = r.counterexamples;
  j["notes"] = r.notes;
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

}  // namespace

std::string CheckReport::to_text(bool with_timing) const {
  std::ostringstream out;
  out << (passed ? "PASS" : "FAIL") << "  " << name << "  [" << format_params(params) << "]  instances=" << instances;
  if (with_timing) out << "  time=" << static_cast<long>(wall_ms) << "ms";
  out << "\n";
  for (const std::string& note : notes) out << "    note: " << note << "\n";
  for (const std::string& c : counterexamples) out << "    counterexample:\n" << indent(c, "      ");
  return out.str();
}

std::string CheckReport::to_json(bool with_timing) const { return report_json(*this, with_timing).dump(2); }

std::string reports_to_json(const std::vector<CheckReport>& reports, bool with_timing) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) all.push_back(report_json(r, with_timing));
  return all.dump(2);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Check {
 public:
  explicit Check(CheckReport& report) : report_(report) {}

  int param(const std::string& key) const { return report_.params.at(key); }
  void count(long n = 1) { report_.instances += n; }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  void fail(std::string text) {
    report_.passed = false;
    if (report_.counterexamples.size() < kMaxCounterexamples) report_.counterexamples.push_back(std::move(text));
  }
  void expect(bool ok, const std::function<std::string()>& describe) {
    count();
    if (!ok) fail(describe());
  }

 private:
  CheckReport& report_;
};

std::string show(const Poset& p) { return format_poset(p); }

std::string show(const CoTree& t) { return "code " + canonical_code(t).text + "\n" + format_poset(t.poset()); }

std::string show_pair(const std::string& label_a, const CoTree& a, const std::string& label_b, const CoTree& b) {
  return label_a + ": " + show(a) + label_b + ": " + show(b);
}

template <typename T, typename Show>
std::string show_multiset(const Multiset<T>& m, Show show_item) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.length(); ++i) out += (i ? "," : "") + show_item(m[i]);
  return out + "]";
}

std::string show_codes(const Multiset<CanonicalCode>& m) {
  return show_multiset(m, [](const CanonicalCode& c) { return c.text; });
}

bool valid_surjection(const std::optional<PosetMap>& f) {
  return f && f->surjective() && check_bi_p_morphism(*f).ok;
}

// Every multiset of length ≤ max_length over `items`, as sorted index lists.
template <typename T>
std::vector<Multiset<T>> all_multisets(const std::vector<T>& items, int max_length) {
  std::vector<Multiset<T>> out;
  std::vector<int> idx;
  std::function<void(int)> grow = [&](int from) {
    std::vector<T> occ;
    for (int i : idx) occ.push_back(items[i]);
    out.emplace_back(std::move(occ));
    if (static_cast<int>(idx.size()) == max_length) return;
    for (int i = from; i < static_cast<int>(items.size()); ++i) {
      idx.push_back(i);
      grow(i);
      idx.pop_back();
    }
  };
  grow(0);
  return out;
}

void check_t1_singleton(Check& c) {
  std::vector<CoTree> members;
  for (const CoTree& t : enumerate_cotrees(c.param("max_nodes"))) {
    const bool fast = in_T(t, 1);
    c.expect(fast == in_T_bruteforce(t, 1), [&] { return "in_T(T,1) disagrees with embedding search\n" + show(t); });
    if (fast) members.push_back(t);
  }
  if (members.size() != 1 || members[0].size() != 1) {
    std::string listing = "T_1 has " + std::to_string(members.size()) + " members\n";
    for (const CoTree& t : members) listing += show(t);
    c.fail(listing);
  }
}

void check_tau_grid(Check& c) {
  const int top = c.param("max_param");
  for (int m = 0; m <= top; ++m)
    for (int k = 0; k <= top; ++k) {
      const CoTree lower = tau(m, k);
      c.expect(valid_surjection(leq_p(chain(1), lower)), [&] { return "singleton is not below\n" + show(lower); });
      for (int m2 = 0; m2 <= top; ++m2)
        for (int k2 = 0; k2 <= top; ++k2) {
          const CoTree upper = tau(m2, k2);
          const auto f = leq_p(lower, upper);
          const bool expected = m <= m2 && k <= k2;
          c.expect(f.has_value() == expected && (!f || valid_surjection(f)), [&] {
            return "tau(" + std::to_string(m) + "," + std::to_string(k) + ") vs tau(" + std::to_string(m2) + "," +
                   std::to_string(k2) + "): expected " + (expected ? "a" : "no") + " surjection\n" +
                   show_pair("target", lower, "source", upper);
          });
        }
    }
}

void check_structure_lemma(Check& c) {
  const int max_n = c.param("max_n");
  for (const CoTree& t : enumerate_cotrees(c.param("max_nodes"))) {
    if (t.size() < 2) continue;
    const Decomposition d = decompose(t);
    c.expect(canonical_code(reconstruct(d)) == canonical_code(t),
             [&] { return "reconstruct(decompose(T)) differs from T\n" + show(t); });
    std::vector<CoTree> parts;
    for (const CanonicalCode& code : d.parts.occurrences()) parts.push_back(cotree_from_code(code));
    for (int n = 1; n <= max_n; ++n) {
      const bool whole = in_T_bruteforce(t, n + 1);
      c.expect(in_T(t, n + 1) == whole, [&] { return "in_T disagrees with embedding search\n" + show(t); });
      const bool all_parts = std::ranges::all_of(parts, [&](const CoTree& p) { return in_T_bruteforce(p, n); });
      c.expect(whole == all_parts, [&] {
        return "n=" + std::to_string(n) + ": T in T_(n+1) is " + (whole ? "true" : "false") + ", parts " +
               show_codes(d.parts) + " all in T_n is " + (all_parts ? "true" : "false") + "\n" + show(t);
      });
    }
  }
}

void check_comb_oracle(Check& c) {
  for (const CoTree& t : enumerate_cotrees(c.param("max_nodes"))) {
    const int fast = comb_number(t);
    const int slow = comb_number_bruteforce(t);
    c.expect(fast == slow, [&] {
      return "comb_number " + std::to_string(fast) + " vs search " + std::to_string(slow) + "\n" + show(t);
    });
  }
}

void check_duality_roundtrip(Check& c) {
  for (int n = 1; n <= c.param("max_nodes"); ++n)
    for (const Poset& x : enumerate_posets(n)) {
      const FiniteBHA a = dual_algebra(x);
      const int bad = first_failing_equation(a);
      c.expect(residuation_holds(a) && bad == 0, [&] {
        return "Up(X) is not a bi-Heyting algebra (equation " + std::to_string(bad) + ")\n" + show(x);
      });
      c.expect(isomorphic(prime_filter_poset(a), x), [&] {
        return "prime filters of Up(X) are not isomorphic to X\nX: " + show(x) +
               "filters: " + show(prime_filter_poset(a));
      });
    }
}

void check_fin_duality(Check& c) {
  const std::vector<CoTree> trees = enumerate_cotrees(c.param("max_nodes"));
  std::vector<FiniteBHA> duals;
  for (const CoTree& t : trees) duals.push_back(dual_algebra(t.poset()));
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = 0; j < trees.size(); ++j) {
      const auto e = algebra_embedding(duals[i], duals[j]);
      const auto f = leq_p(trees[i], trees[j]);
      c.expect(e.has_value() == f.has_value() && (!e || is_algebra_embedding(duals[i], duals[j], *e)), [&] {
        return std::string("algebra embedding ") + (e ? "exists" : "absent") + " but surjection " +
               (f ? "exists" : "absent") + "\n" + show_pair("X", trees[i], "Y", trees[j]);
      });
    }
}

void check_prelinearity_class(Check& c) {
  const Formula axiom = prelinearity_axiom();
  for (int n = 1; n <= c.param("max_nodes"); ++n)
    for (const Poset& x : enumerate_posets(n)) {
      const ValidityResult v = is_valid(x, axiom);
      c.expect(v.valid == is_coforest(x), [&] {
        return std::string("prelinearity ") + (v.valid ? "valid" : "refuted") + " on\n" + show(x);
      });
      if (!v.valid)
        c.expect(eval_formula(x, v.counter_valuation, axiom) == kripke_extension(x, v.counter_valuation, axiom),
                 [&] { return "algebraic and pointwise evaluation disagree on\n" + show(x); });
    }
}

void check_bilc_class(Check& c) {
  const Formula axiom = bilc_axiom();
  for (int n = 1; n <= c.param("max_nodes"); ++n)
    for (const Poset& x : enumerate_posets(n)) {
      if (!is_coforest(x)) continue;
      const ValidityResult v = is_valid(x, axiom);
      c.expect(v.valid == is_chain_union(x), [&] {
        return std::string("bi-LC axiom ") + (v.valid ? "valid" : "refuted") + " on\n" + show(x);
      });
    }
}

template <typename T, typename Show>
void mset_lemma_over(Check& c, const std::vector<Multiset<T>>& all, const OrderOracle<T>& ord, Show show_ms) {
  const std::size_t n = all.size();
  std::vector<std::vector<bool>> proj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Multiset<T>& lo = all[i];
      const Multiset<T>& hi = all[j];
      const auto fast = projects(lo, hi, ord);
      const auto slow = projects_bruteforce(lo, hi, ord);
      const auto emb = embeddable(lo, hi, ord);
      proj[i][j] = slow.has_value();
      auto pair = [&] { return "N = " + show_ms(lo) + ", M = " + show_ms(hi); };
      c.expect(fast.has_value() == slow.has_value(), [&] { return "projects disagrees with map scan: " + pair(); });
      c.expect(!fast || is_projection_witness(lo, hi, ord, *fast),
               [&] { return "projection witness invalid: " + pair(); });
      c.expect(!emb || is_embedding_witness(lo, hi, ord, *emb), [&] { return "embedding witness invalid: " + pair(); });
      const bool lemma = emb.has_value() && dominated(lo, hi, ord);
      c.expect(lemma == slow.has_value(), [&] { return "embedding plus domination disagrees: " + pair(); });
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      c.expect(!(proj[i][j] && proj[j][i]), [&] {
        return "<< is not antisymmetric: " + show_ms(all[i]) + " and " + show_ms(all[j]);
      });
}

void check_mset_lemma(Check& c) {
  std::vector<long> naturals;
  for (long v = 0; v <= c.param("max_entry"); ++v) naturals.push_back(v);
  OrderOracle<long> le = [](const long& a, const long& b) { return a <= b; };
  mset_lemma_over(c, all_multisets(naturals, c.param("max_length")), le, [](const Multiset<long>& m) {
    return show_multiset(m, [](long v) { return std::to_string(v); });
  });

  std::vector<CanonicalCode> codes;
  for (int nodes = 1; nodes <= c.param("cotree_nodes"); ++nodes)
    for (const CanonicalCode& code : cotree_codes(nodes)) codes.push_back(code);
  LeqpCache cache;
  OrderOracle<CanonicalCode> leqp = [&](const CanonicalCode& a, const CanonicalCode& b) { return cache(a, b); };
  mset_lemma_over(c, all_multisets(codes, c.param("cotree_length")), leqp, show_codes);
}

std::string pi_key(const PiImage& p) {
  std::string key = canonical_code(p.upper).text + "|";
  for (const CanonicalCode& code : p.parts.occurrences()) key += code.text + ",";
  return key;
}

void check_pi_reflection(Check& c) {
  const int max_nodes = c.param("max_nodes");
  LeqpCache cache;

  // Injectivity over the whole enumeration.
  std::set<std::string> seen;
  for (const CoTree& t : enumerate_cotrees(c.param("injective_nodes"))) {
    if (t.size() < 2) continue;
    const PiImage p = pi_map(t);
    c.expect(seen.insert(pi_key(p)).second, [&] { return "pi is not injective at\n" + show(t); });
  }

  for (int n = c.param("min_n"); n <= c.param("max_n"); ++n) {
    const auto items = enumerate_cotrees(max_nodes, [n](const CoTree& t) { return t.size() >= 2 && in_T(t, n); });
    std::vector<PiImage> images;
    for (const CoTree& t : items) {
      PiImage p = pi_map(t);
      const bool upper_ok = in_T(p.upper, 2) && static_cast<int>(p.parts.length()) == p.k + 1;
      const bool parts_ok = std::ranges::all_of(p.parts.occurrences(), [&](const CanonicalCode& code) {
        return in_T(cotree_from_code(code), n - 1);
      });
      c.expect(upper_ok && parts_ok, [&] { return "pi(X) leaves T_2 x T_" + std::to_string(n - 1) + "^#\n" + show(t); });
      images.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (!pair_leq(images[i], images[j], cache)) {
          c.count();
          continue;
        }
        c.expect(cache(canonical_code(items[i]), canonical_code(items[j])), [&] {
          return "T_" + std::to_string(n) + ": pi(X) <= pi(X') but X is not a bi-p-morphic image of X'\n" +
                 show_pair("X", items[i], "X'", items[j]);
        });
      }
  }

  // Converse direction on a single layer T_(n+1) \ T_n; observed, not asserted.
  for (int n = 1; n < c.param("max_n"); ++n) {
    const auto layer = enumerate_cotrees(
        max_nodes, [n](const CoTree& t) { return t.size() >= 2 && in_T(t, n + 1) && !in_T(t, n); });
    long pairs = 0;
    long broken = 0;
    for (const CoTree& a : layer)
      for (const CoTree& b : layer) {
        if (!cache(canonical_code(a), canonical_code(b))) continue;
        ++pairs;
        if (!pair_leq(pi_map(a), pi_map(b), cache)) ++broken;
      }
    c.note("layer T_" + std::to_string(n + 1) + "\\T_" + std::to_string(n) + ": " + std::to_string(broken) + " of " +
           std::to_string(pairs) + " comparable pairs are not pi-comparable");
  }
}

void check_counterexample(Check& c) {
  const std::vector<CoTree> points{chain(1), chain(1)};
  const std::vector<CoTree> vees{tau(0, 1), tau(0, 1)};
  const CoTree x = reconstruct(1, points);
  const CoTree xp = reconstruct(0, vees);
  const PiImage px = pi_map(x);
  const PiImage pxp = pi_map(xp);
  c.expect(canonical_code(px.upper) == canonical_code(tau(1, 1)) && px.parts.length() == 2,
           [&] { return "pi(X) is not (tau(1,1),[*,*])\n" + show(x); });
  c.expect(valid_surjection(leq_p(x, xp)), [&] { return "X is not a bi-p-morphic image of X'\n" + show_pair("X", x, "X'", xp); });
  c.expect(!pair_leq(px, pxp), [&] { return "pi(X) <= pi(X') unexpectedly\n" + show_pair("X", x, "X'", xp); });

  const std::vector<CoTree> chains{chain(2), chain(2)};
  const CoTree narrow = reconstruct(0, chains);
  c.note(std::string("with 2-chain parts instead of the 3-element V: X <=p X' is ") +
         (leq_p(x, narrow) ? "true" : "false"));
}

void check_comb_chain(Check& c) {
  std::vector<CoTree> seq{hcomb(0)};
  std::vector<std::string> names{"hcomb(0)"};
  for (int n = 1; n <= c.param("max_n"); ++n) {
    seq.push_back(comb(n));
    names.push_back("comb(" + std::to_string(n) + ")");
    seq.push_back(hcomb(n));
    names.push_back("hcomb(" + std::to_string(n) + ")");
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      c.expect(valid_surjection(leq_p(seq[i], seq[j])),
               [&] { return names[i] + " is not a bi-p-morphic image of " + names[j]; });
      c.expect(!leq_p(seq[j], seq[i]).has_value(),
               [&] { return names[j] + " is a bi-p-morphic image of " + names[i]; });
    }
}

void check_ascending_chain(Check& c) {
  const CoTree y = comb(1);
  std::vector<CoTree> xs;
  for (int t = 0; t <= c.param("max_t"); ++t) {
    const std::vector<CoTree> parts{y, y};
    xs.push_back(reconstruct(2 + t, parts));
    c.expect(in_T(xs.back(), 3) && !in_T(xs.back(), 2),
             [&] { return "X_" + std::to_string(t) + " is not in T_3\\T_2\n" + show(xs.back()); });
  }
  for (std::size_t t = 0; t < xs.size(); ++t)
    for (std::size_t r = 0; r < xs.size(); ++r) {
      const auto f = leq_p(xs[t], xs[r]);
      c.expect(f.has_value() == (t <= r) && (!f || valid_surjection(f)), [&] {
        return "X_" + std::to_string(t) + " <=p X_" + std::to_string(r) + " is " + (f ? "true" : "false");
      });
    }
}

ElementSet image_of(const PosetMap& f, ElementSet elements) {
  ElementSet out;
  elements.for_each([&](int z) { out.insert(f.image[z]); });
  return out;
}

std::string morphism_laws_violation(const PosetMap& f) {
  const Poset& s = f.src;
  const Poset& t = f.tgt;
  for (int x = 0; x < s.size(); ++x) {
    const int y = f.image[x];
    if (image_of(f, s.up(x)) != t.up(y)) return "f[up x] != up f(x) at x=" + std::to_string(x);
    if (image_of(f, s.down(x)) != t.down(y)) return "f[down x] != down f(x) at x=" + std::to_string(x);
  }
  for (int x : s.maximal().elements())
    if (!t.maximal().contains(f.image[x])) return "maximal " + std::to_string(x) + " not sent to a maximal point";
  for (int x : s.minimal().elements())
    if (!t.minimal().contains(f.image[x])) return "minimal " + std::to_string(x) + " not sent to a minimal point";
  const CoTree src(s);
  const CoTree tgt(t);
  if (f.image[src.coroot()] != tgt.coroot()) return "co-root not sent to the co-root";
  if (!f.surjective()) return "not surjective";
  for (int x = 0; x < s.size(); ++x) {
    const int z = src.parent(x);
    if (z < 0 || f.image[x] == f.image[z]) continue;
    if (tgt.parent(f.image[x]) != f.image[z])
      return "cover " + std::to_string(x) + " < " + std::to_string(z) + " not sent to a cover or collapsed";
  }
  return {};
}

void check_morphism_laws(Check& c) {
  const std::vector<CoTree> trees = enumerate_cotrees(c.param("max_nodes"));
  for (const CoTree& src : trees)
    for (const CoTree& tgt : trees) {
      const auto all = enumerate_bi_p_morphisms(src.poset(), tgt.poset());
      for (const PosetMap& f : all) {
        const std::string why = morphism_laws_violation(f);
        c.expect(why.empty(), [&] {
          std::string image;
          for (int y : f.image) image += std::to_string(y) + " ";
          return why + "\nmap " + image + "\n" + show_pair("source", src, "target", tgt);
        });
      }
      const auto least = leq_p(tgt, src);
      c.expect(least.has_value() == !all.empty() && (!least || least->image == all.front().image), [&] {
        return "leq_p disagrees with the exhaustive morphism scan\n" + show_pair("target", tgt, "source", src);
      });
    }
}

void check_antichain_table(Check& c) {
  const int n = c.param("in_t");
  for (int nodes = c.param("min_nodes"); nodes <= c.param("max_nodes"); ++nodes) {
    std::vector<CoTree> items;
    for (const CanonicalCode& code : cotree_codes(nodes)) {
      CoTree t = cotree_from_code(code);
      if (in_T(t, n)) items.push_back(std::move(t));
    }
    const auto leq = leqp_matrix(items);
    const IndexOrder order = [&](int i, int j) { return bool(leq[i][j]); };
    const int count = static_cast<int>(items.size());
    const std::vector<int> chosen = max_antichain(count, order);
    const bool pairwise = is_bad_fragment(chosen, [&](int i, int j) { return order(i, j) || order(j, i); });
    c.expect(pairwise, [&] { return "antichain for N=" + std::to_string(nodes) + " has comparable members"; });
    if (count <= kAntichainScanBound) {
      const auto best = max_antichain_bruteforce(count, order);
      c.expect(best.size() == chosen.size(), [&] {
        return "N=" + std::to_string(nodes) + ": matching gives " + std::to_string(chosen.size()) +
               ", subset scan gives " + std::to_string(best.size());
      });
    } else {
      c.note("N=" + std::to_string(nodes) + ": " + std::to_string(count) + " items, subset scan skipped");
    }
    c.expect(static_cast<int>(chosen.size()) == nodes - 1, [&] {
      return "N=" + std::to_string(nodes) + ": maximum antichain has " + std::to_string(chosen.size()) +
             " members, expected " + std::to_string(nodes - 1);
    });
  }
}

void check_shift_relation(Check& c) {
  const int universe = c.param("universe");
  const std::uint64_t limit = std::uint64_t{1} << universe;
  for (std::uint64_t a = 0; a < limit; ++a)
    for (std::uint64_t b = 0; b < limit; ++b) {
      const FiniteSubset s = FiniteSubset::from_mask(a);
      const FiniteSubset t = FiniteSubset::from_mask(b);
      const bool fast = shift_rel(s, t);
      c.expect(fast == shift_rel_oracle(s, t), [&] {
        return "s = " + to_string(s) + ", t = " + to_string(t) + ": criterion says " + (fast ? "true" : "false");
      });
    }
}

struct CheckEntry {
  std::string name;
  CheckParams defaults;
  void (*body)(Check&);
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries{
      {"t1-singleton", {{"max_nodes", 8}}, check_t1_singleton},
      {"tau-grid", {{"max_param", 4}}, check_tau_grid},
      {"structure-lemma", {{"max_nodes", 8}, {"max_n", 4}}, check_structure_lemma},
      {"comb-oracle", {{"max_nodes", 9}}, check_comb_oracle},
      {"duality-roundtrip", {{"max_nodes", 5}}, check_duality_roundtrip},
      {"fin-duality", {{"max_nodes", 5}}, check_fin_duality},
      {"prelinearity-class", {{"max_nodes", 5}}, check_prelinearity_class},
      {"bilc-class", {{"max_nodes", 5}}, check_bilc_class},
      {"mset-lemma",
       {{"max_entry", 4}, {"max_length", 5}, {"cotree_nodes", 4}, {"cotree_length", 3}},
       check_mset_lemma},
      {"pi-reflection",
       {{"max_nodes", 7}, {"min_n", 3}, {"max_n", 4}, {"injective_nodes", 8}},
       check_pi_reflection},
      {"counterexample", {}, check_counterexample},
      {"comb-chain", {{"max_n", 5}}, check_comb_chain},
      {"ascending-chain", {{"max_t", 3}}, check_ascending_chain},
      {"morphism-laws", {{"max_nodes", 5}}, check_morphism_laws},
      {"antichain-table", {{"in_t", 2}, {"min_nodes", 3}, {"max_nodes", 7}}, check_antichain_table},
      {"shift-relation", {{"universe", 7}}, check_shift_relation},
  };
  return entries;
}

const CheckEntry& find_entry(const std::string& name) {
  for (const CheckEntry& entry : registry())
    if (entry.name == name) return entry;
  throw UnknownCheck("unknown check `" + name + "`");
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const CheckEntry& entry : registry()) out.push_back(entry.name);
    return out;
  }();
  return names;
}

CheckParams default_params(const std::string& name) { return find_entry(name).defaults; }

CheckReport run_check(const std::string& name, const CheckParams& overrides) {
  const CheckEntry& entry = find_entry(name);
  CheckReport report;
  report.name = name;
  report.params = entry.defaults;
  for (const auto& [key, value] : overrides) {
    if (!report.params.contains(key)) throw UsageError("check `" + name + "` has no parameter `" + key + "`");
    report.params[key] = value;
  }
  const auto start = std::chrono::steady_clock::now();
  Check check(report);
  try {
    entry.body(check);
  } catch (const Error& e) {
    check.fail(std::string("error: ") + e.what());
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names, int workers, const CheckParams& overrides) {
  for (const std::string& name : names) {
    const CheckParams defaults = find_entry(name).defaults;
    for (const auto& entry : overrides)
      if (!defaults.contains(entry.first))
        throw UsageError("check `" + name + "` has no parameter `" + entry.first + "`");
  }
  std::vector<CheckReport> reports(names.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) reports[i] = run_check(names[i], overrides);
  };
  const int threads = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(names.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return reports;
}

}  // namespace ctk
