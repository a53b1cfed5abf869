#include <doctest.h>

#include <vector>

#include "ctk/errors.hpp"
#include "ctk/morphism.hpp"
#include "ctk/multiset.hpp"

using namespace ctk;

namespace {

using Ms = Multiset<long>;
const OrderOracle<long> le = [](const long& a, const long& b) { return a <= b; };

// N << M by recursion over M's occurrences, tracking which N occurrences are hit.
bool projects_oracle(const Ms& n, const Ms& m, std::size_t j, std::vector<bool>& hit) {
  if (j == m.length()) {
    for (bool h : hit)
      if (!h) return false;
    return true;
  }
  for (std::size_t i = 0; i < n.length(); ++i) {
    if (n[i] > m[j]) continue;
    const bool before = hit[i];
    hit[i] = true;
    if (projects_oracle(n, m, j + 1, hit)) return true;
    hit[i] = before;
  }
  return false;
}

bool projects_oracle(const Ms& n, const Ms& m) {
  std::vector<bool> hit(n.length(), false);
  return projects_oracle(n, m, 0, hit);
}

// N ⪯ M by recursion over N's occurrences, tracking used M occurrences.
bool embeds_oracle(const Ms& n, const Ms& m, std::size_t i, std::vector<bool>& used) {
  if (i == n.length()) return true;
  for (std::size_t j = 0; j < m.length(); ++j) {
    if (used[j] || n[i] > m[j]) continue;
    used[j] = true;
    if (embeds_oracle(n, m, i + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

std::vector<Ms> small_multisets(long max_entry, std::size_t max_length) {
  std::vector<Ms> out{Ms{}};
  std::vector<std::vector<long>> frontier{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<long>> next;
    for (const auto& seq : frontier)
      for (long v = seq.empty() ? 0 : seq.back(); v <= max_entry; ++v) {
        auto grown = seq;
        grown.push_back(v);
        out.emplace_back(grown);
        next.push_back(grown);
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical storage") {
  const Ms a{3, 1, 2, 1};
  CHECK(a.occurrences() == std::vector<long>{1, 1, 2, 3});
  CHECK(a.length() == 4);
  CHECK(a.entries() == std::vector<std::pair<long, int>>{{1, 2}, {2, 1}, {3, 1}});
  CHECK(a == Ms{1, 2, 3, 1});
  CHECK(Ms{}.empty());
}

TEST_CASE("projection examples") {
  CHECK(projects(Ms{1, 2}, Ms{1, 2, 3}, le).has_value());
  CHECK_FALSE(projects(Ms{3}, Ms{1}, le).has_value());
  CHECK_FALSE(projects(Ms{0, 0}, Ms{5}, le).has_value());
  CHECK_FALSE(projects(Ms{2}, Ms{1, 3}, le).has_value());
  CHECK(projects(Ms{1}, Ms{1, 3, 4}, le).has_value());
}

TEST_CASE("empty multiset conventions") {
  CHECK(projects(Ms{}, Ms{}, le).has_value());
  CHECK_FALSE(projects(Ms{}, Ms{1}, le).has_value());
  CHECK_FALSE(projects(Ms{1}, Ms{}, le).has_value());
  CHECK(projects_bruteforce(Ms{}, Ms{}, le).has_value());
  CHECK_FALSE(projects_bruteforce(Ms{}, Ms{1}, le).has_value());
  CHECK_FALSE(projects_bruteforce(Ms{1}, Ms{}, le).has_value());
  CHECK(embeddable(Ms{}, Ms{2}, le).has_value());
}

TEST_CASE("embeddability examples") {
  CHECK(embeddable(Ms{1, 1}, Ms{1, 2}, le).has_value());
  CHECK_FALSE(embeddable(Ms{2, 2}, Ms{1, 3}, le).has_value());
  CHECK_FALSE(embeddable(Ms{1, 1, 1}, Ms{5, 5}, le).has_value());
}

TEST_CASE("scan bound") {
  CHECK_THROWS_AS(projects_bruteforce(Ms{0}, Ms{0, 0, 0, 0, 0, 0, 0, 0, 0}, le), SizeError);
  CHECK_NOTHROW(projects_bruteforce(Ms{0}, Ms{0, 0, 0, 0, 0, 0, 0, 0}, le));
}

TEST_CASE("fast paths agree with recursive oracles over naturals") {
  const auto all = small_multisets(3, 4);
  for (const Ms& n : all)
    for (const Ms& m : all) {
      const auto p = projects(n, m, le);
      CHECK(p.has_value() == projects_oracle(n, m));
      CHECK(projects_bruteforce(n, m, le).has_value() == p.has_value());
      if (p) CHECK(is_projection_witness(n, m, le, *p));
      std::vector<bool> used(m.length(), false);
      const auto e = embeddable(n, m, le);
      CHECK(e.has_value() == embeds_oracle(n, m, 0, used));
      if (e) CHECK(is_embedding_witness(n, m, le, *e));
    }
}

TEST_CASE("<< is a partial order on naturals") {
  const auto all = small_multisets(2, 3);
  for (const Ms& a : all) {
    CHECK(projects(a, a, le).has_value());
    for (const Ms& b : all) {
      if (projects(a, b, le) && projects(b, a, le)) CHECK(a == b);
      for (const Ms& c : all)
        if (projects(a, b, le) && projects(b, c, le)) CHECK(projects(a, c, le).has_value());
    }
  }
}

TEST_CASE("witness checkers reject bad maps") {
  CHECK_FALSE(is_projection_witness(Ms{1, 2}, Ms{2, 3}, le, MsetMapWitness{{0, 0}}));
  CHECK_FALSE(is_projection_witness(Ms{2}, Ms{1}, le, MsetMapWitness{{0}}));
  CHECK(is_projection_witness(Ms{1, 2}, Ms{2, 3}, le, MsetMapWitness{{1, 0}}));
  CHECK_FALSE(is_embedding_witness(Ms{1, 1}, Ms{2, 3}, le, MsetMapWitness{{0, 0}}));
}

TEST_CASE("co-tree multisets under leq_p") {
  LeqpCache cache;
  OrderOracle<CanonicalCode> leq = [&](const CanonicalCode& a, const CanonicalCode& b) { return cache(a, b); };
  const CanonicalCode point{"()"};
  const CanonicalCode chain2{"(())"};
  const CanonicalCode vee{"(()())"};
  using Mc = Multiset<CanonicalCode>;
  CHECK(projects(Mc{point, point}, Mc{vee, chain2}, leq).has_value());
  CHECK(projects(Mc{chain2}, Mc{vee, chain2}, leq).has_value());
  CHECK_FALSE(projects(Mc{vee}, Mc{chain2, chain2}, leq).has_value());
  CHECK_FALSE(projects(Mc{vee, point}, Mc{vee}, leq).has_value());
}
