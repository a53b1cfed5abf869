#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "ctk/errors.hpp"
#include "ctk/poset.hpp"

using namespace ctk;

namespace {

// Closure by Floyd–Warshall on a boolean matrix, independent of the bitmask code.
std::vector<std::vector<bool>> closure_oracle(int n, const std::vector<Cover>& pairs) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : pairs) r[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

Poset lambda() { return poset_from_covers(3, {{0, 1}, {0, 2}}); }
Poset vee() { return poset_from_covers(3, {{1, 0}, {2, 0}}); }
Poset antichain(int n) { return poset_from_covers(n, {}); }

}  // namespace

TEST_CASE("closure matches the matrix oracle") {
  const std::vector<std::vector<Cover>> samples{
      {{0, 1}, {1, 2}, {2, 3}},
      {{0, 2}, {1, 2}, {2, 4}, {3, 4}},
      {{4, 3}, {3, 0}, {1, 0}, {2, 1}},
      {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}},
  };
  for (const auto& pairs : samples) {
    const Poset p = poset_from_covers(5, pairs);
    const auto r = closure_oracle(5, pairs);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(p.leq(i, j) == r[i][j]);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(poset_from_covers(2, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(poset_from_covers(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
  CHECK_THROWS_AS(poset_from_covers(2, {{0, 2}}), IndexError);
  CHECK_THROWS_AS(poset_from_covers(2, {{-1, 0}}), IndexError);
  CHECK_THROWS_AS(poset_from_covers(65, {}), SizeError);
  CHECK_NOTHROW(poset_from_covers(64, {}));
  CHECK_THROWS_AS(cone(vee(), 3, Direction::up), IndexError);
}

TEST_CASE("cones, covers and extremal points") {
  const Poset p = poset_from_covers(4, {{0, 1}, {1, 2}, {0, 3}, {0, 2}});
  CHECK(p.up(0).elements() == std::vector<int>{0, 1, 2, 3});
  CHECK(p.down(2).elements() == std::vector<int>{0, 1, 2});
  CHECK(p.covers() == std::vector<Cover>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(p.maximal().elements() == std::vector<int>{2, 3});
  CHECK(p.minimal().elements() == std::vector<int>{0});
  CHECK(cone(p, 1, Direction::down).elements() == std::vector<int>{0, 1});
  CHECK(p.up_closure(ElementSet::single(1)).elements() == std::vector<int>{1, 2});
  CHECK(p.is_upset(p.up(1)));
  CHECK_FALSE(p.is_upset(ElementSet::single(1)));
}

TEST_CASE("all_upsets agrees with a subset scan") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      std::vector<ElementSet> expected;
      for (ElementSet::Mask m = 0; m < (ElementSet::Mask{1} << n); ++m) {
        const ElementSet s(m);
        bool closed = true;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (s.contains(x) && p.leq(x, y) && !s.contains(y)) closed = false;
        if (closed) expected.push_back(s);
      }
      std::sort(expected.begin(), expected.end(), canonical_less);
      CHECK(all_upsets(p) == expected);
    }
  CHECK(all_upsets(antichain(3)).size() == 8);
  CHECK(all_upsets(poset_from_covers(3, {{0, 1}, {1, 2}})).size() == 4);
  CHECK(all_upsets(Poset{}).size() == 1);
}

TEST_CASE("poset counts up to isomorphism") {
  const std::vector<std::size_t> expected{1, 2, 5, 16, 63};
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_posets(n).size() == expected[n - 1]);
}

TEST_CASE("enumerated posets are pairwise non-isomorphic") {
  const auto all = enumerate_posets(4);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(isomorphic(all[i], all[j]));
}

TEST_CASE("classification") {
  CHECK(classify(antichain(1)).kind == PosetKind::singleton);
  CHECK(is_chain(poset_from_covers(3, {{0, 1}, {1, 2}})));
  CHECK(is_cotree(vee()));
  CHECK_FALSE(is_cotree(lambda()));
  CHECK_FALSE(is_coforest(lambda()));
  CHECK(is_coforest(antichain(3)));
  CHECK(is_coforest(Poset{}));
  CHECK(is_chain_union(antichain(2)));
  CHECK_FALSE(is_chain_union(vee()));
  CHECK(components(poset_from_covers(4, {{0, 1}, {2, 3}})).size() == 2);

  // The diamond has a top but 0's upset {0,1,2,3} is not a chain.
  const Poset diamond = poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_cotree(diamond));
  CHECK(classify(diamond).kind == PosetKind::other);
}

TEST_CASE("co-forests are exactly posets whose principal upsets are chains") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      bool chains = true;
      for (int x = 0; x < n; ++x)
        for (int a : p.up(x).elements())
          for (int b : p.up(x).elements()) chains = chains && p.comparable(a, b);
      CHECK(is_coforest(p) == chains);
    }
}

TEST_CASE("order embeddings") {
  const Poset chain2 = poset_from_covers(2, {{0, 1}});
  CHECK_FALSE(order_embedding(chain2, antichain(3)).has_value());
  CHECK_FALSE(order_embedding(vee(), poset_from_covers(3, {{0, 1}, {1, 2}})).has_value());
  const auto w = order_embedding(vee(), poset_from_covers(4, {{1, 3}, {2, 3}, {0, 3}}));
  REQUIRE(w.has_value());
  CHECK(is_order_embedding(vee(), poset_from_covers(4, {{1, 3}, {2, 3}, {0, 3}}), *w));
  // Embeddings reflect the order too, so a chain does not embed into an antichain even injectively.
  CHECK_FALSE(is_order_embedding(chain2, antichain(2), EmbeddingWitness{{0, 1}}));
}

TEST_CASE("isomorphism and disjoint union") {
  const Poset a = poset_from_covers(3, {{1, 0}, {2, 0}});
  const Poset b = poset_from_covers(3, {{0, 2}, {1, 2}});
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, lambda()));
  const std::vector<Poset> parts{vee(), antichain(1)};
  const Poset u = disjoint_union(parts);
  CHECK(u.size() == 4);
  CHECK(components(u).size() == 2);
  CHECK(induced(u, ElementSet::full(3)) == vee());
}

TEST_CASE("text format") {
  const Poset p = poset_from_covers(4, {{0, 1}, {1, 2}, {0, 2}, {3, 2}});
  CHECK(format_poset(p) == "poset 4\n0 1\n1 2\n3 2\n");
  CHECK(parse_poset(format_poset(p)) == p);
  CHECK(parse_poset("# comment\nposet 3\n# another\n0 1\n0 2\n") == lambda());
  CHECK(parse_poset("poset 0\n").empty());
  CHECK_THROWS_AS(parse_poset("0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_poset("poset 2\n0\n"), FormatError);
  CHECK_THROWS_AS(parse_poset("poset 2\n0 x\n"), FormatError);
  CHECK_THROWS_AS(parse_poset("poset 2\n0 5\n"), IndexError);
  CHECK_THROWS_AS(parse_poset("poset 2\n0 1\n1 0\n"), CycleError);
}
