#include <doctest.h>

#include <vector>

#include "ctk/errors.hpp"
#include "ctk/morphism.hpp"

using namespace ctk;

namespace {

// Lexicographically least surjective bi-p-morphism, by scanning every map.
std::optional<std::vector<int>> least_surjection_oracle(const Poset& src, const Poset& tgt) {
  for (const PosetMap& f : enumerate_bi_p_morphisms(src, tgt))
    if (f.surjective()) return f.image;
  return std::nullopt;
}

}  // namespace

TEST_CASE("checker reports the first failing condition") {
  const Poset chain2 = chain(2).poset();
  const Poset anti2 = poset_from_covers(2, {});
  const MorphismReport r = check_bi_p_morphism(PosetMap{chain2, anti2, {0, 1}});
  CHECK_FALSE(r.ok);
  CHECK(r.condition == MorphismCondition::order_preserving);
  CHECK(r.x == 0);
  CHECK(r.y == 1);

  // Collapsing the V onto its top preserves order but misses Down at the top.
  const Poset vee = tau(0, 1).poset();
  const MorphismReport up = check_bi_p_morphism(PosetMap{chain2, vee, {1, 2}});
  CHECK(up.condition == MorphismCondition::down);

  // 2-chain onto the singleton is fine; singleton into the 2-chain top fails Down.
  CHECK(check_bi_p_morphism(PosetMap{chain2, chain(1).poset(), {0, 0}}).ok);
  const MorphismReport down = check_bi_p_morphism(PosetMap{chain(1).poset(), chain2, {1}});
  CHECK(down.condition == MorphismCondition::down);
  CHECK(down.x == 0);
  CHECK(down.y == 0);
  const MorphismReport upfail = check_bi_p_morphism(PosetMap{chain(1).poset(), chain2, {0}});
  CHECK(upfail.condition == MorphismCondition::up);
  CHECK(upfail.y == 1);
  CHECK_FALSE(upfail.describe().empty());
}

TEST_CASE("checker shape errors") {
  const Poset chain2 = chain(2).poset();
  CHECK_THROWS_AS(check_bi_p_morphism(PosetMap{chain2, chain2, {0}}), ShapeError);
  CHECK_THROWS_AS(check_bi_p_morphism(PosetMap{chain2, chain2, {0, 2}}), ShapeError);
}

TEST_CASE("enumeration") {
  const Poset chain2 = chain(2).poset();
  CHECK(enumerate_bi_p_morphisms(chain2, chain2).size() == 1);
  CHECK(enumerate_bi_p_morphisms(chain2, chain(1).poset()).size() == 1);
  CHECK(enumerate_bi_p_morphisms(chain(1).poset(), chain2).empty());
  // The V onto the 2-chain: both leaves down, top up.
  const auto maps = enumerate_bi_p_morphisms(tau(0, 1).poset(), chain2);
  REQUIRE(maps.size() == 1);
  CHECK(maps[0].image == std::vector<int>{0, 0, 1});
}

TEST_CASE("leq_p witness for hcomb(1) below comb(2)") {
  // comb(2): c1'=0, c1=1, c2'=2, c2=3; hcomb(1): y0=0, y1'=1, y1=2.
  const auto f = leq_p(hcomb(1), comb(2));
  REQUIRE(f.has_value());
  CHECK(f->image == std::vector<int>{0, 0, 1, 2});
  CHECK(f->surjective());
  CHECK(check_bi_p_morphism(*f).ok);
  CHECK_FALSE(leq_p(comb(2), hcomb(1)).has_value());
}

TEST_CASE("leq_p agrees with the exhaustive scan") {
  const auto trees = enumerate_cotrees(5);
  for (const CoTree& target : trees)
    for (const CoTree& source : trees) {
      const auto f = leq_p(target, source);
      const auto oracle = least_surjection_oracle(source.poset(), target.poset());
      REQUIRE(f.has_value() == oracle.has_value());
      if (f) CHECK(f->image == *oracle);
    }
}

TEST_CASE("leq_p is reflexive and transitive, antisymmetric on codes") {
  const auto trees = enumerate_cotrees(5);
  LeqpCache leq;
  for (const CoTree& t : trees) CHECK(leq(canonical_code(t), canonical_code(t)));
  for (const CoTree& a : trees)
    for (const CoTree& b : trees) {
      const auto ca = canonical_code(a);
      const auto cb = canonical_code(b);
      if (ca != cb) CHECK_FALSE((leq(ca, cb) && leq(cb, ca)));
      for (const CoTree& c : trees)
        if (leq(ca, cb) && leq(cb, canonical_code(c))) CHECK(leq(ca, canonical_code(c)));
    }
}

TEST_CASE("composition of bi-p-morphisms") {
  const auto trees = enumerate_cotrees(4);
  for (const CoTree& a : trees)
    for (const CoTree& b : trees)
      for (const CoTree& c : trees)
        for (const PosetMap& f : enumerate_bi_p_morphisms(a.poset(), b.poset()))
          for (const PosetMap& g : enumerate_bi_p_morphisms(b.poset(), c.poset())) {
            std::vector<int> image;
            for (int y : f.image) image.push_back(g.image[y]);
            CHECK(check_bi_p_morphism(PosetMap{a.poset(), c.poset(), image}).ok);
          }
}

TEST_CASE("poset overload validates input") {
  const Poset lambda = poset_from_covers(3, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(leq_p(lambda, chain(2).poset()), UsageError);
  CHECK(leq_p(chain(1).poset(), chain(3).poset()).has_value());
}

TEST_CASE("cache agrees with direct search") {
  LeqpCache cache;
  const auto trees = enumerate_cotrees(5);
  for (const CoTree& a : trees)
    for (const CoTree& b : trees)
      CHECK(cache(canonical_code(a), canonical_code(b)) == leq_p(a, b).has_value());
}
