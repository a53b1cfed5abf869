#include <doctest.h>

#include <sstream>

#include "ctk/cotree.hpp"
#include "ctk/duality.hpp"
#include "ctk/errors.hpp"

using namespace ctk;

namespace {

int idx(const FiniteBHA& a, ElementSet s) {
  const auto i = a.index_of(s);
  REQUIRE(i.has_value());
  return *i;
}

std::string dump(const FiniteBHA& a) {
  std::ostringstream out;
  write_algebra(out, a);
  return out.str();
}

}  // namespace

TEST_CASE("sizes of small dual algebras") {
  CHECK(dual_algebra(chain(1).poset()).size() == 2);
  CHECK(dual_algebra(chain(2).poset()).size() == 3);
  CHECK(dual_algebra(poset_from_covers(2, {})).size() == 4);
  CHECK(dual_algebra(tau(0, 1).poset()).size() == 5);
  CHECK_THROWS_AS(dual_algebra(Poset{}), EmptyPosetError);
}

TEST_CASE("operations on the dual of the V") {
  // Leaves 0 and 1 below the top 2.
  const FiniteBHA a = dual_algebra(tau(0, 1).poset());
  const int left = idx(a, {0, 2});
  const int right = idx(a, {1, 2});
  const int top_only = idx(a, {2});
  CHECK(a.element(a.bottom()).empty());
  CHECK(a.element(a.top()) == ElementSet({0, 1, 2}));
  CHECK(a.meet(left, right) == top_only);
  CHECK(a.join(left, right) == a.top());
  CHECK(a.imp(left, right) == right);
  CHECK(a.coimp(left, right) == left);
  CHECK(a.imp(top_only, a.bottom()) == a.bottom());
  CHECK(a.coimp(a.top(), top_only) == a.top());
  CHECK(a.coimp(top_only, a.bottom()) == top_only);
  CHECK(a.leq(top_only, left));
  CHECK_FALSE(a.leq(left, right));
}

TEST_CASE("residuation and the defining equations hold on every small dual") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const FiniteBHA a = dual_algebra(p);
      CHECK(residuation_holds(a));
      CHECK(first_failing_equation(a) == 0);
    }
}

TEST_CASE("a corrupted table is caught") {
  const FiniteBHA good = dual_algebra(chain(2).poset());
  std::vector<int> imp;
  std::vector<int> coimp;
  for (int i = 0; i < good.size(); ++i)
    for (int j = 0; j < good.size(); ++j) {
      imp.push_back(good.imp(i, j));
      coimp.push_back(good.coimp(i, j));
    }
  imp[0] = good.bottom();  // 0 → 0 must be the top
  const FiniteBHA bad(good.universe(), imp, coimp);
  CHECK_FALSE(residuation_holds(bad));
  CHECK(first_failing_equation(bad) != 0);
}

TEST_CASE("join-irreducibles are the principal upsets") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      const FiniteBHA a = dual_algebra(p);
      const auto j = join_irreducibles(a);
      CHECK(static_cast<int>(j.size()) == p.size());
      for (int x = 0; x < p.size(); ++x)
        CHECK(std::find(j.begin(), j.end(), idx(a, p.up(x))) != j.end());
    }
}

TEST_CASE("prime filters recover the poset") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) CHECK(isomorphic(prime_filter_poset(dual_algebra(p)), p));
}

TEST_CASE("algebra embeddings mirror surjective bi-p-morphisms") {
  const FiniteBHA two_chain = dual_algebra(chain(2).poset());
  const FiniteBHA vee = dual_algebra(tau(0, 1).poset());
  const auto e = algebra_embedding(two_chain, vee);
  REQUIRE(e.has_value());
  CHECK(is_algebra_embedding(two_chain, vee, *e));
  CHECK_FALSE(algebra_embedding(vee, two_chain).has_value());
  // The Boolean algebra of the 2-antichain does not embed into the dual of the V.
  CHECK_FALSE(algebra_embedding(dual_algebra(poset_from_covers(2, {})), vee).has_value());
  CHECK_FALSE(is_algebra_embedding(two_chain, vee, AlgebraEmbeddingWitness{{0, 0, 4}}));
}

TEST_CASE("dump format round trip") {
  const FiniteBHA a = dual_algebra(tau(1, 1).poset());
  const std::string text = dump(a);
  CHECK(text.rfind("bha 6\n{}\n", 0) == 0);
  std::istringstream in(text);
  CHECK(dump(read_algebra(in)) == text);

  // Without the tables the operations are recomputed from the universe.
  std::string bare;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("imp", 0) != 0 && line.rfind("coimp", 0) != 0) bare += line + "\n";
  std::istringstream bare_in(bare);
  CHECK(dump(read_algebra(bare_in)) == text);
}

TEST_CASE("dump format errors") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_algebra(in);
  };
  CHECK_THROWS_AS(parse("{}\n"), FormatError);
  CHECK_THROWS_AS(parse("bha 2\n{}\n"), FormatError);
  CHECK_THROWS_AS(parse("bha 2\n{}\n{0}\n{1}\n"), FormatError);
  CHECK_THROWS_AS(parse("bha 3\n{}\n{0}\n{1}\n"), FormatError);
  CHECK_THROWS_AS(parse("bha 2\n{}\n{0\n"), FormatError);
  CHECK_THROWS_AS(parse("bha 2\n{}\n{0}\nimp 0 0 -> 1\n"), FormatError);
  CHECK(format_element_set({0, 3}) == "{0,3}");
}
