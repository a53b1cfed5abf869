#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ctk/cotree.hpp"
#include "ctk/poset.hpp"

using namespace ctk;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int status = cli::run(args, out, err, in);
  return {status, out.str(), err.str()};
}

// Sorted codes of the components, computed independently of the CLI.
std::string expected_codes(const Poset& p) {
  std::vector<CanonicalCode> codes;
  for (ElementSet part : components(p)) codes.push_back(canonical_code(CoTree(induced(p, part))));
  std::sort(codes.begin(), codes.end());
  std::string out = "# codes";
  for (const auto& c : codes) out += " " + c.text;
  return out;
}

}  // namespace

TEST_CASE("enumerate counts") {
  const Result r = run({"enumerate", "--nodes", "4", "--count-only"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 1 2 4\n");
  CHECK(run({"enumerate", "--nodes", "6", "--in-t", "2", "--count-only"}).out == "1 1 2 3 4 5\n");
  const Result listing = run({"enumerate", "--nodes", "3"});
  CHECK(listing.out == "1  ()  comb=0\n2  (())  comb=1\n3  ((()))  comb=1\n3  (()())  comb=1\n1 1 2\n");
  const auto j = nlohmann::json::parse(run({"--json", "enumerate", "--nodes", "5", "--count-only"}).out);
  CHECK(j["counts"] == nlohmann::json::array({1, 1, 2, 4, 9}));
}

TEST_CASE("leq takes TARGET then SOURCE") {
  const Result r = run({"leq", "@comb:1", "@hcomb:1"});
  CHECK(r.status == 0);
  CHECK(r.out == "target (()) <=p source (()())\n0 -> 0\n1 -> 0\n2 -> 1\n");
  const Result reverse = run({"leq", "@hcomb:1", "@comb:1"});
  CHECK(reverse.status == 0);
  CHECK(reverse.out == "target (()()) <=p source (())\nnone\n");
  const auto j = nlohmann::json::parse(run({"leq", "@hcomb:1", "@comb:2", "--json"}).out);
  CHECK(j["witness"].size() == 4);
  CHECK(j["witness"][3]["to"] == 2);
}

TEST_CASE("co-tree inputs from standard input and literals") {
  const Result r = run({"comb", "-"}, "# a 2-comb\nposet 4\n0 1\n1 3\n2 3\n");
  CHECK(r.status == 0);
  CHECK(r.out == "code         ((())())\ncomb_number  2\nleast_class  T_3\n");
  CHECK(run({"decompose", "@chain:4"}).out == "code   (((())))\nupper  tau(2,0)\nparts  1\n  ()\n");
  CHECK(run({"decompose", "@tau:1,2"}).out == "code   ((()()()))\nupper  tau(1,2)\nparts  3\n  ()\n  ()\n  ()\n");
}

TEST_CASE("embed") {
  CHECK(run({"embed", "@comb:2", "@chain:5"}).out == "none\n");
  const Result r = run({"embed", "@chain:2", "@comb:2"});
  CHECK(r.out == "0 -> 0\n1 -> 1\n");
}

TEST_CASE("valid and subframe") {
  const Result lambda = run({"valid", "-", "--axiom", "prelinearity"}, "poset 3\n0 1\n0 2\n");
  CHECK(lambda.status == 0);
  CHECK(lambda.out == "refuted ((p -> q) | (q -> p))\npoint 0\n  p = {1}\n  q = {2}\n");
  CHECK(run({"valid", "@chain:3", "--axiom", "bilc"}).out == "valid (((q <- p) & (p <- q)) -> 0)\n");
  CHECK(run({"valid", "@chain:2", "--formula", "p | ~p"}).out.rfind("refuted", 0) == 0);
  CHECK(run({"subframe", "@comb:3", "--omit", "@comb:2"}).out == "refuted: ((())()) embeds into the frame\n");
  CHECK(run({"subframe", "@chain:5", "--omit", "@comb:2"}).out.rfind("valid", 0) == 0);
}

TEST_CASE("multiset verbs") {
  CHECK(run({"projects", "[1,2]", "[1,2,3]"}).out == "projects [1,2] [1,2,3]: true\n1 -> 1\n2 -> 2\n3 -> 1\n");
  CHECK(run({"projects", "[3]", "[1]"}).out == "projects [3] [1]: false\n");
  CHECK(run({"embeddable", "[@chain:1]", "[@comb:2,@tau:0,1]"}).out.find(": true") != std::string::npos);
  CHECK(run({"projects", "[]", "[]"}).out == "projects [] []: true\n");
  CHECK(run({"projects", "[1]", "[@comb:1]"}).status == 2);
}

TEST_CASE("antichain") {
  const Result r = run({"antichain", "--in-t", "2", "--nodes", "5"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("items 4\nsize  4\n", 0) == 0);
}

TEST_CASE("exit statuses") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"enumerate"}).status == 2);
  CHECK(run({"enumerate", "--nodes", "3", "--bogus"}).status == 2);
  CHECK(run({"verify"}).status == 2);
  CHECK(run({"verify", "--check", "bogus"}).status == 2);
  CHECK(run({"verify", "--all", "--check", "tau-grid"}).status == 2);
  CHECK(run({"leq", "@comb:0", "@comb:1"}).status == 2);
  CHECK(run({"leq", "@spoon:1", "@comb:1"}).status == 2);
  CHECK(run({"leq", "/nonexistent/file", "@comb:1"}).status == 2);
  CHECK(run({"comb", "-"}, "poset 3\n0 1\n0 2\n").status == 2);
  CHECK(run({"valid", "@chain:2", "--formula", "p -> q <- r"}).status == 2);
  CHECK(run({"valid", "@chain:2"}).status == 2);
  CHECK(run({"valid", "@chain:2", "--axiom", "excluded-middle"}).status == 2);
  const Result unsupported = run({"subframe", "@comb:3", "--omit", "@comb:2", "--print-formula"});
  CHECK(unsupported.status == 2);
  CHECK(unsupported.err.find("error:") == 0);
  CHECK(run({"verify", "--check", "counterexample"}).status == 0);
  CHECK(run({"verify", "--check", "antichain-table", "--param", "in_t=3", "--param", "max_nodes=4"}).status == 1);
  CHECK(run({"verify", "--check", "tau-grid", "--param", "max_param"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("output is byte-identical across runs and worker counts") {
  const std::vector<std::vector<std::string>> commands{
      {"enumerate", "--nodes", "6"},
      {"leq", "@hcomb:2", "@comb:3"},
      {"dual", "@tau:1,2"},
      {"--json", "dual", "@comb:2"},
      {"antichain", "--in-t", "3", "--nodes", "5"},
      {"verify", "--check", "comb-chain", "--check", "shift-relation", "--check", "counterexample"},
      {"--json", "verify", "--check", "ascending-chain", "--check", "t1-singleton"},
  };
  for (const auto& cmd : commands) {
    ::setenv("CTK_WORKERS", "1", 1);
    const Result first = run(cmd);
    const Result second = run(cmd);
    ::setenv("CTK_WORKERS", "4", 1);
    const Result parallel = run(cmd);
    CHECK(first.out == second.out);
    CHECK(first.out == parallel.out);
    CHECK(first.status == parallel.status);
  }
  ::unsetenv("CTK_WORKERS");
}

TEST_CASE("dual then dualize-back reproduces the co-forest") {
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      if (!is_coforest(p)) continue;
      const Result dual = run({"dual", "-"}, format_poset(p));
      REQUIRE(dual.status == 0);
      const Result back = run({"dualize-back"}, dual.out);
      REQUIRE(back.status == 0);
      const std::string first_line = back.out.substr(0, back.out.find('\n'));
      CHECK(first_line == expected_codes(p));
      CHECK(isomorphic(parse_poset(back.out), p));
      ++checked;
    }
  CHECK(checked > 30);
}
