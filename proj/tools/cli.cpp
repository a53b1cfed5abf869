#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctk/analysis.hpp"
#include "ctk/duality.hpp"
#include "ctk/errors.hpp"
#include "ctk/formula.hpp"
#include "ctk/literals.hpp"

namespace ctk::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
  std::ostream& out;
  std::istream& in;
  bool json = false;

  void emit(const Json& j) { out << j.dump(2) << "\n"; }
};

Poset load(Context& ctx, const std::string& source) {
  if (source == "-") return read_poset(ctx.in);
  return load_poset(source);
}

CoTree load_cotree(Context& ctx, const std::string& source) {
  Poset p = load(ctx, source);
  if (!is_cotree(p)) throw UsageError("`" + source + "` is not a co-tree");
  return CoTree(std::move(p));
}

// Sorted canonical codes of the components of a co-forest.
std::vector<std::string> forest_codes(const Poset& p) {
  std::vector<std::string> codes;
  for (ElementSet part : components(p)) codes.push_back(canonical_code(CoTree(induced(p, part))).text);
  std::sort(codes.begin(), codes.end(),
            [](const std::string& a, const std::string& b) { return CanonicalCode{a} < CanonicalCode{b}; });
  return codes;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

Json map_json(const std::vector<int>& image) {
  Json j = Json::array();
  for (std::size_t x = 0; x < image.size(); ++x) j.push_back({{"from", x}, {"to", image[x]}});
  return j;
}

void print_map(std::ostream& out, const std::vector<int>& image) {
  for (std::size_t x = 0; x < image.size(); ++x) out << x << " -> " << image[x] << "\n";
}

int cmd_enumerate(Context& ctx, int nodes, int in_t, bool count_only) {
  if (nodes < 1) throw UsageError("--nodes must be positive");
  if (in_t == 0 || in_t < -1) throw UsageError("--in-t must be positive");
  auto keep = [&](const CoTree& t) { return in_t < 0 || in_T(t, in_t); };
  std::vector<long> counts;
  Json listing = Json::array();
  std::ostringstream table;
  for (int n = 1; n <= nodes; ++n) {
    long count = 0;
    for (const CanonicalCode& code : cotree_codes(n)) {
      const CoTree t = cotree_from_code(code);
      if (!keep(t)) continue;
      ++count;
      if (count_only) continue;
      const int cn = comb_number(t);
      listing.push_back({{"nodes", n}, {"code", code.text}, {"comb_number", cn}});
      table << n << "  " << code.text << "  comb=" << cn << "\n";
    }
    counts.push_back(count);
  }
  if (ctx.json) {
    Json j{{"counts", counts}};
    if (!count_only) j["cotrees"] = listing;
    ctx.emit(j);
  } else {
    if (!count_only) ctx.out << table.str();
    std::vector<std::string> words;
    for (long c : counts) words.push_back(std::to_string(c));
    ctx.out << join(words, " ") << "\n";
  }
  return kOk;
}

int cmd_comb(Context& ctx, const std::string& file) {
  const CoTree t = load_cotree(ctx, file);
  const int cn = comb_number(t);
  if (ctx.json)
    ctx.emit({{"code", canonical_code(t).text}, {"comb_number", cn}, {"least_class", cn + 1}});
  else
    ctx.out << "code         " << canonical_code(t).text << "\ncomb_number  " << cn << "\nleast_class  T_" << cn + 1
            << "\n";
  return kOk;
}

int cmd_decompose(Context& ctx, const std::string& file) {
  const CoTree t = load_cotree(ctx, file);
  const Decomposition d = decompose(t);
  std::vector<std::string> parts;
  for (const CanonicalCode& c : d.parts.occurrences()) parts.push_back(c.text);
  if (ctx.json) {
    ctx.emit({{"code", canonical_code(t).text}, {"m", d.m}, {"k", d.k}, {"parts", parts}});
  } else {
    ctx.out << "code   " << canonical_code(t).text << "\nupper  tau(" << d.m << "," << d.k << ")\nparts  "
            << parts.size() << "\n";
    for (const std::string& p : parts) ctx.out << "  " << p << "\n";
  }
  return kOk;
}

int cmd_leq(Context& ctx, const std::string& target_src, const std::string& source_src) {
  const CoTree target = load_cotree(ctx, target_src);
  const CoTree source = load_cotree(ctx, source_src);
  const auto f = leq_p(target, source);
  if (ctx.json) {
    ctx.emit({{"target", canonical_code(target).text},
              {"source", canonical_code(source).text},
              {"witness", f ? map_json(f->image) : Json(nullptr)}});
    return kOk;
  }
  ctx.out << "target " << canonical_code(target).text << " <=p source " << canonical_code(source).text << "\n";
  if (f)
    print_map(ctx.out, f->image);
  else
    ctx.out << "none\n";
  return kOk;
}

int cmd_embed(Context& ctx, const std::string& src_file, const std::string& tgt_file) {
  const Poset src = load(ctx, src_file);
  const Poset tgt = load(ctx, tgt_file);
  const auto w = order_embedding(src, tgt);
  if (ctx.json) {
    ctx.emit({{"witness", w ? map_json(w->map) : Json(nullptr)}});
  } else if (w) {
    print_map(ctx.out, w->map);
  } else {
    ctx.out << "none\n";
  }
  return kOk;
}

int cmd_dual(Context& ctx, const std::string& file) {
  const FiniteBHA a = dual_algebra(load(ctx, file));
  if (ctx.json) {
    Json universe = Json::array();
    for (ElementSet s : a.universe()) universe.push_back(s.elements());
    Json imp = Json::array();
    Json coimp = Json::array();
    for (int i = 0; i < a.size(); ++i) {
      Json imp_row = Json::array();
      Json coimp_row = Json::array();
      for (int j = 0; j < a.size(); ++j) {
        imp_row.push_back(a.imp(i, j));
        coimp_row.push_back(a.coimp(i, j));
      }
      imp.push_back(imp_row);
      coimp.push_back(coimp_row);
    }
    ctx.emit({{"size", a.size()}, {"universe", universe}, {"imp", imp}, {"coimp", coimp}});
  } else {
    write_algebra(ctx.out, a);
  }
  return kOk;
}

int cmd_dualize_back(Context& ctx, const std::string& file) {
  FiniteBHA a = [&] {
    if (file == "-") return read_algebra(ctx.in);
    std::ifstream f(file);
    if (!f) throw UsageError("cannot open `" + file + "`");
    return read_algebra(f);
  }();
  const Poset p = prime_filter_poset(a);
  const bool forest = is_coforest(p);
  const std::vector<std::string> codes = forest ? forest_codes(p) : std::vector<std::string>{};
  if (ctx.json) {
    Json j{{"poset", format_poset(p)}};
    j["codes"] = forest ? Json(codes) : Json(nullptr);
    ctx.emit(j);
  } else {
    if (forest) ctx.out << "# codes " << join(codes, " ") << "\n";
    write_poset(ctx.out, p);
  }
  return kOk;
}

int cmd_valid(Context& ctx, const std::string& file, const std::string& formula_text, const std::string& axiom) {
  if (formula_text.empty() == axiom.empty()) throw UsageError("give exactly one of --formula and --axiom");
  Formula phi = Formula::top();
  if (!axiom.empty()) {
    if (axiom == "prelinearity")
      phi = prelinearity_axiom();
    else if (axiom == "bilc")
      phi = bilc_axiom();
    else
      throw UsageError("unknown axiom `" + axiom + "`");
  } else {
    phi = parse_formula(formula_text);
  }
  const Poset x = load(ctx, file);
  const ValidityResult r = is_valid(x, phi);
  if (ctx.json) {
    Json j{{"formula", phi.to_string()}, {"valid", r.valid}};
    if (!r.valid) {
      Json val = Json::object();
      for (const auto& [name, value] : r.counter_valuation) val[name] = value.elements();
      j["valuation"] = val;
      j["point"] = r.refuting_point;
    }
    ctx.emit(j);
  } else if (r.valid) {
    ctx.out << "valid " << phi.to_string() << "\n";
  } else {
    ctx.out << "refuted " << phi.to_string() << "\npoint " << r.refuting_point << "\n";
    for (const auto& [name, value] : r.counter_valuation) ctx.out << "  " << name << " = " << format_element_set(value) << "\n";
  }
  return kOk;
}

int cmd_subframe(Context& ctx, const std::string& file, const std::string& omit, bool print_formula) {
  if (!is_cotree_literal(omit)) throw UsageError("--omit expects a co-tree literal such as @comb:2");
  const CoTree y = parse_cotree_literal(omit);
  if (print_formula) subframe_formula(y);
  const Poset x = load(ctx, file);
  const bool refuted = subframe_refuted(x, y);
  if (ctx.json)
    ctx.emit({{"omit", canonical_code(y).text}, {"refuted", refuted}});
  else
    ctx.out << (refuted ? "refuted" : "valid") << ": " << canonical_code(y).text
            << (refuted ? " embeds into the frame" : " does not embed into the frame") << "\n";
  return kOk;
}

int cmd_antichain(Context& ctx, int in_t, int nodes) {
  if (in_t < 1 || nodes < 1) throw UsageError("--in-t and --nodes must be positive");
  std::vector<CoTree> items;
  for (const CanonicalCode& code : cotree_codes(nodes)) {
    CoTree t = cotree_from_code(code);
    if (in_T(t, in_t)) items.push_back(std::move(t));
  }
  const std::vector<int> chosen = max_antichain(items);
  std::vector<std::string> codes;
  for (int i : chosen) codes.push_back(canonical_code(items[i]).text);
  if (ctx.json) {
    ctx.emit({{"items", items.size()}, {"size", chosen.size()}, {"antichain", codes}});
  } else {
    ctx.out << "items " << items.size() << "\nsize  " << chosen.size() << "\n";
    for (const std::string& c : codes) ctx.out << "  " << c << "\n";
  }
  return kOk;
}

int worker_count() {
  const char* raw = std::getenv("CTK_WORKERS");
  if (!raw) return 1;
  try {
    return std::max(1, std::stoi(raw));
  } catch (const std::exception&) {
    return 1;
  }
}

CheckParams parse_overrides(const std::vector<std::string>& items) {
  CheckParams out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects KEY=VALUE, got `" + item + "`");
    try {
      std::size_t used = 0;
      const int value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[item.substr(0, eq)] = value;
    } catch (const std::exception&) {
      throw UsageError("--param value must be an integer, got `" + item + "`");
    }
  }
  return out;
}

int cmd_verify(Context& ctx, std::vector<std::string> names, bool all, bool timing,
               const std::vector<std::string>& params) {
  if (all) {
    if (!names.empty()) throw UsageError("--all and --check are exclusive");
    names = check_names();
  }
  if (names.empty()) throw UsageError("verify needs --check NAME or --all");
  const std::vector<CheckReport> reports = run_checks(names, worker_count(), parse_overrides(params));
  const long passed = std::ranges::count_if(reports, [](const CheckReport& r) { return r.passed; });
  if (ctx.json) {
    ctx.out << reports_to_json(reports, timing) << "\n";
  } else {
    for (const CheckReport& r : reports) ctx.out << r.to_text(timing);
    ctx.out << "passed " << passed << "/" << reports.size() << "\n";
  }
  return passed == static_cast<long>(reports.size()) ? kOk : kCheckFailed;
}

template <typename T, typename Show>
int multiset_relation(Context& ctx, const char* relation, const Multiset<T>& n, const Multiset<T>& m,
                      const OrderOracle<T>& ord, Show show) {
  const bool is_projects = std::string(relation) == "projects";
  const auto w = is_projects ? projects(n, m, ord) : embeddable(n, m, ord);
  auto render = [&](const Multiset<T>& ms) {
    std::vector<std::string> items;
    for (const T& item : ms.occurrences()) items.push_back(show(item));
    return items;
  };
  if (ctx.json) {
    ctx.emit({{"relation", relation},
              {"n", render(n)},
              {"m", render(m)},
              {"holds", w.has_value()},
              {"assignment", w ? Json(w->assignment) : Json(nullptr)}});
    return kOk;
  }
  ctx.out << relation << " [" << join(render(n), ",") << "] [" << join(render(m), ",") << "]: "
          << (w ? "true" : "false") << "\n";
  if (w) {
    const auto& from = is_projects ? m : n;
    const auto& to = is_projects ? n : m;
    for (std::size_t i = 0; i < w->assignment.size(); ++i)
      ctx.out << show(from[i]) << " -> " << show(to[w->assignment[i]]) << "\n";
  }
  return kOk;
}

int cmd_multiset(Context& ctx, const char* relation, const std::string& lhs, const std::string& rhs) {
  MultisetLiteral a = parse_multiset_literal(lhs);
  MultisetLiteral b = parse_multiset_literal(rhs);
  // An empty literal adopts the other side's carrier.
  if (a.index() != b.index()) {
    if (std::holds_alternative<Multiset<long>>(a) && std::get<Multiset<long>>(a).empty())
      a = Multiset<CanonicalCode>{};
    else if (std::holds_alternative<Multiset<long>>(b) && std::get<Multiset<long>>(b).empty())
      b = Multiset<CanonicalCode>{};
    else
      throw CarrierMismatch("multisets over different carriers");
  }
  if (std::holds_alternative<Multiset<long>>(a)) {
    OrderOracle<long> le = [](const long& x, const long& y) { return x <= y; };
    return multiset_relation(ctx, relation, std::get<Multiset<long>>(a), std::get<Multiset<long>>(b), le,
                             [](long v) { return std::to_string(v); });
  }
  LeqpCache cache;
  OrderOracle<CanonicalCode> leqp = [&](const CanonicalCode& x, const CanonicalCode& y) { return cache(x, y); };
  return multiset_relation(ctx, relation, std::get<Multiset<CanonicalCode>>(a), std::get<Multiset<CanonicalCode>>(b),
                           leqp, [](const CanonicalCode& c) { return c.text; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Co-tree and bi-Gödel frame toolkit", "cotree"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, in};
  app.add_flag("--json", ctx.json, "Machine-readable JSON output");

  int nodes = 0;
  int in_t = -1;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List co-trees up to isomorphism");
  enumerate->add_option("--nodes", nodes, "Largest node count")->required();
  enumerate->add_option("--in-t", in_t, "Keep only members of T_n");
  enumerate->add_flag("--count-only", count_only, "Print counts per node count");

  std::string file;
  auto* comb_cmd = app.add_subcommand("comb", "Comb number of a co-tree");
  comb_cmd->add_option("FILE", file, "Poset file, - or @literal")->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "Upper chain and grafted parts");
  decompose_cmd->add_option("FILE", file, "Poset file, - or @literal")->required();

  std::string first;
  std::string second;
  auto* leq = app.add_subcommand("leq", "Is TARGET a bi-p-morphic image of SOURCE");
  leq->add_option("TARGET", first, "Image co-tree")->required();
  leq->add_option("SOURCE", second, "Domain co-tree")->required();
  auto* embed = app.add_subcommand("embed", "Order embedding SRC into TGT");
  embed->add_option("SRC", first)->required();
  embed->add_option("TGT", second)->required();

  auto* dual = app.add_subcommand("dual", "Algebra of upsets");
  dual->add_option("FILE", file)->required();
  std::string algebra_file = "-";
  auto* dualize_back = app.add_subcommand("dualize-back", "Prime-filter poset of an algebra dump");
  dualize_back->add_option("FILE", algebra_file, "Algebra dump, default standard input");

  std::string formula_text;
  std::string axiom;
  auto* valid = app.add_subcommand("valid", "Validity of a formula on a frame");
  valid->add_option("FILE", file)->required();
  valid->add_option("--formula", formula_text);
  valid->add_option("--axiom", axiom, "prelinearity or bilc");

  std::string omit;
  bool print_formula = false;
  auto* subframe = app.add_subcommand("subframe", "Refutation of a subframe formula");
  subframe->add_option("FILE", file)->required();
  subframe->add_option("--omit", omit, "Co-tree literal")->required();
  subframe->add_flag("--print-formula", print_formula);

  auto* antichain = app.add_subcommand("antichain", "Maximum antichain of T_n co-trees with N nodes");
  antichain->add_option("--in-t", in_t)->required();
  antichain->add_option("--nodes", nodes)->required();

  std::vector<std::string> checks;
  bool all = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run named checks");
  verify->add_option("--check", checks, "Check name, repeatable");
  verify->add_flag("--all", all);
  verify->add_flag("--timing", timing, "Include wall times");
  std::vector<std::string> params;
  verify->add_option("--param", params, "KEY=VALUE override for the selected checks");

  auto* projects_cmd = app.add_subcommand("projects", "N << M for multiset literals");
  projects_cmd->add_option("N", first)->required();
  projects_cmd->add_option("M", second)->required();
  auto* embeddable_cmd = app.add_subcommand("embeddable", "N embeds into M for multiset literals");
  embeddable_cmd->add_option("N", first)->required();
  embeddable_cmd->add_option("M", second)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(ctx, nodes, in_t, count_only);
    if (comb_cmd->parsed()) return cmd_comb(ctx, file);
    if (decompose_cmd->parsed()) return cmd_decompose(ctx, file);
    if (leq->parsed()) return cmd_leq(ctx, first, second);
    if (embed->parsed()) return cmd_embed(ctx, first, second);
    if (dual->parsed()) return cmd_dual(ctx, file);
    if (dualize_back->parsed()) return cmd_dualize_back(ctx, algebra_file);
    if (valid->parsed()) return cmd_valid(ctx, file, formula_text, axiom);
    if (subframe->parsed()) return cmd_subframe(ctx, file, omit, print_formula);
    if (antichain->parsed()) return cmd_antichain(ctx, in_t, nodes);
    if (verify->parsed()) return cmd_verify(ctx, checks, all, timing, params);
    if (projects_cmd->parsed()) return cmd_multiset(ctx, "projects", first, second);
    if (embeddable_cmd->parsed()) return cmd_multiset(ctx, "embeddable", first, second);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ctk::cli
