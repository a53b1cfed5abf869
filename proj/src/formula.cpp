#include "ctk/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "ctk/errors.hpp"

namespace ctk {

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::var, std::move(name), nullptr, nullptr}));
}
Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Kind::bottom, {}, nullptr, nullptr})); }
Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Kind::top, {}, nullptr, nullptr})); }

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{kind, {}, std::make_shared<const Formula>(std::move(a)),
                                                   std::make_shared<const Formula>(std::move(b))}));
}
Formula Formula::conj(Formula a, Formula b) { return binary(Kind::conj, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Kind::disj, std::move(a), std::move(b)); }
Formula Formula::imp(Formula a, Formula b) { return binary(Kind::imp, std::move(a), std::move(b)); }
Formula Formula::coimp(Formula a, Formula b) { return binary(Kind::coimp, std::move(a), std::move(b)); }

std::vector<std::string> Formula::variables() const {
  std::set<std::string> names;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    switch (f.kind()) {
      case Kind::var: names.insert(f.name()); break;
      case Kind::bottom:
      case Kind::top: break;
      default:
        walk(f.lhs());
        walk(f.rhs());
    }
  };
  walk(*this);
  return {names.begin(), names.end()};
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::var: return name();
    case Kind::bottom: return "0";
    case Kind::top: return "1";
    case Kind::conj: return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
    case Kind::disj: return "(" + lhs().to_string() + " | " + rhs().to_string() + ")";
    case Kind::imp: return "(" + lhs().to_string() + " -> " + rhs().to_string() + ")";
    case Kind::coimp: return "(" + lhs().to_string() + " <- " + rhs().to_string() + ")";
  }
  return {};
}

bool Formula::operator==(const Formula& other) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::var: return name() == other.name();
    case Kind::bottom:
    case Kind::top: return true;
    default: return lhs() == other.lhs() && rhs() == other.rhs();
  }
}

namespace {

enum class Tok { var, zero, one, tilde, amp, bar, arrow, back_arrow, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t start = i;
      while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= '0' && s[i] <= '9') || s[i] == '_')) ++i;
      out.push_back({Tok::var, s.substr(start, i - start), start});
    } else if (c == '0' || c == '1') {
      out.push_back({c == '0' ? Tok::zero : Tok::one, std::string(1, c), i});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::tilde, "~", i++});
    } else if (c == '&') {
      out.push_back({Tok::amp, "&", i++});
    } else if (c == '|') {
      out.push_back({Tok::bar, "|", i++});
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", i++});
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", i});
      i += 2;
    } else if (c == '<' && i + 1 < s.size() && s[i + 1] == '-') {
      out.push_back({Tok::back_arrow, "<-", i});
      i += 2;
    } else {
      throw ParseError(std::string("unexpected character `") + c + "`", i);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  Formula parse() {
    Formula f = implication_level();
    if (peek().kind != Tok::end) throw ParseError("unexpected `" + peek().text + "`", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  // Operands joined by -> or <-, never both without parentheses.
  Formula implication_level() {
    std::vector<Formula> operands{disjunction()};
    std::optional<Tok> op;
    while (peek().kind == Tok::arrow || peek().kind == Tok::back_arrow) {
      if (op && *op != peek().kind)
        throw ParseError("`->` and `<-` mixed without parentheses", peek().pos);
      op = take().kind;
      operands.push_back(disjunction());
    }
    if (!op) return operands.front();
    if (*op == Tok::arrow) {
      Formula acc = operands.back();
      for (auto it = operands.rbegin() + 1; it != operands.rend(); ++it) acc = Formula::imp(*it, acc);
      return acc;
    }
    Formula acc = operands.front();
    for (auto it = operands.begin() + 1; it != operands.end(); ++it) acc = Formula::coimp(acc, *it);
    return acc;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().kind == Tok::bar) {
      take();
      acc = Formula::disj(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (peek().kind == Tok::amp) {
      take();
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::tilde: return Formula::neg(unary());
      case Tok::var: return Formula::var(t.text);
      case Tok::zero: return Formula::bottom();
      case Tok::one: return Formula::top();
      case Tok::lparen: {
        Formula inner = implication_level();
        if (peek().kind != Tok::rparen) throw ParseError("expected `)`", peek().pos);
        take();
        return inner;
      }
      case Tok::end: throw ParseError("unexpected end of formula", t.pos);
      default: throw ParseError("unexpected `" + t.text + "`", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

Formula prelinearity_axiom() {
  Formula p = Formula::var("p");
  Formula q = Formula::var("q");
  return Formula::disj(Formula::imp(p, q), Formula::imp(q, p));
}

Formula bilc_axiom() {
  Formula p = Formula::var("p");
  Formula q = Formula::var("q");
  return Formula::neg(Formula::conj(Formula::coimp(q, p), Formula::coimp(p, q)));
}

namespace {

ElementSet lookup(const Poset& x, const Valuation& val, const std::string& name) {
  auto it = val.find(name);
  if (it == val.end()) throw ValuationError("variable `" + name + "` is not assigned");
  if (!it->second.subset_of(x.all()) || !x.is_upset(it->second))
    throw ValuationError("value of `" + name + "` is not an upset");
  return it->second;
}

}  // namespace

ElementSet eval_formula(const Poset& x, const Valuation& val, const Formula& phi) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::var: return lookup(x, val, phi.name());
    case K::bottom: return ElementSet{};
    case K::top: return x.all();
    default: break;
  }
  ElementSet a = eval_formula(x, val, phi.lhs());
  ElementSet b = eval_formula(x, val, phi.rhs());
  switch (phi.kind()) {
    case K::conj: return a & b;
    case K::disj: return a | b;
    case K::imp: return x.all() - x.down_closure(a - b);
    case K::coimp: return x.up_closure(a - b);
    default: return ElementSet{};
  }
}

bool forces(const Poset& x, const Valuation& val, const Formula& phi, int point) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::var: return lookup(x, val, phi.name()).contains(point);
    case K::bottom: return false;
    case K::top: return true;
    case K::conj: return forces(x, val, phi.lhs(), point) && forces(x, val, phi.rhs(), point);
    case K::disj: return forces(x, val, phi.lhs(), point) || forces(x, val, phi.rhs(), point);
    case K::imp: {
      // every y ≥ point forcing the antecedent forces the consequent
      bool ok = true;
      x.up(point).for_each([&](int y) {
        if (ok && forces(x, val, phi.lhs(), y) && !forces(x, val, phi.rhs(), y)) ok = false;
      });
      return ok;
    }
    case K::coimp: {
      // some y ≤ point forces the left side but not the right
      bool found = false;
      x.down(point).for_each([&](int y) {
        if (!found && forces(x, val, phi.lhs(), y) && !forces(x, val, phi.rhs(), y)) found = true;
      });
      return found;
    }
  }
  return false;
}

ElementSet kripke_extension(const Poset& x, const Valuation& val, const Formula& phi) {
  ElementSet out;
  for (int p = 0; p < x.size(); ++p)
    if (forces(x, val, phi, p)) out.insert(p);
  return out;
}

ValidityResult is_valid(const Poset& x, const Formula& phi) {
  const std::vector<std::string> vars = phi.variables();
  const std::vector<ElementSet> ups = all_upsets(x);
  double total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= static_cast<double>(ups.size());
  if (total > 1e7) throw SizeError("valuation scan too large");

  std::vector<std::size_t> choice(vars.size(), 0);
  Valuation val;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) val[vars[i]] = ups[choice[i]];
    ElementSet holds = eval_formula(x, val, phi);
    if (holds != x.all()) return ValidityResult{false, val, (x.all() - holds).min()};
    // Last variable varies fastest.
    std::size_t pos = vars.size();
    while (true) {
      if (pos == 0) return ValidityResult{};
      --pos;
      if (++choice[pos] < ups.size()) break;
      choice[pos] = 0;
    }
  }
}

bool subframe_refuted(const Poset& x, const CoTree& y) {
  if (!is_coforest(x)) throw UsageError("subframe criterion requires a co-forest");
  return order_embedding(y.poset(), x).has_value();
}

Formula subframe_formula(const CoTree&) {
  throw UnsupportedFeature("subframe formulas are handled semantically only; their syntax is not constructed");
}

}  // namespace ctk
