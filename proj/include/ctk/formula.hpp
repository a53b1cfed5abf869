#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctk/cotree.hpp"
#include "ctk/element_set.hpp"
#include "ctk/poset.hpp"

namespace ctk {

/// Bi-intuitionistic formula: variables, ⊥/⊤ and the connectives ∧, ∨, →, ←.
/// ¬φ is represented as φ → ⊥. Nodes are immutable and shared.
class Formula {
 public:
  enum class Kind { var, bottom, top, conj, disj, imp, coimp };

  static Formula var(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula coimp(Formula a, Formula b);
  static Formula neg(Formula a) { return imp(std::move(a), bottom()); }

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  /// Sorted, duplicate-free variable names.
  std::vector<std::string> variables() const;

  /// Fully parenthesised rendering in the input grammar.
  std::string to_string() const;

  bool operator==(const Formula& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Kind kind, Formula a, Formula b);

  std::shared_ptr<const Node> node_;
};

/// Grammar: variables [a-z][a-z0-9_]*, constants 0 and 1, prefix ~, infix
/// &, |, -> (right-assoc) and <- (left-assoc), binding tightest to loosest in
/// that order; -> and <- share the loosest level and may not be mixed there
/// without parentheses. Throws ParseError.
Formula parse_formula(const std::string& text);

/// (p → q) ∨ (q → p)
Formula prelinearity_axiom();
/// ¬((q ← p) ∧ (p ← q))
Formula bilc_axiom();

using Valuation = std::map<std::string, ElementSet>;

/// Upset of points forcing φ, computed with the algebra operations on Up(X).
/// Throws ValuationError for unassigned variables or non-upset values.
ElementSet eval_formula(const Poset& x, const Valuation& val, const Formula& phi);

/// Kripke forcing at a single point.
bool forces(const Poset& x, const Valuation& val, const Formula& phi, int point);

/// Points forcing φ, by pointwise Kripke semantics.
ElementSet kripke_extension(const Poset& x, const Valuation& val, const Formula& phi);

struct ValidityResult {
  bool valid = true;
  Valuation counter_valuation;  ///< first refuting valuation when invalid
  int refuting_point = -1;      ///< least point not forcing φ under it
};

/// Checks φ under every upset valuation; valuations are scanned with the
/// first variable (alphabetically) most significant and upsets in
/// all_upsets order. Throws SizeError when the scan would exceed 10^7
/// valuations.
ValidityResult is_valid(const Poset& x, const Formula& phi);

/// X* refutes the subframe formula of Y, decided semantically as Y ↪ X.
/// Throws UsageError unless X is a co-forest.
bool subframe_refuted(const Poset& x, const CoTree& y);

/// The subframe formula's syntax is not constructed here; always throws
/// UnsupportedFeature.
[[noreturn]] Formula subframe_formula(const CoTree& y);

}  // namespace ctk
