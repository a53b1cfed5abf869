#pragma once

#include <string>
#include <variant>

#include "ctk/cotree.hpp"
#include "ctk/multiset.hpp"
#include "ctk/poset.hpp"

namespace ctk {

/// True when `text` looks like an `@family:params` literal.
bool is_cotree_literal(const std::string& text);

/// `@comb:n`, `@hcomb:n`, `@chain:n` or `@tau:m,k`. Throws FormatError for
/// malformed literals and the family's own errors for bad parameters.
CoTree parse_cotree_literal(const std::string& text);

/// Resolves a command-line input: an `@` literal, `-` for standard input, or
/// a path to a file in the poset text format.
Poset load_poset(const std::string& source);

using MultisetLiteral = std::variant<Multiset<long>, Multiset<CanonicalCode>>;

/// `[a,b,...]` whose items are all naturals or all co-tree literals. The empty
/// literal `[]` reads as a multiset of naturals. Throws CarrierMismatch when
/// both kinds occur, FormatError otherwise.
MultisetLiteral parse_multiset_literal(const std::string& text);

}  // namespace ctk
