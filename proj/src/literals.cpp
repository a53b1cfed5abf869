#include "ctk/literals.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <vector>

#include "ctk/errors.hpp"

namespace ctk {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

long parse_natural(const std::string& text, const std::string& context) {
  long value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || value < 0)
    throw FormatError("expected a natural number in `" + context + "`");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

bool is_cotree_literal(const std::string& text) { return !text.empty() && text.front() == '@'; }

CoTree parse_cotree_literal(const std::string& text) {
  const auto colon = text.find(':');
  if (!is_cotree_literal(text) || colon == std::string::npos) throw FormatError("bad co-tree literal `" + text + "`");
  const std::string family = text.substr(1, colon - 1);
  std::vector<int> params;
  for (const std::string& p : split(text.substr(colon + 1), ','))
    params.push_back(static_cast<int>(parse_natural(trim(p), text)));

  StandardKind kind;
  std::size_t arity = 1;
  if (family == "comb") {
    kind = StandardKind::comb;
  } else if (family == "hcomb") {
    kind = StandardKind::hcomb;
  } else if (family == "chain") {
    kind = StandardKind::chain;
  } else if (family == "tau") {
    kind = StandardKind::tau;
    arity = 2;
  } else {
    throw FormatError("unknown co-tree family `" + family + "`");
  }
  if (params.size() != arity) throw FormatError("wrong parameter count in `" + text + "`");
  return make_standard(kind, params);
}

Poset load_poset(const std::string& source) {
  if (is_cotree_literal(source)) return parse_cotree_literal(source).poset();
  if (source == "-") return read_poset(std::cin);
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open `" + source + "`");
  return read_poset(in);
}

MultisetLiteral parse_multiset_literal(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw FormatError("multiset literal must be enclosed in brackets");
  const std::string body = trim(text.substr(1, text.size() - 2));
  if (body.empty()) return Multiset<long>{};

  // `@tau:m,k` contains a comma, so items are split on commas that do not
  // continue a tau parameter list.
  std::vector<std::string> items;
  for (const std::string& piece : split(body, ',')) {
    std::string item = trim(piece);
    if (!items.empty() && items.back().rfind("@tau:", 0) == 0 && items.back().find(',') == std::string::npos &&
        !item.empty() && item.front() != '@') {
      items.back() += "," + item;
    } else {
      items.push_back(item);
    }
  }

  std::vector<long> naturals;
  std::vector<CanonicalCode> codes;
  for (const std::string& item : items) {
    if (item.empty()) throw FormatError("empty multiset item");
    if (is_cotree_literal(item))
      codes.push_back(canonical_code(parse_cotree_literal(item)));
    else
      naturals.push_back(parse_natural(item, item));
  }
  if (!naturals.empty() && !codes.empty()) throw CarrierMismatch("multiset mixes naturals and co-trees");
  if (!codes.empty()) return Multiset<CanonicalCode>(std::move(codes));
  return Multiset<long>(std::move(naturals));
}

}  // namespace ctk
