#include "abelian/parse.hpp"

#include <charconv>

namespace abelian {

namespace {

std::string describe(std::size_t position, const std::string& expected) {
  return "parse error at position " + std::to_string(position) + ": expected " + expected;
}

bool parse_number_at(std::string_view text, std::size_t& pos, u64& value) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) return false;
  pos += static_cast<std::size_t>(ptr - begin);
  return true;
}

}  // namespace

parse_error::parse_error(std::size_t position, std::string expected)
    : std::runtime_error(describe(position, expected)),
      position_(position),
      expected_(std::move(expected)) {}

GroupSpec parse_group_expr(std::string_view text) {
  GroupSpec spec;
  std::size_t pos = 0;
  while (true) {
    ComponentKind kind;
    if (text.substr(pos, 4) == "add:") {
      kind = ComponentKind::additive;
      pos += 4;
    } else if (text.substr(pos, 5) == "mult:") {
      kind = ComponentKind::multiplicative;
      pos += 5;
    } else {
      throw parse_error(pos, "\"add:\" or \"mult:\"");
    }
    const std::size_t num_pos = pos;
    u64 n = 0;
    if (!parse_number_at(text, pos, n)) throw parse_error(num_pos, "a decimal modulus");
    if (n < 2) throw parse_error(num_pos, "a modulus >= 2");
    spec.components.push_back({kind, n});
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw parse_error(pos, "\"x\" or end of expression");
    ++pos;
  }
  return spec;
}

Element parse_element(const Group& g, std::string_view text) {
  std::size_t pos = 0;
  bool bracketed = false;
  if (!text.empty() && text.front() == '[') {
    bracketed = true;
    ++pos;
  }
  Element e;
  while (true) {
    const std::size_t num_pos = pos;
    u64 r = 0;
    if (!parse_number_at(text, pos, r)) throw parse_error(num_pos, "a decimal residue");
    if (e.size() == g.arity())
      throw parse_error(num_pos, std::to_string(g.arity()) + " residue(s), got more");
    // Residues are reduced into canonical range here, at the parse boundary.
    e.push_back(r % g.spec().components[e.size()].modulus);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (bracketed) {
    if (pos == text.size() || text[pos] != ']') throw parse_error(pos, "\"]\"");
    ++pos;
  }
  if (pos != text.size()) throw parse_error(pos, "end of element");
  if (e.size() != g.arity())
    throw parse_error(pos, std::to_string(g.arity()) + " residue(s), got " +
                               std::to_string(e.size()));
  return e;
}

std::vector<Element> parse_element_list(const Group& g, std::string_view text) {
  std::vector<Element> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '[') ++depth;
    if (i < text.size() && text[i] == ']') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      if (i == start) throw parse_error(start, "an element");
      out.push_back(parse_element(g, text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

u64 parse_u64(std::string_view text, std::string_view expected) {
  std::size_t pos = 0;
  u64 v = 0;
  if (!parse_number_at(text, pos, v) || pos != text.size())
    throw parse_error(pos, std::string(expected));
  return v;
}

}  // namespace abelian
