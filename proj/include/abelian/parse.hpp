#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abelian/group.hpp"

namespace abelian {

/// Text could not be parsed; carries the offset and what was expected there.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, std::string expected);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Group expression grammar:
///   expr := term ("x" term)*
///   term := "add:" N | "mult:" N        (N a decimal integer >= 2)
GroupSpec parse_group_expr(std::string_view text);

/// Element literal: a single residue ("7") or a comma-separated tuple,
/// optionally bracketed ("1,2" or "[1,2]"), one residue per component.
/// Residues are reduced mod the component modulus here, at the parse
/// boundary.
Element parse_element(const Group& g, std::string_view text);

/// Comma-separated element list; commas inside brackets do not split, so
/// product elements must be written bracketed: "[0,2],[3,5]".
std::vector<Element> parse_element_list(const Group& g, std::string_view text);

/// Decimal u64, the whole string. `expected` feeds the error message.
u64 parse_u64(std::string_view text, std::string_view expected);

}  // namespace abelian
