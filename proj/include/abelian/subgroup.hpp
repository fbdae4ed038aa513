#pragma once

#include <vector>

#include "abelian/group.hpp"

namespace abelian {

/// [a, a^2, ..., identity]; length equals the order of a.
std::vector<Element> cycle(const Group& g, const Element& a);

/// Smallest subgroup of g containing every generator. Throws
/// membership_error if a generator is not in g, std::invalid_argument for an
/// empty generator list.
Group generate(const Group& g, const std::vector<Element>& generators);

/// Subgroup criterion: true iff a * b^{-1} lies in s for all ordered pairs
/// a, b in s. Every element of s must belong to g.
bool is_subgroup(const Group& g, const std::vector<Element>& s);

/// True iff the generators span all of g.
bool is_generating_set(const Group& g, const std::vector<Element>& generators);

}  // namespace abelian
