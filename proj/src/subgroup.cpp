#include "abelian/subgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelian {

std::vector<Element> cycle(const Group& g, const Element& a) {
  g.require_member(a);
  std::vector<Element> out;
  const Element id = g.identity();
  Element cur = a;
  out.push_back(cur);
  while (cur != id) {
    cur = g.op(cur, a);
    out.push_back(cur);
  }
  return out;
}

Group generate(const Group& g, const std::vector<Element>& generators) {
  if (generators.empty()) throw std::invalid_argument("generate requires a nonempty generator set");
  for (const auto& gen : generators) g.require_member(gen);

  // Fold the generators' cycles together: extend the current carrier H by
  // the disjoint cosets H, Hc, ..., Hc^{m-1}, where m is the least power of
  // the generator already inside H. Set-equal to the full cross product of
  // cycles, without materializing duplicates.
  std::vector<Element> carrier{g.identity()};
  for (const auto& gen : generators) {
    std::vector<Element> coset_reps;
    Element cp = gen;
    while (!std::binary_search(carrier.begin(), carrier.end(), cp)) {
      coset_reps.push_back(cp);
      cp = g.op(cp, gen);
    }
    if (coset_reps.empty()) continue;
    const std::size_t base = carrier.size();
    carrier.reserve(base * (coset_reps.size() + 1));
    for (const auto& rep : coset_reps)
      for (std::size_t i = 0; i < base; ++i) carrier.push_back(g.op(carrier[i], rep));
    std::sort(carrier.begin(), carrier.end());
  }
  return Group(g.spec(), std::move(carrier), g.element_cap());
}

bool is_subgroup(const Group& g, const std::vector<Element>& s) {
  if (s.empty()) throw std::invalid_argument("is_subgroup requires a nonempty subset");
  for (const auto& e : s) g.require_member(e);

  std::vector<Element> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& a : sorted) {
    for (const auto& b : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), g.op(a, g.inverse(b))))
        return false;
    }
  }
  return true;
}

bool is_generating_set(const Group& g, const std::vector<Element>& generators) {
  return generate(g, generators).order() == g.order();
}

}  // namespace abelian
