// Test-only helpers: independent brute-force oracles and corpus builders.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "abelian/group.hpp"

namespace testsupport {

using abelian::ComponentKind;
using abelian::ComponentSpec;
using abelian::Element;
using abelian::Group;
using abelian::GroupSpec;
using abelian::u64;

/// Coprime-count definition of Euler's totient.
inline u64 phi_brute(u64 n) {
  u64 count = 0;
  for (u64 a = 1; a <= n; ++a)
    if (std::gcd(a, n) == 1) ++count;
  return count;
}

/// Fixed-point closure of s (plus the identity) under the group operation.
inline std::vector<Element> closure_brute(const Group& g, const std::vector<Element>& s) {
  std::set<Element> h(s.begin(), s.end());
  h.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> snapshot(h.begin(), h.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (h.insert(g.op(a, b)).second) grew = true;
  }
  return {h.begin(), h.end()};
}

/// Number of integer partitions of k, by the standard two-variable recursion.
inline u64 partition_count(unsigned k) {
  std::vector<std::vector<u64>> memo(k + 1, std::vector<u64>(k + 1, 0));
  // memo[left][max] = partitions of `left` into parts <= max
  for (unsigned max = 0; max <= k; ++max) memo[0][max] = 1;
  for (unsigned left = 1; left <= k; ++left)
    for (unsigned max = 1; max <= k; ++max) {
      memo[left][max] = memo[left][max - 1];
      if (max <= left) memo[left][max] += memo[left - max][max];
    }
  return memo[k][k];
}

inline Element random_element(std::mt19937_64& rng, const Group& g) {
  std::uniform_int_distribution<u64> pick(0, g.order() - 1);
  return g.element_at(pick(rng));
}

/// Single-component groups (n,+) and (n,x) for n in [2, max_modulus].
inline std::vector<GroupSpec> cyclic_specs(u64 max_modulus) {
  std::vector<GroupSpec> out;
  for (u64 n = 2; n <= max_modulus; ++n) {
    out.push_back({{{ComponentKind::additive, n}}});
    out.push_back({{{ComponentKind::multiplicative, n}}});
  }
  return out;
}

/// Deterministic random product specs with 2-3 components and order at most
/// max_order.
inline std::vector<GroupSpec> random_product_specs(std::mt19937_64& rng, std::size_t count,
                                                   u64 max_order) {
  std::uniform_int_distribution<int> comp_count(2, 3);
  std::uniform_int_distribution<u64> modulus(2, 32);
  std::uniform_int_distribution<int> kind(0, 1);
  std::vector<GroupSpec> out;
  while (out.size() < count) {
    GroupSpec spec;
    const int k = comp_count(rng);
    for (int i = 0; i < k; ++i)
      spec.components.push_back(
          {kind(rng) == 0 ? ComponentKind::additive : ComponentKind::multiplicative,
           modulus(rng)});
    u64 order = 1;
    for (const auto& c : spec.components)
      order *= c.kind == ComponentKind::additive ? c.modulus : abelian::euler_phi(c.modulus);
    if (order <= max_order) out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace testsupport
