#pragma once

#include <map>
#include <vector>

#include "abelian/group.hpp"

namespace abelian {

/// Sorted ascending list of all element orders; a complete isomorphism
/// invariant for finite abelian groups.
using OrderMultiset = std::vector<u64>;

/// Canonical torsion coefficients m1 >= m2 >= ... with m_{i+1} | m_i and
/// product equal to the group order. Empty for the trivial group.
using InvariantFactors = std::vector<u64>;

/// For each prime p dividing the order, the descending exponent multiset
/// [b1 >= b2 >= ...] of the p-power cyclic factors Z_{p^b1} x Z_{p^b2} x ...
using PrimaryDecomposition = std::map<u64, std::vector<unsigned>>;

/// p^min(a, b) where b is the p-adic valuation of m. Requires p prime,
/// a >= 1, m >= 1; throws std::domain_error otherwise.
u64 eta(u64 p, unsigned a, u64 m);

/// p^min(a - 1, b), same preconditions as eta.
u64 eta_minus(u64 p, unsigned a, u64 m);

/// Number of elements of order p^a in Z_{m1} x ... x Z_{mk}, as the
/// eta-product minus the eta_minus-product over the cyclic orders.
u64 count_order_pa(const std::vector<u64>& factors, u64 p, unsigned a);

OrderMultiset order_multiset(const Group& g);

/// Recovers the prime-power exponents from the counts of elements whose
/// order divides p^a. Cross-checks the result against count_order_pa and
/// throws std::logic_error on any internal mismatch.
PrimaryDecomposition primary_decomposition(const Group& g);
PrimaryDecomposition primary_decomposition(const OrderMultiset& orders);

/// Flattened p^b factors of a decomposition, primes ascending, exponents
/// descending within a prime.
std::vector<u64> prime_powers(const PrimaryDecomposition& d);

/// Canonical invariant factors of a direct product of cyclic groups with the
/// given orders (all >= 2): round r multiplies together each prime's r-th
/// largest prime-power part.
InvariantFactors torsion_coefficients(const std::vector<u64>& cyclic_orders);

InvariantFactors invariant_factors_of(const Group& g);
InvariantFactors invariant_factors_of(const OrderMultiset& orders);

/// All integer partitions of k, each descending, in descending lexicographic
/// order: [k], [k-1,1], ..., [1,...,1].
std::vector<std::vector<unsigned>> partitions_desc(unsigned k);

/// One InvariantFactors entry per isomorphism class of order n, sorted
/// descending lexicographically. n >= 1; n = 1 yields the single empty class.
std::vector<InvariantFactors> abelian_groups_of_order(u64 n);

/// Isomorphism decision with its supporting data. The invariant factors must
/// agree exactly when the order multisets do; a disagreement would be an
/// internal error and throws std::logic_error.
struct IsoResult {
  bool isomorphic = false;
  OrderMultiset left_orders;
  OrderMultiset right_orders;
  InvariantFactors left_factors;
  InvariantFactors right_factors;
};

IsoResult is_isomorphic(const Group& g, const Group& h);

}  // namespace abelian
