#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian/numtheory.hpp"

namespace abelian {

enum class ComponentKind { additive, multiplicative };

/// One cyclic factor of a group: the residues {0..n-1} under addition mod n,
/// or the residues coprime to n under multiplication mod n.
struct ComponentSpec {
  ComponentKind kind = ComponentKind::additive;
  u64 modulus = 2;  // >= 2
  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

/// Ordered, nonempty list of components; the group is their direct product.
struct GroupSpec {
  std::vector<ComponentSpec> components;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// One residue per component.
using Element = std::vector<u64>;

/// "7" for single-component groups, "[1,2]" for products.
std::string format_element(const Element& e);

/// Groups larger than this are refused unless the caller raises the cap.
inline constexpr u64 kDefaultElementCap = 1'000'000;

/// Moduli above this are refused; keeps every intermediate product within
/// 64-bit range and trial division instant.
inline constexpr u64 kModulusCap = 10'000'000;

/// Construction refused: group order or modulus above the configured cap.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element was handed to a group it does not belong to.
class membership_error : public std::invalid_argument {
 public:
  enum class Reason { arity, range, coprimality, carrier };

  membership_error(Reason reason, std::size_t component, const std::string& what);

  Reason reason() const { return reason_; }
  /// Index of the offending component (0 for arity/carrier failures).
  std::size_t component() const { return component_; }

 private:
  Reason reason_;
  std::size_t component_;
};

/**
 * A finite abelian group: either the full product of its components or a
 * carrier-restricted subgroup of one. Elements are enumerated in row-major
 * order (last component varies fastest), each component ascending; for a
 * carrier group the carrier is kept sorted in that same order.
 *
 * Immutable after construction; every member function is const and safe to
 * call from any number of threads.
 */
class Group {
 public:
  /// Full group over the given components. Throws std::domain_error for a
  /// modulus < 2 and cap_error when a modulus or the total element count
  /// exceeds its cap.
  explicit Group(GroupSpec spec, u64 element_cap = kDefaultElementCap);

  /// Subgroup with an explicit carrier. The carrier is deduplicated and
  /// sorted, then validated: every element must be a valid residue tuple,
  /// the identity must be present, and the set must be closed under the
  /// group operation. Non-closed carriers are rejected.
  Group(GroupSpec spec, std::vector<Element> carrier, u64 element_cap = kDefaultElementCap);

  const GroupSpec& spec() const { return spec_; }
  std::size_t arity() const { return spec_.components.size(); }
  u64 order() const { return order_; }
  u64 element_cap() const { return cap_; }
  bool has_carrier() const { return !carrier_.empty(); }
  /// Sorted carrier for subgroups; empty for full groups.
  const std::vector<Element>& carrier() const { return carrier_; }

  Element identity() const;

  /// Element at the given enumeration index.
  Element element_at(u64 index) const;

  /// All elements in enumeration order. Prefer element_at for streaming.
  std::vector<Element> elements() const;

  /// True iff residues are in range, coprime where required, and (for a
  /// carrier group) present in the carrier. Never throws.
  bool contains(const Element& a) const;

  /// Throws membership_error (naming the component and reason) unless a is a
  /// member.
  void require_member(const Element& a) const { check_member(a); }

  /// Componentwise group operation. Both operands must be members.
  Element op(const Element& a, const Element& b) const;

  /// Inverse: n - a per additive slot, a^(phi(n)-1) per multiplicative slot.
  Element inverse(const Element& a) const;

  /// k-fold op (k*a additively, a^k multiplicatively); pow(a, 0) = identity.
  Element pow(const Element& a, u64 k) const;

  /// Least k >= 1 with pow(a, k) = identity, as the lcm of per-component
  /// orders.
  u64 element_order(const Element& a) const;

  /// element_order of element_at(index), skipping membership validation.
  u64 element_order_at(u64 index) const;

 private:
  void init_components();
  void check_member(const Element& a) const;
  Element combine(const Element& a, const Element& b) const;
  u64 component_order(std::size_t i, u64 residue) const;
  u64 order_unchecked(const Element& a) const;
  void validate_carrier();

  GroupSpec spec_;
  u64 cap_ = kDefaultElementCap;
  u64 order_ = 0;
  std::vector<u64> comp_order_;                 // n or phi(n) per component
  std::vector<Factorization> comp_order_fact_;  // factorization of comp_order_
  std::vector<std::vector<u64>> comp_units_;    // coprime residues (full mult groups)
  std::vector<u64> stride_;                     // mixed-radix strides (full groups)
  std::vector<Element> carrier_;                // sorted; empty for full groups
};

/// Orders of all elements in enumeration order. Runs the scan in parallel
/// when built with OpenMP; output is identical to the serial reference.
std::vector<u64> element_orders(const Group& g);

/// Serial reference for element_orders, kept for testing and benchmarks.
std::vector<u64> element_orders_serial(const Group& g);

}  // namespace abelian
