#include "abelian/group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <utility>

namespace abelian {

std::string format_element(const Element& e) {
  if (e.size() == 1) return std::to_string(e[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(e[i]);
  }
  s += ']';
  return s;
}

membership_error::membership_error(Reason reason, std::size_t component, const std::string& what)
    : std::invalid_argument(what), reason_(reason), component_(component) {}

Group::Group(GroupSpec spec, u64 element_cap) : spec_(std::move(spec)), cap_(element_cap) {
  init_components();

  // Materialize the coprime-residue list of each multiplicative component;
  // additive components enumerate as their own indices.
  comp_units_.resize(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    const auto& c = spec_.components[i];
    if (c.kind != ComponentKind::multiplicative) continue;
    auto& units = comp_units_[i];
    units.reserve(comp_order_[i]);
    for (u64 r = 1; r < c.modulus; ++r)
      if (std::gcd(r, c.modulus) == 1) units.push_back(r);
  }

  stride_.assign(arity(), 1);
  for (std::size_t i = arity(); i-- > 1;) stride_[i - 1] = stride_[i] * comp_order_[i];
}

Group::Group(GroupSpec spec, std::vector<Element> carrier, u64 element_cap)
    : spec_(std::move(spec)), cap_(element_cap), carrier_(std::move(carrier)) {
  init_components();
  validate_carrier();
  order_ = carrier_.size();
}

void Group::init_components() {
  if (spec_.components.empty()) throw std::domain_error("group needs at least one component");
  comp_order_.reserve(arity());
  comp_order_fact_.reserve(arity());
  u64 order = 1;
  for (const auto& c : spec_.components) {
    if (c.modulus < 2) throw std::domain_error("component modulus must be >= 2");
    if (c.modulus > kModulusCap)
      throw cap_error("modulus " + std::to_string(c.modulus) + " exceeds the supported cap " +
                      std::to_string(kModulusCap));
    const u64 n =
        c.kind == ComponentKind::additive ? c.modulus : euler_phi(c.modulus);
    comp_order_.push_back(n);
    comp_order_fact_.push_back(factorize(n));
    if (order > cap_ / n)
      throw cap_error("group order exceeds the element cap " + std::to_string(cap_));
    order *= n;
  }
  order_ = order;
}

void Group::validate_carrier() {
  if (carrier_.empty()) throw std::invalid_argument("carrier must be nonempty");
  std::sort(carrier_.begin(), carrier_.end());
  carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());
  if (carrier_.size() > cap_)
    throw cap_error("carrier size exceeds the element cap " + std::to_string(cap_));
  for (const auto& e : carrier_) check_member(e);

  const Element id = identity();
  auto index_of = [&](const Element& e) -> std::size_t {
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), e);
    if (it == carrier_.end() || *it != e)
      throw std::invalid_argument("carrier is not closed: " + format_element(e) +
                                  " is reachable but missing");
    return static_cast<std::size_t>(it - carrier_.begin());
  };
  auto id_it = std::lower_bound(carrier_.begin(), carrier_.end(), id);
  if (id_it == carrier_.end() || *id_it != id)
    throw std::invalid_argument("carrier does not contain the identity " + format_element(id));

  // Closure check by regenerating the carrier from its own members: grow a
  // known-closed set H from the identity, one missing member at a time,
  // walking its coset structure. Any product that escapes the carrier proves
  // non-closure; reaching |H| = |carrier| proves closure. Near-linear in the
  // carrier size, unlike the all-pairs check.
  std::vector<char> in_h(carrier_.size(), 0);
  std::vector<std::size_t> members{index_of(id)};
  in_h[members[0]] = 1;
  std::size_t scan = 0;
  while (members.size() < carrier_.size()) {
    while (in_h[scan]) ++scan;
    const Element& c = carrier_[scan];
    // Least m >= 1 with c^m already in H; cosets H, Hc, ..., Hc^{m-1} are
    // disjoint and their union is the extension of H by c.
    std::vector<std::size_t> coset_powers;
    Element cp = c;
    while (!in_h[index_of(cp)]) {
      coset_powers.push_back(index_of(cp));
      cp = combine(cp, c);
    }
    const std::size_t base_size = members.size();
    for (std::size_t pi : coset_powers) {
      const Element& power = carrier_[pi];
      for (std::size_t hi = 0; hi < base_size; ++hi) {
        std::size_t j = index_of(combine(carrier_[members[hi]], power));
        if (!in_h[j]) {
          in_h[j] = 1;
          members.push_back(j);
        }
      }
    }
  }
}

Element Group::identity() const {
  Element id(arity());
  for (std::size_t i = 0; i < arity(); ++i)
    id[i] = spec_.components[i].kind == ComponentKind::additive ? 0 : 1;
  return id;
}

Element Group::element_at(u64 index) const {
  if (index >= order_) throw std::out_of_range("element index out of range");
  if (has_carrier()) return carrier_[index];
  Element e(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    const u64 digit = index / stride_[i] % comp_order_[i];
    e[i] = spec_.components[i].kind == ComponentKind::additive ? digit : comp_units_[i][digit];
  }
  return e;
}

std::vector<Element> Group::elements() const {
  if (has_carrier()) return carrier_;
  std::vector<Element> out;
  out.reserve(order_);
  for (u64 i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

bool Group::contains(const Element& a) const {
  if (a.size() != arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    const auto& c = spec_.components[i];
    if (a[i] >= c.modulus) return false;
    if (c.kind == ComponentKind::multiplicative && std::gcd(a[i], c.modulus) != 1) return false;
  }
  if (has_carrier()) return std::binary_search(carrier_.begin(), carrier_.end(), a);
  return true;
}

void Group::check_member(const Element& a) const {
  if (a.size() != arity())
    throw membership_error(membership_error::Reason::arity, 0,
                           "element " + format_element(a) + " has " + std::to_string(a.size()) +
                               " component(s), the group has " + std::to_string(arity()));
  for (std::size_t i = 0; i < arity(); ++i) {
    const auto& c = spec_.components[i];
    if (a[i] >= c.modulus)
      throw membership_error(membership_error::Reason::range, i,
                             "component " + std::to_string(i) + ": residue " +
                                 std::to_string(a[i]) + " is out of range for modulus " +
                                 std::to_string(c.modulus));
    if (c.kind == ComponentKind::multiplicative && std::gcd(a[i], c.modulus) != 1)
      throw membership_error(membership_error::Reason::coprimality, i,
                             "component " + std::to_string(i) + ": residue " +
                                 std::to_string(a[i]) + " is not coprime to modulus " +
                                 std::to_string(c.modulus));
  }
  if (has_carrier() && !std::binary_search(carrier_.begin(), carrier_.end(), a))
    throw membership_error(membership_error::Reason::carrier, 0,
                           "element " + format_element(a) + " is not in the subgroup carrier");
}

Element Group::combine(const Element& a, const Element& b) const {
  Element r(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    const auto& c = spec_.components[i];
    r[i] = c.kind == ComponentKind::additive ? (a[i] + b[i]) % c.modulus
                                             : a[i] * b[i] % c.modulus;
  }
  return r;
}

Element Group::op(const Element& a, const Element& b) const {
  check_member(a);
  check_member(b);
  return combine(a, b);
}

Element Group::inverse(const Element& a) const {
  check_member(a);
  Element r(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    const auto& c = spec_.components[i];
    if (c.kind == ComponentKind::additive) {
      r[i] = (c.modulus - a[i]) % c.modulus;
    } else {
      // comp_order_[i] is phi(n) here.
      r[i] = mod_pow(a[i], comp_order_[i] - 1, c.modulus);
    }
  }
  return r;
}

Element Group::pow(const Element& a, u64 k) const {
  check_member(a);
  Element r(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    const auto& c = spec_.components[i];
    r[i] = c.kind == ComponentKind::additive ? a[i] * (k % c.modulus) % c.modulus
                                             : mod_pow(a[i], k, c.modulus);
  }
  return r;
}

u64 Group::component_order(std::size_t i, u64 residue) const {
  const auto& c = spec_.components[i];
  if (c.kind == ComponentKind::additive) return c.modulus / std::gcd(c.modulus, residue);
  // Least divisor d of phi(n) with residue^d = 1: strip each prime of phi(n)
  // out of the exponent for as long as the power stays 1.
  u64 ord = comp_order_[i];
  for (const auto& pp : comp_order_fact_[i]) {
    for (unsigned j = 0; j < pp.exponent; ++j) {
      if (ord % pp.prime != 0) break;
      const u64 candidate = ord / pp.prime;
      if (mod_pow(residue, candidate, c.modulus) != 1) break;
      ord = candidate;
    }
  }
  return ord;
}

u64 Group::order_unchecked(const Element& a) const {
  u64 result = 1;
  for (std::size_t i = 0; i < arity(); ++i) result = std::lcm(result, component_order(i, a[i]));
  return result;
}

u64 Group::element_order(const Element& a) const {
  check_member(a);
  return order_unchecked(a);
}

u64 Group::element_order_at(u64 index) const {
  if (index >= order_) throw std::out_of_range("element index out of range");
  if (has_carrier()) return order_unchecked(carrier_[index]);
  u64 result = 1;
  for (std::size_t i = 0; i < arity(); ++i) {
    const u64 digit = index / stride_[i] % comp_order_[i];
    const u64 residue =
        spec_.components[i].kind == ComponentKind::additive ? digit : comp_units_[i][digit];
    result = std::lcm(result, component_order(i, residue));
  }
  return result;
}

std::vector<u64> element_orders_serial(const Group& g) {
  std::vector<u64> out(g.order());
  for (u64 i = 0; i < g.order(); ++i) out[i] = g.element_order_at(i);
  return out;
}

std::vector<u64> element_orders(const Group& g) {
  std::vector<u64> out(g.order());
  const std::int64_t n = static_cast<std::int64_t>(g.order());
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = g.element_order_at(static_cast<u64>(i));
  return out;
}

}  // namespace abelian
