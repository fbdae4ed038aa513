#include "abelian/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace abelian {

namespace {

u64 ipow(u64 base, unsigned exp) {
  u64 v = 1;
  for (unsigned i = 0; i < exp; ++i) v *= base;
  return v;
}

void check_prime(u64 p) {
  if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
}

/// Invariant factors from a flat list of prime powers (possibly empty).
InvariantFactors factors_from_prime_powers(const std::vector<u64>& powers) {
  std::map<u64, std::vector<u64>> by_prime;  // prime -> prime powers, descending
  for (u64 q : powers) {
    const Factorization f = factorize(q);
    by_prime[f.front().prime].push_back(q);
  }
  std::size_t rounds = 0;
  for (auto& [p, list] : by_prime) {
    std::sort(list.begin(), list.end(), std::greater<>());
    rounds = std::max(rounds, list.size());
  }
  InvariantFactors out;
  for (std::size_t r = 0; r < rounds; ++r) {
    u64 m = 1;
    for (const auto& [p, list] : by_prime)
      if (r < list.size()) m *= list[r];
    out.push_back(m);
  }
  return out;
}

}  // namespace

u64 eta(u64 p, unsigned a, u64 m) {
  check_prime(p);
  if (a < 1) throw std::domain_error("eta requires a >= 1");
  if (m < 1) throw std::domain_error("eta requires m >= 1");
  return ipow(p, std::min(a, valuation(p, m)));
}

u64 eta_minus(u64 p, unsigned a, u64 m) {
  check_prime(p);
  if (a < 1) throw std::domain_error("eta_minus requires a >= 1");
  if (m < 1) throw std::domain_error("eta_minus requires m >= 1");
  return ipow(p, std::min(a - 1, valuation(p, m)));
}

u64 count_order_pa(const std::vector<u64>& factors, u64 p, unsigned a) {
  check_prime(p);
  if (a < 1) throw std::domain_error("count_order_pa requires a >= 1");
  u64 with = 1;
  u64 without = 1;
  for (u64 m : factors) {
    with *= eta(p, a, m);
    without *= eta_minus(p, a, m);
  }
  return with - without;
}

OrderMultiset order_multiset(const Group& g) {
  OrderMultiset orders = element_orders(g);
  std::sort(orders.begin(), orders.end());
  return orders;
}

PrimaryDecomposition primary_decomposition(const OrderMultiset& orders) {
  const u64 n = orders.size();
  std::map<u64, u64> count;  // order -> multiplicity
  for (u64 o : orders) ++count[o];

  PrimaryDecomposition out;
  for (const auto& pp : factorize(n)) {
    const u64 p = pp.prime;
    // dividing[a] = number of elements whose order divides p^a; always an
    // exact power of p in an abelian group, and the jump of its p-adic
    // logarithm counts the cyclic factors of exponent >= a.
    std::vector<unsigned> geq(pp.exponent + 2, 0);
    u64 dividing = 1;
    unsigned prev_log = 0;
    u64 pa = 1;
    for (unsigned a = 1; a <= pp.exponent; ++a) {
      pa *= p;
      auto it = count.find(pa);
      dividing += it == count.end() ? 0 : it->second;
      const unsigned log = valuation(p, dividing);
      if (ipow(p, log) != dividing)
        throw std::logic_error("order-dividing count is not a power of " + std::to_string(p));
      geq[a] = log - prev_log;
      prev_log = log;
    }
    std::vector<unsigned> exponents;
    for (unsigned a = pp.exponent; a >= 1; --a)
      for (unsigned i = geq[a] - geq[a + 1]; i > 0; --i) exponents.push_back(a);
    if (!exponents.empty()) out[p] = std::move(exponents);
  }

  // The reconstructed factors must reproduce every observed prime-power
  // count through the counting formula.
  const std::vector<u64> flat = prime_powers(out);
  for (const auto& pp : factorize(n)) {
    u64 pa = 1;
    for (unsigned a = 1; a <= pp.exponent; ++a) {
      pa *= pp.prime;
      auto it = count.find(pa);
      const u64 observed = it == count.end() ? 0 : it->second;
      if (count_order_pa(flat, pp.prime, a) != observed)
        throw std::logic_error("reconstructed decomposition does not reproduce the order counts");
    }
  }
  return out;
}

PrimaryDecomposition primary_decomposition(const Group& g) {
  return primary_decomposition(order_multiset(g));
}

std::vector<u64> prime_powers(const PrimaryDecomposition& d) {
  std::vector<u64> out;
  for (const auto& [p, exponents] : d)
    for (unsigned b : exponents) out.push_back(ipow(p, b));
  return out;
}

InvariantFactors torsion_coefficients(const std::vector<u64>& cyclic_orders) {
  if (cyclic_orders.empty())
    throw std::domain_error("torsion_coefficients requires a nonempty order list");
  std::vector<u64> powers;
  for (u64 m : cyclic_orders) {
    if (m < 2) throw std::domain_error("cyclic orders must be >= 2");
    for (const auto& pp : factorize(m)) powers.push_back(ipow(pp.prime, pp.exponent));
  }
  return factors_from_prime_powers(powers);
}

InvariantFactors invariant_factors_of(const OrderMultiset& orders) {
  return factors_from_prime_powers(prime_powers(primary_decomposition(orders)));
}

InvariantFactors invariant_factors_of(const Group& g) {
  return invariant_factors_of(order_multiset(g));
}

std::vector<std::vector<unsigned>> partitions_desc(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::vector<InvariantFactors> abelian_groups_of_order(u64 n) {
  if (n == 0) throw std::domain_error("no group has order 0");
  const Factorization f = factorize(n);
  std::vector<std::vector<std::vector<unsigned>>> per_prime;
  per_prime.reserve(f.size());
  for (const auto& pp : f) per_prime.push_back(partitions_desc(pp.exponent));

  std::vector<InvariantFactors> out;
  std::vector<std::size_t> pick(f.size(), 0);
  while (true) {
    std::vector<u64> powers;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (unsigned e : per_prime[i][pick[i]]) powers.push_back(ipow(f[i].prime, e));
    out.push_back(factors_from_prime_powers(powers));

    std::size_t i = 0;
    for (; i < f.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == f.size()) break;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

IsoResult is_isomorphic(const Group& g, const Group& h) {
  IsoResult r;
  r.left_orders = order_multiset(g);
  r.right_orders = order_multiset(h);
  r.left_factors = invariant_factors_of(r.left_orders);
  r.right_factors = invariant_factors_of(r.right_orders);
  r.isomorphic = r.left_orders == r.right_orders;
  if ((r.left_factors == r.right_factors) != r.isomorphic)
    throw std::logic_error("order multisets and invariant factors disagree");
  return r;
}

}  // namespace abelian
