#pragma once

#include <cstdint>
#include <vector>

namespace abelian {

using u64 = std::uint64_t;

/// One prime power p^e in a factorization.
struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete prime factorization, primes strictly ascending. Empty for 1.
using Factorization = std::vector<PrimePower>;

/// Greatest common divisor; gcd(a, 0) = a. Throws std::domain_error when
/// both arguments are zero.
u64 gcd(u64 a, u64 b);

/// Least common multiple of two positive integers, via a / gcd(a,b) * b.
u64 lcm(u64 a, u64 b);

/// base^exp mod n by square-and-multiply. Requires n >= 2 and base < n.
u64 mod_pow(u64 base, u64 exp, u64 n);

/// Trial-division factorization of n >= 1; factorize(1) is empty.
Factorization factorize(u64 n);

/// Product of prime^exponent over all factors (1 for the empty list).
u64 factorization_value(const Factorization& f);

bool is_prime(u64 n);

/// Largest e with p^e | m. Requires p >= 2 and m >= 1.
unsigned valuation(u64 p, u64 m);

/// Euler's totient via the product formula over factorize(n); phi(1) = 1.
u64 euler_phi(u64 n);

}  // namespace abelian
