#include "abelian/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace abelian {

u64 gcd(u64 a, u64 b) {
  if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) throw std::domain_error("lcm requires positive arguments");
  return a / std::gcd(a, b) * b;
}

u64 mod_pow(u64 base, u64 exp, u64 n) {
  if (n < 2) throw std::domain_error("mod_pow requires modulus >= 2");
  if (base >= n) throw std::domain_error("mod_pow requires base < modulus");
  u64 acc = 1;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % n;
    base = base * base % n;
    exp >>= 1;
  }
  return acc;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize requires n >= 1");
  Factorization out;
  auto divide_out = [&](u64 p) {
    if (n % p != 0) return;
    unsigned e = 0;
    do {
      ++e;
      n /= p;
    } while (n % p == 0);
    out.push_back({p, e});
  };
  divide_out(2);
  for (u64 p = 3; p <= n / p; p += 2) divide_out(p);
  if (n > 1) out.push_back({n, 1});
  return out;
}

u64 factorization_value(const Factorization& f) {
  u64 v = 1;
  for (const auto& pp : f)
    for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
  return v;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 p = 3; p <= n / p; p += 2)
    if (n % p == 0) return false;
  return true;
}

unsigned valuation(u64 p, u64 m) {
  if (p < 2) throw std::domain_error("valuation requires p >= 2");
  if (m == 0) throw std::domain_error("valuation requires m >= 1");
  unsigned e = 0;
  while (m % p == 0) {
    ++e;
    m /= p;
  }
  return e;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::domain_error("euler_phi requires n >= 1");
  u64 phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

}  // namespace abelian
