#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sympal::nt {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Prime factorisation with multiplicity, ascending.
std::vector<u64> factor(u64 n);
/// Distinct prime divisors, ascending.
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 2.
u64 multiplicative_order(u64 a, u64 m);

/// base^exp, or nullopt when the result does not fit in 64 bits.
std::optional<u64> checked_pow(u64 base, unsigned exp);
std::optional<u64> checked_mul(u64 a, u64 b);

u64 factorial(unsigned n);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m);

}  // namespace sympal::nt
