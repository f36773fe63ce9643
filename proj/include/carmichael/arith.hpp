#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Word-size integer helpers shared by the field, counting and Korselt code.
namespace carmichael::arith {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

// (p, e) with n = p^e, or nullopt when n is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

// Ascending list of all positive divisors.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t smallest_prime_factor(std::uint64_t n);

int mobius(std::uint64_t n);

std::uint64_t lcm_range(std::uint64_t d);

}  // namespace carmichael::arith
