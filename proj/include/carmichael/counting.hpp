#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "carmichael/bigint.hpp"
#include "carmichael/ff.hpp"
#include "carmichael/poly.hpp"

namespace carmichael {

int mobius(std::uint64_t d);

// Number of monic irreducibles of degree n over F_q (Moebius inversion).
BigInt pi_q(std::uint64_t q, unsigned n);
inline BigInt pi_q(const Field& f, unsigned n) { return pi_q(f.q(), n); }

// Proper divisors d_1 < ... < d_r of n with per-divisor multiplicity caps
// min(pi_q(d_i), n / d_i).
struct TupleSpace {
  unsigned n = 0;
  std::vector<unsigned> divisors;
  std::vector<std::uint64_t> caps;
};

TupleSpace tuple_space(std::uint64_t q, unsigned n);

// Number of monic Carmichael polynomials of degree n: the sum over degree
// tuples (k_i) with sum k_i d_i = n of prod C(pi_q(d_i), k_i), evaluated by
// dynamic programming over (divisor, remaining degree).
BigInt count_carmichael_exact(std::uint64_t q, unsigned n);
inline BigInt count_carmichael_exact(const Field& f, unsigned n) { return count_carmichael_exact(f.q(), n); }

// Counts by testing every monic polynomial of degree n. Work is split into
// `jobs` contiguous index ranges.
BigInt count_carmichael_bruteforce(const Field& f, unsigned n, unsigned jobs = 1,
                                   std::uint64_t cap = default_enum_cap());

// q^n / (2n)^l with l the smallest prime factor of n. Throws NotComposite.
Rational lower_bound(std::uint64_t q, unsigned n);

bool is_composite(std::uint64_t n);

struct SigmaTau {
  BigInt sigma;
  std::uint64_t tau;
};

SigmaTau sigma_tau(std::uint64_t n);

inline constexpr std::uint64_t kMaxCarmichaelLimit = 10'000'000;

// Ascending Carmichael numbers <= limit via a smallest-prime-factor sieve.
std::vector<std::uint64_t> enumerate_carmichael_numbers(std::uint64_t limit,
                                                        std::uint64_t max_limit = kMaxCarmichaelLimit);

enum class BoundStatus { Satisfied, Violated, NotApplicable, Excluded };

struct CountRow {
  unsigned n;
  BigInt pi;
  BigInt carmichael;
  std::optional<Rational> lower_bound;
  BoundStatus status;
};

struct CountTable {
  std::uint64_t q;
  std::vector<CountRow> rows;
};

// Rows n = 1..n_max. The lower bound applies to composite n and is not
// claimed at (q, n) = (2, 9).
CountTable count_table(std::uint64_t q, unsigned n_max);

}  // namespace carmichael
