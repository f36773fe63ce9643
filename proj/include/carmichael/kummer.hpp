#pragma once

#include <cstdint>
#include <vector>

#include "carmichael/korselt.hpp"

// Power residue symbols in F_q[t] and Carmichael tests in the Kummer
// extensions K = F_q(t)(Q^(1/l)), l prime with l | q - 1. K is never built:
// splitting of a prime P follows from the symbol (Q/P)_l, and the ramified
// finite primes are exactly the divisors of Q.
namespace carmichael {

struct ResidueSymbol {
  FieldElement value;   // an l-th root of unity in F_q
  std::uint64_t order;  // multiplicative order of value
};

struct SplittingType {
  Poly prime;
  unsigned residue_degree;  // f
  unsigned prime_count;     // number of primes of K above P; f * count = l
};

// (a/P)_l = a^((q^deg P - 1)/l) mod P.
ResidueSymbol power_residue_symbol(const Field& f, const Poly& a, const Poly& P, unsigned ell);

SplittingType splitting_in_kummer(const Field& f, const Poly& P, const Poly& Q, unsigned ell);

// Korselt test for g O_K: at least two primes above g, and f(P) deg P | l deg g
// for every irreducible P | g.
KorseltReport is_carmichael_in_kummer(const Field& f, const Poly& g, const Poly& Q, unsigned ell,
                                      std::uint64_t seed = 0);

// Splitting type of every irreducible factor of g, in canonical order.
std::vector<SplittingType> kummer_splitting(const Field& f, const Poly& g, const Poly& Q, unsigned ell,
                                            std::uint64_t seed = 0);

enum class WitnessGoal { MakesCarmichael, BreaksCarmichael };

// First monic irreducible Q of even degree <= degree_cap, coprime to g, in
// canonical order, whose extension gives the wanted verdict for g.
Poly find_kummer_witness(const Field& f, const Poly& g, unsigned ell, WitnessGoal want, unsigned degree_cap,
                         unsigned jobs = 1, std::uint64_t seed = 0);

}  // namespace carmichael
