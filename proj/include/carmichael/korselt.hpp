#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "carmichael/bigint.hpp"
#include "carmichael/factor.hpp"

namespace carmichael {

enum class Reason { Ok, NotComposite, NotSquarefree, DegreeNotDividing, Unit, Zero };

std::string_view to_string(Reason r);

// Verdict of a Korselt-type test. For polynomial tests the failing factor of
// a DegreeNotDividing verdict is in witness_poly; for integer tests the
// failing prime is in witness_prime.
struct KorseltReport {
  bool verdict = false;
  Reason reason = Reason::Zero;
  std::optional<Poly> witness_poly;
  std::optional<std::uint64_t> witness_prime;
  std::optional<FactorDegrees> factor_degrees;
};

// Square-free, at least two irreducible factors, and every factor degree
// divides deg g. Total: degenerate inputs produce failing reports. The seed
// drives the factor splitting used to name a witness; the report itself does
// not depend on it.
KorseltReport is_carmichael_poly(const Field& f, const Poly& g, std::uint64_t seed = 0);

// Verdict of is_carmichael_poly without the witness search, with an early
// exit on the first offending degree.
bool carmichael_poly_holds(const Field& f, const Poly& g);

// Square-free, reducible, and i deg P | d deg g for all factors P, 1 <= i <= d.
KorseltReport is_rigid_carmichael_poly(const Field& f, const Poly& g, unsigned d, std::uint64_t seed = 0);

// Composite, square-free, and p - 1 | n - 1 for every prime p | n.
KorseltReport is_carmichael_number(std::uint64_t n);

// Composite, square-free, and p^i - 1 | n^d - 1 for every prime p | n and
// 1 <= i <= d.
KorseltReport is_rigid_carmichael_number(std::uint64_t n, unsigned d);

// Korselt check given the factorization of n; shared with the sieve.
KorseltReport korselt_from_factors(std::uint64_t n,
                                   const std::vector<std::pair<std::uint64_t, unsigned>>& factors);

// F_{q_1} x ... x F_{q_k}.
struct RingPresentation {
  std::vector<std::uint64_t> cards;
  BigInt total;
};

// Throws NotPrimePower.
RingPresentation make_ring_presentation(std::vector<std::uint64_t> cards);

bool is_carmichael_ring(const RingPresentation& pres);

// Z/nZ as a product of prime fields when n is square-free.
struct ModulusRing {
  std::optional<RingPresentation> presentation;  // nullopt: not semisimple
  bool verdict = false;
};

ModulusRing carmichael_ring_from_modulus(std::uint64_t n);

}  // namespace carmichael
