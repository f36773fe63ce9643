#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "carmichael/factor.hpp"

namespace carmichael {

enum class RecipeKind { Multiple, ArithmeticProgression, Rigid };

std::string_view to_string(RecipeKind kind);

// A constructed Carmichael polynomial together with how it was assembled.
struct ConstructionRecipe {
  RecipeKind kind = RecipeKind::Multiple;
  std::optional<Poly> seed;      // u (Multiple)
  std::optional<Poly> modulus;   // g (Multiple, ArithmeticProgression)
  std::optional<Poly> residue;   // h (Multiple, ArithmeticProgression)
  unsigned order = 0;            // d (Rigid)
  unsigned scale = 0;            // d (Multiple)
  unsigned base_degree = 0;      // n (Rigid), common factor degree (ArithmeticProgression)
  // Monic parts whose product is `product`; for Multiple the seed comes first.
  std::vector<Poly> parts;
  Poly product;
};

// Largest product degree the constructions will attempt by default.
inline constexpr unsigned kDefaultDegreeBudget = 64;

// u * P_1 ... P_k * Q with deg P_i = dm, deg Q = dm - deg u, k = dm - deg u - 1,
// all P_i and Q irreducible in the progression h mod g, where m is the lcm of
// deg u and the degrees of its irreducible factors and d is the smallest
// scale for which the progression supplies enough irreducibles.
ConstructionRecipe carmichael_multiple(const Field& f, const Poly& u, const Poly& g, const Poly& h,
                                       unsigned degree_budget = kDefaultDegreeBudget);

// P_1 * P_2 with P_1 = h mod g, P_2 = 1 mod g, distinct, of the smallest
// common degree D > deg g that admits both.
ConstructionRecipe carmichael_in_ap(const Field& f, const Poly& g, const Poly& h,
                                    unsigned degree_budget = kDefaultDegreeBudget);

// Product of the first max(2, lcm(1..d)) monic irreducibles of degree n.
ConstructionRecipe rigid_construct(const Field& f, unsigned d, unsigned n);

}  // namespace carmichael
