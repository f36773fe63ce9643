#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "carmichael/poly.hpp"

namespace carmichael {

struct DegreeCount {
  unsigned degree;
  std::uint64_t count;

  friend bool operator==(const DegreeCount&, const DegreeCount&) = default;
};

// Multiset of irreducible factor degrees, sorted by degree.
struct FactorDegrees {
  std::vector<DegreeCount> entries;

  std::uint64_t total_factors() const;
  std::uint64_t total_degree() const;

  friend bool operator==(const FactorDegrees&, const FactorDegrees&) = default;
};

struct Factor {
  Poly poly;
  unsigned multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Monic irreducible factors in canonical order.
struct Factorization {
  std::vector<Factor> factors;

  FactorDegrees degrees() const;
};

// Product of all irreducible factors of one degree.
struct DegreeGroup {
  unsigned degree;
  Poly product;
};

using PolySet = std::set<Poly>;

// gcd(g, g') is constant. Throws ZeroOrConstant for degree < 1.
bool is_squarefree(const Field& f, const Poly& g);

// Splits a monic square-free g into per-degree products. The visitor, when
// given, sees each group as it is found and may stop the scan by returning
// false; the remaining groups are then omitted.
std::vector<DegreeGroup> distinct_degree_groups(
    const Field& f, const Poly& g,
    const std::function<bool(const DegreeGroup&)>& visit = {});

// Throws NotSquarefree.
FactorDegrees distinct_degree_factor(const Field& f, const Poly& g);

// Splits a monic product of distinct irreducibles of the given degree into
// its factors (Cantor-Zassenhaus; trace map in characteristic 2). Output is
// sorted canonically and independent of the seed.
std::vector<Poly> equal_degree_split(const Field& f, const Poly& product, unsigned degree,
                                     std::uint64_t seed = 0);

// Square-free decomposition: pairs (a_i, i) with monic(g) = prod a_i^i, each
// a_i square-free and pairwise coprime.
std::vector<Factor> squarefree_decomposition(const Field& f, const Poly& g);

// Throws ZeroOrConstant.
Factorization factorize(const Field& f, const Poly& g, std::uint64_t seed = 0);

// Rabin's test. Zero and constants are not irreducible.
bool is_irreducible(const Field& f, const Poly& g);

// First `count` monic irreducibles of the given degree in the progression
// h mod g, scanning w = (h mod g) + monic(g) * s over monic s in canonical
// order, skipping anything in `exclude`.
std::vector<Poly> find_irreducibles_in_ap(const Field& f, unsigned degree, const Poly& g,
                                          const Poly& h, std::size_t count,
                                          const PolySet& exclude = {});

}  // namespace carmichael
