#include <doctest.h>

#include "carmichael/error.hpp"
#include "carmichael/kummer.hpp"
#include "oracles.hpp"

using namespace carmichael;
using oracle::poly;

namespace {

std::vector<Poly> monic_irreducibles(const Field& f, unsigned degree) {
  std::vector<Poly> out;
  for (const Poly& g : enumerate_monic(f, degree)) {
    if (oracle::irreducible_by_trial(f, g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_SUITE("kummer") {

TEST_CASE("symbol examples") {
  const Field f3 = Field::create(3), f5 = Field::create(5);
  const ResidueSymbol s = power_residue_symbol(f3, poly(f3, "0,1"), poly(f3, "1,1"), 2);
  CHECK(s.value == FieldElement{2});
  CHECK(s.order == 2);
  CHECK(power_residue_symbol(f5, poly(f5, "0,1"), poly(f5, "4,1"), 2).value == f5.one());

  CHECK_THROWS_AS(power_residue_symbol(f3, poly(f3, "0,1"), poly(f3, "1,1"), 3), Error);
  CHECK_THROWS_AS(power_residue_symbol(f3, poly(f3, "0,1"), poly(f3, "1,0,2"), 2), Error);
  CHECK_THROWS_AS(power_residue_symbol(f3, poly(f3, "0,1"), poly(f3, "0,1"), 2), Error);

  const SplittingType st = splitting_in_kummer(f3, poly(f3, "1,1"), poly(f3, "0,1"), 2);
  CHECK(st.residue_degree == 2);
  CHECK(st.prime_count == 1);
  CHECK_THROWS_AS(splitting_in_kummer(f3, poly(f3, "0,1"), poly(f3, "0,1"), 2), Error);
}

TEST_CASE("symbol properties") {
  std::mt19937_64 rng(43);
  for (auto [p, ell] : {std::pair{7ULL, 3u}, {7, 2}, {13, 3}, {5, 2}}) {
    const Field f = Field::create(p);
    const auto P2 = monic_irreducibles(f, 2);
    const auto Q3 = monic_irreducibles(f, 3);
    for (int i = 0; i < 60; ++i) {
      const Poly& P = P2[i % P2.size()];
      const Poly a = oracle::random_poly(f, rng, 3, false);
      const Poly b = oracle::random_poly(f, rng, 4, false);
      if (rem(f, a, P).is_zero() || rem(f, b, P).is_zero()) continue;
      const ResidueSymbol sa = power_residue_symbol(f, a, P, ell);
      const ResidueSymbol sb = power_residue_symbol(f, b, P, ell);
      REQUIRE(f.pow(sa.value, ell) == f.one());
      REQUIRE(power_residue_symbol(f, mul(f, a, b), P, ell).value == f.mul(sa.value, sb.value));
      const FieldElement c{1 + i % (p - 1)};
      REQUIRE(power_residue_symbol(f, scale(f, a, f.pow(c, ell)), P, ell).value == sa.value);
      const SplittingType st = splitting_in_kummer(f, P, Q3[i % Q3.size()], ell);
      REQUIRE(st.residue_degree * st.prime_count == ell);
    }
  }
}

TEST_CASE("even-degree transfer over F_3") {
  const Field f3 = Field::create(3);
  std::vector<Poly> Ps;
  for (unsigned d = 1; d <= 3; ++d) {
    for (auto& P : monic_irreducibles(f3, d)) Ps.push_back(P);
  }
  for (unsigned dq : {2u, 4u}) {
    for (const Poly& Q : monic_irreducibles(f3, dq)) {
      for (const Poly& P : Ps) {
        if (P == Q) continue;
        REQUIRE(power_residue_symbol(f3, P, Q, 2).value == power_residue_symbol(f3, Q, P, 2).value);
      }
    }
  }
}

TEST_CASE("Carmichael in the extension") {
  const Field f3 = Field::create(3);
  const Poly g = poly(f3, "0,2,0,1");  // t^3 - t
  for (const Poly& Q : monic_irreducibles(f3, 2)) CHECK(is_carmichael_in_kummer(f3, g, Q, 2).verdict);
  CHECK_THROWS_AS(is_carmichael_in_kummer(f3, g, poly(f3, "0,1"), 2), Error);
  CHECK_THROWS_AS(is_carmichael_in_kummer(f3, poly(f3, "0,0,1"), poly(f3, "1,0,1"), 2), Error);
  CHECK(is_carmichael_in_kummer(f3, poly(f3, "1"), poly(f3, "1,0,1"), 2).reason == Reason::Unit);

  // Degree-2 factor of a cubic, inert under some even-degree Q.
  const Poly P = poly(f3, "1,0,1"), L = poly(f3, "0,1");
  const Poly bad = mul(f3, P, L);
  const Poly Q = find_kummer_witness(f3, bad, 2, WitnessGoal::BreaksCarmichael, 6);
  CHECK(Q.degree() % 2 == 0);
  CHECK(power_residue_symbol(f3, Q, P, 2).value == FieldElement{2});
  const KorseltReport r = is_carmichael_in_kummer(f3, bad, Q, 2);
  CHECK_FALSE(r.verdict);
  CHECK(r.reason == Reason::DegreeNotDividing);
  CHECK(r.witness_poly == P);
  CHECK(find_kummer_witness(f3, bad, 2, WitnessGoal::BreaksCarmichael, 6, 3) == Q);

  // Both bad factors have degree l and split: verdict true.
  const Poly g2 = mul(f3, mul(f3, poly(f3, "1,0,1"), poly(f3, "2,1,1")), poly(f3, "0,1"));
  REQUIRE_FALSE(is_carmichael_poly(f3, g2).verdict);
  const Poly Q2 = find_kummer_witness(f3, g2, 2, WitnessGoal::MakesCarmichael, 6);
  CHECK(Q2.degree() % 2 == 0);
  CHECK(power_residue_symbol(f3, poly(f3, "1,0,1"), Q2, 2).value == f3.one());
  CHECK(is_carmichael_in_kummer(f3, g2, Q2, 2).verdict);

  CHECK_THROWS_AS(find_kummer_witness(f3, bad, 2, WitnessGoal::BreaksCarmichael, 0), Error);
}

}  // TEST_SUITE
