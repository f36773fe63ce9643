#include <doctest.h>

#include <set>

#include "carmichael/error.hpp"
#include "carmichael/poly.hpp"
#include "oracles.hpp"

using namespace carmichael;
using oracle::poly;

TEST_SUITE("poly") {

TEST_CASE("arithmetic examples") {
  const Field f2 = Field::create(2), f3 = Field::create(3), f5 = Field::create(5);
  CHECK(mul(f2, poly(f2, "1,1"), poly(f2, "1,1")) == poly(f2, "1,0,1"));
  CHECK(oracle::product(f2, {poly(f2, "0,1"), poly(f2, "1,1"), poly(f2, "1,1,1")}) == poly(f2, "0,1,0,0,1"));
  CHECK(add(f3, poly(f3, "1,1"), poly(f3, "2,2")).is_zero());

  auto [q1, r1] = divmod(f2, poly(f2, "0,1,0,0,1"), poly(f2, "1,1,1"));
  CHECK(q1 == poly(f2, "0,1,1"));
  CHECK(r1.is_zero());
  auto [q2, r2] = divmod(f3, poly(f3, "0,0,1"), poly(f3, "0,1"));
  CHECK(q2 == poly(f3, "0,1"));
  CHECK(r2.is_zero());
  const Poly a = poly(f5, "3,1,4,1");
  CHECK(divmod(f5, a, Poly::constant(f5.one())).first == a);

  CHECK(gcd(f5, poly(f5, "4,0,1"), poly(f5, "4,1")) == poly(f5, "4,1"));
  CHECK(gcd(f5, a, Poly()) == make_monic(f5, a));
  CHECK(gcd(f2, poly(f2, "0,1,0,0,1"), poly(f2, "0,1,1")) == poly(f2, "0,1,1"));

  CHECK(powmod(f2, poly(f2, "1,1"), 16, poly(f2, "0,1,0,0,1")) == poly(f2, "1,1"));
  CHECK(powmod(f2, poly(f2, "0,1"), 4, poly(f2, "0,0,1")).is_zero());
  CHECK(powmod(f5, a, 1, poly(f5, "1,1")) == rem(f5, a, poly(f5, "1,1")));

  CHECK(derivative(f2, poly(f2, "1,0,1")).is_zero());
  CHECK(derivative(f3, poly(f3, "0,1,0,1")) == poly(f3, "1"));
  CHECK(derivative(f5, poly(f5, "0,3,1")) == poly(f5, "3,2"));
}

TEST_CASE("errors") {
  const Field f2 = Field::create(2);
  CHECK_THROWS_AS(divmod(f2, poly(f2, "1,1"), Poly()), Error);
  CHECK_THROWS_AS(gcd(f2, Poly(), Poly()), Error);
  CHECK_THROWS_AS(Poly(f2, {FieldElement{2}}), Error);
  CHECK_THROWS_AS(residue_ring(f2, poly(f2, "1")), Error);
  const Poly big = add(f2, Poly::monomial(f2.one(), 67), Poly::constant(f2.one()));
  CHECK(residue_ring(f2, big).cardinality == BigInt("147573952589676412928"));
}

TEST_CASE("enumeration") {
  const Field f2 = Field::create(2), f3 = Field::create(3);
  std::vector<Poly> lin(enumerate_monic(f2, 1).begin(), enumerate_monic(f2, 1).end());
  CHECK(lin == std::vector<Poly>{poly(f2, "0,1"), poly(f2, "1,1")});
  CHECK(enumerate_monic(f3, 2).size() == 9);
  CHECK(*enumerate_monic(f2, 4).begin() == poly(f2, "0,0,0,0,1"));

  for (auto [p, e, n] : {std::tuple{2ULL, 1u, 13u}, {3, 1, 8}, {2, 2, 6}, {5, 1, 5}, {3, 2, 4}}) {
    const Field f = Field::create(p, e);
    std::set<Poly> seen;
    std::uint64_t i = 0;
    for (const Poly& g : enumerate_monic(f, n)) {
      REQUIRE(g.degree() == static_cast<int>(n));
      REQUIRE(g.is_monic());
      REQUIRE(g == monic_from_index(f, n, i++));
      seen.insert(g);
    }
    CHECK(seen.size() == *monic_count(f, n));
  }
  CHECK_THROWS_AS(enumerate_monic(f2, 30, 1000), Error);
}

TEST_CASE("random identities") {
  std::mt19937_64 rng(3);
  for (auto [p, e] : {std::pair{2ULL, 1u}, {3, 1}, {7, 1}, {2, 3}, {3, 2}, {101, 1}}) {
    const Field f = Field::create(p, e);
    std::uniform_int_distribution<int> deg(0, 12);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
    for (int i = 0; i < 100; ++i) {
      const Poly a = oracle::random_poly(f, rng, deg(rng), false);
      const Poly b = oracle::random_poly(f, rng, deg(rng), false);
      const Poly c = oracle::random_poly(f, rng, deg(rng), false);
      auto [qq, r] = divmod(f, a, b);
      REQUIRE(add(f, mul(f, qq, b), r) == a);
      REQUIRE(r.degree() < b.degree());
      const Poly g = gcd(f, a, b);
      REQUIRE(g.is_monic());
      REQUIRE(rem(f, a, g).is_zero());
      REQUIRE(rem(f, b, g).is_zero());
      REQUIRE(mul(f, a, add(f, b, c)) == add(f, mul(f, a, b), mul(f, a, c)));
      REQUIRE(derivative(f, mul(f, a, b)) == add(f, mul(f, derivative(f, a), b), mul(f, a, derivative(f, b))));
      const FieldElement x{pick(rng)};
      REQUIRE(evaluate(f, mul(f, a, b), x) == f.mul(evaluate(f, a, x), evaluate(f, b, x)));
      if (b.degree() >= 1) {
        REQUIRE(powmod(f, a, 5, b) == rem(f, mul(f, mul(f, mul(f, a, a), mul(f, a, a)), a), b));
      }
    }
  }
}

TEST_CASE("Carmichael moduli fix every residue under q^deg") {
  const Field f3 = Field::create(3);
  // (t)(t+1)(t+2) = t^3 - t: three distinct linear factors.
  const Poly m = poly(f3, "0,2,0,1");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Poly a = oracle::random_poly(f3, rng, 5, false);
    CHECK(powmod(f3, a, 27, m) == rem(f3, a, m));
  }
}

}  // TEST_SUITE
