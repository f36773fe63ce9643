#include <doctest.h>

#include "carmichael/arith.hpp"
#include "carmichael/counting.hpp"
#include "carmichael/error.hpp"
#include "carmichael/korselt.hpp"
#include "oracles.hpp"

using namespace carmichael;
using oracle::poly;

namespace {

// Korselt for integers straight from the definition: a^n = a mod n for all a.
bool carmichael_by_fermat(std::uint64_t n) {
  if (n < 3 || arith::is_prime(n)) return false;
  for (std::uint64_t a = 2; a < n; ++a) {
    if (arith::powmod(a, n, n) != a) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("korselt") {

TEST_CASE("polynomial examples") {
  const Field f2 = Field::create(2);
  const KorseltReport r = is_carmichael_poly(f2, poly(f2, "0,1,0,0,1"));
  CHECK(r.verdict);
  CHECK(r.reason == Reason::Ok);
  CHECK(r.factor_degrees->entries == std::vector<DegreeCount>{{1, 2}, {2, 1}});

  const KorseltReport irr = is_carmichael_poly(f2, poly(f2, "1,1,1"));
  CHECK_FALSE(irr.verdict);
  CHECK(irr.reason == Reason::NotComposite);

  const KorseltReport bad = is_carmichael_poly(f2, poly(f2, "0,1,1,1"));
  CHECK_FALSE(bad.verdict);
  CHECK(bad.reason == Reason::DegreeNotDividing);
  CHECK(bad.witness_poly == poly(f2, "1,1,1"));

  CHECK(is_carmichael_poly(f2, poly(f2, "0,0,1")).reason == Reason::NotSquarefree);
  CHECK(is_carmichael_poly(f2, Poly()).reason == Reason::Zero);
  CHECK(is_carmichael_poly(f2, poly(f2, "1")).reason == Reason::Unit);

  // Non-monic inputs are judged by their monic associate.
  const Field f3 = Field::create(3);
  CHECK(is_carmichael_poly(f3, poly(f3, "0,1,0,2")).verdict);
  CHECK(to_string(Reason::Ok) == "OK");
}

TEST_CASE("rigid examples") {
  const Field f2 = Field::create(2), f5 = Field::create(5);
  const auto cubics = find_irreducibles_in_ap(f2, 3, poly(f2, "1"), Poly(), 2);
  CHECK(is_rigid_carmichael_poly(f2, oracle::product(f2, cubics), 3).verdict);

  const auto quads = find_irreducibles_in_ap(f5, 2, poly(f5, "1"), Poly(), 6);
  CHECK(is_rigid_carmichael_poly(f5, oracle::product(f5, quads), 3).verdict);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Field f = Field::create(i % 2 ? 3 : 2);
    const Poly g = oracle::random_poly(f, rng, 1 + i % 10);
    CHECK(is_rigid_carmichael_poly(f, g, 1).verdict == is_carmichael_poly(f, g).verdict);
    for (unsigned d = 2; d <= 4; ++d) {
      if (is_rigid_carmichael_poly(f, g, d).verdict) CHECK(is_carmichael_poly(f, g).verdict);
    }
  }
}

TEST_CASE("integer examples") {
  CHECK(is_carmichael_number(561).verdict);
  CHECK_FALSE(is_carmichael_number(6).verdict);
  CHECK(is_carmichael_number(4).reason == Reason::NotSquarefree);
  CHECK(is_rigid_carmichael_number(4, 3).reason == Reason::NotSquarefree);
  CHECK(is_carmichael_number(7).reason == Reason::NotComposite);

  const std::uint64_t n2 = 561ULL * 561 - 1;
  const bool expected = n2 % 8 == 0 && n2 % 120 == 0 && n2 % 288 == 0;
  CHECK(is_rigid_carmichael_number(561, 2).verdict == expected);

  for (std::uint64_t n = 1; n <= 3000; ++n) {
    REQUIRE(is_carmichael_number(n).verdict == carmichael_by_fermat(n));
  }
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    const bool c = is_carmichael_number(n).verdict;
    REQUIRE(is_rigid_carmichael_number(n, 1).verdict == c);
    REQUIRE(carmichael_ring_from_modulus(n).verdict == c);
  }
}

TEST_CASE("rings") {
  CHECK(is_carmichael_ring(make_ring_presentation({3, 3})));
  CHECK_FALSE(is_carmichael_ring(make_ring_presentation({2, 4})));
  CHECK_FALSE(is_carmichael_ring(make_ring_presentation({7})));
  CHECK(make_ring_presentation({4, 8, 9}).total == 288);
  CHECK_THROWS_AS(make_ring_presentation({6}), Error);

  const ModulusRing r561 = carmichael_ring_from_modulus(561);
  CHECK(r561.verdict);
  CHECK(r561.presentation->cards == std::vector<std::uint64_t>{3, 11, 17});
  CHECK_FALSE(carmichael_ring_from_modulus(12).presentation.has_value());
  CHECK_FALSE(carmichael_ring_from_modulus(12).verdict);
  CHECK(carmichael_ring_from_modulus(15).presentation->cards == std::vector<std::uint64_t>{3, 5});
  CHECK_FALSE(carmichael_ring_from_modulus(15).verdict);
}

TEST_CASE("congruence oracle, element by element") {
  for (auto [p, e, nmax] : {std::tuple{2ULL, 1u, 8u}, {3, 1, 5}, {2, 2, 4}, {5, 1, 3}, {7, 1, 2}, {3, 2, 2}}) {
    const Field f = Field::create(p, e);
    for (unsigned n = 1; n <= nmax; ++n) {
      for (const Poly& g : enumerate_monic(f, n)) {
        REQUIRE(is_carmichael_poly(f, g).verdict == oracle::carmichael_by_congruence(f, g));
        REQUIRE(carmichael_poly_holds(f, g) == is_carmichael_poly(f, g).verdict);
      }
    }
  }
}

TEST_CASE("congruence oracle on a basis, q^deg <= 4096") {
  for (auto [p, e] : {std::pair{7ULL, 1u}, {2, 3}, {3, 2}, {2, 4}, {11, 1}, {13, 1}}) {
    const Field f = Field::create(p, e);
    for (unsigned n = 1; big_pow(f.q(), n) <= 4096; ++n) {
      for (const Poly& g : enumerate_monic(f, n)) {
        REQUIRE(is_carmichael_poly(f, g).verdict == oracle::carmichael_by_basis(f, g));
      }
    }
  }
}

TEST_CASE("prime degree above q is never Carmichael") {
  const Field f2 = Field::create(2);
  for (unsigned n : {3u, 5u, 7u}) {
    for (const Poly& g : enumerate_monic(f2, n)) REQUIRE_FALSE(is_carmichael_poly(f2, g).verdict);
  }
}

}  // TEST_SUITE
