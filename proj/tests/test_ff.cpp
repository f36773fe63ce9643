#include <doctest.h>

#include <cmath>
#include <random>

#include "carmichael/ff.hpp"
#include "carmichael/error.hpp"
#include "carmichael/text.hpp"

using namespace carmichael;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

FieldElement generator(const Field& f) {
  for (std::uint64_t c = 1; c < f.q(); ++c) {
    if (f.order(FieldElement{c}) == f.q() - 1) return FieldElement{c};
  }
  FAIL("no generator");
  return {};
}

}  // namespace

TEST_SUITE("ff") {

TEST_CASE("construction") {
  const Field f2 = Field::create(2);
  CHECK(f2.q() == 2);
  CHECK(f2.is_prime_field());

  const Field f4 = Field::create(2, 2, std::vector<std::uint64_t>{1, 1, 1});
  CHECK(f4.q() == 4);
  CHECK(Field::create(2, 2) == f4);

  CHECK(kind_of([] { Field::create(4); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field::create(2, 2, std::vector<std::uint64_t>{1, 0, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { Field::create(3, 2, std::vector<std::uint64_t>{1, 1}); }) == ErrorKind::DegreeMismatch);
  CHECK(kind_of([] { Field::create(2, 64); }) == ErrorKind::OutOfRange);
}

TEST_CASE("default moduli are irreducible") {
  for (auto [p, e] : {std::pair{2ULL, 3u}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 8}, {2, 17}}) {
    const Field f = Field::create(p, e);
    CHECK(f.q() == static_cast<std::uint64_t>(std::pow(p, e)));
    CHECK(f.modulus().size() == e + 1);
    CHECK(f.modulus().back() == 1);
  }
  CHECK(Field::create(2, 3).modulus() == std::vector<std::uint64_t>{1, 0, 1, 1});
}

TEST_CASE("small examples") {
  const Field f3 = Field::create(3);
  CHECK(f3.inv(FieldElement{2}) == FieldElement{2});

  const Field f4 = Field::create(2, 2);
  const FieldElement x = f4.from_residues(std::vector<std::uint64_t>{0, 1});
  CHECK(f4.mul(x, x) == f4.from_residues(std::vector<std::uint64_t>{1, 1}));

  const Field f5 = Field::create(5);
  CHECK(f5.add(FieldElement{3}, FieldElement{4}) == FieldElement{2});
  CHECK(f5.pow(FieldElement{2}, 4) == f5.one());
  CHECK(Field::create(2).pow(FieldElement{1}, 0) == FieldElement{1});
  CHECK(f5.from_int(-1) == FieldElement{4});

  const Field f9 = Field::create(3, 2);
  CHECK(f9.pow(generator(f9), 8) == f9.one());
  CHECK(f9.order(generator(f9)) == 8);
}

TEST_CASE("residue round trip and mismatch") {
  const Field f = Field::create(3, 3);
  for (std::uint64_t c = 0; c < f.q(); ++c) {
    CHECK(f.from_residues(f.residues(FieldElement{c})).code == c);
  }
  CHECK(kind_of([&] { f.add(FieldElement{27}, f.one()); }) == ErrorKind::FieldMismatch);
  CHECK(kind_of([&] { f.inv(f.zero()); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("Frobenius fixes every element for q <= 81") {
  for (auto [p, e] : {std::pair{2ULL, 1u}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4},
                      {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}}) {
    const Field f = Field::create(p, e);
    for (std::uint64_t c = 0; c < f.q(); ++c) {
      const FieldElement a{c};
      REQUIRE(f.pow(a, f.q()) == a);
      if (c != 0) {
        REQUIRE(f.mul(a, f.inv(a)) == f.one());
        REQUIRE((f.q() - 1) % f.order(a) == 0);
      }
      REQUIRE(f.pow(f.pth_root(a), p) == a);
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  // The last two fields are too large for log tables and use schoolbook reduction.
  for (auto [p, e] : {std::pair{2ULL, 8u}, {3, 5}, {5, 3}, {1000003, 1}, {2, 20}, {3, 13}, {65537, 2}}) {
    const Field f = Field::create(p, e);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
    for (int i = 0; i < 300; ++i) {
      const FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.add(a, f.neg(a)) == f.zero());
      if (a.code != 0) {
        REQUIRE(f.mul(a, f.inv(a)) == f.one());
        REQUIRE(f.pow(a, f.q() - 1) == f.one());
      }
      REQUIRE(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
}

TEST_CASE("table and schoolbook multiplication agree") {
  // F_2^16 is the largest table-backed field; rebuild the product by hand.
  const Field f = Field::create(2, 16);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
  std::uint64_t red = 0;
  for (std::size_t i = 0; i < 16; ++i) red |= f.modulus()[i] << i;
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t a = pick(rng), b = pick(rng);
    std::uint64_t acc = 0, x = a;
    for (int bit = 0; bit < 16; ++bit) {
      if (b >> bit & 1) acc ^= x;
      x <<= 1;
      if (x >> 16 & 1) x = (x ^ red) & 0xFFFF;
    }
    REQUIRE(f.mul(FieldElement{a}, FieldElement{b}).code == acc);
  }
}

}  // TEST_SUITE
