#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "carmichael/bigint.hpp"
#include "carmichael/ff.hpp"

namespace carmichael {

// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

// Dense polynomial over some F_q, coefficients in ascending degree with
// trailing zeros trimmed. Like FieldElement it carries no field reference;
// every operation takes the Field explicitly.
class Poly {
 public:
  Poly() = default;
  // Unchecked: coefficients are trusted to belong to the caller's field.
  explicit Poly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }
  // Checked against the field.
  Poly(const Field& f, std::vector<FieldElement> coeffs);

  static Poly constant(FieldElement c) { return Poly(std::vector<FieldElement>{c}); }
  static Poly monomial(FieldElement c, std::size_t degree);
  // The indeterminate t.
  static Poly t() { return Poly(std::vector<FieldElement>{{0}, {1}}); }

  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].code == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().code == 1; }
  FieldElement lead() const noexcept { return c_.empty() ? FieldElement{} : c_.back(); }
  FieldElement coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : FieldElement{}; }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }

  // Canonical order: by degree, then coefficients read from the top down.
  // Among monic polynomials of one degree this is the enumeration order.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  }

  std::vector<FieldElement> c_;
};

void check(const Field& f, const Poly& a);

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly neg(const Field& f, const Poly& a);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, FieldElement c);

// a = quotient * b + remainder with deg remainder < deg b.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly rem(const Field& f, const Poly& a, const Poly& b);
Poly quo(const Field& f, const Poly& a, const Poly& b);

// Monic associate; zero stays zero.
Poly make_monic(const Field& f, const Poly& a);

// Monic gcd. Throws BothZero when both inputs vanish.
Poly gcd(const Field& f, const Poly& a, const Poly& b);

Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& f, const Poly& base, const BigInt& k, const Poly& m);
Poly powmod(const Field& f, const Poly& base, std::uint64_t k, const Poly& m);

Poly derivative(const Field& f, const Poly& a);

FieldElement evaluate(const Field& f, const Poly& a, FieldElement x);

// F_q[t]/(modulus). Cardinality q^deg(modulus), exact.
struct ResidueRing {
  Poly modulus;
  BigInt cardinality;
};

ResidueRing residue_ring(const Field& f, const Poly& modulus);

// CARMICHAEL_ENUM_CAP when set, 10^6 otherwise.
std::uint64_t default_enum_cap();

// q^degree when it fits in 64 bits, nullopt otherwise.
std::optional<std::uint64_t> monic_count(const Field& f, unsigned degree);

// Monic polynomial of the given degree whose lower coefficients are the
// base-q digits of index, constant term least significant.
Poly monic_from_index(const Field& f, unsigned degree, std::uint64_t index);

// Monic polynomials of one degree with index in [begin, end), in canonical
// order. Disjoint index ranges can be consumed by independent workers.
class MonicRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;
    using pointer = const Poly*;
    using reference = const Poly&;

    iterator() = default;
    const Poly& operator*() const { return current_; }
    const Poly* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    friend class MonicRange;
    iterator(std::uint64_t q, std::uint64_t index, Poly current)
        : q_(q), index_(index), current_(std::move(current)) {}

    std::uint64_t q_ = 0;
    std::uint64_t index_ = 0;
    Poly current_;
  };

  MonicRange(const Field& f, unsigned degree, std::uint64_t begin, std::uint64_t end);

  iterator begin() const;
  iterator end() const { return iterator(q_, end_, Poly()); }
  std::uint64_t size() const noexcept { return end_ - begin_; }

 private:
  const Field* field_;
  unsigned degree_;
  std::uint64_t q_;
  std::uint64_t begin_;
  std::uint64_t end_;
};

// All q^degree monic polynomials of the given degree. Throws CapExceeded when
// q^degree exceeds cap.
MonicRange enumerate_monic(const Field& f, unsigned degree, std::uint64_t cap = default_enum_cap());

}  // namespace carmichael
