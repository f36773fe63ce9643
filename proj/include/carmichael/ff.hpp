#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carmichael/bigint.hpp"
#include "carmichael/error.hpp"

namespace carmichael {

// An element of F_q. The residue vector (r_0, ..., r_{e-1}) of the class
// r_0 + r_1 x + ... modulo the defining polynomial is packed into the single
// integer code = sum r_i p^i, so equal elements always have equal codes.
struct FieldElement {
  std::uint64_t code = 0;

  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// Largest q for which element-wise enumeration (exhaustive loops, brute force
// counting) is permitted.
inline constexpr std::uint64_t kMaxEnumerableQ = std::uint64_t{1} << 16;

// F_q with q = p^e. For e > 1 the field is F_p[x]/(modulus) with a monic
// irreducible modulus of degree e. Immutable after construction.
class Field {
 public:
  // Validates p and the modulus. Without a modulus and e > 1, picks the
  // lexicographically smallest monic irreducible of degree e, comparing
  // coefficient vectors from the constant term upward.
  static Field create(std::uint64_t p, unsigned e = 1,
                      std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return e_ == 1; }
  bool enumerable() const noexcept { return q_ <= kMaxEnumerableQ; }
  // Ascending coefficients of the defining polynomial; empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  // "p" or "p^e".
  std::string name() const;

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  // Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_residues(std::span<const std::uint64_t> residues) const;
  std::vector<std::uint64_t> residues(FieldElement a) const;
  // Element with the given code; codes enumerate the field as 0, 1, ..., q-1.
  FieldElement element(std::uint64_t code) const {
    check(FieldElement{code});
    return {code};
  }

  void check(FieldElement a) const {
    if (a.code >= q_) fail(ErrorKind::FieldMismatch, "element does not belong to F_" + name());
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (e_ == 1) {
      const std::uint64_t s = a.code + b.code;
      return {s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return {a.code ^ b.code};
    return add_ext(a, b);
  }

  FieldElement neg(FieldElement a) const {
    check(a);
    if (e_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
    if (p_ == 2) return a;
    return neg_ext(a);
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (e_ == 1) {
      if (p_ <= kSmallPrime) return {a.code * b.code % p_};
      return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.code) * b.code % p_)};
    }
    if (!exp_.empty()) {
      if (a.code == 0 || b.code == 0) return {0};
      return {exp_[log_[a.code] + log_[b.code]]};
    }
    return mul_ext(a, b);
  }

  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, std::uint64_t k) const;
  FieldElement pow(FieldElement a, const BigInt& k) const;

  // Inverse of the Frobenius x -> x^p.
  FieldElement pth_root(FieldElement a) const;

  // Multiplicative order of a nonzero element.
  std::uint64_t order(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  static constexpr std::uint64_t kSmallPrime = std::uint64_t{1} << 32;

  Field(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus);

  FieldElement add_ext(FieldElement a, FieldElement b) const;
  FieldElement neg_ext(FieldElement a) const;
  FieldElement mul_ext(FieldElement a, FieldElement b) const;
  void build_log_tables();

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  // Zech tables for small extension fields: exp_ has length 2(q-1) so the
  // sum of two logs never needs reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace carmichael
