#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace carmichael {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), big(base).get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

// Binomial coefficient C(n, k) for big n and small k, by multiplicative
// accumulation. Vanishes for k > n.
inline BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    BigInt factor = n - big(i);
    if (factor <= 0) return 0;
    r *= factor;
    r /= big(i + 1);
  }
  return r;
}

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::string to_decimal(const Rational& v) { return v.get_str(10); }

}  // namespace carmichael
