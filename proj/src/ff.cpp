#include "carmichael/ff.hpp"

#include "carmichael/arith.hpp"
#include "carmichael/factor.hpp"
#include "carmichael/poly.hpp"

namespace carmichael {

namespace {

bool is_irreducible_over_prime_field(std::uint64_t p, const std::vector<std::uint64_t>& coeffs) {
  const Field fp = Field::create(p);
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(fp.element(v));
  return is_irreducible(fp, Poly(fp, std::move(c)));
}

std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned e) {
  // Counter over (c_0, ..., c_{e-1}) with c_0 most significant; c_0 = 0 is
  // skipped because t then divides the candidate.
  std::vector<std::uint64_t> c(e + 1, 0);
  c[e] = 1;
  c[0] = 1;
  while (true) {
    if (is_irreducible_over_prime_field(p, c)) return c;
    int i = static_cast<int>(e) - 1;
    while (i >= 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

Field Field::create(std::uint64_t p, unsigned e, std::optional<std::vector<std::uint64_t>> modulus) {
  if (!arith::is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) fail(ErrorKind::DegreeMismatch, "extension degree must be at least 1");
  {
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      if (q >> 63) fail(ErrorKind::OutOfRange, "field cardinality exceeds 2^63");
    }
  }
  if (e == 1) {
    if (modulus && modulus->size() > 2) {
      fail(ErrorKind::DegreeMismatch, "modulus degree does not match extension degree 1");
    }
    return Field(p, 1, {});
  }
  std::vector<std::uint64_t> m;
  if (modulus) {
    m = *modulus;
    if (m.size() != e + 1) {
      fail(ErrorKind::DegreeMismatch, "modulus must have " + std::to_string(e + 1) + " coefficients");
    }
    for (auto& c : m) {
      if (c >= p) fail(ErrorKind::FieldMismatch, "modulus coefficient out of range");
    }
    if (m.back() != 1) fail(ErrorKind::DegreeMismatch, "modulus must be monic");
    if (!is_irreducible_over_prime_field(p, m)) {
      fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    }
  } else {
    m = default_modulus(p, e);
  }
  return Field(p, e, std::move(m));
}

Field::Field(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  if (e_ > 1 && q_ <= kMaxEnumerableQ) build_log_tables();
}

std::string Field::name() const {
  if (e_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(e_);
}

FieldElement Field::from_int(std::int64_t v) const {
  const auto sp = static_cast<std::int64_t>(p_);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return {static_cast<std::uint64_t>(r)};
}

FieldElement Field::from_residues(std::span<const std::uint64_t> residues) const {
  if (residues.size() != e_) {
    fail(ErrorKind::FieldMismatch, "expected " + std::to_string(e_) + " residues for F_" + name());
  }
  std::uint64_t code = 0;
  for (std::size_t i = residues.size(); i-- > 0;) {
    if (residues[i] >= p_) fail(ErrorKind::FieldMismatch, "residue out of range for F_" + name());
    code = code * p_ + residues[i];
  }
  return {code};
}

std::vector<std::uint64_t> Field::residues(FieldElement a) const {
  check(a);
  std::vector<std::uint64_t> r(e_);
  for (unsigned i = 0; i < e_; ++i) {
    r[i] = a.code % p_;
    a.code /= p_;
  }
  return r;
}

FieldElement Field::add_ext(FieldElement a, FieldElement b) const {
  std::uint64_t code = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t s = a.code % p_ + b.code % p_;
    if (s >= p_) s -= p_;
    code += s * scale;
    scale *= p_;
    a.code /= p_;
    b.code /= p_;
  }
  return {code};
}

FieldElement Field::neg_ext(FieldElement a) const {
  std::uint64_t code = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    const std::uint64_t r = a.code % p_;
    code += (r == 0 ? 0 : p_ - r) * scale;
    scale *= p_;
    a.code /= p_;
  }
  return {code};
}

FieldElement Field::mul_ext(FieldElement a, FieldElement b) const {
  const auto ra = residues(a);
  const auto rb = residues(b);
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (ra[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      prod[i + j] = (prod[i + j] + arith::mulmod(ra[i], rb[j], p_)) % p_;
    }
  }
  for (std::size_t k = prod.size(); k-- > e_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
    for (unsigned j = 0; j < e_; ++j) {
      const std::uint64_t t = arith::mulmod(c, modulus_[j], p_);
      prod[k - e_ + j] = (prod[k - e_ + j] + p_ - t) % p_;
    }
  }
  prod.resize(e_);
  return from_residues(prod);
}

void Field::build_log_tables() {
  const std::uint64_t n = q_ - 1;
  std::uint64_t gen = 0;
  for (std::uint64_t c = 2; c < q_ && gen == 0; ++c) {
    FieldElement x{c};
    std::uint64_t k = 1;
    while (x.code != 1) {
      x = mul_ext(x, FieldElement{c});
      ++k;
    }
    if (k == n) gen = c;
  }
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  FieldElement x{1};
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x.code);
    exp_[i + n] = static_cast<std::uint32_t>(x.code);
    log_[x.code] = static_cast<std::uint32_t>(i);
    x = mul_ext(x, FieldElement{gen});
  }
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.code == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (e_ == 1) {
    // Extended Euclid on (a, p).
    __int128 r0 = p_, r1 = a.code, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const __int128 qt = r0 / r1;
      const __int128 r2 = r0 - qt * r1;
      r0 = r1;
      r1 = r2;
      const __int128 s2 = s0 - qt * s1;
      s0 = s1;
      s1 = s2;
    }
    __int128 v = s0 % static_cast<__int128>(p_);
    if (v < 0) v += p_;
    return {static_cast<std::uint64_t>(v)};
  }
  if (!exp_.empty()) return {exp_[(q_ - 1) - log_[a.code]]};
  return pow(a, q_ - 2);
}

FieldElement Field::pow(FieldElement a, std::uint64_t k) const {
  check(a);
  FieldElement r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

FieldElement Field::pow(FieldElement a, const BigInt& k) const {
  check(a);
  if (k < 0) fail(ErrorKind::OutOfRange, "negative exponent");
  FieldElement r = one();
  for (std::size_t bit = mpz_sizeinbase(k.get_mpz_t(), 2); bit-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(k.get_mpz_t(), bit)) r = mul(r, a);
  }
  return r;
}

FieldElement Field::pth_root(FieldElement a) const {
  FieldElement r = a;
  for (unsigned i = 1; i < e_; ++i) r = pow(r, p_);
  return r;
}

std::uint64_t Field::order(FieldElement a) const {
  check(a);
  if (a.code == 0) fail(ErrorKind::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  for (auto [r, k] : arith::factor(q_ - 1)) {
    for (unsigned i = 0; i < k; ++i) {
      if (pow(a, n / r) == one()) {
        n /= r;
      } else {
        break;
      }
    }
  }
  return n;
}

}  // namespace carmichael
