#include "carmichael/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace carmichael {

Poly::Poly(const Field& f, std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) {
  for (auto c : c_) f.check(c);
  trim();
}

Poly Poly::monomial(FieldElement c, std::size_t degree) {
  std::vector<FieldElement> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto cmp = a.c_.size() <=> b.c_.size(); cmp != 0) return cmp;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto cmp = a.c_[i].code <=> b.c_[i].code; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

void check(const Field& f, const Poly& a) {
  for (auto c : a.coeffs()) f.check(c);
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElement> r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly neg(const Field& f, const Poly& a) {
  std::vector<FieldElement> r(a.coeffs());
  for (auto& c : r) c = f.neg(c);
  return Poly(std::move(r));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<FieldElement> r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElement> r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].code == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(x[i], y[j]));
  }
  return Poly(std::move(r));
}

Poly scale(const Field& f, const Poly& a, FieldElement c) {
  std::vector<FieldElement> r(a.coeffs());
  for (auto& v : r) v = f.mul(v, c);
  return Poly(std::move(r));
}

namespace {

// Long division in place: on return r holds the remainder, and when quot is
// non-null it receives the quotient coefficients.
void divide(const Field& f, std::vector<FieldElement>& r, const Poly& b,
            std::vector<FieldElement>* quot) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  if (r.size() <= db) {
    if (quot) quot->clear();
    return;
  }
  const bool monic = b.is_monic();
  const FieldElement lead_inv = monic ? f.one() : f.inv(b.lead());
  if (quot) quot->assign(r.size() - db, FieldElement{});
  for (std::size_t k = r.size(); k-- > db;) {
    FieldElement c = r[k];
    if (c.code == 0) continue;
    if (!monic) c = f.mul(c, lead_inv);
    if (quot) (*quot)[k - db] = c;
    const FieldElement nc = f.neg(c);
    for (std::size_t j = 0; j < db; ++j) {
      if (d[j].code != 0) r[k - db + j] = f.add(r[k - db + j], f.mul(nc, d[j]));
    }
    r[k] = FieldElement{};
  }
  r.resize(db);
}

}  // namespace

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  std::vector<FieldElement> r(a.coeffs());
  std::vector<FieldElement> q;
  divide(f, r, b, &q);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Field& f, const Poly& a, const Poly& b) {
  std::vector<FieldElement> r(a.coeffs());
  divide(f, r, b, nullptr);
  return Poly(std::move(r));
}

Poly quo(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).first; }

Poly make_monic(const Field& f, const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(f, a, f.inv(a.lead()));
}

Poly gcd(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = rem(f, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(f, x);
}

Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
  return rem(f, mul(f, a, b), m);
}

Poly powmod(const Field& f, const Poly& base, const BigInt& k, const Poly& m) {
  if (m.is_zero()) fail(ErrorKind::DivisionByZero, "powmod modulus is zero");
  if (k < 0) fail(ErrorKind::OutOfRange, "negative exponent");
  const Poly b = rem(f, base, m);
  Poly r = rem(f, Poly::constant(f.one()), m);
  for (std::size_t bit = mpz_sizeinbase(k.get_mpz_t(), 2); bit-- > 0;) {
    r = mulmod(f, r, r, m);
    if (mpz_tstbit(k.get_mpz_t(), bit)) r = mulmod(f, r, b, m);
  }
  return r;
}

Poly powmod(const Field& f, const Poly& base, std::uint64_t k, const Poly& m) {
  if (m.is_zero()) fail(ErrorKind::DivisionByZero, "powmod modulus is zero");
  Poly b = rem(f, base, m);
  Poly r = rem(f, Poly::constant(f.one()), m);
  while (k > 0) {
    if (k & 1) r = mulmod(f, r, b, m);
    k >>= 1;
    if (k > 0) b = mulmod(f, b, b, m);
  }
  return r;
}

Poly derivative(const Field& f, const Poly& a) {
  const auto& c = a.coeffs();
  if (c.size() <= 1) return {};
  std::vector<FieldElement> r(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    r[i - 1] = f.mul(c[i], f.from_int(static_cast<std::int64_t>(i % f.p())));
  }
  return Poly(std::move(r));
}

FieldElement evaluate(const Field& f, const Poly& a, FieldElement x) {
  FieldElement r{};
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = f.add(f.mul(r, x), c[i]);
  return r;
}

ResidueRing residue_ring(const Field& f, const Poly& modulus) {
  check(f, modulus);
  if (modulus.degree() < 1) fail(ErrorKind::DivisionByZero, "residue ring modulus must have degree >= 1");
  return {modulus, big_pow(f.q(), static_cast<std::uint64_t>(modulus.degree()))};
}

std::uint64_t default_enum_cap() {
  if (const char* env = std::getenv("CARMICHAEL_ENUM_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, std::string("invalid CARMICHAEL_ENUM_CAP: ") + env);
    }
  }
  return 1'000'000;
}

std::optional<std::uint64_t> monic_count(const Field& f, unsigned degree) {
  unsigned __int128 n = 1;
  for (unsigned i = 0; i < degree; ++i) {
    n *= f.q();
    if (n >> 64) return std::nullopt;
  }
  return static_cast<std::uint64_t>(n);
}

Poly monic_from_index(const Field& f, unsigned degree, std::uint64_t index) {
  std::vector<FieldElement> c(degree + 1);
  for (unsigned i = 0; i < degree; ++i) {
    c[i] = FieldElement{index % f.q()};
    index /= f.q();
  }
  c[degree] = f.one();
  return Poly(std::move(c));
}

MonicRange::MonicRange(const Field& f, unsigned degree, std::uint64_t begin, std::uint64_t end)
    : field_(&f), degree_(degree), q_(f.q()), begin_(begin), end_(end) {
  if (!f.enumerable()) fail(ErrorKind::CapExceeded, "field F_" + f.name() + " is too large to enumerate");
  const auto total = monic_count(f, degree);
  if (!total || end > *total || begin > end) fail(ErrorKind::OutOfRange, "enumeration range out of bounds");
}

MonicRange::iterator MonicRange::begin() const {
  if (begin_ == end_) return end();
  return iterator(q_, begin_, monic_from_index(*field_, degree_, begin_));
}

MonicRange::iterator& MonicRange::iterator::operator++() {
  std::vector<FieldElement> c = current_.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (++c[i].code < q_) break;
    c[i].code = 0;
  }
  current_ = Poly(std::move(c));
  ++index_;
  return *this;
}

MonicRange enumerate_monic(const Field& f, unsigned degree, std::uint64_t cap) {
  const auto total = monic_count(f, degree);
  if (!total || *total > cap) {
    fail(ErrorKind::CapExceeded, "q^n exceeds the enumeration cap of " + std::to_string(cap));
  }
  return MonicRange(f, degree, 0, *total);
}

}  // namespace carmichael
