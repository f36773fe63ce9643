#include "carmichael/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "carmichael/arith.hpp"

namespace carmichael {

std::uint64_t FactorDegrees::total_factors() const {
  std::uint64_t n = 0;
  for (auto& e : entries) n += e.count;
  return n;
}

std::uint64_t FactorDegrees::total_degree() const {
  std::uint64_t n = 0;
  for (auto& e : entries) n += e.count * e.degree;
  return n;
}

FactorDegrees Factorization::degrees() const {
  std::map<unsigned, std::uint64_t> m;
  for (auto& fac : factors) m[static_cast<unsigned>(fac.poly.degree())] += fac.multiplicity;
  FactorDegrees out;
  for (auto [d, c] : m) out.entries.push_back({d, c});
  return out;
}

bool is_squarefree(const Field& f, const Poly& g) {
  if (g.degree() < 1) fail(ErrorKind::ZeroOrConstant, "square-free test needs degree >= 1");
  return gcd(f, g, derivative(f, g)).degree() == 0;
}

std::vector<DegreeGroup> distinct_degree_groups(const Field& f, const Poly& g,
                                                const std::function<bool(const DegreeGroup&)>& visit) {
  std::vector<DegreeGroup> groups;
  Poly rest = make_monic(f, g);
  Poly frob = Poly::t();
  unsigned d = 1;
  while (rest.degree() >= 2 * static_cast<int>(d)) {
    frob = powmod(f, frob, f.q(), rest);  // t^(q^d) mod rest
    Poly common = gcd(f, rest, sub(f, frob, Poly::t()));
    if (common.degree() > 0) {
      groups.push_back({d, common});
      if (visit && !visit(groups.back())) return groups;
      rest = quo(f, rest, common);
      frob = rem(f, frob, rest);
    }
    ++d;
  }
  if (rest.degree() > 0) {
    groups.push_back({static_cast<unsigned>(rest.degree()), rest});
    if (visit) visit(groups.back());
  }
  return groups;
}

FactorDegrees distinct_degree_factor(const Field& f, const Poly& g) {
  if (!is_squarefree(f, g)) fail(ErrorKind::NotSquarefree, "distinct-degree factorization needs square-free input");
  FactorDegrees out;
  for (auto& grp : distinct_degree_groups(f, g)) {
    out.entries.push_back({grp.degree, static_cast<std::uint64_t>(grp.product.degree()) / grp.degree});
  }
  return out;
}

namespace {

Poly random_poly(const Field& f, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.q() - 1);
  std::vector<FieldElement> c(static_cast<std::size_t>(below_degree));
  for (auto& v : c) v = FieldElement{dist(rng)};
  return Poly(std::move(c));
}

// Candidate splitter for a product of irreducibles of degree d.
Poly splitting_poly(const Field& f, const Poly& a, const Poly& product, unsigned d) {
  if (f.p() == 2) {
    // Absolute trace to F_2: a + a^2 + ... + a^(2^(e d - 1)).
    Poly term = a;
    Poly acc = a;
    for (unsigned k = 1; k < f.e() * d; ++k) {
      term = mulmod(f, term, term, product);
      acc = add(f, acc, term);
    }
    return acc;
  }
  const BigInt exponent = (big_pow(f.q(), d) - 1) / 2;
  return sub(f, powmod(f, a, exponent, product), Poly::constant(f.one()));
}

void split_into(const Field& f, const Poly& product, unsigned d, std::mt19937_64& rng,
                std::vector<Poly>& out) {
  if (product.degree() == static_cast<int>(d)) {
    out.push_back(product);
    return;
  }
  while (true) {
    const Poly a = random_poly(f, product.degree(), rng);
    if (a.degree() < 1) continue;
    const Poly common = gcd(f, product, splitting_poly(f, a, product, d));
    if (common.degree() > 0 && common.degree() < product.degree()) {
      split_into(f, common, d, rng, out);
      split_into(f, quo(f, product, common), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> equal_degree_split(const Field& f, const Poly& product, unsigned degree,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  split_into(f, make_monic(f, product), degree, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Factor> squarefree_decomposition(const Field& f, const Poly& g) {
  if (g.degree() < 1) fail(ErrorKind::ZeroOrConstant, "square-free decomposition needs degree >= 1");
  std::vector<Factor> out;
  const Poly monic = make_monic(f, g);
  const Poly dg = derivative(f, monic);
  Poly c = monic;
  if (!dg.is_zero()) {
    c = gcd(f, monic, dg);
    Poly w = quo(f, monic, c);
    unsigned i = 1;
    while (!w.is_one()) {
      Poly y = gcd(f, w, c);
      Poly fac = quo(f, w, y);
      if (fac.degree() > 0) out.push_back({fac, i});
      ++i;
      w = std::move(y);
      c = quo(f, c, w);
    }
  }
  if (c.degree() > 0) {
    // c is a p-th power: c = sum a_i t^(p i) with a_i = b_i^p.
    const auto& cc = c.coeffs();
    std::vector<FieldElement> root(cc.size() / f.p() + 1);
    for (std::size_t i = 0; i < cc.size(); i += f.p()) root[i / f.p()] = f.pth_root(cc[i]);
    for (auto& fac : squarefree_decomposition(f, Poly(std::move(root)))) {
      out.push_back({fac.poly, static_cast<unsigned>(fac.multiplicity * f.p())});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

Factorization factorize(const Field& f, const Poly& g, std::uint64_t seed) {
  if (g.degree() < 1) fail(ErrorKind::ZeroOrConstant, "factorization needs degree >= 1");
  Factorization out;
  for (auto& part : squarefree_decomposition(f, g)) {
    for (auto& grp : distinct_degree_groups(f, part.poly)) {
      for (auto& p : equal_degree_split(f, grp.product, grp.degree, seed)) {
        out.factors.push_back({p, part.multiplicity});
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return out;
}

bool is_irreducible(const Field& f, const Poly& g) {
  const int n = g.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly m = make_monic(f, g);
  const Poly t = Poly::t();
  std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = t;
  for (int k = 1; k <= n; ++k) frob[k] = powmod(f, frob[k - 1], f.q(), m);
  if (frob[n] != rem(f, t, m)) return false;
  for (auto [r, e] : arith::factor(static_cast<std::uint64_t>(n))) {
    if (gcd(f, sub(f, frob[n / r], t), m).degree() != 0) return false;
  }
  return true;
}

std::vector<Poly> find_irreducibles_in_ap(const Field& f, unsigned degree, const Poly& g,
                                          const Poly& h, std::size_t count, const PolySet& exclude) {
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "progression modulus is zero");
  const Poly gm = make_monic(f, g);
  const Poly hr = rem(f, h, gm);
  if (gcd(f, gm, hr).degree() != 0) fail(ErrorKind::NotCoprime, "gcd(g, h) != 1");
  if (degree < 1 || static_cast<int>(degree) < gm.degree()) {
    fail(ErrorKind::OutOfRange, "degree must be at least max(1, deg g)");
  }
  std::vector<Poly> out;
  if (count == 0) return out;
  const unsigned span = degree - static_cast<unsigned>(gm.degree());
  std::vector<FieldElement> s(span + 1);
  s[span] = f.one();
  while (true) {
    Poly w = add(f, hr, mul(f, gm, Poly(s)));
    if (!exclude.contains(w) && is_irreducible(f, w)) {
      out.push_back(std::move(w));
      if (out.size() == count) return out;
    }
    std::size_t i = 0;
    for (; i < span; ++i) {
      if (++s[i].code < f.q()) break;
      s[i].code = 0;
    }
    if (i == span) break;
  }
  fail(ErrorKind::ExhaustedSearchSpace,
       "progression holds only " + std::to_string(out.size()) + " suitable irreducibles of degree " +
           std::to_string(degree));
}

}  // namespace carmichael
