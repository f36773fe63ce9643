#include "carmichael/korselt.hpp"

#include <variant>

#include "carmichael/arith.hpp"

namespace carmichael {

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::Ok: return "OK";
    case Reason::NotComposite: return "NotComposite";
    case Reason::NotSquarefree: return "NotSquarefree";
    case Reason::DegreeNotDividing: return "DegreeNotDividing";
    case Reason::Unit: return "Unit";
    case Reason::Zero: return "Zero";
  }
  return "?";
}

namespace {

KorseltReport failing(Reason r) {
  KorseltReport rep;
  rep.reason = r;
  return rep;
}

FactorDegrees degrees_of(const std::vector<DegreeGroup>& groups) {
  FactorDegrees out;
  for (auto& g : groups) {
    out.entries.push_back({g.degree, static_cast<std::uint64_t>(g.product.degree()) / g.degree});
  }
  return out;
}

// Shared front half of the polynomial tests: degenerate inputs and
// square-freeness. Returns the per-degree groups of the monic associate, or
// a failing report.
std::variant<std::vector<DegreeGroup>, KorseltReport> squarefree_groups(const Field& f, const Poly& g) {
  check(f, g);
  if (g.is_zero()) return failing(Reason::Zero);
  if (g.degree() == 0) return failing(Reason::Unit);
  const Poly m = make_monic(f, g);
  if (!is_squarefree(f, m)) return failing(Reason::NotSquarefree);
  return distinct_degree_groups(f, m);
}

// Applies the per-degree divisibility predicate to the groups, naming the
// canonically smallest factor of the first offending degree.
template <typename DegreeOk>
KorseltReport judge(const Field& f, const std::vector<DegreeGroup>& groups, std::uint64_t seed, DegreeOk ok) {
  KorseltReport rep;
  rep.factor_degrees = degrees_of(groups);
  if (rep.factor_degrees->total_factors() < 2) {
    rep.reason = Reason::NotComposite;
    return rep;
  }
  for (auto& grp : groups) {
    if (!ok(grp.degree)) {
      rep.reason = Reason::DegreeNotDividing;
      rep.witness_poly = equal_degree_split(f, grp.product, grp.degree, seed).front();
      return rep;
    }
  }
  rep.verdict = true;
  rep.reason = Reason::Ok;
  return rep;
}

}  // namespace

KorseltReport is_carmichael_poly(const Field& f, const Poly& g, std::uint64_t seed) {
  auto front = squarefree_groups(f, g);
  if (auto* rep = std::get_if<KorseltReport>(&front)) return *rep;
  const auto n = static_cast<unsigned>(g.degree());
  return judge(f, std::get<0>(front), seed, [n](unsigned d) { return n % d == 0; });
}

bool carmichael_poly_holds(const Field& f, const Poly& g) {
  if (g.degree() < 2) return false;
  const Poly m = make_monic(f, g);
  if (gcd(f, m, derivative(f, m)).degree() != 0) return false;
  const auto n = static_cast<unsigned>(g.degree());
  bool ok = true;
  std::uint64_t factors = 0;
  distinct_degree_groups(f, m, [&](const DegreeGroup& grp) {
    if (n % grp.degree != 0) {
      ok = false;
      return false;
    }
    factors += static_cast<std::uint64_t>(grp.product.degree()) / grp.degree;
    return true;
  });
  return ok && factors >= 2;
}

KorseltReport is_rigid_carmichael_poly(const Field& f, const Poly& g, unsigned d, std::uint64_t seed) {
  if (d < 1) fail(ErrorKind::OutOfRange, "rigid order must be at least 1");
  auto front = squarefree_groups(f, g);
  if (auto* rep = std::get_if<KorseltReport>(&front)) return *rep;
  const std::uint64_t target = std::uint64_t{d} * static_cast<std::uint64_t>(g.degree());
  return judge(f, std::get<0>(front), seed, [&](unsigned deg) {
    for (std::uint64_t i = 1; i <= d; ++i) {
      if (target % (i * deg) != 0) return false;
    }
    return true;
  });
}

KorseltReport korselt_from_factors(std::uint64_t n,
                                   const std::vector<std::pair<std::uint64_t, unsigned>>& factors) {
  if (n == 1) return failing(Reason::Unit);
  if (factors.size() == 1 && factors.front().second == 1) return failing(Reason::NotComposite);
  for (auto [p, e] : factors) {
    if (e > 1) return failing(Reason::NotSquarefree);
  }
  KorseltReport rep;
  for (auto [p, e] : factors) {
    if ((n - 1) % (p - 1) != 0) {
      rep.reason = Reason::DegreeNotDividing;
      rep.witness_prime = p;
      return rep;
    }
  }
  rep.verdict = true;
  rep.reason = Reason::Ok;
  return rep;
}

KorseltReport is_carmichael_number(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::OutOfRange, "n must be at least 1");
  return korselt_from_factors(n, arith::factor(n));
}

KorseltReport is_rigid_carmichael_number(std::uint64_t n, unsigned d) {
  if (n == 0) fail(ErrorKind::OutOfRange, "n must be at least 1");
  if (d < 1) fail(ErrorKind::OutOfRange, "rigid order must be at least 1");
  if (n == 1) return failing(Reason::Unit);
  const auto factors = arith::factor(n);
  if (factors.size() == 1 && factors.front().second == 1) return failing(Reason::NotComposite);
  for (auto [p, e] : factors) {
    if (e > 1) return failing(Reason::NotSquarefree);
  }
  const BigInt target = big_pow(n, d) - 1;
  KorseltReport rep;
  for (auto [p, e] : factors) {
    for (unsigned i = 1; i <= d; ++i) {
      const BigInt divisor = big_pow(p, i) - 1;
      if (!mpz_divisible_p(target.get_mpz_t(), divisor.get_mpz_t())) {
        rep.reason = Reason::DegreeNotDividing;
        rep.witness_prime = p;
        return rep;
      }
    }
  }
  rep.verdict = true;
  rep.reason = Reason::Ok;
  return rep;
}

RingPresentation make_ring_presentation(std::vector<std::uint64_t> cards) {
  if (cards.empty()) fail(ErrorKind::OutOfRange, "a ring presentation needs at least one field");
  BigInt total = 1;
  for (auto q : cards) {
    if (!arith::prime_power(q)) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    total *= big(q);
  }
  return {std::move(cards), total};
}

bool is_carmichael_ring(const RingPresentation& pres) {
  if (pres.cards.size() < 2) return false;
  const BigInt target = pres.total - 1;
  for (auto q : pres.cards) {
    const BigInt divisor = big(q - 1);
    if (!mpz_divisible_p(target.get_mpz_t(), divisor.get_mpz_t())) return false;
  }
  return true;
}

ModulusRing carmichael_ring_from_modulus(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::OutOfRange, "modulus must be at least 2");
  std::vector<std::uint64_t> primes;
  for (auto [p, e] : arith::factor(n)) {
    if (e > 1) return {std::nullopt, false};
    primes.push_back(p);
  }
  ModulusRing out;
  out.presentation = make_ring_presentation(std::move(primes));
  out.verdict = is_carmichael_ring(*out.presentation);
  return out;
}

}  // namespace carmichael
