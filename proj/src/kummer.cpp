#include "carmichael/kummer.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "carmichael/arith.hpp"

namespace carmichael {

namespace {

void require_kummer_degree(const Field& f, unsigned ell) {
  if (!arith::is_prime(ell)) fail(ErrorKind::NotPrime, "l = " + std::to_string(ell) + " is not prime");
  if ((f.q() - 1) % ell != 0) {
    fail(ErrorKind::EllDoesNotDivide, std::to_string(ell) + " does not divide q - 1 = " + std::to_string(f.q() - 1));
  }
}

void require_irreducible(const Field& f, const Poly& p, const char* what) {
  check(f, p);
  if (!is_irreducible(f, p)) fail(ErrorKind::NotIrreducible, std::string(what) + " is not irreducible");
}

ResidueSymbol symbol_unchecked(const Field& f, const Poly& a, const Poly& P, unsigned ell) {
  const Poly reduced = rem(f, a, P);
  if (reduced.is_zero()) fail(ErrorKind::NotCoprime, "P divides a");
  const BigInt exponent = (big_pow(f.q(), static_cast<std::uint64_t>(P.degree())) - 1) / ell;
  const Poly r = powmod(f, reduced, exponent, P);
  if (r.degree() != 0 || f.pow(r.coeff(0), std::uint64_t{ell}) != f.one()) {
    throw std::logic_error("power residue is not an l-th root of unity");
  }
  return {r.coeff(0), f.order(r.coeff(0))};
}

SplittingType splitting_unchecked(const Field& f, const Poly& P, const Poly& Q, unsigned ell) {
  if (make_monic(f, Q) == P) fail(ErrorKind::RamifiedPrime, "P = Q ramifies in the Kummer extension");
  const auto residue_degree = static_cast<unsigned>(symbol_unchecked(f, Q, P, ell).order);
  return {P, residue_degree, ell / residue_degree};
}

}  // namespace

ResidueSymbol power_residue_symbol(const Field& f, const Poly& a, const Poly& P, unsigned ell) {
  require_kummer_degree(f, ell);
  check(f, a);
  require_irreducible(f, P, "P");
  return symbol_unchecked(f, a, make_monic(f, P), ell);
}

SplittingType splitting_in_kummer(const Field& f, const Poly& P, const Poly& Q, unsigned ell) {
  require_kummer_degree(f, ell);
  require_irreducible(f, P, "P");
  require_irreducible(f, Q, "Q");
  return splitting_unchecked(f, make_monic(f, P), Q, ell);
}

namespace {

// Factors of g after the shared validation of the extension tests.
std::optional<Factorization> kummer_factors(const Field& f, const Poly& g, const Poly& Q, unsigned ell,
                                            std::uint64_t seed) {
  require_kummer_degree(f, ell);
  check(f, g);
  require_irreducible(f, Q, "Q");
  if (g.degree() < 1) return std::nullopt;
  if (!is_squarefree(f, g)) fail(ErrorKind::NotSquarefree, "g is not square-free");
  if (gcd(f, g, Q).degree() != 0) fail(ErrorKind::NotCoprimeToQ, "g shares a factor with Q");
  return factorize(f, g, seed);
}

// Verdict once Q is known to be admissible and g square-free of degree >= 1.
KorseltReport kummer_verdict(const Field& f, const Factorization& fac, std::uint64_t deg_g, const Poly& Q,
                             unsigned ell) {
  KorseltReport rep;
  rep.factor_degrees = fac.degrees();
  std::vector<SplittingType> split;
  std::uint64_t primes_above = 0;
  for (auto& x : fac.factors) {
    split.push_back(splitting_unchecked(f, x.poly, Q, ell));
    primes_above += split.back().prime_count;
  }
  if (primes_above < 2) {
    rep.reason = Reason::NotComposite;
    return rep;
  }
  for (auto& s : split) {
    const std::uint64_t norm_exp = std::uint64_t{s.residue_degree} * static_cast<std::uint64_t>(s.prime.degree());
    if ((std::uint64_t{ell} * deg_g) % norm_exp != 0) {
      rep.reason = Reason::DegreeNotDividing;
      rep.witness_poly = s.prime;
      return rep;
    }
  }
  rep.verdict = true;
  rep.reason = Reason::Ok;
  return rep;
}

}  // namespace

KorseltReport is_carmichael_in_kummer(const Field& f, const Poly& g, const Poly& Q, unsigned ell,
                                      std::uint64_t seed) {
  const auto fac = kummer_factors(f, g, Q, ell, seed);
  if (!fac) {
    KorseltReport rep;
    rep.reason = g.is_zero() ? Reason::Zero : Reason::Unit;
    return rep;
  }
  return kummer_verdict(f, *fac, static_cast<std::uint64_t>(g.degree()), Q, ell);
}

std::vector<SplittingType> kummer_splitting(const Field& f, const Poly& g, const Poly& Q, unsigned ell,
                                            std::uint64_t seed) {
  std::vector<SplittingType> out;
  const auto fac = kummer_factors(f, g, Q, ell, seed);
  if (!fac) return out;
  for (auto& x : fac->factors) out.push_back(splitting_unchecked(f, x.poly, Q, ell));
  return out;
}

Poly find_kummer_witness(const Field& f, const Poly& g, unsigned ell, WitnessGoal want, unsigned degree_cap,
                         unsigned jobs, std::uint64_t seed) {
  require_kummer_degree(f, ell);
  check(f, g);
  if (g.degree() < 1) fail(ErrorKind::ZeroOrConstant, "g must have degree >= 1");
  if (!is_squarefree(f, g)) fail(ErrorKind::NotSquarefree, "g is not square-free");
  const Factorization fac = factorize(f, g, seed);
  const auto deg_g = static_cast<std::uint64_t>(g.degree());
  const bool want_true = want == WitnessGoal::MakesCarmichael;

  auto matches = [&](const Poly& Q) {
    if (!is_irreducible(f, Q) || gcd(f, g, Q).degree() != 0) return false;
    return kummer_verdict(f, fac, deg_g, Q, ell).verdict == want_true;
  };

  jobs = std::max(1u, jobs);
  for (unsigned degree = 2; degree <= degree_cap; degree += 2) {
    const auto total = monic_count(f, degree);
    if (!total || !f.enumerable()) break;
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{kNone};
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t index = lo;
      for (const Poly& Q : MonicRange(f, degree, lo, hi)) {
        if (index >= best.load()) return;
        if (matches(Q)) {
          std::uint64_t cur = best.load();
          while (index < cur && !best.compare_exchange_weak(cur, index)) {
          }
          return;
        }
        ++index;
      }
    };
    if (jobs == 1) {
      scan(0, *total);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back(scan, *total / jobs * w + std::min<std::uint64_t>(w, *total % jobs),
                          *total / jobs * (w + 1) + std::min<std::uint64_t>(w + 1, *total % jobs));
      }
      for (auto& t : pool) t.join();
    }
    if (best.load() != kNone) return monic_from_index(f, degree, best.load());
  }
  fail(ErrorKind::NoWitnessBelowCap, "no suitable Q of even degree <= " + std::to_string(degree_cap));
}

}  // namespace carmichael
