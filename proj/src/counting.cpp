#include "carmichael/counting.hpp"

#include <algorithm>
#include <thread>

#include "carmichael/arith.hpp"
#include "carmichael/korselt.hpp"

namespace carmichael {

int mobius(std::uint64_t d) {
  if (d == 0) fail(ErrorKind::OutOfRange, "mobius needs d >= 1");
  return arith::mobius(d);
}

namespace {

void require_prime_power(std::uint64_t q) {
  if (!arith::prime_power(q)) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
}

}  // namespace

BigInt pi_q(std::uint64_t q, unsigned n) {
  require_prime_power(q);
  if (n == 0) fail(ErrorKind::OutOfRange, "degree must be at least 1");
  BigInt sum = 0;
  for (auto d : arith::divisors(n)) {
    const int mu = arith::mobius(d);
    if (mu == 0) continue;
    const BigInt term = big_pow(q, n / d);
    if (mu > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / n;
}

TupleSpace tuple_space(std::uint64_t q, unsigned n) {
  require_prime_power(q);
  TupleSpace ts;
  ts.n = n;
  for (auto d : arith::divisors(n)) {
    if (d == n) continue;
    const auto deg = static_cast<unsigned>(d);
    ts.divisors.push_back(deg);
    const BigInt pi = pi_q(q, deg);
    const std::uint64_t bound = n / deg;
    ts.caps.push_back(pi < big(bound) ? to_u64(pi) : bound);
  }
  return ts;
}

BigInt count_carmichael_exact(std::uint64_t q, unsigned n) {
  if (n == 0) fail(ErrorKind::OutOfRange, "degree must be at least 1");
  const TupleSpace ts = tuple_space(q, n);
  // ways[j]: weighted number of tuples over the divisors seen so far whose
  // degrees sum to j.
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < ts.divisors.size(); ++i) {
    const unsigned d = ts.divisors[i];
    const BigInt pi = pi_q(q, d);
    std::vector<BigInt> weight(ts.caps[i] + 1);
    for (std::uint64_t k = 0; k <= ts.caps[i]; ++k) weight[k] = binomial(pi, k);
    std::vector<BigInt> next(n + 1, 0);
    for (unsigned j = 0; j <= n; ++j) {
      if (ways[j] == 0) continue;
      for (std::uint64_t k = 0; k <= ts.caps[i] && j + k * d <= n; ++k) {
        next[j + k * d] += ways[j] * weight[k];
      }
    }
    ways = std::move(next);
  }
  return ways[n];
}

BigInt count_carmichael_bruteforce(const Field& f, unsigned n, unsigned jobs, std::uint64_t cap) {
  const std::uint64_t total = enumerate_monic(f, n, cap).size();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 1024))));
  std::vector<std::uint64_t> subtotal(jobs, 0);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = total * w / jobs;
    const std::uint64_t hi = total * (w + 1) / jobs;
    std::uint64_t hits = 0;
    for (const Poly& g : MonicRange(f, n, lo, hi)) {
      if (carmichael_poly_holds(f, g)) ++hits;
    }
    subtotal[w] = hits;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  BigInt sum = 0;
  for (auto s : subtotal) sum += big(s);
  return sum;
}

bool is_composite(std::uint64_t n) { return n >= 4 && !arith::is_prime(n); }

Rational lower_bound(std::uint64_t q, unsigned n) {
  if (!is_composite(n)) fail(ErrorKind::NotComposite, std::to_string(n) + " is not composite");
  const std::uint64_t ell = arith::smallest_prime_factor(n);
  Rational r(big_pow(q, n), big_pow(2 * std::uint64_t{n}, ell));
  r.canonicalize();
  return r;
}

SigmaTau sigma_tau(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::OutOfRange, "n must be at least 1");
  SigmaTau out{0, 0};
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.sigma += big(d);
    ++out.tau;
    if (d != n / d) {
      out.sigma += big(n / d);
      ++out.tau;
    }
  }
  return out;
}

std::vector<std::uint64_t> enumerate_carmichael_numbers(std::uint64_t limit, std::uint64_t max_limit) {
  if (limit > max_limit) {
    fail(ErrorKind::OutOfRange, "limit exceeds the configured maximum of " + std::to_string(max_limit));
  }
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (spf[n] == n) continue;
    factors.clear();
    for (std::uint64_t m = n; m > 1;) {
      const std::uint64_t p = spf[m];
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    if (korselt_from_factors(n, factors).verdict) out.push_back(n);
  }
  return out;
}

CountTable count_table(std::uint64_t q, unsigned n_max) {
  CountTable table{q, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    CountRow row{n, pi_q(q, n), count_carmichael_exact(q, n), std::nullopt, BoundStatus::NotApplicable};
    if (is_composite(n)) {
      row.lower_bound = lower_bound(q, n);
      if (q == 2 && n == 9) {
        row.status = BoundStatus::Excluded;
      } else {
        row.status = Rational(row.carmichael) >= *row.lower_bound ? BoundStatus::Satisfied : BoundStatus::Violated;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace carmichael
