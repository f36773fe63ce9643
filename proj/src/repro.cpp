#include "carmichael/repro.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>

#include "carmichael/korselt.hpp"
#include "carmichael/kummer.hpp"
#include "carmichael/text.hpp"

namespace carmichael {

namespace {

bool pi_values(std::uint64_t q, const std::vector<unsigned>& expected) {
  for (unsigned n = 1; n <= expected.size(); ++n) {
    if (pi_q(q, n) != expected[n - 1]) return false;
  }
  return true;
}

}  // namespace

std::vector<ReproCheck> reference_checks(CountFn count) {
  std::vector<ReproCheck> checks;
  auto add = [&](std::string name, std::function<bool()> fn) { checks.push_back({std::move(name), std::move(fn)}); };

  add("first ten Carmichael numbers", [] {
    const std::vector<std::uint64_t> expected{561, 1105, 1729, 2465, 2821, 6601, 8911, 10585, 15841, 29341};
    return enumerate_carmichael_numbers(30000) == expected;
  });
  add("561 passes Korselt", [] { return is_carmichael_number(561).verdict; });
  add("Z/561Z = F_3 x F_11 x F_17 is a Carmichael ring", [] {
    const auto r = carmichael_ring_from_modulus(561);
    return r.verdict && r.presentation && r.presentation->cards == std::vector<std::uint64_t>{3, 11, 17};
  });
  add("F_2 x F_4 is not a Carmichael ring", [] { return !is_carmichael_ring(make_ring_presentation({2, 4})); });
  add("pi_2(1..4) = 2,1,2,3", [] { return pi_values(2, {2, 1, 2, 3}); });
  add("pi_3(1..3) = 3,3,8", [] { return pi_values(3, {3, 3, 8}); });
  add("pi_4(1..2) = 4,6", [] { return pi_values(4, {4, 6}); });
  add("C_2(4)=1", [count] { return count(2, 4) == 1; });
  add("C_2(6)=5", [count] { return count(2, 6) == 5; });
  add("C_2(9)=0", [count] { return count(2, 9) == 0; });
  for (auto [q, n] : {std::pair{3u, 2u}, {5u, 3u}, {7u, 5u}}) {
    add("C_" + std::to_string(q) + "(" + std::to_string(n) + ")=binom(" + std::to_string(q) + "," +
            std::to_string(n) + ")",
        [count, q, n] { return count(q, n) == binomial(q, n); });
  }
  for (auto [q, n] : {std::pair{2u, 3u}, {3u, 5u}, {2u, 5u}, {2u, 7u}}) {
    add("C_" + std::to_string(q) + "(" + std::to_string(n) + ")=0 (prime degree above q)",
        [count, q, n] { return count(q, n) == 0; });
  }
  add("brute force C_2(4)=1", [] { return count_carmichael_bruteforce(Field::create(2), 4) == 1; });
  add("t^4+t is the Carmichael quartic over F_2", [] {
    const Field f = Field::create(2);
    return is_carmichael_poly(f, parse_poly(f, "t^4+t")).verdict;
  });
  add("C_q(n)=0 only at (2,9), C_q(n)=1 only at (2,4), composite n<=30, q<=9", [count] {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      for (unsigned n = 4; n <= 30; ++n) {
        if (!is_composite(n)) continue;
        const BigInt c = count(q, n);
        if ((c == 0) != (q == 2 && n == 9)) return false;
        if ((c == 1) != (q == 2 && n == 4)) return false;
      }
    }
    return true;
  });
  add("C_q(n) >= q^n/(2n)^l, composite n<=30, q<=9, (q,n)!=(2,9)", [count] {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      for (unsigned n = 4; n <= 30; ++n) {
        if (!is_composite(n) || (q == 2 && n == 9)) continue;
        if (Rational(count(q, n)) < lower_bound(q, n)) return false;
      }
    }
    return true;
  });
  add("pi_q strictly increasing (q>=4 from n=1, q in {2,3} from n=2)", [] {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      for (unsigned n = q >= 4 ? 1 : 2; n < 30; ++n) {
        if (!(pi_q(q, n) < pi_q(q, n + 1))) return false;
      }
    }
    return true;
  });
  add("P1*P2 with deg P_i = 3 is rigid of order 3", [] {
    const Field f = Field::create(2);
    const Poly g = mul(f, parse_poly(f, "t^3+t+1"), parse_poly(f, "t^3+t^2+1"));
    return is_rigid_carmichael_poly(f, g, 3).verdict;
  });
  add("Carmichael g stays Carmichael in F_3(t)(sqrt Q), gcd(g,Q)=1", [] {
    const Field f = Field::create(3);
    const Poly g = parse_poly(f, "t^2+t");  // t(t+1)
    for (const char* q : {"t^2+1", "t^2+t+2", "t^2+2t+2", "t+2"}) {
      if (!is_carmichael_in_kummer(f, g, parse_poly(f, q), 2).verdict) return false;
    }
    return true;
  });
  return checks;
}

int run_checks(const std::vector<ReproCheck>& checks, std::ostream& out) {
  int failures = 0;
  for (auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (ok ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << std::setprecision(3) << secs << " s)";
    if (!error.empty()) out << " error: " << error;
    out << '\n';
    if (!ok) ++failures;
  }
  out << (failures == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                        : std::to_string(failures) + " of " + std::to_string(checks.size()) + " checks failed")
      << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace carmichael
