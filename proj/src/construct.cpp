#include "carmichael/construct.hpp"

#include <numeric>
#include <stdexcept>

#include "carmichael/arith.hpp"
#include "carmichael/counting.hpp"
#include "carmichael/korselt.hpp"

namespace carmichael {

std::string_view to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::Multiple: return "Multiple";
    case RecipeKind::ArithmeticProgression: return "ArithmeticProgression";
    case RecipeKind::Rigid: return "Rigid";
  }
  return "?";
}

namespace {

void require_coprime_progression(const Field& f, const Poly& g, const Poly& h) {
  check(f, g);
  check(f, h);
  if (g.is_zero()) fail(ErrorKind::InvalidSeed, "progression modulus g must be nonzero");
  if (gcd(f, g, h).degree() != 0) fail(ErrorKind::InvalidSeed, "gcd(g, h) != 1");
}

Poly product_of(const Field& f, const std::vector<Poly>& parts) {
  Poly p = Poly::constant(f.one());
  for (auto& x : parts) p = mul(f, p, x);
  return p;
}

// find_irreducibles_in_ap, mapping "this degree cannot work" to nullopt.
std::optional<std::vector<Poly>> try_find(const Field& f, unsigned degree, const Poly& g, const Poly& h,
                                          std::size_t count, const PolySet& exclude) {
  if (degree < 1 || static_cast<int>(degree) < make_monic(f, g).degree()) return std::nullopt;
  try {
    return find_irreducibles_in_ap(f, degree, g, h, count, exclude);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ExhaustedSearchSpace) return std::nullopt;
    throw;
  }
}

}  // namespace

ConstructionRecipe carmichael_multiple(const Field& f, const Poly& u, const Poly& g, const Poly& h,
                                       unsigned degree_budget) {
  check(f, u);
  if (u.degree() < 1 || !is_squarefree(f, u)) {
    fail(ErrorKind::InvalidSeed, "u must be a non-constant square-free polynomial");
  }
  require_coprime_progression(f, g, h);

  const Poly um = make_monic(f, u);
  const auto deg_u = static_cast<std::uint64_t>(um.degree());
  const Factorization fac = factorize(f, um);
  std::uint64_t m = deg_u;
  PolySet exclude;
  for (auto& x : fac.factors) {
    m = std::lcm(m, static_cast<std::uint64_t>(x.poly.degree()));
    exclude.insert(x.poly);
  }

  for (std::uint64_t d = 1;; ++d) {
    const std::uint64_t dm = d * m;
    if (dm < deg_u + 2) continue;  // k = dm - deg u - 1 must be positive
    const std::uint64_t product_degree = dm * (dm - deg_u);
    if (product_degree > degree_budget) {
      fail(ErrorKind::DegreeBudgetExceeded,
           "no Carmichael multiple within degree budget " + std::to_string(degree_budget));
    }
    const std::uint64_t k = dm - deg_u - 1;
    auto big_parts = try_find(f, static_cast<unsigned>(dm), g, h, k, exclude);
    if (!big_parts) continue;
    PolySet taken = exclude;
    taken.insert(big_parts->begin(), big_parts->end());
    auto closing = try_find(f, static_cast<unsigned>(dm - deg_u), g, h, 1, taken);
    if (!closing) continue;

    ConstructionRecipe r;
    r.kind = RecipeKind::Multiple;
    r.seed = u;
    r.modulus = g;
    r.residue = h;
    r.scale = static_cast<unsigned>(d);
    r.parts.push_back(um);
    r.parts.insert(r.parts.end(), big_parts->begin(), big_parts->end());
    r.parts.push_back(closing->front());
    r.product = product_of(f, r.parts);
    if (!is_carmichael_poly(f, r.product).verdict) {
      throw std::logic_error("carmichael_multiple produced a non-Carmichael product");
    }
    return r;
  }
}

ConstructionRecipe carmichael_in_ap(const Field& f, const Poly& g, const Poly& h, unsigned degree_budget) {
  require_coprime_progression(f, g, h);
  const Poly one = Poly::constant(f.one());
  for (unsigned degree = static_cast<unsigned>(make_monic(f, g).degree()) + 1;; ++degree) {
    if (2 * degree > degree_budget) {
      fail(ErrorKind::DegreeBudgetExceeded,
           "no Carmichael polynomial in the progression within degree budget " + std::to_string(degree_budget));
    }
    auto first = try_find(f, degree, g, h, 1, {});
    if (!first) continue;
    auto second = try_find(f, degree, g, one, 1, PolySet{first->front()});
    if (!second) continue;

    ConstructionRecipe r;
    r.kind = RecipeKind::ArithmeticProgression;
    r.modulus = g;
    r.residue = h;
    r.base_degree = degree;
    r.parts = {first->front(), second->front()};
    r.product = product_of(f, r.parts);
    if (!is_carmichael_poly(f, r.product).verdict) {
      throw std::logic_error("carmichael_in_ap produced a non-Carmichael product");
    }
    return r;
  }
}

ConstructionRecipe rigid_construct(const Field& f, unsigned d, unsigned n) {
  if (d < 1 || n < 1) fail(ErrorKind::OutOfRange, "order and base degree must be at least 1");
  const std::uint64_t m = std::max<std::uint64_t>(2, arith::lcm_range(d));
  if (pi_q(f, n) < big(m)) {
    fail(ErrorKind::NotEnoughIrreducibles, "need " + std::to_string(m) + " irreducibles of degree " +
                                               std::to_string(n) + " over F_" + f.name());
  }
  ConstructionRecipe r;
  r.kind = RecipeKind::Rigid;
  r.order = d;
  r.base_degree = n;
  r.parts = find_irreducibles_in_ap(f, n, Poly::constant(f.one()), Poly(), m);
  r.product = product_of(f, r.parts);
  if (!is_rigid_carmichael_poly(f, r.product, d).verdict) {
    throw std::logic_error("rigid_construct produced a non-rigid product");
  }
  return r;
}

}  // namespace carmichael
