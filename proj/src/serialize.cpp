#include "carmichael/serialize.hpp"

#include <sstream>

#include "carmichael/text.hpp"

namespace carmichael {

Json to_json(const Field& f, const Poly& a) {
  Json coeffs = Json::array();
  for (auto c : a.coeffs()) {
    if (f.is_prime_field()) {
      coeffs.push_back(c.code);
    } else {
      coeffs.push_back(format_element(f, c));
    }
  }
  return {{"coeffs", coeffs}, {"degree", a.is_zero() ? Json(nullptr) : Json(a.degree())}};
}

Json to_json(const FactorDegrees& d) {
  Json out = Json::array();
  for (auto& e : d.entries) out.push_back({e.degree, e.count});
  return out;
}

Json to_json(const Field& f, const KorseltReport& r) {
  Json out{{"verdict", r.verdict},
           {"reason", to_string(r.reason)},
           {"factor_degrees", r.factor_degrees ? to_json(*r.factor_degrees) : Json(nullptr)}};
  if (r.witness_poly) out["witness"] = format_poly(f, *r.witness_poly);
  if (r.witness_prime) out["witness"] = std::to_string(*r.witness_prime);
  return out;
}

Json to_json(const RingPresentation& r) {
  return {{"cards", r.cards}, {"total", to_decimal(r.total)}};
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Satisfied: return "yes";
    case BoundStatus::Violated: return "no";
    case BoundStatus::NotApplicable: return "n/a";
    case BoundStatus::Excluded: return "excluded";
  }
  return "?";
}

Json to_json(const CountTable& t) {
  Json rows = Json::array();
  for (auto& r : t.rows) {
    rows.push_back({{"n", r.n},
                    {"pi", to_decimal(r.pi)},
                    {"C", to_decimal(r.carmichael)},
                    {"lower_bound", r.lower_bound ? Json(to_decimal(*r.lower_bound)) : Json(nullptr)},
                    {"ok", to_string(r.status)}});
  }
  return {{"q", t.q}, {"rows", rows}};
}

std::string to_tsv(const CountTable& t) {
  std::ostringstream out;
  out << "n\tpi\tC\tlower_bound\tok\n";
  for (auto& r : t.rows) {
    out << r.n << '\t' << to_decimal(r.pi) << '\t' << to_decimal(r.carmichael) << '\t'
        << (r.lower_bound ? to_decimal(*r.lower_bound) : "-") << '\t' << to_string(r.status) << '\n';
  }
  return out.str();
}

Json to_json(const Field& f, const ConstructionRecipe& r) {
  Json parts = Json::array();
  for (auto& p : r.parts) parts.push_back(format_poly(f, p));
  Json inputs = Json::object();
  if (r.seed) inputs["u"] = format_poly(f, *r.seed);
  if (r.modulus) inputs["g"] = format_poly(f, *r.modulus);
  if (r.residue) inputs["h"] = format_poly(f, *r.residue);
  if (r.kind == RecipeKind::Rigid) {
    inputs["d"] = r.order;
    inputs["n"] = r.base_degree;
  }
  Json out{{"kind", to_string(r.kind)},
           {"inputs", inputs},
           {"parts", parts},
           {"product", format_poly(f, r.product)},
           {"degree", r.product.degree()}};
  if (r.kind == RecipeKind::Multiple) out["scale"] = r.scale;
  return out;
}

Json to_json(const Field& f, const ResidueSymbol& s) {
  return {{"value", format_element(f, s.value)}, {"order", s.order}};
}

Json to_json(const Field& f, const SplittingType& s) {
  return {{"P", format_poly(f, s.prime)}, {"f", s.residue_degree}, {"g_count", s.prime_count}};
}

}  // namespace carmichael
