#pragma once

#include <string>

#include <json.hpp>

#include "carmichael/construct.hpp"
#include "carmichael/counting.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/kummer.hpp"

// JSON and TSV forms of the library's results. Big integers are written as
// decimal strings.
namespace carmichael {

using Json = nlohmann::json;

Json to_json(const Field& f, const Poly& a);
Json to_json(const FactorDegrees& d);
Json to_json(const Field& f, const KorseltReport& r);
Json to_json(const RingPresentation& r);
Json to_json(const CountTable& t);
Json to_json(const Field& f, const ConstructionRecipe& r);
Json to_json(const Field& f, const ResidueSymbol& s);
Json to_json(const Field& f, const SplittingType& s);

std::string_view to_string(BoundStatus s);

// Columns n, pi, C, lower_bound, ok.
std::string to_tsv(const CountTable& t);

}  // namespace carmichael
