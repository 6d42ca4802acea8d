#pragma once

#include <json.hpp>

#include "kshadow/bimodule.hpp"
#include "kshadow/characters.hpp"
#include "kshadow/hessenberg.hpp"

namespace kshadow {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(const LatticeVector& v);
Json to_json(const RootVector& v);
LatticeVector lattice_from_json(const Json& j);
Json to_json(const LaurentPoly& p);  // [[exponent, coefficient], ...]
LaurentPoly laurent_from_json(const Json& j, std::size_t rank);
Json to_json(const WeightMultiplicities& m);  // {"a,b": m}

Json root_datum_json(const WeylGroup& w);
Json hessenberg_json(const RootDatum& rd, const HessenbergDatum& h, const Json& lambda);
Json weights_json(const WeylGroup& w, const LatticeVector& mu, const LaurentPoly& character);
Json report_json(const BimoduleReport& rep);

/// "1,-2" -> {1, -2}.
std::vector<std::int64_t> parse_int_list(const std::string& s);

}  // namespace kshadow
