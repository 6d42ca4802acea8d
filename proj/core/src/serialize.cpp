#include "kshadow/serialize.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kshadow {

Json to_json(const LatticeVector& v) { return v.to_vector(); }
Json to_json(const RootVector& v) { return v.to_vector(); }

LatticeVector lattice_from_json(const Json& j) { return LatticeVector(std::span<const int>(j.get<std::vector<int>>())); }

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back({to_json(t.exp), t.coef});
  return out;
}

LaurentPoly laurent_from_json(const Json& j, std::size_t rank) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) terms.push_back({lattice_from_json(t.at(0)), t.at(1).get<std::int64_t>()});
  return LaurentPoly::from_terms(rank, std::move(terms));
}

Json to_json(const WeightMultiplicities& m) {
  Json out = Json::object();
  for (const auto& [lambda, k] : m) out[lambda.to_string()] = k;
  return out;
}

Json root_datum_json(const WeylGroup& w) {
  const auto& rd = w.root_datum();
  Json roots = Json::array(), coroots = Json::array();
  for (int k = 0; k < rd.num_positive(); ++k) {
    roots.push_back(to_json(rd.root(k)));
    coroots.push_back(to_json(rd.coroot(k)));
  }
  return {{"schema_version", kSchemaVersion},
          {"type", std::string(1, rd.family())},
          {"rank", rd.rank()},
          {"lattice_mode", to_string(rd.lattice_mode())},
          {"cartan_matrix", rd.cartan_matrix()},
          {"positive_roots", roots},
          {"positive_coroots", coroots},
          {"two_rho", to_json(rd.two_rho())},
          {"weyl_order", w.order()},
          {"longest_length", w.length(w.longest())},
          {"omega_size", AffineWeylGroup(w).omega().size()}};
}

Json hessenberg_json(const RootDatum& rd, const HessenbergDatum& h, const Json& lambda) {
  auto roots = [&](const std::vector<int>& idx) {
    Json a = Json::array();
    for (int k : idx) a.push_back(to_json(rd.root(k)));
    return a;
  };
  return {{"schema_version", kSchemaVersion},
          {"root_datum", rd.fingerprint()},
          {"lambda", lambda},
          {"simple_pairings", h.simple_pairings},
          {"dim", h.dim},
          {"isolated", h.isolated},
          {"betti", h.betti},
          {"fixed_points", h.cells.size()},
          {"cells", h.cells},
          {"borel_roots", roots(h.borel_roots)},
          {"hess_roots", roots(h.hess_roots)}};
}

Json weights_json(const WeylGroup& w, const LatticeVector& mu, const LaurentPoly& character) {
  const auto& rd = w.root_datum();
  WeightMultiplicities mult;
  Json d = Json::object();
  for (const auto& t : character.terms()) {
    mult[t.exp] = t.coef;
    d[t.exp.to_string()] = d_lambda(rd, t.exp);
  }
  const auto micro = microstalk_dims(character);
  std::int64_t total = 0;
  for (const auto& [lambda, m] : micro) total += m;
  return {{"schema_version", kSchemaVersion},
          {"root_datum", rd.fingerprint()},
          {"mu", to_json(mu)},
          {"dim", weyl_dimension(rd, mu)},
          {"fiber_functor_dim", total},
          {"multiplicities", to_json(mult)},
          {"microstalk", to_json(micro)},
          {"d_lambda", d}};
}

Json report_json(const BimoduleReport& rep) {
  Json checks = Json::array();
  for (const auto& [name, ok] : rep.relation_checks) checks.push_back({{"name", name}, {"passed", ok}});
  Json signs = Json::object();
  for (std::size_t i = 0; i < rep.chosen.epsilon.size(); ++i) signs["s" + std::to_string(i + 1)] = rep.chosen.epsilon[i];
  Json admissible = Json::array();
  for (const auto& c : rep.admissible) admissible.push_back({{"epsilon", c.epsilon}, {"twist", to_string(c.twist)}});
  return {{"schema_version", kSchemaVersion},
          {"root_datum", rep.root_datum},
          {"relation_checks", checks},
          {"freeness_rank", rep.freeness_rank},
          {"freeness_certificate", rep.freeness_certificate},
          {"freeness_determinant_unit", rep.freeness_determinant.to_string()},
          {"chosen_signs", signs},
          {"sign_twist", to_string(rep.chosen.twist)},
          {"admissible_conventions", admissible},
          {"iso_found", rep.iso_found},
          {"cyclicity_lattice", rep.cyclicity_lattice},
          {"cyclic_in_given_lattice", rep.cyclic_in_given_lattice},
          {"witness", rep.witness.to_string()},
          {"parabolic_ranks", rep.parabolic_ranks},
          {"seed", rep.seed}};
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + s);
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw std::invalid_argument("not an integer list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace kshadow
