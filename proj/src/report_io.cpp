#include <json.hpp>

#include "xprod/verify.hpp"

namespace xprod {

namespace {

nlohmann::ordered_json to_json(const AxiomReport& r) {
  nlohmann::ordered_json witness = nullptr;
  if (r.witness) {
    witness = nlohmann::ordered_json::object();
    for (const auto& [name, v] : r.witness->vectors) witness[name] = v.to_string();
    for (const auto& [name, s] : r.witness->scalars) witness[name] = format_rational(s);
    witness["equation"] = r.witness->equation;
    witness["lhs"] = to_string(r.witness->lhs);
    witness["rhs"] = to_string(r.witness->rhs);
  }
  return nlohmann::ordered_json{
      {"product", r.product},
      {"dim", r.dim},
      {"axiom", std::string(to_string(r.axiom))},
      {"verdict", std::string(to_string(r.verdict))},
      {"witness", std::move(witness)},
      {"samples", r.samples},
      {"cases_checked", r.cases_checked},
      {"seed", r.seed},
  };
}

}  // namespace

std::string report_to_json(const AxiomReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<AxiomReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace xprod
