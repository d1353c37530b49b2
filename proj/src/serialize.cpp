#include "hjp/serialize.hpp"

#include <ostream>
#include <sstream>

namespace hjp {

nlohmann::json hook_json(const Hook& hook) {
  return nlohmann::json{{"head", hook.head}, {"leg", hook.leg}};
}

std::string hook_text(const Hook& hook) {
  std::ostringstream out;
  out << "(" << hook.head << ",1^" << hook.leg << ")";
  return out.str();
}

nlohmann::json expansion_json(const MomentExpansion& expansion) {
  nlohmann::json terms = nlohmann::json::array();
  for (const ExpTerm& term : expansion.terms)
    terms.push_back({{"rate", term.rate}, {"coeff", to_fraction(term.coeff)}});
  return nlohmann::json{
      {"params",
       {{"m", expansion.params.m}, {"p", expansion.params.p}, {"d", expansion.params.d}}},
      {"n", expansion.order},
      {"stationary", to_fraction(expansion.stationary)},
      {"terms", std::move(terms)}};
}

MomentExpansion expansion_from_json(const nlohmann::json& j) {
  MomentExpansion expansion{
      ModelParams(j.at("params").at("m").get<long>(), j.at("params").at("p").get<long>(),
                  j.at("params").at("d").get<long>()),
      j.at("n").get<long>(),
      parse_fraction(j.at("stationary").get<std::string>()),
      {}};
  for (const auto& term : j.at("terms"))
    expansion.terms.push_back(
        {term.at("rate").get<long>(), parse_fraction(term.at("coeff").get<std::string>())});
  return expansion;
}

nlohmann::json capacity_json(const CapacityResult& result) {
  nlohmann::json j{{"rho", result.rho},
                   {"N", result.order},
                   {"value", result.value},
                   {"bound", result.bound},
                   {"bound_guaranteed", result.bound_guaranteed}};
  if (result.t) {
    j["t"] = *result.t;
  } else {
    j["t"] = "inf";
  }
  return j;
}

nlohmann::json estimate_json(const MCEstimate& estimate, std::uint64_t seed,
                             double clock) {
  return nlohmann::json{{"estimate", estimate.mean}, {"stderr", estimate.std_error},
                        {"paths", estimate.paths},   {"dt", estimate.dt},
                        {"clock", clock},            {"seed", seed}};
}

void expansion_csv(std::ostream& out, const MomentExpansion& expansion) {
  out << "rate,coeff_num,coeff_den\n";
  out << 0 << "," << numerator(expansion.stationary) << ","
      << denominator(expansion.stationary) << "\n";
  for (const ExpTerm& term : expansion.terms)
    out << term.rate << "," << numerator(term.coeff) << "," << denominator(term.coeff)
        << "\n";
}

void sweep_csv(std::ostream& out, std::span<const std::pair<double, double>> rows) {
  out << "t,value\n";
  for (const auto& [t, value] : rows) out << t << "," << value << "\n";
}

void capacity_csv(std::ostream& out, const CapacityResult& result) {
  out << "t,rho,value,bound\n";
  if (result.t) {
    out << *result.t;
  } else {
    out << "inf";
  }
  out << "," << result.rho << "," << result.value << "," << result.bound << "\n";
}

}  // namespace hjp
