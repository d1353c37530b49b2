#pragma once

#include "hjp/capacity.hpp"
#include "hjp/moment_engine.hpp"
#include "hjp/montecarlo.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <utility>

namespace hjp {

nlohmann::json hook_json(const Hook& hook);
std::string hook_text(const Hook& hook);  // "(head,1^leg)"

// {"params":{"m":..,"p":..,"d":..},"n":..,"stationary":"a/b",
//  "terms":[{"rate":nu,"coeff":"a/b"},...]}
nlohmann::json expansion_json(const MomentExpansion& expansion);
MomentExpansion expansion_from_json(const nlohmann::json& j);

// {"rho":..,"t":..|"inf","N":..,"value":..,"bound":..,"bound_guaranteed":..}
nlohmann::json capacity_json(const CapacityResult& result);

// {"estimate":..,"stderr":..,"paths":..,"dt":..,"clock":..,"seed":..}
nlohmann::json estimate_json(const MCEstimate& estimate, std::uint64_t seed,
                             double clock);

// rate,coeff_num,coeff_den rows; the stationary part is the rate-0 row.
void expansion_csv(std::ostream& out, const MomentExpansion& expansion);

// t,value rows.
void sweep_csv(std::ostream& out, std::span<const std::pair<double, double>> rows);

// t,rho,value,bound row ("inf" for the stationary channel).
void capacity_csv(std::ostream& out, const CapacityResult& result);

}  // namespace hjp
