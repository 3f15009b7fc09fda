#pragma once

#include "corelab/partition.hpp"
#include "corelab/path.hpp"
#include "corelab/poset.hpp"

#include <json.hpp>

namespace corelab {

/// {"parts":[5,3,3,1,1]}
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// [9,3,1]
nlohmann::json to_json(const OddHookSet& h);
OddHookSet hooks_from_json(const nlohmann::json& j);

/// {"s":20,"k":4,"elements":[[a2,b],...]}
nlohmann::json to_json(const PlanarIdeal& ideal);
PlanarIdeal planar_ideal_from_json(const nlohmann::json& j);

/// {"s":20,"k":3,"elements":[1,29,31]}
nlohmann::json to_json(const CoreIdeal& ideal);
CoreIdeal core_ideal_from_json(const nlohmann::json& j);

/// {"s":10,"k":4,"steps":["U","H2","D"]}; the word's kparam must equal k.
nlohmann::json path_to_json(int s, int k, const PathWord& w);
/// Returns the word with kparam = k; s is available through the payload.
PathWord path_from_json(const nlohmann::json& j);

} // namespace corelab
