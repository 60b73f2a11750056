#ifndef CAG_JSON_IO_HPP
#define CAG_JSON_IO_HPP

#include <json.hpp>

#include "cag/decompose.hpp"
#include "cag/rigidity.hpp"

namespace cag {

using Json = nlohmann::ordered_json;

Json group_to_json(const GroupPresentation &g);
Json morphism_to_json(const VarietyMorphism &f);
Json decomposition_to_json(const Decomposition &d);
Json verdict_to_json(const RigidityVerdict &v);
Json point_to_json(const GroupPoint &p);

GroupPresentation group_from_json(const Json &j);
VarietyMorphism morphism_from_json(const Json &j);

} // namespace cag

#endif
