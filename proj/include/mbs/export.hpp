#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mbs/homology.hpp"
#include "mbs/minors.hpp"
#include "mbs/neighborhood.hpp"

namespace mbs {

nlohmann::json to_json(const MultibranchedSurface& surface);
MultibranchedSurface surface_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FgAbelianGroup& group);
nlohmann::json to_json(const CircularPermutationSystem& system);
nlohmann::json to_json(const BoundarySurface& boundary);
nlohmann::json to_json(const DualGraph& graph);
nlohmann::json to_json(const SpineGraph& spine);

nlohmann::json to_json(const MinorCertificate& certificate);
MinorCertificate certificate_from_json(const nlohmann::json& j);

/// Vertices are boundary components labeled with their genus; edges are sectors.
std::string to_dot(const DualGraph& graph);
/// Vertices are pieces, clustered by component; edges are gluing circles.
std::string to_dot(const MultibranchedSurface& surface, const BoundarySurface& boundary);
std::string to_dot(const SpineGraph& spine);

}  // namespace mbs
