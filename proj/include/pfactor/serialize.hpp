#pragma once

#include <json.hpp>

#include "pfactor/graph.hpp"
#include "pfactor/parity_factor.hpp"
#include "pfactor/spectral.hpp"

namespace pfactor {

nlohmann::ordered_json to_json(const VertexSet& s);
nlohmann::ordered_json to_json(const EdgeSet& edges);
nlohmann::ordered_json to_json(const DeficiencyCertificate& c);
/// {"decision": "yes"|"no", "factor_edges"?: [[u,v],...], "certificate"?: {...}}
nlohmann::ordered_json to_json(const FactorResult& r);
nlohmann::ordered_json to_json(const SpectralEnclosure& e);

}  // namespace pfactor
