#include "pfactor/serialize.hpp"

namespace pfactor {

nlohmann::ordered_json to_json(const VertexSet& s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t v : s) out.push_back(v);
    return out;
}

nlohmann::ordered_json to_json(const EdgeSet& edges) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

nlohmann::ordered_json to_json(const DeficiencyCertificate& c) {
    return {{"S", to_json(c.s)}, {"T", to_json(c.t)}, {"eta", c.eta}, {"q", c.q}};
}

nlohmann::ordered_json to_json(const FactorResult& r) {
    nlohmann::ordered_json out;
    out["decision"] = r.exists ? "yes" : "no";
    if (r.factor) out["factor_edges"] = to_json(*r.factor);
    if (r.certificate) out["certificate"] = to_json(*r.certificate);
    return out;
}

nlohmann::ordered_json to_json(const SpectralEnclosure& e) {
    return {{"lo", e.lo},
            {"hi", e.hi},
            {"method", std::string(to_string(e.method))},
            {"iterations", e.iterations}};
}

}  // namespace pfactor
