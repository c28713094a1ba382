#include "hodge/blockdata_io.hpp"

#include <json.hpp>

namespace hodge {

std::string to_json(const BlockData& bd) {
    nlohmann::json j;
    j["ray"]["param"] = nlohmann::json::parse(bd.ray.base.to_json());
    j["provenance"] = bd.provenance;
    j["walls"] = nlohmann::json::array();
    for (const auto& w : bd.walls) {
        nlohmann::json jw;
        jw["s"] = format_rational(w.s);
        jw["layers"] = nlohmann::json::array();
        for (const auto& l : w.layers) {
            nlohmann::json jl;
            jl["n"] = l.n;
            jl["param"] = nlohmann::json::parse(l.constituent.to_json());
            if (l.constituent.weight_w !=
                catalog_group(l.constituent.group).orbit(l.constituent.orbit_id).dim)
                jl["param"]["weight_w"] = l.constituent.weight_w;
            jl["mult"] = l.multiplicity;
            jw["layers"].push_back(jl);
        }
        j["walls"].push_back(jw);
    }
    return j.dump(2);
}

BlockData block_data_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    BlockData bd;
    bd.provenance = j.value("provenance", "external-file");
    HCParameter base = HCParameter::from_json(j.at("ray").at("param").dump());
    bd.ray = deformation_ray(base);
    for (const auto& jw : j.at("walls")) {
        WallSpec w;
        w.s = parse_rational(jw.at("s").get<std::string>());
        for (const auto& jl : jw.at("layers")) {
            WallLayer l;
            l.n = jl.at("n").get<int>();
            l.constituent = HCParameter::from_json(jl.at("param").dump());
            l.multiplicity = jl.at("mult").get<long>();
            w.layers.push_back(l);
        }
        bd.walls.push_back(w);
    }
    return bd;
}

}  // namespace hodge
