#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cubepack/core.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/symmetry.hpp"

namespace cubepack {

using ordered_json = nlohmann::ordered_json;

// { "n": int, "N": int, "cubes": [[int,...],...] }, coordinates in [0, 2N).
inline ordered_json packing_to_json(const Torus& t, const std::vector<Pos>& cubes) {
    ordered_json j;
    j["n"] = t.n();
    j["N"] = t.N();
    auto arr = ordered_json::array();
    for (Pos p : cubes) arr.push_back(t.decode(p));
    j["cubes"] = std::move(arr);
    return j;
}

inline ordered_json packing_to_json(const Packing& p) {
    return packing_to_json(Torus(p.params), p.cubes);
}

inline ordered_json canonical_form_to_json(const CanonicalForm& cf) {
    ordered_json j = packing_to_json(Torus(cf.params), cf.cubes);
    j["group"] = kSymmetryGroupTag;
    return j;
}

inline Packing packing_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("N") || !j.contains("cubes"))
        throw usage_error("packing JSON must contain \"n\", \"N\" and \"cubes\"");
    Torus t(j.at("n").get<int>(), j.at("N").get<int>());
    std::vector<Pos> cubes;
    for (const auto& c : j.at("cubes")) cubes.push_back(t.encode(c.get<std::vector<int>>()));
    return make_packing(t, std::move(cubes));
}

inline ordered_json cells_to_json(const Torus& t, const std::vector<Pos>& cells) {
    auto arr = ordered_json::array();
    for (Pos z : cells) arr.push_back(t.decode(z));
    return arr;
}

}  // namespace cubepack
