#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cubepack/continuous.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/exact_dist.hpp"
#include "cubepack/json_io.hpp"
#include "cubepack/one_factorization.hpp"

namespace cubepack {

// { "n": int, "cubes": [ [ {"axis": i, "param": "a3", "shift": 0|1}, ... ] ] }
inline ordered_json continuous_packing_to_json(const ContinuousPacking& p) {
    ordered_json j;
    j["n"] = p.n;
    auto cubes = ordered_json::array();
    for (const auto& c : p.cubes) {
        auto cube = ordered_json::array();
        for (int axis = 0; axis < p.n; ++axis) {
            const auto& a = c.coords[static_cast<std::size_t>(axis)];
            ordered_json entry;
            entry["axis"] = axis;
            entry["param"] = "a" + std::to_string(a.param);
            entry["shift"] = a.shift;
            cube.push_back(std::move(entry));
        }
        cubes.push_back(std::move(cube));
    }
    j["cubes"] = std::move(cubes);
    return j;
}

inline ContinuousPacking continuous_packing_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("cubes"))
        throw usage_error("continuous packing JSON must contain \"n\" and \"cubes\"");
    ContinuousPacking p;
    p.n = j.at("n").get<int>();
    for (const auto& cube : j.at("cubes")) {
        ContinuousCube c;
        c.coords.assign(static_cast<std::size_t>(p.n), AxisCoord{});
        if (cube.size() != static_cast<std::size_t>(p.n))
            throw usage_error("continuous cube has wrong dimension");
        for (const auto& entry : cube) {
            int axis = entry.at("axis").get<int>();
            if (axis < 0 || axis >= p.n) throw usage_error("axis index out of range");
            std::string param = entry.at("param").get<std::string>();
            if (param.empty() || param[0] != 'a')
                throw usage_error("param identifiers look like \"a<k>\"");
            c.coords[static_cast<std::size_t>(axis)] =
                AxisCoord{std::stoi(param.substr(1)), entry.at("shift").get<int>()};
        }
        p.cubes.push_back(std::move(c));
    }
    validate_continuous(p);
    return p;
}

// { "m": int, "factors": [ [[u,v],...], ... ] }
inline ordered_json one_factorization_to_json(const OneFactorization& f) {
    ordered_json j;
    j["m"] = f.m;
    auto factors = ordered_json::array();
    for (const auto& factor : f.factors) {
        auto fj = ordered_json::array();
        for (auto [u, v] : factor) fj.push_back(std::vector<int>{u, v});
        factors.push_back(std::move(fj));
    }
    j["factors"] = std::move(factors);
    return j;
}

inline OneFactorization one_factorization_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("factors"))
        throw usage_error("one-factorization JSON must contain \"m\" and \"factors\"");
    OneFactorization f;
    f.m = j.at("m").get<int>();
    for (const auto& factor : j.at("factors")) {
        std::vector<Edge> edges;
        for (const auto& e : factor) {
            auto pair = e.get<std::vector<int>>();
            if (pair.size() != 2) throw usage_error("factor edges are [u, v] pairs");
            edges.push_back({pair[0], pair[1]});
        }
        f.factors.push_back(std::move(edges));
    }
    validate_one_factorization(f);
    return f;
}

// [ { "type": <canonical packing>, "prob_num": str, "prob_den": str }, ... ]
inline ordered_json terminal_distribution_to_json(const TerminalDistribution& d) {
    Torus t(d.params);
    auto arr = ordered_json::array();
    for (const auto& [type, prob] : d.probs) {
        ordered_json entry;
        entry["type"] = canonical_form_to_json(CanonicalForm{d.params, type});
        entry["prob_num"] = boost::multiprecision::numerator(prob).str();
        entry["prob_den"] = boost::multiprecision::denominator(prob).str();
        arr.push_back(std::move(entry));
    }
    return arr;
}

}  // namespace cubepack
