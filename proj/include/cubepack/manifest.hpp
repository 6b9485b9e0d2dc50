#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubepack/util.hpp"
#include "cubepack/version.hpp"

namespace cubepack {

// Reproducibility record emitted next to every artifact. Re-running the same
// subcommand with the recorded parameters and workers = 1 reproduces the
// digest byte for byte; wall time is the only field expected to vary.
struct RunManifest {
    std::string subcommand;
    nlohmann::ordered_json parameters;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string version = kVersion;
    double wall_time_s = 0.0;
    std::vector<std::string> artifacts;  // file names, sorted
    std::string result_digest;           // fnv1a64 over artifact bytes, in listed order
    std::string digest_algo = "fnv1a64";
};

inline std::string digest_files(const std::vector<std::string>& paths) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        h = fnv1a64(data.data(), data.size(), h);
    }
    return to_hex(h);
}

inline nlohmann::ordered_json manifest_to_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["subcommand"] = m.subcommand;
    j["parameters"] = m.parameters;
    j["seed"] = m.seed;
    j["workers"] = m.workers;
    j["version"] = m.version;
    j["wall_time_s"] = m.wall_time_s;
    j["artifacts"] = m.artifacts;
    j["result_digest"] = m.result_digest;
    j["digest_algo"] = m.digest_algo;
    return j;
}

inline RunManifest manifest_from_json(const nlohmann::ordered_json& j) {
    RunManifest m;
    m.subcommand = j.at("subcommand").get<std::string>();
    m.parameters = j.at("parameters");
    m.seed = j.at("seed").get<std::uint64_t>();
    m.workers = j.at("workers").get<int>();
    m.version = j.at("version").get<std::string>();
    m.wall_time_s = j.at("wall_time_s").get<double>();
    m.artifacts = j.at("artifacts").get<std::vector<std::string>>();
    m.result_digest = j.at("result_digest").get<std::string>();
    m.digest_algo = j.at("digest_algo").get<std::string>();
    return m;
}

}  // namespace cubepack
