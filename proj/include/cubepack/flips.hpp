#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "cubepack/core.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/search.hpp"
#include "cubepack/symmetry.hpp"

namespace cubepack {

struct FlipMove {
    Packing tiling;
    std::size_t first = 0, second = 0;  // cube indices into tiling.cubes
    int axis = 0;
};

inline std::vector<FlipMove> facet_pairs(const Torus& t, const Packing& tiling) {
    std::vector<FlipMove> moves;
    for (std::size_t i = 0; i < tiling.cubes.size(); ++i)
        for (std::size_t j = i + 1; j < tiling.cubes.size(); ++j)
            if (auto axis = t.shares_facet(tiling.cubes[i], tiling.cubes[j]))
                moves.push_back(FlipMove{tiling, i, j, *axis});
    return moves;
}

// Shift a facet-sharing pair by half a cube side along its shared axis. The
// pair fills a full axis column of the torus, so the result is again a tiling.
inline Packing apply_flip(const FlipMove& move) {
    Torus t(move.tiling.params);
    if (t.N() % 2 != 0) throw usage_error("flips need an even cube side N");
    if (move.first >= move.tiling.cubes.size() || move.second >= move.tiling.cubes.size() ||
        move.first == move.second)
        throw usage_error("flip indices out of range");
    Pos a = move.tiling.cubes[move.first], b = move.tiling.cubes[move.second];
    auto axis = t.shares_facet(a, b);
    if (!axis || *axis != move.axis) throw usage_error("flip pair does not share a facet on that axis");

    std::vector<int> shift(static_cast<std::size_t>(t.n()), 0);
    shift[static_cast<std::size_t>(move.axis)] = t.N() / 2;
    Pos delta = t.encode(shift);
    std::vector<Pos> cubes = move.tiling.cubes;
    cubes[move.first] = t.add(a, delta);
    cubes[move.second] = t.add(b, delta);
    std::sort(cubes.begin(), cubes.end());
    return Packing{t.params(), cubes};
}

struct FlipConnectivityReport {
    std::size_t node_count = 0;        // tiling types reached from the trivial one
    std::size_t type_count = 0;        // all tiling types, from enumeration
    bool connected = false;
    std::size_t trivial_eccentricity = 0;  // max flip distance from the trivial type
};

// BFS over the quotient flip graph: nodes are tiling types, edges are flips
// applied to orbit representatives.
inline FlipConnectivityReport flip_connectivity(int n, SearchStats* stats = nullptr) {
    auto types = enumerate_tilings(n, stats);
    Torus t(n, 2);
    SymmetryContext sym(t);

    FlipConnectivityReport report;
    report.type_count = types.size();

    std::vector<Pos> start = sym.canonical(trivial_tiling(t));
    std::map<std::vector<Pos>, std::size_t> dist;
    dist[start] = 0;
    std::deque<std::vector<Pos>> queue{start};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        std::size_t d = dist[cur];
        report.trivial_eccentricity = std::max(report.trivial_eccentricity, d);
        Packing p{t.params(), cur};
        for (const auto& move : facet_pairs(t, p)) {
            auto next = sym.canonical(apply_flip(move).cubes);
            auto [it, inserted] = dist.emplace(std::move(next), d + 1);
            if (inserted) queue.push_back(it->first);
        }
    }
    report.node_count = dist.size();
    report.connected = report.node_count == report.type_count;
    return report;
}

}  // namespace cubepack
