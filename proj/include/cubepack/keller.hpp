#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubepack/bitvec.hpp"
#include "cubepack/core.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/reference_values.hpp"

namespace cubepack {

struct Graph {
    std::uint32_t nverts = 0;
    std::vector<BitVec> adj;

    bool adjacent(std::uint32_t u, std::uint32_t v) const { return adj[u].test(v); }
    std::uint64_t edge_count() const {
        std::uint64_t deg = 0;
        for (const auto& row : adj) deg += row.count();
        return deg / 2;
    }
};

// Keller adjacency on {0,1,2,3}^n: some coordinate offset is exactly 2 and at
// least two coordinates differ. A 2^n-clique would be a tiling without any
// facet-sharing pair, i.e. a counterexample in class T_2.
inline bool keller_adjacent(const Torus& t, Pos u, Pos v) {
    if (u == v) return false;
    bool offset2 = false;
    int differing = 0;
    for (int i = 0; i < t.n(); ++i) {
        int d = t.digit(u, i) - t.digit(v, i);
        if (d != 0) ++differing;
        if (d == 2 || d == -2) offset2 = true;
    }
    return offset2 && differing >= 2;
}

inline Graph build_keller_graph(int n) {
    if (n < 1) throw usage_error("dimension n must be >= 1");
    if (n > 5)
        throw capacity_error(
            "in-memory Keller graphs support n <= 5; use the streaming DIMACS export for n = 6, 7 "
            "(the dimension-7 clique number " +
            std::to_string(reference::kKellerCliqueNumberDim7) +
            " is an external result, far beyond desk scale)");
    Torus t(n, 2);
    const Pos nv = t.position_count();
    Graph g;
    g.nverts = nv;
    g.adj.assign(nv, BitVec(nv));
    for (Pos u = 0; u < nv; ++u)
        for (Pos v = static_cast<Pos>(u + 1); v < nv; ++v)
            if (keller_adjacent(t, u, v)) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
    return g;
}

// Compatibility graph on the same vertex set (N = 2): edges are the
// interior-disjoint pairs. Keller edges are exactly the compatible pairs that
// do not share a facet.
inline Graph build_compatibility_graph(int n) {
    if (n < 1) throw usage_error("dimension n must be >= 1");
    if (n > 5) throw capacity_error("in-memory compatibility graphs support n <= 5");
    Torus t(n, 2);
    const Pos nv = t.position_count();
    Graph g;
    g.nverts = nv;
    g.adj.assign(nv, BitVec(nv));
    for (Pos u = 0; u < nv; ++u)
        for (Pos v = static_cast<Pos>(u + 1); v < nv; ++v)
            if (t.compatible(u, v)) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
    return g;
}

// DIMACS "p edge V E", vertices 1-indexed, each undirected edge once.
inline void export_dimacs(const Graph& g, std::ostream& os) {
    os << "p edge " << g.nverts << ' ' << g.edge_count() << '\n';
    for (std::uint32_t u = 0; u < g.nverts; ++u)
        for (std::size_t v = g.adj[u].find_from(u + 1); v != BitVec::npos; v = g.adj[u].find_next(v))
            os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

// Streaming export without adjacency storage; supports n <= 7.
inline void export_keller_dimacs_stream(int n, std::ostream& os) {
    if (n < 1) throw usage_error("dimension n must be >= 1");
    if (n > 7) throw capacity_error("Keller DIMACS export supports n <= 7");
    Torus t(n, 2);
    const Pos nv = t.position_count();
    // Vertex-transitive: degree is 4^n - 3^n - n (no offset-2 coordinate
    // excludes 3^n vectors, facet pairs exclude n more).
    std::uint64_t deg = 1;
    std::uint64_t three = 1;
    for (int i = 0; i < n; ++i) {
        deg *= 4;
        three *= 3;
    }
    deg -= three + static_cast<std::uint64_t>(n);
    os << "p edge " << nv << ' ' << deg * nv / 2 << '\n';
    for (Pos u = 0; u < nv; ++u)
        for (Pos v = static_cast<Pos>(u + 1); v < nv; ++v)
            if (keller_adjacent(t, u, v)) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline Graph import_dimacs(std::istream& is) {
    Graph g;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::uint64_t declared_edges = 0, seen_edges = 0;
    auto fail = [&](const std::string& what) {
        throw usage_error("DIMACS parse error at line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        char kind;
        ss >> kind;
        if (kind == 'p') {
            std::string fmt;
            std::uint64_t nv = 0;
            if (!(ss >> fmt >> nv >> declared_edges) || fmt != "edge") fail("expected \"p edge V E\"");
            if (have_header) fail("duplicate problem line");
            have_header = true;
            g.nverts = static_cast<std::uint32_t>(nv);
            g.adj.assign(g.nverts, BitVec(g.nverts));
        } else if (kind == 'e') {
            if (!have_header) fail("edge before problem line");
            std::uint64_t u = 0, v = 0;
            if (!(ss >> u >> v)) fail("expected \"e U V\"");
            if (u < 1 || v < 1 || u > g.nverts || v > g.nverts) fail("vertex id out of range");
            if (u == v) fail("self loop");
            g.adj[u - 1].set(v - 1);
            g.adj[v - 1].set(u - 1);
            ++seen_edges;
        } else {
            fail(std::string("unknown line type '") + kind + "'");
        }
    }
    if (!have_header) {
        lineno = 0;
        fail("missing problem line");
    }
    if (seen_edges != declared_edges)
        throw usage_error("DIMACS edge count mismatch: header says " + std::to_string(declared_edges) +
                          ", file has " + std::to_string(seen_edges));
    return g;
}

// Exhaustively lists all cliques of the given size (small graphs only).
inline std::vector<std::vector<std::uint32_t>> cliques_of_size(const Graph& g, std::size_t size) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    BitVec all(g.nverts, true);
    auto dfs = [&](auto&& self, const BitVec& cand, std::uint32_t from) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        if (cur.size() + cand.count_from(from) < size) return;
        for (std::size_t v = cand.find_from(from); v != BitVec::npos; v = cand.find_next(v)) {
            cur.push_back(static_cast<std::uint32_t>(v));
            BitVec next = cand;
            next &= g.adj[v];
            self(self, next, static_cast<std::uint32_t>(v + 1));
            cur.pop_back();
        }
    };
    dfs(dfs, all, 0);
    return out;
}

// All labeled tilings by exact cover over cells: repeatedly take the smallest
// uncovered cell and branch over the cubes covering it. Shares nothing with
// the compatibility-graph machinery.
inline std::vector<std::vector<Pos>> all_tilings_by_cell_cover(const Torus& t) {
    const Pos nv = t.position_count();
    std::vector<std::vector<Pos>> covering(nv);
    std::vector<BitVec> block(nv, BitVec(nv));
    for (Pos p = 0; p < nv; ++p)
        for (Pos off : t.cover_offsets()) {
            Pos cell = t.add(p, off);
            covering[cell].push_back(p);
            block[p].set(cell);
        }
    std::vector<std::vector<Pos>> out;
    std::vector<Pos> cur;
    auto dfs = [&](auto&& self, const BitVec& covered) -> void {
        std::size_t z = 0;
        while (z < nv && covered.test(z)) ++z;
        if (z == nv) {
            std::vector<Pos> s = cur;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        for (Pos p : covering[z]) {
            if (covered.intersects(block[p])) continue;
            cur.push_back(p);
            BitVec next = covered;
            next |= block[p];
            self(self, next);
            cur.pop_back();
        }
    };
    dfs(dfs, BitVec(nv));
    std::sort(out.begin(), out.end());
    return out;
}

struct TilingCliqueReport {
    std::size_t compat_clique_count = 0;   // 2^n-cliques of the compatibility graph
    std::size_t tiling_count = 0;          // labeled tilings from exact cell cover
    bool cliques_are_tilings = false;      // every clique covers each cell exactly once
    bool tilings_are_cliques = false;      // every covered tiling is a clique
    std::size_t keller_clique_count = 0;   // 2^n-cliques of the Keller graph (expected 0)
};

// Verifies the clique <-> tiling correspondence exhaustively (n <= 3): the
// clique side comes from the graphs, the tiling side from cell covering.
inline TilingCliqueReport tilings_as_cliques(int n) {
    if (n < 1 || n > 3) throw capacity_error("tilings_as_cliques supports n <= 3 (brute-force scale)");
    Torus t(n, 2);
    auto compat = build_compatibility_graph(n);
    auto keller = build_keller_graph(n);
    const auto full = static_cast<std::size_t>(t.max_packing_size());

    TilingCliqueReport report;
    auto cliques = cliques_of_size(compat, full);
    std::sort(cliques.begin(), cliques.end());
    report.compat_clique_count = cliques.size();
    report.cliques_are_tilings = true;
    for (const auto& c : cliques) {
        std::vector<Pos> cubes(c.begin(), c.end());
        if (covered_cells(t, cubes).count() != t.position_count()) report.cliques_are_tilings = false;
    }
    auto tilings = all_tilings_by_cell_cover(t);
    report.tiling_count = tilings.size();
    report.tilings_are_cliques = true;
    for (const auto& s : tilings) {
        for (std::size_t i = 0; i < s.size() && report.tilings_are_cliques; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!compat.adjacent(s[i], s[j])) {
                    report.tilings_are_cliques = false;
                    break;
                }
    }
    if (report.tiling_count != report.compat_clique_count) {
        report.cliques_are_tilings = false;
        report.tilings_are_cliques = false;
    }
    report.keller_clique_count = cliques_of_size(keller, full).size();
    return report;
}

}  // namespace cubepack
