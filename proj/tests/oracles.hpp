#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.
// Deliberately avoid the library's search engines: tilings come from plain
// subset DFS, overlap from explicit cell marking, clique numbers from subset
// scans, continuous types from raw sequence exploration with pairwise
// isomorphism grouping.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cubepack/continuous.hpp"
#include "cubepack/core.hpp"
#include "cubepack/keller.hpp"
#include "cubepack/one_factorization.hpp"

namespace oracles {

using cubepack::BitVec;
using cubepack::Pos;
using cubepack::Torus;

// Overlap test by explicit cell marking, not by the offset-N rule.
inline bool cubes_overlap_by_cells(const Torus& t, Pos a, Pos b) {
    return cubepack::covered_cells(t, {a}).intersects(cubepack::covered_cells(t, {b}));
}

// All labeled tilings via subset DFS over pairwise-disjoint cubes.
inline std::vector<std::vector<Pos>> labeled_tilings(const Torus& t) {
    const Pos npos = t.position_count();
    const auto full = static_cast<std::size_t>(t.max_packing_size());
    std::vector<std::vector<Pos>> out;
    std::vector<Pos> cur;
    auto dfs = [&](auto&& self, Pos from) -> void {
        if (cur.size() == full) {
            out.push_back(cur);
            return;
        }
        for (Pos q = from; q < npos; ++q) {
            if (npos - q < full - cur.size()) break;
            bool ok = true;
            for (Pos c : cur)
                if (!t.compatible(c, q)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(q);
            self(self, static_cast<Pos>(q + 1));
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

// All non-extensible packings of exactly k cubes, as labeled sets.
inline std::vector<std::vector<Pos>> labeled_nonextensible(const Torus& t, std::size_t k) {
    const Pos npos = t.position_count();
    std::vector<std::vector<Pos>> out;
    std::vector<Pos> cur;
    auto dfs = [&](auto&& self, Pos from) -> void {
        if (cur.size() == k) {
            if (cubepack::free_positions(t, cur).empty()) out.push_back(cur);
            return;
        }
        for (Pos q = from; q < npos; ++q) {
            bool ok = true;
            for (Pos c : cur)
                if (!t.compatible(c, q)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(q);
            self(self, static_cast<Pos>(q + 1));
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

// Maximum clique by exhaustive subset scan (<= ~20 vertices).
inline std::size_t max_clique_exhaustive(const cubepack::Graph& g) {
    const std::uint32_t n = g.nverts;
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool clique = true;
        for (std::uint32_t i = 0; i < n && clique; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::uint32_t j = i + 1; j < n; ++j)
                if ((mask >> j & 1) && !g.adjacent(i, j)) {
                    clique = false;
                    break;
                }
        }
        if (clique) best = size;
    }
    return best;
}

// ---- continuous-model oracle: raw reachability + explicit orbit grouping ----

using cubepack::AxisCoord;
using cubepack::ContinuousCube;
using cubepack::ContinuousPacking;

// Relabel parameters per axis by first occurrence over the cube list order,
// then sort cubes; iterate to a fixed point. Identifies label-gauge variants
// without quotienting by any symmetry.
inline ContinuousPacking normalize_labels(ContinuousPacking p) {
    for (int round = 0; round < 8; ++round) {
        std::vector<std::map<int, int>> relabel(static_cast<std::size_t>(p.n));
        std::vector<std::map<int, int>> orient(static_cast<std::size_t>(p.n));
        for (auto& cube : p.cubes)
            for (int axis = 0; axis < p.n; ++axis) {
                auto& a = cube.coords[static_cast<std::size_t>(axis)];
                auto [it, fresh] = relabel[static_cast<std::size_t>(axis)].try_emplace(
                    a.param, static_cast<int>(relabel[static_cast<std::size_t>(axis)].size()));
                if (fresh) orient[static_cast<std::size_t>(axis)][a.param] = a.shift;
                int o = orient[static_cast<std::size_t>(axis)].count(a.param)
                            ? orient[static_cast<std::size_t>(axis)][a.param]
                            : 0;
                a = AxisCoord{it->second, a.shift ^ o};
            }
        auto sorted = p.cubes;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == p.cubes) break;
        p.cubes = std::move(sorted);
    }
    return p;
}

// All valid insertions, independent of the library's generator: nested
// per-axis scans over fresh/existing choices, validity checked by pairwise
// compatibility afterwards, minimal-reuse filter applied at the end.
inline std::vector<ContinuousCube> oracle_insertions(const ContinuousPacking& p, bool minimal_reuse) {
    std::vector<std::vector<AxisCoord>> choices(static_cast<std::size_t>(p.n));
    for (int axis = 0; axis < p.n; ++axis) {
        std::set<int> params;
        for (const auto& c : p.cubes) params.insert(c.coords[static_cast<std::size_t>(axis)].param);
        int fresh = params.empty() ? 0 : *params.rbegin() + 1;
        choices[static_cast<std::size_t>(axis)].push_back(AxisCoord{fresh, 0});
        for (int q : params)
            for (int b = 0; b < 2; ++b) choices[static_cast<std::size_t>(axis)].push_back(AxisCoord{q, b});
    }
    std::vector<ContinuousCube> valid;
    ContinuousCube cur;
    cur.coords.assign(static_cast<std::size_t>(p.n), AxisCoord{});
    auto rec = [&](auto&& self, int axis) -> void {
        if (axis == p.n) {
            for (const auto& c : p.cubes)
                if (!cubepack::c_compatible(cur, c)) return;
            valid.push_back(cur);
            return;
        }
        for (const auto& choice : choices[static_cast<std::size_t>(axis)]) {
            cur.coords[static_cast<std::size_t>(axis)] = choice;
            self(self, axis + 1);
        }
    };
    rec(rec, 0);
    if (minimal_reuse && !valid.empty()) {
        auto reuses = [&](const ContinuousCube& c) {
            int r = 0;
            for (int axis = 0; axis < p.n; ++axis) {
                const auto& opts = choices[static_cast<std::size_t>(axis)];
                if (c.coords[static_cast<std::size_t>(axis)].param != opts.front().param) ++r;
            }
            return r;
        };
        int best = p.n + 1;
        for (const auto& c : valid) best = std::min(best, reuses(c));
        std::vector<ContinuousCube> filtered;
        for (const auto& c : valid)
            if (reuses(c) == best) filtered.push_back(c);
        valid = std::move(filtered);
    }
    return valid;
}

// Explicit isomorphism test: try all axis permutations and per-axis parameter
// matchings induced by a cube correspondence search.
inline bool continuous_isomorphic(const ContinuousPacking& a, const ContinuousPacking& b) {
    if (a.n != b.n || a.cubes.size() != b.cubes.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Map cube by cube; per axis maintain a bijection on (param -> param)
        // and a shift flip per source parameter.
        std::vector<std::map<int, std::pair<int, int>>> pmap(static_cast<std::size_t>(a.n));
        std::vector<std::map<int, int>> pmap_inv(static_cast<std::size_t>(a.n));
        std::vector<bool> used(b.cubes.size(), false);

        auto match = [&](auto&& self, std::size_t ai) -> bool {
            if (ai == a.cubes.size()) return true;
            for (std::size_t bi = 0; bi < b.cubes.size(); ++bi) {
                if (used[bi]) continue;
                std::vector<std::pair<int, AxisCoord>> added;  // (axis, source coord)
                bool ok = true;
                for (int axis = 0; axis < a.n && ok; ++axis) {
                    const auto& src = a.cubes[ai].coords[static_cast<std::size_t>(perm[static_cast<std::size_t>(axis)])];
                    const auto& dst = b.cubes[bi].coords[static_cast<std::size_t>(axis)];
                    auto it = pmap[static_cast<std::size_t>(axis)].find(src.param);
                    if (it == pmap[static_cast<std::size_t>(axis)].end()) {
                        if (pmap_inv[static_cast<std::size_t>(axis)].count(dst.param)) {
                            ok = false;
                            break;
                        }
                        pmap[static_cast<std::size_t>(axis)][src.param] = {dst.param, src.shift ^ dst.shift};
                        pmap_inv[static_cast<std::size_t>(axis)][dst.param] = src.param;
                        added.push_back({axis, src});
                    } else {
                        if (it->second.first != dst.param || (src.shift ^ it->second.second) != dst.shift) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) {
                    used[bi] = true;
                    if (self(self, ai + 1)) return true;
                    used[bi] = false;
                }
                for (auto& [axis, src] : added) {
                    auto stored = pmap[static_cast<std::size_t>(axis)][src.param];
                    pmap_inv[static_cast<std::size_t>(axis)].erase(stored.first);
                    pmap[static_cast<std::size_t>(axis)].erase(src.param);
                }
            }
            return false;
        };
        if (match(match, 0)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Count continuous tiling types by raw sequence exploration (no canonical
// forms): collect label-normalized reachable tilings, then group them into
// orbits with the explicit isomorphism test.
inline std::size_t oracle_continuous_tiling_types(int n, bool minimal_reuse) {
    const std::size_t full = std::size_t{1} << n;
    std::set<std::vector<ContinuousCube>> seen_states, tilings;
    ContinuousPacking start{n, {ContinuousCube{std::vector<AxisCoord>(static_cast<std::size_t>(n))}}};
    start = normalize_labels(start);
    seen_states.insert(start.cubes);
    std::vector<ContinuousPacking> frontier{start};
    for (std::size_t size = 1; size < full; ++size) {
        std::vector<ContinuousPacking> next;
        for (const auto& state : frontier)
            for (const auto& cube : oracle_insertions(state, minimal_reuse)) {
                ContinuousPacking child = state;
                child.cubes.push_back(cube);
                child = normalize_labels(child);
                if (child.cubes.size() == full) {
                    tilings.insert(child.cubes);
                } else if (seen_states.insert(child.cubes).second) {
                    next.push_back(child);
                }
            }
        frontier = std::move(next);
    }
    std::vector<ContinuousPacking> reps;
    for (const auto& cubes : tilings) {
        ContinuousPacking p{n, cubes};
        bool known = false;
        for (const auto& rep : reps)
            if (continuous_isomorphic(p, rep)) {
                known = true;
                break;
            }
        if (!known) reps.push_back(p);
    }
    return reps.size();
}

// ---- one-factorization oracles ----

using cubepack::Edge;
using cubepack::OneFactorization;

// All perfect matchings of K_2m.
inline std::vector<std::vector<Edge>> all_perfect_matchings(int m) {
    const int nv = 2 * m;
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> cur;
    std::vector<bool> used(static_cast<std::size_t>(nv), false);
    auto rec = [&](auto&& self) -> void {
        int u = 0;
        while (u < nv && used[static_cast<std::size_t>(u)]) ++u;
        if (u == nv) {
            out.push_back(cur);
            return;
        }
        used[static_cast<std::size_t>(u)] = true;
        for (int v = u + 1; v < nv; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            cur.push_back({u, v});
            self(self);
            cur.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
        used[static_cast<std::size_t>(u)] = false;
    };
    rec(rec);
    return out;
}

// Unordered-partition brute force: choose disjoint perfect matchings from the
// full matching list until the edge set is exhausted.
inline std::vector<OneFactorization> factorizations_by_partition(int m) {
    const int nv = 2 * m;
    auto matchings = all_perfect_matchings(m);
    std::vector<std::set<Edge>> esets;
    for (const auto& pm : matchings) esets.emplace_back(pm.begin(), pm.end());

    std::vector<OneFactorization> out;
    std::vector<std::size_t> chosen;
    const std::size_t nfactors = static_cast<std::size_t>(nv - 1);
    auto rec = [&](auto&& self, std::size_t from, std::set<Edge>& usedEdges) -> void {
        if (chosen.size() == nfactors) {
            OneFactorization f;
            f.m = m;
            for (std::size_t i : chosen) f.factors.push_back(matchings[i]);
            f.factors = cubepack::normalized_factors(std::move(f.factors));
            out.push_back(std::move(f));
            return;
        }
        for (std::size_t i = from; i < matchings.size(); ++i) {
            bool disjoint = true;
            for (auto e : esets[i])
                if (usedEdges.count(e)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            for (auto e : esets[i]) usedEdges.insert(e);
            chosen.push_back(i);
            self(self, i + 1, usedEdges);
            chosen.pop_back();
            for (auto e : esets[i]) usedEdges.erase(e);
        }
    };
    std::set<Edge> usedEdges;
    rec(rec, 0, usedEdges);
    return out;
}

// Orbit count under S_2m by explicit grouping with full permutation scans.
inline std::size_t factorization_types_by_grouping(const std::vector<OneFactorization>& all) {
    std::vector<OneFactorization> reps;
    for (const auto& f : all) {
        bool known = false;
        for (const auto& rep : reps)
            if (cubepack::detail::isomorphic(f, rep)) {
                known = true;
                break;
            }
        if (!known) reps.push_back(f);
    }
    return reps.size();
}

// Burnside recount: orbit count = average number of fixed factorizations over
// the symmetric group, evaluated once per cycle type.
inline std::size_t factorization_types_by_burnside(int m) {
    const int nv = 2 * m;
    auto labeled = cubepack::labeled_one_factorizations(m);
    std::set<std::vector<std::vector<Edge>>> universe;
    for (auto& f : labeled) universe.insert(cubepack::normalized_factors(f.factors));

    std::vector<int> tau(static_cast<std::size_t>(nv));
    std::iota(tau.begin(), tau.end(), 0);
    std::map<std::vector<int>, std::pair<std::uint64_t, std::vector<int>>> classes;  // cycle type -> (size, rep)
    do {
        std::vector<bool> seen(static_cast<std::size_t>(nv), false);
        std::vector<int> type;
        for (int s = 0; s < nv; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            int len = 0, cur = s;
            while (!seen[static_cast<std::size_t>(cur)]) {
                seen[static_cast<std::size_t>(cur)] = true;
                cur = tau[static_cast<std::size_t>(cur)];
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end());
        auto [it, fresh] = classes.try_emplace(type, std::pair<std::uint64_t, std::vector<int>>{0, tau});
        it->second.first++;
    } while (std::next_permutation(tau.begin(), tau.end()));

    std::uint64_t total = 0, group = 0;
    for (const auto& [type, entry] : classes) {
        group += entry.first;
        const auto& rep = entry.second;
        std::uint64_t fixed = 0;
        for (const auto& f : universe) {
            auto mapped = f;
            for (auto& factor : mapped)
                for (auto& [u, v] : factor) {
                    u = rep[static_cast<std::size_t>(u)];
                    v = rep[static_cast<std::size_t>(v)];
                }
            if (cubepack::normalized_factors(std::move(mapped)) == f) ++fixed;
        }
        total += entry.first * fixed;
    }
    return static_cast<std::size_t>(total / group);
}

}  // namespace oracles
