#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "cubepack/continuous.hpp"
#include "cubepack/errors.hpp"

namespace cubepack {

using Edge = std::pair<int, int>;  // u < v

struct OneFactorization {
    int m = 0;                               // vertices 2m
    std::vector<std::vector<Edge>> factors;  // 2m-1 perfect matchings partitioning K_2m

    bool operator==(const OneFactorization&) const = default;
};

inline void validate_one_factorization(const OneFactorization& f) {
    const int nv = 2 * f.m;
    if (f.m < 1) throw usage_error("one-factorization needs m >= 1");
    if (static_cast<int>(f.factors.size()) != nv - 1)
        throw usage_error("one-factorization of K_2m needs 2m-1 factors");
    std::set<Edge> seen;
    for (const auto& factor : f.factors) {
        if (static_cast<int>(factor.size()) != f.m)
            throw usage_error("each factor must be a perfect matching of m edges");
        std::set<int> matched;
        for (auto [u, v] : factor) {
            if (u < 0 || v < 0 || u >= nv || v >= nv || u >= v)
                throw usage_error("factor edge out of range or not ordered u < v");
            if (!matched.insert(u).second || !matched.insert(v).second)
                throw usage_error("factor is not a matching");
            if (!seen.insert({u, v}).second) throw usage_error("edge repeated across factors");
        }
    }
    if (seen.size() != static_cast<std::size_t>(nv * (nv - 1) / 2))
        throw usage_error("factors do not partition the edge set of K_2m");
}

// Sorted-factor normal form: pairs ordered, factors sorted; identifies equal
// factor sets without quotienting by vertex relabelling.
inline std::vector<std::vector<Edge>> normalized_factors(std::vector<std::vector<Edge>> factors) {
    for (auto& f : factors) {
        for (auto& [u, v] : f)
            if (u > v) std::swap(u, v);
        std::sort(f.begin(), f.end());
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

// All labeled one-factorizations of K_2m as factor sets, via proper edge
// colourings normalized so that factor k contains the edge (0, k+1).
inline std::vector<OneFactorization> labeled_one_factorizations(int m) {
    const int nv = 2 * m;
    std::vector<Edge> edges;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) edges.push_back({u, v});

    const int nfactors = nv - 1;
    std::vector<std::vector<std::uint8_t>> used(static_cast<std::size_t>(nv),
                                                std::vector<std::uint8_t>(static_cast<std::size_t>(nfactors), 0));
    std::vector<int> factor_of(edges.size(), -1);
    std::vector<OneFactorization> out;

    auto dfs = [&](auto&& self, std::size_t ei) -> void {
        if (ei == edges.size()) {
            OneFactorization f;
            f.m = m;
            f.factors.assign(static_cast<std::size_t>(nfactors), {});
            for (std::size_t i = 0; i < edges.size(); ++i)
                f.factors[static_cast<std::size_t>(factor_of[i])].push_back(edges[i]);
            out.push_back(std::move(f));
            return;
        }
        auto [u, v] = edges[ei];
        // Edges at vertex 0 pin the factor numbering.
        if (u == 0) {
            int k = v - 1;
            if (!used[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] &&
                !used[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)]) {
                used[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] = 1;
                used[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = 1;
                factor_of[ei] = k;
                self(self, ei + 1);
                used[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] = 0;
                used[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = 0;
            }
            return;
        }
        for (int k = 0; k < nfactors; ++k) {
            if (used[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] ||
                used[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)])
                continue;
            used[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] = 1;
            used[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = 1;
            factor_of[ei] = k;
            self(self, ei + 1);
            used[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] = 0;
            used[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = 0;
        }
    };
    dfs(dfs, 0);
    return out;
}

namespace detail {

// Union of two factors is a disjoint set of even cycles; the multiset of
// cycle types over all factor pairs is an isomorphism invariant.
inline std::vector<std::vector<int>> pair_cycle_invariant(const OneFactorization& f) {
    const int nv = 2 * f.m;
    std::vector<std::vector<int>> inv;
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        for (std::size_t j = i + 1; j < f.factors.size(); ++j) {
            std::vector<int> match_i(static_cast<std::size_t>(nv)), match_j(static_cast<std::size_t>(nv));
            for (auto [u, v] : f.factors[i]) {
                match_i[static_cast<std::size_t>(u)] = v;
                match_i[static_cast<std::size_t>(v)] = u;
            }
            for (auto [u, v] : f.factors[j]) {
                match_j[static_cast<std::size_t>(u)] = v;
                match_j[static_cast<std::size_t>(v)] = u;
            }
            std::vector<int> cycle_type;
            std::vector<bool> seen(static_cast<std::size_t>(nv), false);
            for (int s = 0; s < nv; ++s) {
                if (seen[static_cast<std::size_t>(s)]) continue;
                int len = 0, cur = s;
                bool use_i = true;
                do {
                    seen[static_cast<std::size_t>(cur)] = true;
                    cur = use_i ? match_i[static_cast<std::size_t>(cur)] : match_j[static_cast<std::size_t>(cur)];
                    use_i = !use_i;
                    ++len;
                } while (cur != s);
                cycle_type.push_back(len);
            }
            std::sort(cycle_type.begin(), cycle_type.end());
            inv.push_back(std::move(cycle_type));
        }
    std::sort(inv.begin(), inv.end());
    return inv;
}

inline OneFactorization apply_vertex_perm(const OneFactorization& f, const std::vector<int>& tau) {
    OneFactorization g;
    g.m = f.m;
    g.factors = f.factors;
    for (auto& factor : g.factors)
        for (auto& [u, v] : factor) {
            u = tau[static_cast<std::size_t>(u)];
            v = tau[static_cast<std::size_t>(v)];
        }
    g.factors = normalized_factors(std::move(g.factors));
    return g;
}

inline bool isomorphic(const OneFactorization& a, const OneFactorization& b) {
    const int nv = 2 * a.m;
    std::vector<int> tau(static_cast<std::size_t>(nv));
    std::iota(tau.begin(), tau.end(), 0);
    auto b_norm = normalized_factors(b.factors);
    do {
        if (apply_vertex_perm(a, tau).factors == b_norm) return true;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return false;
}

}  // namespace detail

// One-factorizations of K_2m up to vertex relabelling.
inline std::vector<OneFactorization> enumerate_one_factorizations(int m, bool allow_long = false) {
    if (m < 1) throw usage_error("m must be >= 1");
    if (m > 5 || (m == 5 && !allow_long))
        throw capacity_error(m > 5
                                 ? "one-factorization enumeration supports m <= 5 (types known up "
                                   "to m = 7, beyond desk scale)"
                                 : "one-factorization enumeration for m = 5 is a gated "
                                   "long-running search; pass the long-running flag to attempt it");
    auto labeled = labeled_one_factorizations(m);
    std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < labeled.size(); ++i)
        buckets[detail::pair_cycle_invariant(labeled[i])].push_back(i);

    std::vector<OneFactorization> reps;
    for (auto& [inv, members] : buckets) {
        std::vector<std::size_t> bucket_reps;
        for (std::size_t idx : members) {
            bool known = false;
            for (std::size_t r : bucket_reps)
                if (detail::isomorphic(labeled[idx], labeled[r])) {
                    known = true;
                    break;
                }
            if (!known) bucket_reps.push_back(idx);
        }
        for (std::size_t r : bucket_reps) {
            OneFactorization f = labeled[r];
            f.factors = normalized_factors(std::move(f.factors));
            reps.push_back(std::move(f));
        }
    }
    std::sort(reps.begin(), reps.end(),
              [](const OneFactorization& a, const OneFactorization& b) { return a.factors < b.factors; });
    return reps;
}

// Minimal non-extensible continuous packing in odd dimension n = 2m-1: one
// axis per factor, one cube per vertex, and each edge of factor k donates a
// fresh axis-k parameter to its two endpoints with opposite shifts.
inline ContinuousPacking packing_from_one_factorization(const OneFactorization& f) {
    validate_one_factorization(f);
    const int nv = 2 * f.m;
    const int n = nv - 1;
    ContinuousPacking p;
    p.n = n;
    p.cubes.assign(static_cast<std::size_t>(nv),
                   ContinuousCube{std::vector<AxisCoord>(static_cast<std::size_t>(n))});
    for (int axis = 0; axis < n; ++axis) {
        const auto& factor = f.factors[static_cast<std::size_t>(axis)];
        for (std::size_t e = 0; e < factor.size(); ++e) {
            auto [u, v] = factor[e];
            p.cubes[static_cast<std::size_t>(u)].coords[static_cast<std::size_t>(axis)] =
                AxisCoord{static_cast<int>(e), 0};
            p.cubes[static_cast<std::size_t>(v)].coords[static_cast<std::size_t>(axis)] =
                AxisCoord{static_cast<int>(e), 1};
        }
    }
    return p;
}

}  // namespace cubepack
