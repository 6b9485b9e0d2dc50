#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubepack/errors.hpp"

namespace cubepack {

// One coordinate of the N -> infinity model: a generic real parameter scoped
// to its axis plus the integer part mod 2. Two cubes are interior-disjoint
// iff some axis carries the same parameter with opposite shift bits.
struct AxisCoord {
    int param = 0;
    int shift = 0;  // 0 or 1

    bool operator==(const AxisCoord&) const = default;
    auto operator<=>(const AxisCoord&) const = default;
};

struct ContinuousCube {
    std::vector<AxisCoord> coords;  // one entry per axis

    bool operator==(const ContinuousCube&) const = default;
    auto operator<=>(const ContinuousCube&) const = default;
};

struct ContinuousPacking {
    int n = 0;
    std::vector<ContinuousCube> cubes;

    bool operator==(const ContinuousPacking&) const = default;
};

inline void validate_continuous(const ContinuousPacking& p) {
    if (p.n < 1) throw usage_error("dimension n must be >= 1");
    for (const auto& c : p.cubes) {
        if (static_cast<int>(c.coords.size()) != p.n)
            throw usage_error("continuous cube has wrong dimension");
        for (const auto& a : c.coords)
            if (a.shift != 0 && a.shift != 1) throw usage_error("shift bit must be 0 or 1");
    }
}

inline bool c_compatible(const ContinuousCube& a, const ContinuousCube& b) {
    if (a.coords.size() != b.coords.size()) throw usage_error("continuous cubes of different dimension");
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i].param == b.coords[i].param && a.coords[i].shift != b.coords[i].shift)
            return true;
    return false;
}

inline bool is_continuous_packing(const ContinuousPacking& p) {
    for (std::size_t i = 0; i < p.cubes.size(); ++i)
        for (std::size_t j = i + 1; j < p.cubes.size(); ++j) {
            if (p.cubes[i] == p.cubes[j]) return false;
            if (!c_compatible(p.cubes[i], p.cubes[j])) return false;
        }
    return true;
}

// Number of distinct (axis, parameter) identifiers.
inline int parameter_count(const ContinuousPacking& p) {
    int total = 0;
    std::set<int> params;
    for (int axis = 0; axis < p.n; ++axis) {
        params.clear();
        for (const auto& c : p.cubes) params.insert(c.coords[static_cast<std::size_t>(axis)].param);
        total += static_cast<int>(params.size());
    }
    return total;
}

namespace detail {

// Per-axis insertion choices for a new cube: a fresh parameter, or any
// existing parameter of that axis with either shift bit. Reusing parameter p
// with shift b makes the new cube disjoint from exactly the cubes carrying
// (p, 1-b) there.
struct AxisOption {
    int param = -1;  // -1 = fresh
    int shift = 0;
    std::uint32_t covers = 0;  // bitmask over existing cubes
};

inline std::vector<std::vector<AxisOption>> axis_options(const ContinuousPacking& p) {
    std::vector<std::vector<AxisOption>> out(static_cast<std::size_t>(p.n));
    for (int axis = 0; axis < p.n; ++axis) {
        auto& opts = out[static_cast<std::size_t>(axis)];
        opts.push_back(AxisOption{});  // fresh
        std::map<int, std::array<std::uint32_t, 2>> sides;  // param -> cube mask per shift
        for (std::size_t ci = 0; ci < p.cubes.size(); ++ci) {
            const auto& a = p.cubes[ci].coords[static_cast<std::size_t>(axis)];
            auto& entry = sides.try_emplace(a.param).first->second;
            entry[static_cast<std::size_t>(a.shift)] |= 1u << ci;
        }
        for (const auto& [param, masks] : sides)
            for (int b = 0; b < 2; ++b)
                opts.push_back(AxisOption{param, b, masks[static_cast<std::size_t>(1 - b)]});
    }
    return out;
}

}  // namespace detail

// How sequential insertion is modelled.
//
// PositiveProbability: each step must use as few parameter coincidences as any
// valid placement allows; placements with extra coincidences are vanishing-
// probability events in the limit process.
// AnyCompatible: any coordinate assignment compatible with all existing cubes.
enum class InsertionModel { PositiveProbability, AnyCompatible };

namespace detail {

// All valid new cubes, optionally restricted to the minimum reuse count.
inline std::vector<ContinuousCube> admissible_insertions(const ContinuousPacking& p,
                                                         InsertionModel model) {
    const auto k = p.cubes.size();
    const std::uint32_t all = k == 0 ? 0 : (k == 32 ? ~0u : (1u << k) - 1);
    auto options = axis_options(p);
    std::vector<std::uint32_t> best_cover(static_cast<std::size_t>(p.n), 0);
    // max number of cubes any single reuse on this axis can cover
    std::vector<int> max_cover(static_cast<std::size_t>(p.n), 0);
    for (int axis = 0; axis < p.n; ++axis)
        for (const auto& o : options[static_cast<std::size_t>(axis)])
            max_cover[static_cast<std::size_t>(axis)] =
                std::max(max_cover[static_cast<std::size_t>(axis)], std::popcount(o.covers));

    std::vector<ContinuousCube> found;
    std::vector<AxisOption> chosen(static_cast<std::size_t>(p.n));
    int reuse_limit = p.n;

    auto dfs = [&](auto&& self, int axis, std::uint32_t covered, int reuses) -> void {
        if (axis == p.n) {
            if (covered != all) return;
            ContinuousCube cube;
            cube.coords.resize(static_cast<std::size_t>(p.n));
            std::vector<int> next_param(static_cast<std::size_t>(p.n), 0);
            for (int i = 0; i < p.n; ++i) {
                const auto& o = chosen[static_cast<std::size_t>(i)];
                if (o.param >= 0) {
                    cube.coords[static_cast<std::size_t>(i)] = {o.param, o.shift};
                } else {
                    int fresh = 0;
                    for (const auto& c : p.cubes)
                        fresh = std::max(fresh, c.coords[static_cast<std::size_t>(i)].param + 1);
                    cube.coords[static_cast<std::size_t>(i)] = {fresh, 0};
                }
            }
            found.push_back(std::move(cube));
            return;
        }
        std::uint32_t uncovered = all & ~covered;
        // Remaining reuses must be able to cover everything still uncovered.
        int possible = 0;
        for (int i = axis; i < p.n; ++i) possible += max_cover[static_cast<std::size_t>(i)];
        if (std::popcount(uncovered) > possible) return;
        for (const auto& o : options[static_cast<std::size_t>(axis)]) {
            const bool reuse = o.param >= 0;
            if (reuse && reuses + 1 > reuse_limit) continue;
            chosen[static_cast<std::size_t>(axis)] = o;
            self(self, axis + 1, covered | o.covers, reuses + (reuse ? 1 : 0));
        }
    };

    if (model == InsertionModel::PositiveProbability) {
        for (reuse_limit = 0; reuse_limit <= p.n; ++reuse_limit) {
            found.clear();
            dfs(dfs, 0, 0, 0);
            if (!found.empty()) break;
        }
    } else {
        dfs(dfs, 0, 0, 0);
    }
    return found;
}

}  // namespace detail

// Witness cube extending the packing, or nullopt when non-extensible. A fresh
// parameter never creates a disjointness, so the search is finite.
inline std::optional<ContinuousCube> c_extensible(const ContinuousPacking& p) {
    validate_continuous(p);
    if (p.cubes.size() >= (1u << std::min(p.n, 30))) return std::nullopt;  // volume bound
    auto found = detail::admissible_insertions(p, InsertionModel::AnyCompatible);
    if (found.empty()) return std::nullopt;
    return found.front();
}

// Canonical representative under axis permutations, per-axis parameter
// relabelling, and per-(axis,param) swap of the two shift bits. Encodes cube
// rows with first-occurrence labels and minimizes over axis permutations and
// cube orders (greedy row choice with tie branching).
class ContinuousCanonicalizer {
  public:
    ContinuousPacking canonical(const ContinuousPacking& p) const {
        validate_continuous(p);
        const int n = p.n;
        const auto k = p.cubes.size();
        if (k == 0) return ContinuousPacking{n, {}};
        if (k > 32) throw capacity_error("continuous canonical form limited to 32 cubes");

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> best;
        do {
            std::map<std::pair<std::uint32_t, std::vector<int>>, std::vector<int>> seen;
            LabelState state(n);
            std::vector<int> key;
            key.reserve(k * static_cast<std::size_t>(n));
            grow(p, perm, 0, state, key, best, seen);
        } while (std::next_permutation(perm.begin(), perm.end()));

        return decode_key(n, k, best);
    }

  private:
    struct LabelState {
        explicit LabelState(int n) : label(static_cast<std::size_t>(n)), orient(static_cast<std::size_t>(n)) {}
        std::vector<std::map<int, int>> label;   // axis -> param -> label
        std::vector<std::map<int, int>> orient;  // axis -> param -> first-seen shift
        std::uint32_t chosen = 0;

        std::vector<int> serialize() const {
            std::vector<int> out;
            for (std::size_t i = 0; i < label.size(); ++i)
                for (const auto& [param, lab] : label[i]) {
                    out.push_back(static_cast<int>(i));
                    out.push_back(param);
                    out.push_back(lab);
                    out.push_back(orient[i].at(param));
                }
            return out;
        }
    };

    // Row of one cube under the current labels; commits new labels to state.
    static std::vector<int> encode_row(const ContinuousCube& cube, const std::vector<int>& perm,
                                       LabelState& state) {
        std::vector<int> row(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            const auto& a = cube.coords[static_cast<std::size_t>(perm[i])];
            auto& labels = state.label[i];
            auto it = labels.find(a.param);
            int lab, sh;
            if (it == labels.end()) {
                lab = static_cast<int>(labels.size());
                labels.emplace(a.param, lab);
                state.orient[i].emplace(a.param, a.shift);
                sh = 0;
            } else {
                lab = it->second;
                sh = a.shift ^ state.orient[i].at(a.param);
            }
            row[i] = lab * 2 + sh;
        }
        return row;
    }

    void grow(const ContinuousPacking& p, const std::vector<int>& perm, std::size_t depth,
              const LabelState& state, std::vector<int>& key, std::vector<int>& best,
              std::map<std::pair<std::uint32_t, std::vector<int>>, std::vector<int>>& seen) const {
        if (!best.empty()) {
            // Prune branches that are already lexicographically behind.
            auto mismatch = std::mismatch(key.begin(), key.end(), best.begin());
            if (mismatch.first != key.end() && *mismatch.first > *mismatch.second) return;
        }
        if (depth == p.cubes.size()) {
            if (best.empty() || key < best) best = key;
            return;
        }
        auto memo_key = std::make_pair(state.chosen, state.serialize());
        auto it = seen.find(memo_key);
        if (it != seen.end()) {
            if (key >= it->second) return;
            it->second = key;
        } else {
            seen.emplace(std::move(memo_key), key);
        }

        std::vector<int> min_row;
        std::vector<std::pair<std::size_t, std::vector<int>>> ties;
        for (std::size_t ci = 0; ci < p.cubes.size(); ++ci) {
            if (state.chosen >> ci & 1) continue;
            LabelState trial = state;
            auto row = encode_row(p.cubes[ci], perm, trial);
            if (min_row.empty() || row < min_row) {
                min_row = row;
                ties.assign(1, {ci, std::move(row)});
            } else if (row == min_row) {
                ties.emplace_back(ci, row);
            }
        }
        for (auto& [ci, row] : ties) {
            LabelState next = state;
            encode_row(p.cubes[ci], perm, next);
            next.chosen = state.chosen | (1u << ci);
            const std::size_t before = key.size();
            key.insert(key.end(), row.begin(), row.end());
            grow(p, perm, depth + 1, next, key, best, seen);
            key.resize(before);
        }
    }

    static ContinuousPacking decode_key(int n, std::size_t k, const std::vector<int>& key) {
        ContinuousPacking out;
        out.n = n;
        out.cubes.resize(k);
        for (std::size_t ci = 0; ci < k; ++ci) {
            out.cubes[ci].coords.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                int v = key[ci * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
                out.cubes[ci].coords[static_cast<std::size_t>(i)] = {v / 2, v % 2};
            }
        }
        return out;
    }
};

inline ContinuousPacking canonical_continuous(const ContinuousPacking& p) {
    return ContinuousCanonicalizer().canonical(p);
}

struct ContinuousEnumeration {
    std::vector<ContinuousPacking> tilings;  // canonical representatives
    std::size_t state_count = 0;             // reachable canonical states, all sizes
    std::size_t min_nonextensible_size = 0;
    std::vector<ContinuousPacking> min_nonextensible;
    int min_params_tiling = 0, max_params_tiling = 0;  // parameter-count report
};

// Breadth-first closure of the sequential insertion process over canonical
// states, collecting the tilings (2^n cubes) and the smallest non-extensible
// packings along the way.
inline ContinuousEnumeration enumerate_continuous(
    int n, InsertionModel model = InsertionModel::PositiveProbability) {
    if (n < 1) throw usage_error("dimension n must be >= 1");
    if (n > 4) throw capacity_error("continuous enumeration supports n <= 4");
    const std::size_t full = std::size_t{1} << n;

    ContinuousPacking start{n, {ContinuousCube{std::vector<AxisCoord>(static_cast<std::size_t>(n))}}};
    std::set<std::vector<ContinuousCube>> visited;
    std::vector<ContinuousPacking> frontier{canonical_continuous(start)};
    visited.insert(frontier.front().cubes);

    ContinuousEnumeration out;
    out.state_count = 1;
    std::map<std::size_t, std::vector<ContinuousPacking>> nonextensible;

    for (std::size_t size = 1; size <= full; ++size) {
        std::vector<ContinuousPacking> next;
        for (const auto& state : frontier) {
            if (size == full) {
                out.tilings.push_back(state);
                continue;
            }
            auto insertions = detail::admissible_insertions(state, model);
            if (insertions.empty()) {
                nonextensible[size].push_back(state);
                continue;
            }
            for (const auto& cube : insertions) {
                ContinuousPacking child = state;
                child.cubes.push_back(cube);
                auto canon = canonical_continuous(child);
                if (visited.insert(canon.cubes).second) {
                    ++out.state_count;
                    next.push_back(std::move(canon));
                }
            }
        }
        frontier = std::move(next);
    }

    // A full packing saturates the volume, so tilings are the size-2^n states.
    if (!nonextensible.empty()) {
        out.min_nonextensible_size = nonextensible.begin()->first;
        out.min_nonextensible = nonextensible.begin()->second;
    } else if (!out.tilings.empty()) {
        out.min_nonextensible_size = full;
        out.min_nonextensible = out.tilings;
    }
    if (!out.tilings.empty()) {
        out.min_params_tiling = parameter_count(out.tilings.front());
        out.max_params_tiling = out.min_params_tiling;
        for (const auto& t : out.tilings) {
            int pc = parameter_count(t);
            out.min_params_tiling = std::min(out.min_params_tiling, pc);
            out.max_params_tiling = std::max(out.max_params_tiling, pc);
        }
    }
    return out;
}

inline std::vector<ContinuousPacking> enumerate_continuous_tilings(
    int n, InsertionModel model = InsertionModel::PositiveProbability) {
    return enumerate_continuous(n, model).tilings;
}

}  // namespace cubepack
