#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubepack/core.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/symmetry.hpp"
#include "cubepack/util.hpp"

namespace cubepack {

using Rational = boost::multiprecision::cpp_rational;

struct TerminalDistribution {
    TorusParams params;
    // canonical terminal packing -> exact probability; sums to exactly 1
    std::map<std::vector<Pos>, Rational> probs;
};

// Exact law of the terminal type of the uniform-over-free process, by
// memoized recursion over canonical states. Transition weights group the
// free positions by the canonical form of the successor state.
class ExactDistributionSolver {
  public:
    ExactDistributionSolver(const Torus& t, const SymmetryContext& sym, const CompatTable& compat)
        : torus_(t), sym_(sym), compat_(compat) {}

    TerminalDistribution solve() {
        TerminalDistribution out;
        out.params = torus_.params();
        // The first draw is uniform over all positions and every successor is
        // the same single-cube type.
        const auto& dist = distribution_of({0});
        for (const auto& [type, p] : dist) out.probs[type] = p;
        return out;
    }

    std::size_t state_count() const { return memo_.size(); }

  private:
    using Dist = std::map<std::vector<Pos>, Rational>;

    const Dist& distribution_of(const std::vector<Pos>& canon) {
        auto it = memo_.find(canon);
        if (it != memo_.end()) return it->second;

        BitVec free(torus_.position_count(), true);
        for (Pos c : canon) free &= compat_.rows[c];

        Dist dist;
        if (free.none()) {
            dist[canon] = 1;
        } else {
            std::map<std::vector<Pos>, std::uint64_t> successors;
            std::size_t free_count = 0;
            free.for_each_set([&](std::size_t q) {
                ++free_count;
                std::vector<Pos> next = canon;
                next.insert(std::upper_bound(next.begin(), next.end(), static_cast<Pos>(q)),
                            static_cast<Pos>(q));
                successors[sym_.canonical(next)]++;
            });
            for (const auto& [succ, count] : successors) {
                const Dist& sub = distribution_of(succ);
                Rational w(count, free_count);
                for (const auto& [type, p] : sub) dist[type] += w * p;
            }
        }
        return memo_.emplace(canon, std::move(dist)).first->second;
    }

    const Torus& torus_;
    const SymmetryContext& sym_;
    const CompatTable& compat_;
    std::map<std::vector<Pos>, Dist> memo_;
};

inline TerminalDistribution exact_terminal_distribution(const TorusParams& params,
                                                        bool allow_long = false,
                                                        std::size_t* states = nullptr) {
    if (params.N != 2 || params.n > 4 || (params.n > 3 && !allow_long))
        throw capacity_error(
            params.N != 2 || params.n > 4
                ? "exact terminal distribution supports N = 2 and n <= 3 (n = 4 gated)"
                : "exact terminal distribution for n = 4 is a gated long-running computation; "
                  "pass the long-running flag to attempt it");
    Torus t(params);
    SymmetryContext sym(t);
    CompatTable compat = make_compat_table(t);
    ExactDistributionSolver solver(t, sym, compat);
    auto out = solver.solve();
    if (states) *states = solver.state_count();
    Rational total = 0;
    for (const auto& [type, p] : out.probs) total += p;
    if (total != 1) throw std::logic_error("terminal distribution does not sum to 1");
    return out;
}

// Exhaustive walk of the full labeled process tree (no symmetry and no
// memoization: every position sequence is visited). Used to prove statements
// over *every* reachable terminal state and as an independent oracle for the
// canonical recursion.
class ProcessTree {
  public:
    explicit ProcessTree(const Torus& t) : torus_(t), compat_(make_compat_table(t)) {
        if (t.position_count() > 16)
            throw capacity_error("full process-tree walk limited to 16 positions (N = 2, n <= 2)");
    }

    // Terminal labeled states (as sorted cube lists) with exact probabilities.
    std::map<std::vector<Pos>, Rational> terminal_law() {
        law_.clear();
        std::vector<Pos> state;
        BitVec free(torus_.position_count(), true);
        walk(state, free, Rational(1));
        return law_;
    }

  private:
    void walk(std::vector<Pos>& state, const BitVec& free, Rational weight) {
        const std::size_t count = free.count();
        if (count == 0) {
            std::vector<Pos> key = state;
            std::sort(key.begin(), key.end());
            law_[key] += weight;
            return;
        }
        Rational step = weight / count;
        free.for_each_set([&](std::size_t q) {
            state.push_back(static_cast<Pos>(q));
            BitVec next = free;
            next &= compat_.rows[q];
            walk(state, next, step);
            state.pop_back();
        });
    }

    const Torus& torus_;
    CompatTable compat_;
    std::map<std::vector<Pos>, Rational> law_;
};

}  // namespace cubepack
