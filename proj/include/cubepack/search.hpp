#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubepack/core.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/reference_values.hpp"
#include "cubepack/symmetry.hpp"

namespace cubepack {

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    double seconds = 0.0;
};

namespace detail {

// Orderly generation over position sets: elements are added in increasing id
// order starting from position 0, and a partial set is extended only when it
// is the minimal representative of its orbit. Minimal representatives survive
// removal of their largest element, so every orbit is reached exactly once
// through its minimal chain.
class OrderlyEnumerator {
  public:
    OrderlyEnumerator(const Torus& t, const SymmetryContext& sym, const CompatTable& compat)
        : torus_(t), sym_(sym), compat_(compat) {}

    struct Options {
        std::size_t min_size = 1;
        std::size_t max_size = 0;
        bool require_nonextensible = false;  // collect only sets with empty free set
        bool tiling_target = false;          // enables cell-cover pruning toward 2^n cubes
        bool stop_after_first = false;
    };

    // visit(sorted set) for every collected set; return false to stop the search.
    void run(const Options& opt, const std::function<bool(const std::vector<Pos>&)>& visit,
             SearchStats* stats) {
        auto t0 = std::chrono::steady_clock::now();
        opt_ = opt;
        visit_ = &visit;
        stats_ = stats;
        stop_ = false;
        const Pos npos = torus_.position_count();
        stack_.assign(opt.max_size + 1, BitVec(npos));
        covered_.assign(opt.max_size + 1, BitVec(npos));
        if (opt_.tiling_target) {
            cover_positions_.assign(npos, {});
            for (Pos p = 0; p < npos; ++p)
                for (Pos off : torus_.cover_offsets()) cover_positions_[torus_.add(p, off)].push_back(p);
        }
        if (opt_.require_nonextensible || opt_.tiling_target) {
            incompat_.assign(npos, BitVec());
            for (Pos p = 0; p < npos; ++p) {
                incompat_[p] = compat_.rows[p];
                incompat_[p].flip_all();
            }
            ge_mask_.assign(npos + 1, BitVec(npos));
            BitVec acc(npos);
            for (Pos p = npos; p-- > 0;) {
                acc.set(p);
                ge_mask_[p] = acc;
            }
        }
        set_.assign(1, 0);
        stack_[1] = compat_.rows[0];
        if (opt_.tiling_target) covered_[1] = covered_cells(torus_, set_);
        descend(1);
        if (stats_)
            stats_->seconds +=
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

  private:
    void descend(std::size_t depth) {
        if (stop_) return;
        if (stats_) stats_->nodes++;
        const BitVec& free = stack_[depth];
        const std::size_t size = set_.size();
        if (size >= opt_.min_size && (!opt_.require_nonextensible || free.none())) {
            if (stats_) stats_->leaves++;
            if (!(*visit_)(set_)) {
                stop_ = true;
                return;
            }
            if (opt_.stop_after_first) {
                stop_ = true;
                return;
            }
        }
        if (size == opt_.max_size) return;

        const std::size_t remaining = opt_.max_size - size;
        // Future cubes must come from the free positions above the current maximum.
        const Pos last = set_.back();
        if (size + free.count_from(last + 1) < opt_.min_size) return;
        if (opt_.require_nonextensible || opt_.tiling_target) {
            // Each added cube eliminates at most (2N-1)^n free positions.
            if (free.count() > remaining * compat_.incompatible_per_position) return;
            // A free position at or below the frontier can only disappear by
            // adding a future cube that overlaps it; if none is available the
            // branch can never become non-extensible.
            const BitVec& ge = ge_mask_[last + 1];
            bool killable = true;
            for (std::size_t p = free.find_first(); p != BitVec::npos && p <= last;
                 p = free.find_next(p))
                if (!BitVec::intersects3(incompat_[p], free, ge)) {
                    killable = false;
                    break;
                }
            if (!killable) return;
        }
        if (opt_.require_nonextensible) {
            // Greedy bound: even the most destructive candidates cannot clear
            // the free set within the remaining additions.
            kill_counts_.clear();
            for (std::size_t c = free.find_from(last + 1); c != BitVec::npos; c = free.find_next(c))
                kill_counts_.push_back(free.count_and(incompat_[c]));
            std::sort(kill_counts_.begin(), kill_counts_.end(), std::greater<>());
            std::size_t can_kill = 0;
            for (std::size_t i = 0; i < remaining && i < kill_counts_.size(); ++i)
                can_kill += kill_counts_[i];
            if (can_kill < free.count()) return;
        }
        if (opt_.tiling_target) {
            // The smallest uncovered cell must still be coverable.
            std::size_t z = 0;
            while (z < covered_[depth].size() && covered_[depth].test(z)) ++z;
            if (z < covered_[depth].size()) {
                bool coverable = false;
                for (Pos p : cover_positions_[z])
                    if (p > last && free.test(p)) {
                        coverable = true;
                        break;
                    }
                if (!coverable) return;
            }
        }

        for (std::size_t q = free.find_from(last + 1); q != BitVec::npos; q = free.find_next(q)) {
            set_.push_back(static_cast<Pos>(q));
            if (sym_.is_canonical(set_)) {
                stack_[depth + 1] = free;
                stack_[depth + 1] &= compat_.rows[q];
                if (opt_.tiling_target) {
                    covered_[depth + 1] = covered_[depth];
                    for (Pos off : torus_.cover_offsets())
                        covered_[depth + 1].set(torus_.add(static_cast<Pos>(q), off));
                }
                descend(depth + 1);
            }
            set_.pop_back();
            if (stop_) return;
        }
    }

    const Torus& torus_;
    const SymmetryContext& sym_;
    const CompatTable& compat_;
    Options opt_;
    const std::function<bool(const std::vector<Pos>&)>* visit_ = nullptr;
    SearchStats* stats_ = nullptr;
    bool stop_ = false;
    std::vector<Pos> set_;
    std::vector<BitVec> stack_;
    std::vector<BitVec> covered_;
    std::vector<std::vector<Pos>> cover_positions_;
    std::vector<BitVec> incompat_;
    std::vector<BitVec> ge_mask_;
    std::vector<std::size_t> kill_counts_;
};

}  // namespace detail

// All non-extensible packing types with size in [min_size, max_size].
inline std::vector<std::vector<Pos>> nonextensible_types_in_range(
    const Torus& t, const SymmetryContext& sym, const CompatTable& compat, std::size_t min_size,
    std::size_t max_size, SearchStats* stats = nullptr) {
    detail::OrderlyEnumerator e(t, sym, compat);
    detail::OrderlyEnumerator::Options opt;
    opt.min_size = min_size;
    opt.max_size = max_size;
    opt.require_nonextensible = true;
    std::set<std::vector<Pos>> found;
    e.run(opt,
          [&](const std::vector<Pos>& s) {
              found.insert(s);
              return true;
          },
          stats);
    return {found.begin(), found.end()};
}

// Table-1 enumeration: all cube tiling types of the 2N-torus for N = 2.
inline std::vector<std::vector<Pos>> enumerate_tilings(int n, SearchStats* stats = nullptr) {
    if (n < 1) throw usage_error("dimension n must be >= 1");
    if (n >= 5)
        throw capacity_error("tiling enumeration supports n <= 4: dimension 5 already has " +
                             reference::with_commas(reference::kTilingTypesDim5) +
                             " types, beyond desk scale");
    Torus t(n, 2);
    SymmetryContext sym(t);
    CompatTable compat = make_compat_table(t);
    detail::OrderlyEnumerator e(t, sym, compat);
    detail::OrderlyEnumerator::Options opt;
    opt.min_size = opt.max_size = static_cast<std::size_t>(t.max_packing_size());
    opt.tiling_target = true;
    std::set<std::vector<Pos>> found;
    e.run(opt,
          [&](const std::vector<Pos>& s) {
              found.insert(s);
              return true;
          },
          stats);
    return {found.begin(), found.end()};
}

// f(n): minimum size of a non-extensible packing, with one witness.
inline std::pair<std::size_t, Packing> min_nonextensible(int n, bool allow_long = false,
                                                         SearchStats* stats = nullptr) {
    if (n < 1) throw usage_error("dimension n must be >= 1");
    if (n > 6 || (n > 4 && !allow_long))
        throw capacity_error(
            n > 6 ? "min_nonextensible supports n <= 6 (published range for n = 7 is 20-32)"
                  : "min_nonextensible for n = 5, 6 is a gated long-running search toward the "
                    "published values f(5) = " +
                        std::to_string(reference::kMinNonextensibleDim5) + ", f(6) = " +
                        std::to_string(reference::kMinNonextensibleDim6) +
                        "; pass the long-running flag to attempt it");
    Torus t(n, 2);
    SymmetryContext sym(t);
    CompatTable compat = make_compat_table(t);
    for (std::size_t k = 1; k <= t.max_packing_size(); ++k) {
        detail::OrderlyEnumerator e(t, sym, compat);
        detail::OrderlyEnumerator::Options opt;
        opt.min_size = opt.max_size = k;
        opt.require_nonextensible = true;
        opt.stop_after_first = true;
        std::optional<std::vector<Pos>> witness;
        e.run(opt,
              [&](const std::vector<Pos>& s) {
                  witness = s;
                  return false;
              },
              stats);
        if (witness) return {k, Packing{t.params(), *witness}};
    }
    throw std::logic_error("no non-extensible packing found up to 2^n cubes");
}

struct BlockingSet {
    TorusParams params;
    std::vector<Pos> cubes;  // pairwise overlap permitted, duplicates forbidden
};

inline bool is_blocking(const Torus& t, const CompatTable& compat, const std::vector<Pos>& cubes) {
    BitVec alive(t.position_count(), true);
    for (Pos c : cubes) alive &= compat.rows[c];
    return alive.none();
}

// h(n): minimum number of cubes, overlaps allowed, that leave no free position.
inline std::pair<std::size_t, BlockingSet> min_blocking(int n, bool allow_long = false,
                                                        SearchStats* stats = nullptr) {
    if (n < 1) throw usage_error("dimension n must be >= 1");
    if (n > 6 || (n > 4 && !allow_long))
        throw capacity_error(
            n > 6 ? "min_blocking supports n <= 6 (published range for n = 7 is 20-23)"
                  : "min_blocking for n = 5, 6 is a gated long-running search toward the "
                    "published values h(5) = " +
                        std::to_string(reference::kMinBlockingDim5) + ", h(6) = " +
                        std::to_string(reference::kMinBlockingDim6) +
                        "; pass the long-running flag to attempt it");
    Torus t(n, 2);
    SymmetryContext sym(t);
    CompatTable compat = make_compat_table(t);
    const std::size_t kill_max = compat.incompatible_per_position;
    const Pos npos = t.position_count();
    std::vector<BitVec> incompat(npos);
    for (Pos p = 0; p < npos; ++p) {
        incompat[p] = compat.rows[p];
        incompat[p].flip_all();
    }

    std::vector<Pos> set{0};
    std::optional<std::vector<Pos>> witness;
    // Iterative deepening on cardinality; candidates are added in increasing
    // id order with the same orbit-minimality pruning as packings (the group
    // acts on arbitrary position sets the same way).
    std::function<void(const BitVec&, std::size_t)> dfs = [&](const BitVec& alive,
                                                              std::size_t budget) {
        if (witness) return;
        if (stats) stats->nodes++;
        if (alive.none()) {
            witness = set;
            return;
        }
        if (budget == 0) return;
        if (alive.count() > budget * kill_max) return;
        // Every remaining free position needs an overlapping cube above the
        // frontier; otherwise it can never be blocked.
        for (std::size_t p = alive.find_first(); p != BitVec::npos; p = alive.find_next(p))
            if (incompat[p].count_from(set.back() + 1) == 0) return;
        // Greedy bound over the candidates actually available.
        std::vector<std::size_t> kills;
        for (Pos c = set.back() + 1; c < npos; ++c) {
            std::size_t k = alive.count_and(incompat[c]);
            if (k > 0) kills.push_back(k);
        }
        std::sort(kills.begin(), kills.end(), std::greater<>());
        std::size_t can_kill = 0;
        for (std::size_t i = 0; i < budget && i < kills.size(); ++i) can_kill += kills[i];
        if (can_kill < alive.count()) return;
        for (std::size_t q = set.back() + 1; q < npos; ++q) {
            // Skip cubes that eliminate nothing: a minimum blocking set never
            // contains one at its insertion point.
            if (alive.is_subset_of(compat.rows[q])) continue;
            set.push_back(static_cast<Pos>(q));
            if (sym.is_canonical(set)) {
                BitVec next = alive;
                next &= compat.rows[q];
                dfs(next, budget - 1);
            }
            set.pop_back();
            if (witness) return;
        }
    };

    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t k = 1; k <= t.max_packing_size(); ++k) {
        set.assign(1, 0);
        dfs(compat.rows[0], k - 1);
        if (witness) {
            if (stats)
                stats->seconds +=
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return {k, BlockingSet{t.params(), *witness}};
        }
    }
    throw std::logic_error("no blocking set found up to 2^n cubes");
}

struct HoleType {
    std::vector<Pos> cells;            // canonical cell set
    std::vector<Pos> witness_packing;  // one non-extensible packing leaving it
};

// Holes of non-extensible packings with 2^n - l cubes, up to symmetry.
inline std::vector<HoleType> classify_holes(int n, int l, SearchStats* stats = nullptr) {
    if (n < 1) throw usage_error("dimension n must be >= 1");
    if (n > 4) throw capacity_error("hole classification supports n <= 4");
    Torus t(n, 2);
    if (l < 1 || static_cast<std::uint64_t>(l) >= t.max_packing_size())
        throw usage_error("l must satisfy 1 <= l < 2^n");
    SymmetryContext sym(t);
    CompatTable compat = make_compat_table(t);
    const auto k = static_cast<std::size_t>(t.max_packing_size()) - static_cast<std::size_t>(l);
    auto packings = nonextensible_types_in_range(t, sym, compat, k, k, stats);
    std::set<std::vector<Pos>> seen;
    std::vector<HoleType> out;
    for (const auto& p : packings) {
        auto cells = sym.canonical(hole_of(t, p));
        if (seen.insert(cells).second) out.push_back(HoleType{cells, p});
    }
    std::sort(out.begin(), out.end(),
              [](const HoleType& a, const HoleType& b) { return a.cells < b.cells; });
    return out;
}

}  // namespace cubepack
