#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "cubepack/bitvec.hpp"
#include "cubepack/keller.hpp"

namespace cubepack {

struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::uint32_t> witness;
    bool complete = true;  // false when the node budget ran out
    std::uint64_t nodes = 0;
};

namespace detail {

// Branch and bound with a greedy-coloring bound (Tomita style) over bitset
// candidate sets. Vertices are branched in reverse color order; a branch is
// cut when |R| + color(v) cannot beat the incumbent.
class CliqueSearcher {
  public:
    CliqueSearcher(const Graph& g, std::vector<std::uint32_t> order, std::uint64_t budget,
                   std::atomic<std::size_t>& best, std::atomic<std::uint64_t>& nodes)
        : g_(g), order_(std::move(order)), budget_(budget), best_(best), nodes_(nodes) {}

    void search_root(std::uint32_t root_index, const BitVec& cand) {
        clique_.assign(1, order_[root_index]);
        expand(cand);
        clique_.clear();
    }

    const std::vector<std::uint32_t>& best_witness() const { return witness_; }
    bool complete() const { return complete_; }

  private:
    void expand(const BitVec& cand) {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
            complete_ = false;
            return;
        }
        if (cand.none()) {
            std::size_t sz = clique_.size();
            std::size_t cur = best_.load(std::memory_order_relaxed);
            while (sz > cur && !best_.compare_exchange_weak(cur, sz)) {
            }
            if (sz > witness_.size()) witness_ = clique_;
            return;
        }

        // Greedy coloring: vertices grouped into independent classes; a vertex
        // in class k extends the clique by at most k+1 more vertices.
        std::vector<std::uint32_t> verts;
        std::vector<std::uint32_t> color;
        BitVec uncolored = cand;
        std::uint32_t classes = 0;
        while (uncolored.any()) {
            BitVec cls = uncolored;
            ++classes;
            while (cls.any()) {
                auto v = cls.find_first();
                verts.push_back(static_cast<std::uint32_t>(v));
                color.push_back(classes);
                cls.reset(v);
                uncolored.reset(v);
                cls.and_not(g_.adj[v]);
            }
        }

        for (std::size_t i = verts.size(); i-- > 0;) {
            if (clique_.size() + color[i] <= best_.load(std::memory_order_relaxed)) return;
            std::uint32_t v = verts[i];
            clique_.push_back(v);
            BitVec next = cand;
            next &= g_.adj[v];
            // Only candidates not yet branched at this level remain.
            for (std::size_t j = i; j < verts.size(); ++j) next.reset(verts[j]);
            expand(next);
            clique_.pop_back();
            if (!complete_) return;
        }
    }

    const Graph& g_;
    std::vector<std::uint32_t> order_;
    std::uint64_t budget_;
    std::atomic<std::size_t>& best_;
    std::atomic<std::uint64_t>& nodes_;
    std::vector<std::uint32_t> clique_;
    std::vector<std::uint32_t> witness_;
    bool complete_ = true;
};

inline std::vector<std::uint32_t> degeneracy_order(const Graph& g) {
    std::vector<std::uint32_t> order;
    order.reserve(g.nverts);
    std::vector<std::size_t> deg(g.nverts);
    BitVec alive(g.nverts, true);
    for (std::uint32_t v = 0; v < g.nverts; ++v) deg[v] = g.adj[v].count();
    for (std::uint32_t step = 0; step < g.nverts; ++step) {
        std::uint32_t best = UINT32_MAX;
        std::size_t best_deg = SIZE_MAX;
        for (std::size_t v = alive.find_first(); v != BitVec::npos; v = alive.find_next(v))
            if (deg[v] < best_deg) {
                best_deg = deg[v];
                best = static_cast<std::uint32_t>(v);
            }
        order.push_back(best);
        alive.reset(best);
        g.adj[best].for_each_set([&](std::size_t u) {
            if (alive.test(u)) --deg[u];
        });
    }
    std::reverse(order.begin(), order.end());  // highest-core vertices first
    return order;
}

}  // namespace detail

// Exact maximum clique within the node budget; best found plus an explicit
// incomplete flag when the budget runs out. Root branches may run in
// parallel: the clique number stays deterministic, the witness need not.
inline CliqueResult max_clique(const Graph& g, std::uint64_t budget = UINT64_MAX, int threads = 1) {
    CliqueResult result;
    if (g.nverts == 0) return result;

    auto order = detail::degeneracy_order(g);
    std::atomic<std::size_t> best{0};
    std::atomic<std::uint64_t> nodes{0};

    // Root v_i only explores candidates later in the order: every clique is
    // rooted at its earliest member.
    auto root_candidates = [&](std::uint32_t i) {
        BitVec cand(g.nverts);
        for (std::uint32_t j = i + 1; j < g.nverts; ++j) cand.set(order[j]);
        cand &= g.adj[order[i]];
        return cand;
    };

    std::vector<std::uint32_t> witness;
    bool complete = true;
    if (threads <= 1) {
        detail::CliqueSearcher s(g, order, budget, best, nodes);
        for (std::uint32_t i = 0; i < g.nverts; ++i) {
            s.search_root(i, root_candidates(i));
            if (s.best_witness().size() > witness.size()) witness = s.best_witness();
            if (!s.complete()) {
                complete = false;
                break;
            }
        }
    } else {
        std::atomic<std::uint32_t> next_root{0};
        std::mutex merge;
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                detail::CliqueSearcher s(g, order, budget, best, nodes);
                while (true) {
                    std::uint32_t i = next_root.fetch_add(1);
                    if (i >= g.nverts || !s.complete()) break;
                    s.search_root(i, root_candidates(i));
                }
                std::lock_guard<std::mutex> lock(merge);
                if (s.best_witness().size() > witness.size()) witness = s.best_witness();
                if (!s.complete()) complete = false;
            });
        for (auto& th : pool) th.join();
    }

    result.size = best.load();
    result.witness = std::move(witness);
    std::sort(result.witness.begin(), result.witness.end());
    result.complete = complete;
    result.nodes = nodes.load();
    return result;
}

}  // namespace cubepack
