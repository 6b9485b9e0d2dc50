#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>
#include <vector>

#include "cubepack/core.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/rng.hpp"

namespace cubepack {

struct SimulationConfig {
    TorusParams params;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    int workers = 1;
};

// Sequential random packing: draw a position uniformly from the current free
// set and insert it until nothing fits. Uniform-over-free is distribution
// equivalent to rejection sampling over all positions, since rejected draws
// leave the state unchanged.
inline Packing simulate_one(const Torus& t, std::uint64_t seed) {
    Rng rng(seed);
    BitVec free(t.position_count(), true);
    std::vector<Pos> cubes;
    std::size_t free_count = t.position_count();
    while (free_count > 0) {
        auto q = static_cast<Pos>(free.select(rng.below(free_count)));
        cubes.push_back(q);
        BitVec next(t.position_count());
        std::size_t cnt = 0;
        free.for_each_set([&](std::size_t p) {
            if (t.compatible(q, static_cast<Pos>(p))) {
                next.set(p);
                ++cnt;
            }
        });
        free = std::move(next);
        free_count = cnt;
    }
    return make_packing(t, std::move(cubes));
}

inline Packing simulate_one(const TorusParams& params, std::uint64_t seed) {
    return simulate_one(Torus(params), seed);
}

struct DensityStats {
    std::uint64_t trials = 0;
    TorusParams params;
    double mean_density = 0.0;
    double var_density = 0.0;  // unbiased sample variance; 0 for a single trial
    std::map<std::size_t, std::uint64_t> size_histogram;
};

// Trials are independent streams keyed by trial index, so the aggregate is
// identical for every worker count; workers only split the index range.
inline DensityStats density_stats(const SimulationConfig& cfg) {
    if (cfg.trials == 0) throw usage_error("trials must be positive");
    if (cfg.workers < 1) throw usage_error("workers must be positive");
    Torus t(cfg.params);

    struct Partial {
        std::uint64_t sum = 0, sumsq = 0;
        std::map<std::size_t, std::uint64_t> hist;
    };
    const auto workers = static_cast<std::uint64_t>(cfg.workers);
    std::vector<Partial> parts(workers);
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::size_t size = simulate_one(t, stream_seed(cfg.seed, i)).cubes.size();
            out.sum += size;
            out.sumsq += static_cast<std::uint64_t>(size) * size;
            out.hist[size]++;
        }
    };
    if (workers == 1) {
        run_range(0, cfg.trials, parts[0]);
    } else {
        std::vector<std::thread> threads;
        for (std::uint64_t w = 0; w < workers; ++w)
            threads.emplace_back(run_range, cfg.trials * w / workers, cfg.trials * (w + 1) / workers,
                                 std::ref(parts[w]));
        for (auto& th : threads) th.join();
    }

    std::uint64_t sum = 0, sumsq = 0;
    DensityStats stats;
    stats.trials = cfg.trials;
    stats.params = cfg.params;
    for (const auto& p : parts) {
        sum += p.sum;
        sumsq += p.sumsq;
        for (auto [k, v] : p.hist) stats.size_histogram[k] += v;
    }
    const double full = static_cast<double>(t.max_packing_size());
    const double trials = static_cast<double>(cfg.trials);
    const double mean_size = static_cast<double>(sum) / trials;
    stats.mean_density = mean_size / full;
    if (cfg.trials > 1) {
        double ss = static_cast<double>(sumsq) - trials * mean_size * mean_size;
        stats.var_density = ss / (trials - 1.0) / (full * full);
    }
    return stats;
}

// Columns: trial_count,n,N,mean_density,var_density,size,size_count
inline void write_density_csv(std::ostream& os, const DensityStats& s) {
    os << "trial_count,n,N,mean_density,var_density,size,size_count\n";
    char buf[64];
    for (const auto& [size, count] : s.size_histogram) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", s.mean_density, s.var_density);
        os << s.trials << ',' << s.params.n << ',' << s.params.N << ',' << buf << ',' << size << ','
           << count << '\n';
    }
}

}  // namespace cubepack
