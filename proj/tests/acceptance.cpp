// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance            runs all criteria
//   acceptance --only K   runs criterion K
//
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubepack/cli.hpp"
#include "cubepack/clique.hpp"
#include "cubepack/continuous.hpp"
#include "cubepack/exact_dist.hpp"
#include "cubepack/flips.hpp"
#include "cubepack/keller.hpp"
#include "cubepack/one_factorization.hpp"
#include "cubepack/random_pack.hpp"
#include "cubepack/search.hpp"
#include "oracles.hpp"

using namespace cubepack;
namespace fs = std::filesystem;

namespace {

struct Checker {
    int failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// 1. Tiling type counts reproduce 2 / 9 / 744.
void criterion1(Checker& c) {
    c.check(enumerate_tilings(2).size() == 2, "n=2 type count != 2");
    c.check(enumerate_tilings(3).size() == 9, "n=3 type count != 9");
    c.check(enumerate_tilings(4).size() == 744, "n=4 type count != 744");
}

// 2. f(n) and h(n) for n <= 4.
void criterion2(Checker& c) {
    const std::size_t f_expect[] = {0, 0, 4, 4, 8};
    const std::size_t h_expect[] = {0, 0, 3, 4, 7};
    for (int n = 2; n <= 4; ++n) {
        auto [f, fw] = min_nonextensible(n);
        c.check(f == f_expect[n], "f(" + std::to_string(n) + ") != " + std::to_string(f_expect[n]));
        Torus t(n, 2);
        c.check(is_packing(t, fw.cubes) && free_positions(t, fw.cubes).empty(),
                "f witness fails its defining predicate");
        auto [h, hw] = min_blocking(n);
        c.check(h == h_expect[n], "h(" + std::to_string(n) + ") != " + std::to_string(h_expect[n]));
        auto compat = make_compat_table(t);
        c.check(is_blocking(t, compat, hw.cubes), "h witness fails its defining predicate");
        c.check(f >= h, "f(n) < h(n)");
    }
}

// 3. Hole classification: none for l = 1, 2, 3 (n <= 4); the unique l = 4 hole in
// dimension 3 with density 1/2.
void criterion3(Checker& c) {
    for (int n = 1; n <= 4; ++n)
        for (int l = 1; l <= 3 && l < (1 << n); ++l)
            c.check(classify_holes(n, l).empty(),
                    "unexpected hole for n=" + std::to_string(n) + " l=" + std::to_string(l));
    auto holes = classify_holes(3, 4);
    c.check(holes.size() == 1, "n=3 l=4 hole count != 1");
    if (holes.size() == 1) {
        Torus t(3, 2);
        c.check(holes[0].witness_packing.size() == 4, "witness is not a 4-cube packing");
        c.check(holes[0].cells.size() == 32, "hole is not 32 of 64 cells");
        c.check(free_positions(t, holes[0].witness_packing).empty(), "witness is extensible");
    }
}

// 4. Random process: exhaustive tiling proof for n = 1, 2; exact law and Monte
// Carlo agreement for n = 3.
void criterion4(Checker& c) {
    for (int n = 1; n <= 2; ++n) {
        Torus t(n, 2);
        ProcessTree tree(t);
        auto law = tree.terminal_law();
        Rational total = 0;
        bool all_tile = !law.empty();
        for (const auto& [state, prob] : law) {
            all_tile = all_tile && is_tiling(t, state);
            total += prob;
        }
        c.check(all_tile, "a terminal state fails to tile for n=" + std::to_string(n));
        c.check(total == 1, "process-tree law does not sum to 1");
    }

    Torus t(3, 2);
    SymmetryContext sym(t);
    auto dist = exact_terminal_distribution({3, 2});
    Rational total = 0;
    Rational p4 = 0;
    std::size_t quadruple_types = 0;
    for (const auto& [type, prob] : dist.probs) {
        total += prob;
        if (type.size() == 4) {
            ++quadruple_types;
            p4 = prob;
        }
    }
    c.check(total == 1, "exact law does not sum to exactly 1");
    c.check(quadruple_types == 1, "quadruple type count != 1");
    c.check(p4 > 0, "4-cube type has zero probability");

    const std::uint64_t trials = 100000;
    std::map<std::vector<Pos>, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < trials; ++i)
        counts[sym.canonical(simulate_one(t, stream_seed(314159, i)).cubes)]++;
    for (const auto& [type, prob] : dist.probs) {
        double p = prob.convert_to<double>();
        double observed = static_cast<double>(counts[type]) / static_cast<double>(trials);
        double se = std::sqrt(p * (1 - p) / static_cast<double>(trials));
        c.check(std::abs(observed - p) <= 3 * se, "Monte Carlo off by more than 3 standard errors");
    }
    for (const auto& [type, count] : counts)
        c.check(dist.probs.count(type) == 1, "Monte Carlo reached a type outside the exact support");
}

// 5. Keller graphs: exact clique numbers below 2^n; the clique <-> tiling
// correspondence at brute-force scale.
void criterion5(Checker& c) {
    c.check(build_keller_graph(1).edge_count() == 0, "G_1 has edges");
    for (int n = 2; n <= 4; ++n) {
        auto result = max_clique(build_keller_graph(n));
        c.check(result.complete, "clique search did not complete for n=" + std::to_string(n));
        c.check(result.size < (1u << n), "omega(G_n) >= 2^n");
    }
    for (int n = 1; n <= 3; ++n) {
        auto report = tilings_as_cliques(n);
        c.check(report.cliques_are_tilings && report.tilings_are_cliques &&
                    report.compat_clique_count == report.tiling_count,
                "clique <-> tiling bijection fails for n=" + std::to_string(n));
        c.check(report.keller_clique_count == 0, "Keller graph has a 2^n-clique");
    }
}

// 6. Flip graph: connected with 2 / 9 / 744 nodes; flips preserve tiling.
void criterion6(Checker& c) {
    const std::size_t expect[] = {0, 0, 2, 9, 744};
    for (int n = 2; n <= 4; ++n) {
        auto report = flip_connectivity(n);
        c.check(report.connected, "flip graph disconnected for n=" + std::to_string(n));
        c.check(report.node_count == expect[n], "flip node count mismatch");
    }
    for (int n = 2; n <= 3; ++n) {
        Torus t(n, 2);
        for (const auto& type : enumerate_tilings(n)) {
            Packing p{t.params(), type};
            for (const auto& move : facet_pairs(t, p))
                c.check(is_tiling(t, apply_flip(move).cubes), "a flip broke the tiling property");
        }
    }
}

// 7. Continuous model: 32 types in dimension 4; oracle equality below.
void criterion7(Checker& c) {
    for (int n = 2; n <= 3; ++n)
        c.check(enumerate_continuous_tilings(n).size() ==
                    oracles::oracle_continuous_tiling_types(n, true),
                "continuous count differs from the no-symmetry oracle");
    c.check(enumerate_continuous_tilings(4).size() == 32, "dimension-4 continuous count != 32");
}

// 8. One-factorizations: counts 1 / 1 / 6 with brute-force cross-checks; the
// derived packings behave as minimal non-extensible ones.
void criterion8(Checker& c) {
    c.check(enumerate_one_factorizations(2).size() == 1, "K_4 count != 1");
    c.check(enumerate_one_factorizations(3).size() == 1, "K_6 count != 1");
    c.check(enumerate_one_factorizations(4).size() == 6, "K_8 count != 6");
    for (int m : {2, 3})
        c.check(oracles::factorization_types_by_grouping(oracles::factorizations_by_partition(m)) ==
                    enumerate_one_factorizations(m).size(),
                "brute-force cross-check failed for m=" + std::to_string(m));
    for (int m : {2, 3}) {
        auto p = packing_from_one_factorization(enumerate_one_factorizations(m)[0]);
        const int n = 2 * m - 1;
        c.check(is_continuous_packing(p), "constructed packing is not pairwise compatible");
        c.check(!c_extensible(p).has_value(), "constructed packing is extensible");
        c.check(static_cast<int>(p.cubes.size()) == n + 1, "constructed packing size != n+1");
        c.check(parameter_count(p) == n * (n + 1) / 2, "parameter count != n(n+1)/2");
    }
}

// 9. Determinism and format round trips.
void criterion9(Checker& c) {
    auto base = fs::temp_directory_path() / "cubepack_acceptance";
    fs::remove_all(base);
    std::ostringstream sink;
    auto* old = std::cout.rdbuf(sink.rdbuf());
    int rc1 = cli::run({"simulate", "--n", "3", "--trials", "500", "--seed", "21", "--workers", "1",
                        "--out", (base / "a").string()});
    int rc2 = cli::run({"simulate", "--n", "3", "--trials", "500", "--seed", "21", "--workers", "1",
                        "--out", (base / "b").string()});
    std::cout.rdbuf(old);
    c.check(rc1 == 0 && rc2 == 0, "simulate runs failed");
    c.check(slurp(base / "a" / "terminals.json") == slurp(base / "b" / "terminals.json"),
            "terminals.json differs between identical runs");
    c.check(slurp(base / "a" / "density.csv") == slurp(base / "b" / "density.csv"),
            "density.csv differs between identical runs");
    auto m1 = manifest_from_json(ordered_json::parse(slurp(base / "a" / "manifest.json")));
    auto m2 = manifest_from_json(ordered_json::parse(slurp(base / "b" / "manifest.json")));
    c.check(m1.result_digest == m2.result_digest, "result digests differ");

    for (int n = 1; n <= 3; ++n) {
        auto g = build_keller_graph(n);
        std::ostringstream os;
        export_dimacs(g, os);
        std::istringstream is(os.str());
        auto back = import_dimacs(is);
        bool same = back.nverts == g.nverts;
        for (std::uint32_t v = 0; same && v < g.nverts; ++v) same = back.adj[v] == g.adj[v];
        c.check(same, "DIMACS round trip changed the edge set");
    }

    Torus t(3, 2);
    Packing p = make_packing(t, trivial_tiling(t));
    c.check(packing_from_json(packing_to_json(p)).cubes == p.cubes, "packing JSON round trip");
    auto f = enumerate_one_factorizations(3)[0];
    c.check(one_factorization_from_json(one_factorization_to_json(f)) == f,
            "one-factorization JSON round trip");
    auto ct = enumerate_continuous_tilings(2)[0];
    c.check(continuous_packing_from_json(continuous_packing_to_json(ct)) == ct,
            "continuous JSON round trip");
}

const char* kDescriptions[] = {
    "",
    "tiling type counts 2 / 9 / 744",
    "f(2..4) = 4,4,8 and h(2..4) = 3,4,7 with verified witnesses",
    "holes: none for l=1,2,3 (n<=4); unique density-1/2 hole at n=3, l=4",
    "random process: tilings proven for n<=2; exact law + Monte Carlo for n=3",
    "Keller cliques: omega(G_n) < 2^n (n=2,3,4); clique/tiling bijection (n<=3)",
    "flip graph connected with 2 / 9 / 744 nodes; flips preserve tilings",
    "continuous tilings: 32 types in dimension 4; oracle match for n=2,3",
    "one-factorizations 1 / 1 / 6 with cross-checks; K_2m packings verified",
    "determinism of seeded artifacts; DIMACS and JSON round trips",
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    using CriterionFn = void (*)(Checker&);
    CriterionFn criteria[] = {nullptr,    criterion1, criterion2, criterion3, criterion4,
                              criterion5, criterion6, criterion7, criterion8, criterion9};

    int failed = 0;
    for (int k = 1; k <= 9; ++k) {
        if (only != 0 && k != only) continue;
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[k](c);
        } catch (const std::exception& e) {
            c.check(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.failures == 0) {
            std::printf("PASS  [%d] %s (%.1fs)\n", k, kDescriptions[k], secs);
        } else {
            ++failed;
            std::printf("FAIL  [%d] %s (%.1fs): %s\n", k, kDescriptions[k], secs,
                        c.first_failure.c_str());
        }
        std::fflush(stdout);
    }
    return failed;
}
