#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubepack/clique.hpp"
#include "cubepack/continuous.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/exact_dist.hpp"
#include "cubepack/flips.hpp"
#include "cubepack/json_formats.hpp"
#include "cubepack/json_io.hpp"
#include "cubepack/keller.hpp"
#include "cubepack/manifest.hpp"
#include "cubepack/one_factorization.hpp"
#include "cubepack/random_pack.hpp"
#include "cubepack/reference_values.hpp"
#include "cubepack/search.hpp"
#include "cubepack/version.hpp"

namespace cubepack::cli {

namespace fs = std::filesystem;

// Collects artifacts for one run, then writes the manifest next to them.
class ArtifactWriter {
  public:
    ArtifactWriter(std::string subcommand, fs::path dir)
        : subcommand_(std::move(subcommand)), dir_(std::move(dir)) {
        fs::create_directories(dir_);
        start_ = std::chrono::steady_clock::now();
    }

    void write(const std::string& name, const std::string& content) {
        std::ofstream out(dir_ / name, std::ios::binary);
        out << content;
        names_.push_back(name);
    }
    void write_json(const std::string& name, const ordered_json& j) { write(name, j.dump(2) + "\n"); }
    // For artifacts too large to assemble in memory.
    std::ofstream open_stream(const std::string& name) {
        names_.push_back(name);
        return std::ofstream(dir_ / name, std::ios::binary);
    }

    fs::path path(const std::string& name) const { return dir_ / name; }

    std::string finish(const ordered_json& parameters, std::uint64_t seed, int workers) {
        std::sort(names_.begin(), names_.end());
        RunManifest m;
        m.subcommand = subcommand_;
        m.parameters = parameters;
        m.seed = seed;
        m.workers = workers;
        m.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        m.artifacts = names_;
        std::vector<std::string> paths;
        for (const auto& n : names_) paths.push_back((dir_ / n).string());
        m.result_digest = digest_files(paths);
        std::ofstream out(dir_ / "manifest.json", std::ios::binary);
        out << manifest_to_json(m).dump(2) << "\n";
        return m.result_digest;
    }

  private:
    std::string subcommand_;
    fs::path dir_;
    std::vector<std::string> names_;
    std::chrono::steady_clock::time_point start_;
};

struct CommonArgs {
    int n = 0;
    int N = 2;
    int l = 0;
    int m = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    std::uint64_t budget = UINT64_MAX;
    std::string out = ".";
    bool allow_long = false;
    std::string format = "json";
    std::string import_path, export_path;
    std::string graph = "keller";
};

inline ordered_json flag_record(const CommonArgs& a, std::initializer_list<const char*> keys) {
    ordered_json j;
    for (const char* k : keys) {
        std::string key = k;
        if (key == "n") j["n"] = a.n;
        if (key == "N") j["N"] = a.N;
        if (key == "l") j["l"] = a.l;
        if (key == "m") j["m"] = a.m;
        if (key == "trials") j["trials"] = a.trials;
        if (key == "seed") j["seed"] = a.seed;
        if (key == "workers") j["workers"] = a.workers;
        if (key == "budget") j["budget"] = a.budget;
        if (key == "allow_long") j["allow_long"] = a.allow_long;
        if (key == "format") j["format"] = a.format;
        if (key == "import") j["import"] = a.import_path;
        if (key == "export") j["export"] = a.export_path;
        if (key == "graph") j["graph"] = a.graph;
    }
    return j;
}

inline int cmd_enumerate(const CommonArgs& a) {
    SearchStats stats;
    auto types = enumerate_tilings(a.n, &stats);
    Torus t(a.n, 2);
    ArtifactWriter w("enumerate", a.out);
    auto arr = ordered_json::array();
    for (const auto& s : types) arr.push_back(canonical_form_to_json(CanonicalForm{t.params(), s}));
    w.write_json("types.json", arr);
    w.finish(flag_record(a, {"n"}), 0, 1);
    std::cout << "enumerate n=" << a.n << ": " << types.size() << " tiling types, nodes=" << stats.nodes
              << ", " << stats.seconds << "s -> " << w.path("types.json").string() << "\n";
    return 0;
}

inline int cmd_min_f(const CommonArgs& a) {
    SearchStats stats;
    auto [value, witness] = min_nonextensible(a.n, a.allow_long, &stats);
    ArtifactWriter w("min-f", a.out);
    ordered_json j;
    j["n"] = a.n;
    j["f"] = value;
    j["witness"] = packing_to_json(witness);
    w.write_json("f.json", j);
    w.finish(flag_record(a, {"n", "allow_long"}), 0, 1);
    std::cout << "min-f n=" << a.n << ": f=" << value << ", nodes=" << stats.nodes << ", "
              << stats.seconds << "s -> " << w.path("f.json").string() << "\n";
    return 0;
}

inline int cmd_min_h(const CommonArgs& a) {
    SearchStats stats;
    auto [value, witness] = min_blocking(a.n, a.allow_long, &stats);
    ArtifactWriter w("min-h", a.out);
    ordered_json j;
    j["n"] = a.n;
    j["h"] = value;
    Torus t(a.n, 2);
    j["witness"] = packing_to_json(t, witness.cubes);
    w.write_json("h.json", j);
    w.finish(flag_record(a, {"n", "allow_long"}), 0, 1);
    std::cout << "min-h n=" << a.n << ": h=" << value << ", nodes=" << stats.nodes << ", "
              << stats.seconds << "s -> " << w.path("h.json").string() << "\n";
    return 0;
}

inline int cmd_holes(const CommonArgs& a) {
    SearchStats stats;
    auto holes = classify_holes(a.n, a.l, &stats);
    Torus t(a.n, 2);
    ArtifactWriter w("holes", a.out);
    ordered_json j;
    j["n"] = a.n;
    j["l"] = a.l;
    auto arr = ordered_json::array();
    for (const auto& h : holes) {
        ordered_json entry;
        entry["cells"] = cells_to_json(t, h.cells);
        entry["witness"] = packing_to_json(t, h.witness_packing);
        arr.push_back(std::move(entry));
    }
    j["types"] = std::move(arr);
    w.write_json("holes.json", j);
    w.finish(flag_record(a, {"n", "l"}), 0, 1);
    std::cout << "holes n=" << a.n << " l=" << a.l << ": " << holes.size()
              << " hole types, nodes=" << stats.nodes << ", " << stats.seconds << "s -> "
              << w.path("holes.json").string() << "\n";
    return 0;
}

inline int cmd_flips(const CommonArgs& a) {
    SearchStats stats;
    auto report = flip_connectivity(a.n, &stats);
    ArtifactWriter w("flips", a.out);
    ordered_json j;
    j["n"] = a.n;
    j["node_count"] = report.node_count;
    j["type_count"] = report.type_count;
    j["connected"] = report.connected;
    j["trivial_eccentricity"] = report.trivial_eccentricity;
    w.write_json("flips.json", j);
    w.finish(flag_record(a, {"n"}), 0, 1);
    std::cout << "flips n=" << a.n << ": " << report.node_count << " nodes, connected="
              << (report.connected ? "yes" : "no") << ", eccentricity=" << report.trivial_eccentricity
              << " -> " << w.path("flips.json").string() << "\n";
    return 0;
}

inline int cmd_simulate(const CommonArgs& a) {
    if (a.trials == 0) throw usage_error("simulate needs --trials >= 1");
    SimulationConfig cfg{TorusParams{a.n, a.N}, a.trials, a.seed, a.workers};
    Torus t(cfg.params);
    ArtifactWriter w("simulate", a.out);

    auto arr = ordered_json::array();
    for (std::uint64_t i = 0; i < cfg.trials; ++i)
        arr.push_back(packing_to_json(simulate_one(t, stream_seed(cfg.seed, i))));
    w.write_json("terminals.json", arr);

    auto stats = density_stats(cfg);
    std::ostringstream csv;
    write_density_csv(csv, stats);
    w.write("density.csv", csv.str());
    w.finish(flag_record(a, {"n", "N", "trials", "seed", "workers"}), a.seed, a.workers);
    std::cout << "simulate n=" << a.n << " N=" << a.N << " trials=" << a.trials
              << ": mean density=" << stats.mean_density << " -> " << w.path("density.csv").string()
              << "\n";
    return 0;
}

inline int cmd_exact_dist(const CommonArgs& a) {
    if (a.N != 2) throw capacity_error("exact terminal distribution supports N = 2 only");
    std::size_t states = 0;
    auto dist = exact_terminal_distribution(TorusParams{a.n, a.N}, a.allow_long, &states);
    ArtifactWriter w("exact-dist", a.out);
    w.write_json("distribution.json", terminal_distribution_to_json(dist));
    w.finish(flag_record(a, {"n", "N", "allow_long"}), 0, 1);
    std::cout << "exact-dist n=" << a.n << ": " << dist.probs.size() << " terminal types over "
              << states << " states -> " << w.path("distribution.json").string() << "\n";
    return 0;
}

inline int cmd_keller(const CommonArgs& a) {
    Graph g;
    std::string source;
    if (!a.import_path.empty()) {
        std::ifstream in(a.import_path);
        if (!in) throw usage_error("cannot open DIMACS file " + a.import_path);
        g = import_dimacs(in);
        source = "dimacs:" + a.import_path;
    } else {
        if (a.n == 0) throw usage_error("keller needs --n or --import");
        if (a.n == 5 && !a.allow_long)
            throw capacity_error(
                "the clique number of the 1024-vertex dimension-5 Keller graph is a gated "
                "long-running search; pass --allow-long to attempt it");
        g = build_keller_graph(a.n);
        source = "keller_" + std::to_string(a.n);
    }
    ArtifactWriter w("keller", a.out);
    if (!a.export_path.empty()) {
        std::ofstream out(a.export_path);
        export_dimacs(g, out);
    }
    auto result = max_clique(g, a.budget, a.workers);
    ordered_json j;
    j["source"] = source;
    j["vertices"] = g.nverts;
    j["edges"] = g.edge_count();
    j["clique_size"] = result.size;
    j["witness"] = result.witness;
    j["complete"] = result.complete;
    j["nodes"] = result.nodes;
    j["budget"] = a.budget;
    w.write_json("clique.json", j);
    w.finish(flag_record(a, {"n", "budget", "workers", "allow_long", "import", "export"}), 0,
             a.workers);
    std::cout << "keller " << source << ": clique " << (result.complete ? "number" : "lower bound")
              << "=" << result.size << ", nodes=" << result.nodes << " -> "
              << w.path("clique.json").string() << "\n";
    return 0;
}

inline int cmd_continuous(const CommonArgs& a) {
    auto e = enumerate_continuous(a.n);
    ArtifactWriter w("continuous", a.out);
    ordered_json j;
    j["n"] = a.n;
    j["tiling_type_count"] = e.tilings.size();
    auto arr = ordered_json::array();
    for (const auto& t : e.tilings) arr.push_back(continuous_packing_to_json(t));
    j["tilings"] = std::move(arr);
    j["min_parameters"] = e.min_params_tiling;
    j["max_parameters"] = e.max_params_tiling;
    j["parameter_upper_bound_2n_minus_1"] = (std::uint64_t{1} << a.n) - 1;
    j["parameter_lower_bound_n_n1_over_2"] = a.n * (a.n + 1) / 2;
    j["state_count"] = e.state_count;
    j["min_nonextensible_size"] = e.min_nonextensible_size;
    auto ne = ordered_json::array();
    for (const auto& p : e.min_nonextensible) ne.push_back(continuous_packing_to_json(p));
    j["min_nonextensible"] = std::move(ne);
    w.write_json("continuous.json", j);
    w.finish(flag_record(a, {"n"}), 0, 1);
    std::cout << "continuous n=" << a.n << ": " << e.tilings.size() << " tiling types, parameters "
              << e.min_params_tiling << ".." << e.max_params_tiling << " -> "
              << w.path("continuous.json").string() << "\n";
    return 0;
}

inline int cmd_of(const CommonArgs& a) {
    auto types = enumerate_one_factorizations(a.m, a.allow_long);
    ArtifactWriter w("of", a.out);
    ordered_json j;
    j["m"] = a.m;
    j["count"] = types.size();
    auto arr = ordered_json::array();
    for (const auto& f : types) arr.push_back(one_factorization_to_json(f));
    j["types"] = std::move(arr);
    w.write_json("factorizations.json", j);
    w.finish(flag_record(a, {"m", "allow_long"}), 0, 1);
    std::cout << "of m=" << a.m << " (K_" << 2 * a.m << "): " << types.size() << " types -> "
              << w.path("factorizations.json").string() << "\n";
    return 0;
}

inline int cmd_export(const CommonArgs& a) {
    if (a.format != "dimacs") throw usage_error("export emits DIMACS; use --format dimacs");
    ArtifactWriter w("export", a.out);
    std::string name = a.graph + "_n" + std::to_string(a.n) + ".dimacs";
    if (a.graph == "keller") {
        if (a.n > 5 && !a.allow_long)
            throw capacity_error(
                "streaming Keller export for n = 6, 7 writes a very large file; pass --allow-long");
        if (a.n <= 5) {
            std::ostringstream os;
            export_dimacs(build_keller_graph(a.n), os);
            w.write(name, os.str());
        } else {
            auto out = w.open_stream(name);
            export_keller_dimacs_stream(a.n, out);
        }
    } else if (a.graph == "compat") {
        std::ostringstream os;
        export_dimacs(build_compatibility_graph(a.n), os);
        w.write(name, os.str());
    } else {
        throw usage_error("--graph must be keller or compat");
    }
    w.finish(flag_record(a, {"n", "graph", "format", "allow_long"}), 0, 1);
    std::cout << "export " << a.graph << " n=" << a.n << " -> " << w.path(name).string() << "\n";
    return 0;
}

inline int run(std::vector<std::string> args) {
    CLI::App app{"cubepack: exact cube packings and tilings of the discrete torus (Z/2NZ)^n"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    CommonArgs a;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", a.out, "output directory for artifacts")->capture_default_str();
        sub->add_flag("--allow-long", a.allow_long, "unlock gated long-running instances");
        sub->add_option("--format", a.format, "artifact format: json|csv|dimacs")
            ->check(CLI::IsMember({"json", "csv", "dimacs"}))
            ->capture_default_str();
    };

    auto* sim = app.add_subcommand("simulate", "sequential random cube packing runs");
    sim->add_option("--n", a.n, "dimension")->required();
    sim->add_option("--N", a.N, "cube side (torus side 2N)")->capture_default_str();
    sim->add_option("--trials", a.trials, "number of independent runs")->required();
    sim->add_option("--seed", a.seed, "RNG seed");
    sim->add_option("--workers,--threads", a.workers, "worker threads")->capture_default_str();
    add_common(sim);

    auto* exd = app.add_subcommand("exact-dist", "exact terminal-type distribution");
    exd->add_option("--n", a.n, "dimension")->required();
    exd->add_option("--N", a.N, "cube side")->capture_default_str();
    add_common(exd);

    auto* enu = app.add_subcommand("enumerate", "all cube tiling types (N = 2)");
    enu->add_option("--n", a.n, "dimension")->required();
    add_common(enu);

    auto* mf = app.add_subcommand("min-f", "minimum non-extensible packing f(n)");
    mf->add_option("--n", a.n, "dimension")->required();
    add_common(mf);

    auto* mh = app.add_subcommand("min-h", "minimum blocking set h(n)");
    mh->add_option("--n", a.n, "dimension")->required();
    add_common(mh);

    auto* ho = app.add_subcommand("holes", "hole types of non-extensible packings with 2^n - l cubes");
    ho->add_option("--n", a.n, "dimension")->required();
    ho->add_option("--l", a.l, "number of missing cubes")->required();
    add_common(ho);

    auto* fl = app.add_subcommand("flips", "flip-graph connectivity over tiling types");
    fl->add_option("--n", a.n, "dimension")->required();
    add_common(fl);

    auto* ke = app.add_subcommand("keller", "Keller graph maximum clique");
    ke->add_option("--n", a.n, "dimension");
    ke->add_option("--budget", a.budget, "node expansion budget");
    ke->add_option("--workers,--threads", a.workers, "worker threads")->capture_default_str();
    ke->add_option("--import", a.import_path, "read a DIMACS graph instead of building G_n");
    ke->add_option("--export", a.export_path, "also write the graph as DIMACS to this path");
    add_common(ke);

    auto* co = app.add_subcommand("continuous", "continuous (N -> infinity) tiling types");
    co->add_option("--n", a.n, "dimension")->required();
    add_common(co);

    auto* of = app.add_subcommand("of", "one-factorizations of K_2m up to isomorphism");
    of->add_option("--m", a.m, "half-order: the complete graph K_2m")->required();
    add_common(of);

    auto* ex = app.add_subcommand("export", "write a graph in DIMACS format");
    ex->add_option("--n", a.n, "dimension")->required();
    ex->add_option("--graph", a.graph, "keller|compat")->capture_default_str();
    add_common(ex);
    a.format = "json";

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (ex->parsed() && ex->count("--format") == 0) a.format = "dimacs";

    try {
        if (sim->parsed()) return cmd_simulate(a);
        if (exd->parsed()) return cmd_exact_dist(a);
        if (enu->parsed()) return cmd_enumerate(a);
        if (mf->parsed()) return cmd_min_f(a);
        if (mh->parsed()) return cmd_min_h(a);
        if (ho->parsed()) return cmd_holes(a);
        if (fl->parsed()) return cmd_flips(a);
        if (ke->parsed()) return cmd_keller(a);
        if (co->parsed()) return cmd_continuous(a);
        if (of->parsed()) return cmd_of(a);
        if (ex->parsed()) return cmd_export(a);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace cubepack::cli
