// mffa: memetic firefly 3-coloring solver.
//
//   mffa solve <graph.col> [solver flags]
//   mffa generate --variant flat --n 500 --p 0.016 --q 3 --out g.col
//   mffa bench --spec sweep.spec --out results.csv [--jobs 4]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mffa/coloring.hpp"
#include "mffa/config.hpp"
#include "mffa/firefly.hpp"
#include "mffa/generator.hpp"
#include "mffa/harness.hpp"
#include "mffa/kernels.hpp"

namespace {

struct SolverFlags {
    std::string config;
    std::optional<std::size_t> np;
    std::optional<std::size_t> max_fes;
    std::optional<double> alpha, beta0, gamma, lb, ub;
    std::optional<std::string> attraction;
    std::optional<std::uint64_t> seed;
    bool no_local_search = false;
    bool normalize_distance = false;

    void attach(CLI::App& cmd) {
        cmd.add_option("--config", config, "key = value parameter file");
        cmd.add_option("--np", np, "population size");
        cmd.add_option("--max-fes", max_fes, "evaluation budget");
        cmd.add_option("--alpha", alpha, "randomization weight");
        cmd.add_option("--beta0", beta0, "attractiveness at distance zero");
        cmd.add_option("--gamma", gamma, "light absorption coefficient");
        cmd.add_option("--lb", lb, "lower weight bound");
        cmd.add_option("--ub", ub, "upper weight bound");
        cmd.add_option("--attraction", attraction, "attraction source: current | sorted");
        cmd.add_option("--seed", seed, "run seed");
        cmd.add_flag("--no-local-search", no_local_search, "disable the heuristical swap");
        cmd.add_flag("--normalize-distance", normalize_distance, "divide squared distances by n");
    }

    mffa::FfaParams resolve(mffa::FfaParams p) const {
        if (!config.empty()) p = mffa::load_params(config, p);
        if (np) p.population_size = *np;
        if (max_fes) p.max_fes = *max_fes;
        if (alpha) p.alpha = *alpha;
        if (beta0) p.beta0 = *beta0;
        if (gamma) p.gamma = *gamma;
        if (lb) p.lb = *lb;
        if (ub) p.ub = *ub;
        if (seed) p.seed = *seed;
        if (attraction) {
            auto src = mffa::parse_attraction_source(*attraction);
            if (!src) throw mffa::ConfigError("--attraction must be 'current' or 'sorted'");
            p.attraction_source = *src;
        }
        if (no_local_search) p.local_search = false;
        if (normalize_distance) p.normalize_distance = true;
        return p;
    }
};

const mffa::simd::Kernels& pick_kernels(const std::string& name) {
    if (name == "auto") return mffa::simd::active_kernels();
    auto isa = mffa::simd::parse_isa(name);
    if (!isa) throw mffa::ConfigError("--kernel must be auto, scalar, avx2 or neon");
    return mffa::simd::kernels_for(*isa);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Memetic firefly algorithm for graph 3-coloring"};
    app.require_subcommand(1);

    std::string kernel = "auto";
    app.add_option("--kernel", kernel, "arithmetic kernels: auto | scalar | avx2 | neon")->capture_default_str();

    // solve
    auto* solve = app.add_subcommand("solve", "run the solver once on a DIMACS graph");
    std::string graph_path;
    bool show_config = false;
    SolverFlags solver_flags;
    solve->add_option("graph", graph_path, "DIMACS .col file");
    solve->add_flag("--show-config", show_config, "print the effective parameters and exit");
    solver_flags.attach(*solve);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a random 3-colorable graph as DIMACS");
    std::string variant_name;
    mffa::GenSpec gen_spec;
    std::string gen_out;
    gen->add_option("--variant", variant_name, "uniform | equipartite | flat")->required();
    gen->add_option("--n", gen_spec.n, "vertex count")->required();
    gen->add_option("--p", gen_spec.p, "edge probability")->required();
    gen->add_option("--q", gen_spec.q, "generator seed")->required();
    gen->add_option("--out", gen_out, "output file (stdout if omitted)");

    // bench
    auto* bench = app.add_subcommand("bench", "run an experiment sweep and write SR/AES per (variant, p)");
    std::string spec_path, bench_out, runs_out;
    std::size_t jobs = 1;
    bool quiet = false;
    bench->add_option("--spec", spec_path, "experiment spec file")->required();
    bench->add_option("--out", bench_out, "CSV output (defaults to the spec's 'out')");
    bench->add_option("--runs-out", runs_out, "optional per-run CSV");
    bench->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    bench->add_flag("--quiet", quiet, "no progress on stderr");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto& kernels = pick_kernels(kernel);

        if (*solve) {
            const auto params = solver_flags.resolve({});
            if (show_config) {
                std::cout << mffa::format_params(params) << "# kernel = " << mffa::simd::to_string(kernels.isa)
                          << '\n';
                return 0;
            }
            if (graph_path.empty()) throw mffa::ConfigError("solve needs a graph file");
            std::vector<std::string> warnings;
            const auto g = mffa::read_dimacs_file(graph_path, &warnings);
            for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
            params.validate();
            const auto result = mffa::run(g, params, kernels);
            std::cout << "success " << (result.success ? 1 : 0) << '\n'
                      << "evaluations " << result.evaluations << '\n'
                      << "best_penalty " << result.best_penalty << '\n'
                      << "generations " << result.generations << '\n'
                      << "coloring " << mffa::format_coloring(result.best_coloring) << '\n';
            return 0;
        }

        if (*gen) {
            auto variant = mffa::parse_variant(variant_name);
            if (!variant) throw mffa::ConfigError("unknown variant '" + variant_name + "'");
            gen_spec.variant = *variant;
            const auto g = mffa::generate(gen_spec);
            const std::string comment = "generator variant=" + std::string(mffa::to_string(gen_spec.variant)) +
                                        " n=" + std::to_string(gen_spec.n) + " p=" +
                                        mffa::format_double(gen_spec.p) + " q=" + std::to_string(gen_spec.q);
            const std::vector<std::string> comments{comment};
            if (gen_out.empty()) {
                mffa::write_dimacs(std::cout, g, comments);
            } else {
                std::ofstream out(gen_out, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + gen_out);
                mffa::write_dimacs(out, g, comments);
            }
            return 0;
        }

        if (*bench) {
            const auto spec = mffa::load_experiment_spec(spec_path);
            const std::string out_path = bench_out.empty() ? spec.output : bench_out;
            if (out_path.empty()) throw mffa::ConfigError("no output path: pass --out or set 'out' in the spec");

            mffa::ExperimentOptions options;
            options.jobs = jobs;
            options.kernels = &kernels;
            std::size_t done = 0;
            const std::size_t total = spec.run_count();
            if (!quiet) {
                options.on_run = [&](const mffa::RunRecord& rec) {
                    ++done;
                    std::cerr << '[' << done << '/' << total << "] " << mffa::to_string(rec.variant)
                              << " p=" << mffa::format_double(rec.p) << " q=" << rec.q << " rep=" << rec.repetition
                              << (rec.result.success ? " ok " : " fail ") << rec.result.evaluations << '\n';
                };
            }
            const auto table = mffa::run_experiment(spec, options);
            mffa::write_csv(out_path, table.rows);
            if (!runs_out.empty()) {
                std::ofstream out(runs_out, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + runs_out);
                mffa::emit_runs_csv(out, table.runs);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
