#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mffa/firefly.hpp"
#include "mffa/generator.hpp"

namespace mffa {

/// A sweep over graph variant x edge probability x generator seed, with a
/// number of independent solver runs per generated graph.
struct ExperimentSpec {
    std::vector<Variant> variants;
    std::size_t n = 0;
    std::vector<double> p_values;
    std::vector<std::uint64_t> q_seeds;
    std::size_t runs_per_graph = 25;
    FfaParams params;  ///< params.seed is the base of every derived run seed
    std::string output;

    /// Throws std::invalid_argument on an empty or out-of-range sweep.
    void validate() const;
    std::size_t graph_count() const noexcept {
        return variants.size() * p_values.size() * q_seeds.size();
    }
    std::size_t run_count() const noexcept { return graph_count() * runs_per_graph; }
};

/**
 * Reads a plain-text spec:
 *
 *   variants = uniform, equipartite, flat
 *   n = 100
 *   p_values = 0.03, 0.05, 0.07
 *   q_seeds = 1..10          # or an explicit list
 *   runs_per_graph = 10
 *   out = results.csv        # optional
 *
 * Any solver parameter key (np, max_fes, alpha, ...) is accepted as well.
 * Throws ConfigError on unknown keys or malformed values.
 */
ExperimentSpec parse_experiment_spec(std::istream& in);
ExperimentSpec load_experiment_spec(const std::string& path);

struct RunRecord {
    Variant variant = Variant::uniform;
    double p = 0.0;
    std::uint64_t q = 0;
    std::size_t repetition = 0;
    std::uint64_t seed = 0;
    RunResult result;
};

struct ResultRow {
    Variant variant = Variant::uniform;
    double p = 0.0;
    std::size_t runs = 0;
    std::size_t successes = 0;
    double sr = 0.0;
    std::optional<double> aes;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct ResultTable {
    std::vector<ResultRow> rows;  ///< sorted by (variant name, p)
    std::vector<RunRecord> runs;  ///< in sweep order (variants, p_values, q_seeds, repetition)
};

/// Fraction of successful runs. Throws std::invalid_argument on empty input.
double success_rate(std::span<const RunResult> runs);

/// Mean evaluations over successful runs; nullopt when there are none.
/// Throws std::invalid_argument on empty input.
std::optional<double> aes(std::span<const RunResult> runs);

/// Seed of one solver run. Depends only on its own coordinates, so extending
/// a sweep never changes the seeds of runs already in it.
std::uint64_t derive_run_seed(std::uint64_t base, Variant variant, double p, std::uint64_t q,
                              std::size_t repetition);

struct ExperimentOptions {
    std::size_t jobs = 1;
    /// Keep best-so-far traces and colorings in the returned records.
    bool keep_details = false;
    /// Defaults to simd::active_kernels().
    const simd::Kernels* kernels = nullptr;
    /// Called after each run, serialized under a lock, in completion order.
    std::function<void(const RunRecord&)> on_run;
};

/// Runs the whole sweep. Every reported success is re-checked against its
/// graph (std::logic_error if the coloring is not proper). The table does not
/// depend on `jobs` or on completion order.
ResultTable run_experiment(const ExperimentSpec& spec, const ExperimentOptions& options = {});

/// Pools runs per (variant, p).
std::vector<ResultRow> aggregate(std::span<const RunRecord> runs);

/// Header `variant,p,runs,successes,sr,aes`; empty aes field when absent.
void emit_csv(std::ostream& out, std::span<const ResultRow> rows);
void write_csv(const std::string& path, std::span<const ResultRow> rows);
std::vector<ResultRow> parse_csv(std::istream& in);

/// One line per run: variant,p,q,repetition,seed,success,evaluations,best_penalty,generations.
void emit_runs_csv(std::ostream& out, std::span<const RunRecord> runs);

}  // namespace mffa
