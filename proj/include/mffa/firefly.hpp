#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "mffa/coloring.hpp"
#include "mffa/graph.hpp"
#include "mffa/kernels.hpp"
#include "mffa/rng.hpp"

namespace mffa {

/// Which population the attracting fireflies are read from during a move.
///   current_population  the population being moved, so later fireflies see
///                       positions already updated in this generation
///   sorted_copy         the snapshot taken when the population was ordered
enum class AttractionSource : std::uint8_t { current_population, sorted_copy };

std::string_view to_string(AttractionSource s) noexcept;
std::optional<AttractionSource> parse_attraction_source(std::string_view name) noexcept;

struct FfaParams {
    std::size_t population_size = 500;
    double lb = 0.0;
    double ub = 1.0;
    double alpha = 0.1;
    double beta0 = 0.1;
    double gamma = 0.8;
    std::size_t max_fes = 300'000;
    AttractionSource attraction_source = AttractionSource::current_population;
    bool local_search = true;
    /// Divide squared distances by n before applying gamma.
    bool normalize_distance = false;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument on NP < 2, lb >= ub, negative alpha/beta0/gamma
    /// or max_fes < NP.
    void validate() const;
};

inline constexpr std::size_t kUnevaluated = std::numeric_limits<std::size_t>::max();

struct Firefly {
    std::vector<double> weights;
    DecodedSolution decoded;
    /// Penalty of `decoded`; lower is brighter.
    std::size_t intensity = kUnevaluated;
};

using Population = std::vector<Firefly>;

struct RunResult {
    bool success = false;
    std::size_t evaluations = 0;
    std::size_t best_penalty = kUnevaluated;
    Coloring best_coloring;  ///< coloring of the best solution found (proper iff success)
    std::size_t generations = 0;
    std::vector<std::size_t> best_trace;  ///< best-so-far penalty after each generation
};

/// Weights drawn uniformly from [lb, ub).
Population initialize(const FfaParams& params, std::size_t n, Rng& rng,
                      const simd::Kernels& kernels = simd::active_kernels());

/**
 * Clamps, decodes and locally improves each firefly in order, adding the
 * evaluations spent to `fe`. Stops early once `fe` reaches max_fes; fireflies
 * not reached keep their previous state. Returns true if any firefly now holds
 * a proper coloring.
 */
bool evaluate(Population& pop, DsaturDecoder& decoder, const FfaParams& params, Rng& rng,
              std::size_t& fe, const simd::Kernels& kernels = simd::active_kernels());

/// Stable-sorts `pop` by intensity (best first) and returns a copy of it.
Population order(Population& pop);

/// Elitism. If the population's best (pop[0], which must be ordered) is worse
/// than `best`, it is overwritten with `best`; otherwise it becomes `best`.
/// Returns true once `best` is a proper coloring.
bool track_best(Population& pop, std::optional<Firefly>& best);

/// Moves every firefly toward each strictly brighter one in the attraction
/// source, updating positions in place one interaction at a time.
void move(Population& pop, const Population& sorted_copy, const FfaParams& params, Rng& rng,
          const simd::Kernels& kernels = simd::active_kernels());

RunResult run(const Graph& g, const FfaParams& params,
              const simd::Kernels& kernels = simd::active_kernels());

}  // namespace mffa
