#pragma once

#include <cstddef>
#include <span>

#include "mffa/coloring.hpp"
#include "mffa/rng.hpp"

namespace mffa {

struct SwapOutcome {
    bool improved = false;
    DecodedSolution solution;
    std::size_t evaluations_used = 0;
};

/**
 * One heuristical swap.
 *
 * Takes the first uncolored vertex u in the permutation. Among the vertices
 * placed before u, picks uniformly one with the largest saturation degree,
 * exchanges the two in the permutation (and their weights, so the weight
 * vector keeps sorting to the permutation) and decodes again. The step costs
 * one evaluation unless u has no predecessor, in which case nothing changes.
 *
 * `weights` is updated in place only when the swap is performed; callers that
 * reject the result must swap back (see improve()).
 * Throws std::invalid_argument if `sol` has no uncolored vertex.
 */
SwapOutcome heuristical_swap_step(DsaturDecoder& decoder, const DecodedSolution& sol,
                                  std::span<double> weights, Rng& rng);
SwapOutcome heuristical_swap_step(const Graph& g, const DecodedSolution& sol,
                                  std::span<double> weights, Rng& rng);

/// Applies swaps while they strictly reduce the penalty. Stops at the first
/// non-improving swap (which is rolled back), at penalty 0, or once `budget`
/// evaluations are spent. `weights` ends consistent with the returned solution.
SwapOutcome improve(DsaturDecoder& decoder, const DecodedSolution& sol, std::span<double> weights,
                    Rng& rng, std::size_t budget);
SwapOutcome improve(const Graph& g, const DecodedSolution& sol, std::span<double> weights, Rng& rng,
                    std::size_t budget);

}  // namespace mffa
