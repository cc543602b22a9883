#include "mffa/local_search.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace mffa {

namespace {

// Positions (in the permutation) of the swap partners: the first uncolored
// vertex and the chosen predecessor. Returns false if there is no predecessor.
bool pick_swap(const DecodedSolution& sol, Rng& rng, std::size_t& first, std::size_t& partner) {
    const auto& perm = sol.permutation;
    first = perm.size();
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
        if (sol.coloring[perm[pos]] == kUncolored) {
            first = pos;
            break;
        }
    }
    if (first == perm.size()) throw std::invalid_argument("heuristical swap needs an uncolored vertex");
    if (first == 0) return false;

    int best = -1;
    std::vector<std::size_t> ties;
    for (std::size_t pos = 0; pos < first; ++pos) {
        const int rho = sol.saturation[perm[pos]];
        if (rho > best) {
            best = rho;
            ties.clear();
        }
        if (rho == best) ties.push_back(pos);
    }
    partner = ties.size() == 1 ? ties[0] : ties[rng.below(ties.size())];
    return true;
}

}  // namespace

SwapOutcome heuristical_swap_step(DsaturDecoder& decoder, const DecodedSolution& sol,
                                  std::span<double> weights, Rng& rng) {
    std::size_t first = 0;
    std::size_t partner = 0;
    if (!pick_swap(sol, rng, first, partner)) return {false, sol, 0};

    Permutation perm = sol.permutation;
    const Vertex u = perm[first];
    const Vertex v = perm[partner];
    std::swap(perm[first], perm[partner]);
    std::swap(weights[u], weights[v]);

    SwapOutcome out;
    decoder.decode(perm, out.solution);
    out.evaluations_used = 1;
    out.improved = out.solution.penalty < sol.penalty;
    return out;
}

SwapOutcome heuristical_swap_step(const Graph& g, const DecodedSolution& sol, std::span<double> weights,
                                  Rng& rng) {
    DsaturDecoder decoder(g);
    return heuristical_swap_step(decoder, sol, weights, rng);
}

SwapOutcome improve(DsaturDecoder& decoder, const DecodedSolution& sol, std::span<double> weights,
                    Rng& rng, std::size_t budget) {
    SwapOutcome result{false, sol, 0};
    while (result.solution.penalty > 0 && result.evaluations_used < budget) {
        std::size_t first = 0;
        std::size_t partner = 0;
        if (!pick_swap(result.solution, rng, first, partner)) break;

        Permutation perm = result.solution.permutation;
        const Vertex u = perm[first];
        const Vertex v = perm[partner];
        std::swap(perm[first], perm[partner]);

        DecodedSolution candidate;
        decoder.decode(perm, candidate);
        ++result.evaluations_used;
        if (candidate.penalty >= result.solution.penalty) break;

        std::swap(weights[u], weights[v]);
        result.solution = std::move(candidate);
        result.improved = true;
    }
    return result;
}

SwapOutcome improve(const Graph& g, const DecodedSolution& sol, std::span<double> weights, Rng& rng,
                    std::size_t budget) {
    DsaturDecoder decoder(g);
    return improve(decoder, sol, weights, rng, budget);
}

}  // namespace mffa
