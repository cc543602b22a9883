#include "mffa/firefly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mffa/local_search.hpp"

namespace mffa {

std::string_view to_string(AttractionSource s) noexcept {
    switch (s) {
        case AttractionSource::current_population: return "current";
        case AttractionSource::sorted_copy: return "sorted";
    }
    return "unknown";
}

std::optional<AttractionSource> parse_attraction_source(std::string_view name) noexcept {
    if (name == "current" || name == "current-population") return AttractionSource::current_population;
    if (name == "sorted" || name == "sorted-copy") return AttractionSource::sorted_copy;
    return std::nullopt;
}

void FfaParams::validate() const {
    if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
    if (!(lb < ub)) throw std::invalid_argument("lower bound must be below upper bound");
    if (!(alpha >= 0.0) || !(beta0 >= 0.0) || !(gamma >= 0.0)) {
        throw std::invalid_argument("alpha, beta0 and gamma must be non-negative");
    }
    if (max_fes < population_size) throw std::invalid_argument("max_fes must be at least the population size");
}

Population initialize(const FfaParams& params, std::size_t n, Rng& rng, const simd::Kernels& kernels) {
    Population pop(params.population_size);
    std::vector<double> draws(n);
    for (auto& fly : pop) {
        for (auto& u : draws) u = rng.uniform01();
        fly.weights.resize(n);
        kernels.affine(fly.weights.data(), draws.data(), params.ub - params.lb, params.lb, n);
    }
    return pop;
}

bool evaluate(Population& pop, DsaturDecoder& decoder, const FfaParams& params, Rng& rng,
              std::size_t& fe, const simd::Kernels& kernels) {
    Permutation perm;
    bool found = false;
    for (auto& fly : pop) {
        if (fe >= params.max_fes) break;
        kernels.clamp(fly.weights.data(), params.lb, params.ub, fly.weights.size());
        weights_to_permutation(fly.weights, perm);
        decoder.decode(perm, fly.decoded);
        ++fe;
        if (params.local_search && fly.decoded.penalty > 0 && fe < params.max_fes) {
            auto outcome = improve(decoder, fly.decoded, fly.weights, rng, params.max_fes - fe);
            fe += outcome.evaluations_used;
            if (outcome.improved) fly.decoded = std::move(outcome.solution);
        }
        fly.intensity = fly.decoded.penalty;
        found = found || fly.intensity == 0;
    }
    return found;
}

namespace {

void sort_by_intensity(Population& pop) {
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Firefly& a, const Firefly& b) { return a.intensity < b.intensity; });
}

}  // namespace

Population order(Population& pop) {
    sort_by_intensity(pop);
    return pop;
}

bool track_best(Population& pop, std::optional<Firefly>& best) {
    if (pop.empty()) throw std::invalid_argument("empty population");
    if (best && pop.front().intensity > best->intensity) {
        pop.front() = *best;
    } else {
        best = pop.front();
    }
    return best->intensity == 0;
}

void move(Population& pop, const Population& sorted_copy, const FfaParams& params, Rng& rng,
          const simd::Kernels& kernels) {
    const Population& source =
        params.attraction_source == AttractionSource::current_population ? pop : sorted_copy;
    if (pop.empty()) return;
    const std::size_t n = pop.front().weights.size();
    const double distance_scale = params.normalize_distance && n > 0 ? 1.0 / static_cast<double>(n) : 1.0;
    std::vector<double> noise(n);

    for (std::size_t i = 0; i < pop.size(); ++i) {
        auto& w = pop[i].weights;
        for (std::size_t j = 0; j < source.size(); ++j) {
            if (!(source[j].intensity < pop[i].intensity)) continue;
            const auto& target = source[j].weights;
            const double r2 = kernels.squared_distance(w.data(), target.data(), n) * distance_scale;
            const double beta = params.beta0 * std::exp(-params.gamma * r2);
            for (auto& u : noise) u = rng.uniform01();
            kernels.attract(w.data(), target.data(), noise.data(), beta, params.alpha, n);
        }
    }
}

RunResult run(const Graph& g, const FfaParams& params, const simd::Kernels& kernels) {
    params.validate();
    Rng rng(params.seed);
    DsaturDecoder decoder(g);
    RunResult result;

    Population pop = initialize(params, g.vertex_count(), rng, kernels);
    std::optional<Firefly> best;
    std::size_t fe = 0;
    bool found = false;
    while (!found && fe < params.max_fes) {
        evaluate(pop, decoder, params, rng, fe, kernels);
        // The snapshot is only read under the sorted-copy policy.
        Population sorted;
        if (params.attraction_source == AttractionSource::sorted_copy) {
            sorted = order(pop);
        } else {
            sort_by_intensity(pop);
        }
        found = track_best(pop, best);
        result.best_trace.push_back(best->intensity);
        ++result.generations;
        if (found || fe >= params.max_fes) break;
        move(pop, sorted, params, rng, kernels);
    }

    result.success = found;
    result.evaluations = fe;
    result.best_penalty = best->intensity;
    result.best_coloring = best->decoded.coloring;
    return result;
}

}  // namespace mffa
