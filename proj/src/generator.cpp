#include "mffa/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mffa {

std::string_view to_string(Variant v) noexcept {
    switch (v) {
        case Variant::uniform: return "uniform";
        case Variant::equipartite: return "equipartite";
        case Variant::flat: return "flat";
    }
    return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
    if (name == "uniform") return Variant::uniform;
    if (name == "equipartite" || name == "equi-partite") return Variant::equipartite;
    if (name == "flat") return Variant::flat;
    return std::nullopt;
}

void GenSpec::validate() const {
    if (n < 3) throw std::invalid_argument("generator needs n >= 3");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
}

std::vector<std::uint8_t> assign_classes(const GenSpec& spec, Rng& rng) {
    std::vector<std::uint8_t> classes(spec.n);
    if (spec.variant == Variant::uniform) {
        for (auto& c : classes) c = static_cast<std::uint8_t>(rng.below(3));
        return classes;
    }
    std::vector<Vertex> order(spec.n);
    std::iota(order.begin(), order.end(), Vertex{0});
    rng.shuffle(std::span(order));
    for (std::size_t i = 0; i < spec.n; ++i) classes[order[i]] = static_cast<std::uint8_t>(i % 3);
    return classes;
}

namespace {

void independent_edges(const std::vector<std::uint8_t>& classes, double p, Rng& rng,
                       std::vector<Edge>& edges) {
    const auto n = static_cast<Vertex>(classes.size());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (classes[u] != classes[v] && rng.uniform01() < p) edges.emplace_back(u, v);
        }
    }
}

// Near-regular degree sequence: `total` split over `count` vertices so that
// degrees differ by at most one. The vertices receiving the extra edge are
// chosen at random.
std::vector<std::size_t> flat_degrees(std::size_t count, std::size_t total, Rng& rng) {
    std::vector<std::size_t> deg(count, total / count);
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    rng.shuffle(std::span(idx));
    for (std::size_t k = 0; k < total % count; ++k) ++deg[idx[k]];
    return deg;
}

// Realizes near-regular degree sequences between two classes. Vertices of
// `left` are served in non-increasing degree order and each is joined to the
// `right` vertices with the largest residual demand (random tie-break), which
// always succeeds for a realizable bipartite sequence.
void flat_edges_between(const std::vector<Vertex>& left, const std::vector<Vertex>& right, double p,
                        Rng& rng, std::vector<Edge>& edges) {
    if (left.empty() || right.empty()) return;
    const double cross = static_cast<double>(left.size()) * static_cast<double>(right.size());
    const auto target = static_cast<std::size_t>(std::llround(p * cross));
    if (target == 0) return;

    auto left_deg = flat_degrees(left.size(), target, rng);
    auto residual = flat_degrees(right.size(), target, rng);

    std::vector<std::size_t> left_order(left.size());
    std::iota(left_order.begin(), left_order.end(), std::size_t{0});
    rng.shuffle(std::span(left_order));
    std::stable_sort(left_order.begin(), left_order.end(),
                     [&](std::size_t a, std::size_t b) { return left_deg[a] > left_deg[b]; });

    std::vector<std::size_t> candidates(right.size());
    for (auto li : left_order) {
        std::iota(candidates.begin(), candidates.end(), std::size_t{0});
        rng.shuffle(std::span(candidates));
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](std::size_t a, std::size_t b) { return residual[a] > residual[b]; });
        for (std::size_t k = 0; k < left_deg[li]; ++k) {
            auto ri = candidates[k];
            if (residual[ri] == 0) throw std::logic_error("flat degree sequence not realizable");
            --residual[ri];
            edges.emplace_back(left[li], right[ri]);
        }
    }
}

}  // namespace

PlantedGraph generate_planted(const GenSpec& spec) {
    spec.validate();
    Rng rng(combine_seed(spec.q, static_cast<std::uint64_t>(spec.variant)));
    auto classes = assign_classes(spec, rng);

    std::vector<Edge> edges;
    if (spec.variant == Variant::flat) {
        std::array<std::vector<Vertex>, 3> members;
        for (Vertex v = 0; v < spec.n; ++v) members[classes[v]].push_back(v);
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) flat_edges_between(members[a], members[b], spec.p, rng, edges);
        }
    } else {
        independent_edges(classes, spec.p, rng, edges);
    }
    return {Graph(spec.n, std::move(edges)), std::move(classes)};
}

Graph generate(const GenSpec& spec) { return generate_planted(spec).graph; }

}  // namespace mffa
