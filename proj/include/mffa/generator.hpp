#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mffa/graph.hpp"
#include "mffa/rng.hpp"

namespace mffa {

/// Random 3-colorable graph families.
///   uniform      every vertex picks its hidden class independently
///   equipartite  hidden classes differ in size by at most one
///   flat         equipartite classes, and each vertex has (nearly) the same
///                number of edges into each foreign class
enum class Variant : std::uint8_t { uniform, equipartite, flat };

std::string_view to_string(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

struct GenSpec {
    Variant variant = Variant::equipartite;
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t q = 1;

    /// Throws std::invalid_argument unless n >= 3 and 0 <= p <= 1.
    void validate() const;
};

struct PlantedGraph {
    Graph graph;
    std::vector<std::uint8_t> classes;  ///< hidden class 0, 1 or 2 per vertex
};

std::vector<std::uint8_t> assign_classes(const GenSpec& spec, Rng& rng);

/// Deterministic in (variant, n, p, q).
PlantedGraph generate_planted(const GenSpec& spec);
Graph generate(const GenSpec& spec);

}  // namespace mffa
