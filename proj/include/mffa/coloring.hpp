#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mffa/graph.hpp"

namespace mffa {

/// Colors are 1, 2, 3; zero marks an uncolored vertex.
using Color = std::uint8_t;
inline constexpr Color kUncolored = 0;
inline constexpr Color kColorCount = 3;

using Coloring = std::vector<Color>;
using Permutation = std::vector<Vertex>;

struct DecodedSolution {
    Permutation permutation;            ///< input order; earlier = higher priority
    Coloring coloring;
    std::size_t penalty = 0;            ///< number of uncolored vertices
    std::vector<std::uint8_t> saturation;  ///< per vertex, at the end of the decode
    std::vector<Vertex> selection_order;   ///< order in which DSatur processed vertices
};

/// Higher weight first; equal weights keep ascending vertex id.
/// Throws std::invalid_argument if weights.size() != n.
Permutation weights_to_permutation(std::span<const double> weights, std::size_t n);
void weights_to_permutation(std::span<const double> weights, Permutation& out);

/**
 * DSatur restricted to three colors.
 *
 * Repeatedly takes the unprocessed vertex of maximum saturation degree
 * (distinct colors among its colored neighbors), ties going to the vertex that
 * comes first in the permutation. The vertex receives the smallest color not
 * present in its neighborhood, or stays uncolored when all three are present.
 * Uncolored vertices never raise a neighbor's saturation, so the result never
 * contains a monochromatic edge and its penalty is the uncolored count.
 *
 * Scratch buffers are kept between calls; one decoder per thread.
 */
class DsaturDecoder {
public:
    explicit DsaturDecoder(const Graph& g);

    /// Throws std::invalid_argument if `order` is not a permutation of 0..n-1.
    void decode(std::span<const Vertex> order, DecodedSolution& out);
    DecodedSolution decode(std::span<const Vertex> order);

    const Graph& graph() const noexcept { return *graph_; }
    /// Decodes performed by this instance.
    std::size_t decode_count() const noexcept { return decodes_; }

private:
    void bucket_insert(int level, std::size_t pos) noexcept;
    void bucket_erase(int level, std::size_t pos) noexcept;

    const Graph* graph_;
    std::size_t decodes_ = 0;
    std::size_t words_;
    std::vector<std::size_t> position_;
    std::vector<std::uint8_t> mask_;
    std::vector<std::uint8_t> done_;
    std::vector<std::uint64_t> buckets_;  // 4 bitsets over permutation positions, by saturation
};

DecodedSolution dsatur_decode(const Graph& g, std::span<const Vertex> order);

/// Number of vertices that are uncolored or share a color with a colored neighbor.
std::size_t penalty(const Graph& g, std::span<const Color> coloring);

/// True iff every vertex is colored and every edge is bichromatic.
bool is_proper(const Graph& g, std::span<const Color> coloring);

/// Whitespace separated color ids, 0 for uncolored.
std::string format_coloring(std::span<const Color> coloring);
Coloring parse_coloring(const std::string& text);

}  // namespace mffa
