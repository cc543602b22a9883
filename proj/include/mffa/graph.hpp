#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mffa {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown for malformed DIMACS input; carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/**
 * Undirected simple graph on vertices 0..n-1.
 *
 * The edge list is normalized on construction: each edge is stored once as
 * (u, v) with u < v, sorted lexicographically. Adjacency is kept in CSR form
 * with every neighbor list sorted ascending, so iteration order is the same
 * on every platform. Immutable after construction.
 */
class Graph {
public:
    Graph() = default;

    /// Duplicate edges (in either orientation) collapse to one.
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbors of v. Throws std::out_of_range if v >= n.
    std::span<const Vertex> neighbors(Vertex v) const;

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
};

/// Reads a DIMACS .col graph (1-based ids). A declared edge count that
/// disagrees with the number of distinct edges is reported through
/// `warnings` rather than rejected.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Each entry of `comments` becomes one `c ...` line before the header.
void write_dimacs(std::ostream& out, const Graph& g,
                  std::span<const std::string> comments = {});
std::string write_dimacs(const Graph& g, std::span<const std::string> comments = {});

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

}  // namespace mffa
