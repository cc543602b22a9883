#include "mffa/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mffa {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u >= n_ || v >= n_) {
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} out of range for n=" + std::to_string(n_));
        }
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::size_t> degree(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++degree[u];
        ++degree[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    targets_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        targets_[fill[u]++] = v;
        targets_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n_));
    }
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::uint64_t declared_m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;

        if (tok[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate 'p' line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
                throw ParseError(line_no, "expected 'p edge <n> <m>'");
            }
            n = parse_count(tok[2], line_no, "vertex count");
            declared_m = parse_count(tok[3], line_no, "edge count");
            have_header = true;
            edges.reserve(declared_m);
        } else if (tok[0] == "e") {
            if (!have_header) throw ParseError(line_no, "'e' line before 'p' line");
            if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            auto u = parse_count(tok[1], line_no, "vertex id");
            auto v = parse_count(tok[2], line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
            }
            if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing 'p edge <n> <m>' line");

    Graph g(n, std::move(edges));
    if (warnings && g.edge_count() != declared_m) {
        warnings->push_back("header declares " + std::to_string(declared_m) + " edges, found " +
                            std::to_string(g.edge_count()) + " distinct");
    }
    return g;
}

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in, warnings);
}

void write_dimacs(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string write_dimacs(const Graph& g, std::span<const std::string> comments) {
    std::ostringstream out;
    write_dimacs(out, g, comments);
    return out.str();
}

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in, warnings);
}

}  // namespace mffa
