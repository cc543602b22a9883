#include "mffa/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mffa {

Permutation weights_to_permutation(std::span<const double> weights, std::size_t n) {
    if (weights.size() != n) {
        throw std::invalid_argument("weight vector has " + std::to_string(weights.size()) +
                                    " entries, graph has " + std::to_string(n) + " vertices");
    }
    Permutation out;
    weights_to_permutation(weights, out);
    return out;
}

void weights_to_permutation(std::span<const double> weights, Permutation& out) {
    out.resize(weights.size());
    std::iota(out.begin(), out.end(), Vertex{0});
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
        if (weights[a] != weights[b]) return weights[a] > weights[b];
        return a < b;
    });
}

DsaturDecoder::DsaturDecoder(const Graph& g)
    : graph_(&g),
      words_((g.vertex_count() + 63) / 64),
      position_(g.vertex_count()),
      mask_(g.vertex_count()),
      done_(g.vertex_count()),
      buckets_(4 * words_) {}

void DsaturDecoder::bucket_insert(int level, std::size_t pos) noexcept {
    buckets_[static_cast<std::size_t>(level) * words_ + pos / 64] |= std::uint64_t{1} << (pos % 64);
}

void DsaturDecoder::bucket_erase(int level, std::size_t pos) noexcept {
    buckets_[static_cast<std::size_t>(level) * words_ + pos / 64] &= ~(std::uint64_t{1} << (pos % 64));
}

void DsaturDecoder::decode(std::span<const Vertex> order, DecodedSolution& out) {
    const auto& g = *graph_;
    const std::size_t n = g.vertex_count();
    if (order.size() != n) throw std::invalid_argument("permutation length does not match graph");
    ++decodes_;

    std::fill(done_.begin(), done_.end(), std::uint8_t{0});
    for (std::size_t pos = 0; pos < n; ++pos) {
        const Vertex v = order[pos];
        if (v >= n || done_[v]) throw std::invalid_argument("order is not a permutation");
        done_[v] = 1;
        position_[v] = pos;
    }
    std::fill(done_.begin(), done_.end(), std::uint8_t{0});
    std::fill(mask_.begin(), mask_.end(), std::uint8_t{0});
    std::fill(buckets_.begin(), buckets_.end(), std::uint64_t{0});
    for (std::size_t pos = 0; pos < n; ++pos) bucket_insert(0, pos);

    out.permutation.assign(order.begin(), order.end());
    out.coloring.assign(n, kUncolored);
    out.saturation.assign(n, 0);
    out.selection_order.clear();
    out.selection_order.reserve(n);
    out.penalty = 0;

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pos = n;
        for (int level = 3; level >= 0 && pos == n; --level) {
            const std::uint64_t* bits = buckets_.data() + static_cast<std::size_t>(level) * words_;
            for (std::size_t w = 0; w < words_; ++w) {
                if (bits[w]) {
                    pos = w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w]));
                    bucket_erase(level, pos);
                    break;
                }
            }
        }
        const Vertex v = order[pos];
        done_[v] = 1;
        out.selection_order.push_back(v);

        const std::uint8_t used = mask_[v];
        if (used == 0b111) {
            ++out.penalty;
            continue;
        }
        const auto c = static_cast<Color>(std::countr_one(used) + 1);
        out.coloring[v] = c;
        const std::uint8_t bit = static_cast<std::uint8_t>(1u << (c - 1));
        for (Vertex u : g.neighbors(v)) {
            if (mask_[u] & bit) continue;
            if (done_[u]) {
                mask_[u] |= bit;  // keep final saturation exact for processed vertices
                continue;
            }
            const int level = std::popcount(mask_[u]);
            bucket_erase(level, position_[u]);
            mask_[u] |= bit;
            bucket_insert(level + 1, position_[u]);
        }
    }
    for (std::size_t v = 0; v < n; ++v) out.saturation[v] = static_cast<std::uint8_t>(std::popcount(mask_[v]));
}

DecodedSolution DsaturDecoder::decode(std::span<const Vertex> order) {
    DecodedSolution out;
    decode(order, out);
    return out;
}

DecodedSolution dsatur_decode(const Graph& g, std::span<const Vertex> order) {
    DsaturDecoder decoder(g);
    return decoder.decode(order);
}

std::size_t penalty(const Graph& g, std::span<const Color> coloring) {
    if (coloring.size() != g.vertex_count()) throw std::invalid_argument("coloring length does not match graph");
    std::size_t violated = 0;
    for (Vertex v = 0; v < coloring.size(); ++v) {
        if (coloring[v] == kUncolored) {
            ++violated;
            continue;
        }
        for (Vertex u : g.neighbors(v)) {
            if (coloring[u] == coloring[v]) {
                ++violated;
                break;
            }
        }
    }
    return violated;
}

bool is_proper(const Graph& g, std::span<const Color> coloring) {
    if (coloring.size() != g.vertex_count()) return false;
    for (Color c : coloring) {
        if (c == kUncolored || c > kColorCount) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        if (coloring[u] == coloring[v]) return false;
    }
    return true;
}

std::string format_coloring(std::span<const Color> coloring) {
    std::string out;
    out.reserve(coloring.size() * 2);
    for (std::size_t i = 0; i < coloring.size(); ++i) {
        if (i) out.push_back(' ');
        out.push_back(static_cast<char>('0' + coloring[i]));
    }
    return out;
}

Coloring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    Coloring out;
    int c = 0;
    while (in >> c) {
        if (c < 0 || c > kColorCount) throw std::invalid_argument("color out of range: " + std::to_string(c));
        out.push_back(static_cast<Color>(c));
    }
    if (!in.eof()) throw std::invalid_argument("malformed coloring");
    return out;
}

}  // namespace mffa
