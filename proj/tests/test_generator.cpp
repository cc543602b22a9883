#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "mffa/coloring.hpp"
#include "mffa/generator.hpp"

using namespace mffa;

namespace {

std::array<std::size_t, 3> class_sizes(const std::vector<std::uint8_t>& classes) {
    std::array<std::size_t, 3> sizes{};
    for (auto c : classes) ++sizes.at(c);
    return sizes;
}

std::size_t cross_pairs(const std::vector<std::uint8_t>& classes) {
    auto s = class_sizes(classes);
    return s[0] * s[1] + s[0] * s[2] + s[1] * s[2];
}

Coloring hidden_coloring(const PlantedGraph& pg) {
    Coloring c(pg.classes.size());
    for (std::size_t v = 0; v < c.size(); ++v) c[v] = static_cast<Color>(pg.classes[v] + 1);
    return c;
}

}  // namespace

TEST_CASE("variant names") {
    for (auto v : {Variant::uniform, Variant::equipartite, Variant::flat}) CHECK(parse_variant(to_string(v)) == v);
    CHECK(parse_variant("equi-partite") == Variant::equipartite);
    CHECK_FALSE(parse_variant("cheat").has_value());
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(generate({Variant::uniform, 2, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Variant::uniform, 10, 1.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Variant::uniform, 10, -0.1, 1}), std::invalid_argument);
}

TEST_CASE("equipartite class sizes") {
    Rng rng(1);
    auto s9 = class_sizes(assign_classes({Variant::equipartite, 9, 0.5, 1}, rng));
    CHECK(s9 == std::array<std::size_t, 3>{3, 3, 3});

    for (std::uint64_t q = 1; q <= 5; ++q) {
        Rng r(q);
        auto s = class_sizes(assign_classes({Variant::equipartite, 10, 0.5, q}, r));
        std::sort(s.begin(), s.end());
        CHECK(s == std::array<std::size_t, 3>{3, 3, 4});
    }
}

TEST_CASE("uniform class sizes concentrate around n/3") {
    const double n = 3000;
    const double sigma = std::sqrt(n * (1.0 / 3.0) * (2.0 / 3.0));
    for (std::uint64_t q = 1; q <= 20; ++q) {
        Rng rng(q);
        auto s = class_sizes(assign_classes({Variant::uniform, 3000, 0.5, q}, rng));
        for (auto size : s) CHECK(std::abs(static_cast<double>(size) - 1000.0) <= 5 * sigma);
    }
}

TEST_CASE("p = 0 gives no edges, p = 1 gives complete tripartite") {
    for (auto v : {Variant::uniform, Variant::equipartite, Variant::flat}) {
        CHECK(generate({v, 50, 0.0, 3}).edge_count() == 0);
    }
    CHECK(generate({Variant::equipartite, 9, 1.0, 1}).edge_count() == 27);
    CHECK(generate({Variant::flat, 9, 1.0, 1}).edge_count() == 27);
    auto pg = generate_planted({Variant::uniform, 30, 1.0, 2});
    CHECK(pg.graph.edge_count() == cross_pairs(pg.classes));
}

TEST_CASE("equipartite edge count matches binomial mean") {
    // 167/167/166 classes: 83333 cross pairs.
    const double pairs = 83333.0;
    const double p = 0.016;
    double total = 0;
    for (std::uint64_t q = 1; q <= 10; ++q) {
        auto pg = generate_planted({Variant::equipartite, 500, p, q});
        REQUIRE(cross_pairs(pg.classes) == 83333);
        total += static_cast<double>(pg.graph.edge_count());
    }
    const double mean = total / 10.0;
    const double sd_of_mean = std::sqrt(pairs * p * (1 - p) / 10.0);
    CHECK(std::abs(mean - pairs * p) <= 3 * sd_of_mean);
}

TEST_CASE("uniform empirical edge probability over cross pairs") {
    const double p = 0.05;
    double edges = 0, pairs = 0;
    for (std::uint64_t q = 1; q <= 10; ++q) {
        auto pg = generate_planted({Variant::uniform, 300, p, q});
        edges += static_cast<double>(pg.graph.edge_count());
        pairs += static_cast<double>(cross_pairs(pg.classes));
    }
    CHECK(std::abs(edges / pairs - p) <= 4 * std::sqrt(p * (1 - p) / pairs));
}

TEST_CASE("hidden classes are a proper coloring and generation is deterministic") {
    for (auto v : {Variant::uniform, Variant::equipartite, Variant::flat}) {
        for (double p : {0.01, 0.1, 0.5}) {
            for (std::uint64_t q = 1; q <= 3; ++q) {
                GenSpec spec{v, 120, p, q};
                auto a = generate_planted(spec);
                auto b = generate_planted(spec);
                CHECK(is_proper(a.graph, hidden_coloring(a)));
                CHECK(a.graph == b.graph);
                CHECK(a.classes == b.classes);
            }
        }
    }
    CHECK_FALSE(generate({Variant::uniform, 100, 0.1, 1}) == generate({Variant::uniform, 100, 0.1, 2}));
}

TEST_CASE("flat graphs: per-class degrees within one of the class mean") {
    for (std::size_t n : {30, 100, 301}) {
        for (double p : {0.016, 0.07, 0.3}) {
            for (std::uint64_t q = 1; q <= 4; ++q) {
                auto pg = generate_planted({Variant::flat, n, p, q});
                auto sizes = class_sizes(pg.classes);
                std::size_t expected_edges = 0;
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b)
                        expected_edges += static_cast<std::size_t>(
                            std::llround(p * static_cast<double>(sizes[a] * sizes[b])));
                CHECK(pg.graph.edge_count() == expected_edges);

                // into[v][c]: edges from v into class c
                std::vector<std::array<std::size_t, 3>> into(n);
                for (const auto& [u, v] : pg.graph.edges()) {
                    ++into[u][pg.classes[v]];
                    ++into[v][pg.classes[u]];
                }
                for (int own = 0; own < 3; ++own) {
                    for (int other = 0; other < 3; ++other) {
                        if (own == other) continue;
                        double sum = 0;
                        for (Vertex v = 0; v < n; ++v)
                            if (pg.classes[v] == own) sum += static_cast<double>(into[v][other]);
                        const double mean = sum / static_cast<double>(sizes[own]);
                        for (Vertex v = 0; v < n; ++v) {
                            if (pg.classes[v] != own) continue;
                            CHECK(std::abs(static_cast<double>(into[v][other]) - mean) <= 1.0);
                        }
                    }
                }
            }
        }
    }
}
