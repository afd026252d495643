#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sprayplan/disease_graph.hpp"
#include "sprayplan/errors.hpp"

using namespace sprayplan;

namespace {

DiseasedRegion unit_region(const std::string& id, double cx, double cy) {
    return {id, {cx - 0.5, cy - 0.5}, 1.0, 1.0};
}

// Random graph built directly on the struct: features in (0, 10], edge
// probability p, weights in [0.5, 30].
DiseaseGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::uniform_real_distribution<double> feature(0.1, 10.0);
    std::uniform_real_distribution<double> weight(0.5, 30.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    DiseaseGraph g;
    g.adjacency = SquareMatrix(n);
    for (std::size_t i = 0; i < n; ++i) g.nodes.push_back({"n" + std::to_string(i), feature(rng)});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng) >= p) continue;
            const double w = weight(rng);
            g.edges.push_back({i, j, w});
            g.adjacency.at(i, j) = w;
            g.adjacency.at(j, i) = w;
        }
    }
    return g;
}

FeatureVector initial_features(const DiseaseGraph& g) {
    FeatureVector h(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) h[i] = g.nodes[i].feature;
    return h;
}

// One large center region ringed by small ones, with far outliers.
std::vector<DiseasedRegion> radial_cluster() {
    std::vector<DiseasedRegion> regions;
    regions.push_back({"center", {-1.0, -1.0}, 2.0, 2.0});  // 4 m^2 at the origin
    for (int k = 0; k < 8; ++k) {
        const double angle = k * std::numbers::pi / 4.0;
        regions.push_back(unit_region("ring" + std::to_string(k), 10.0 * std::cos(angle),
                                      10.0 * std::sin(angle)));
    }
    regions.push_back(unit_region("out0", 100.0, 0.0));
    regions.push_back(unit_region("out1", 0.0, 100.0));
    regions.push_back(unit_region("out2", -100.0, 0.0));
    regions.push_back(unit_region("out3", 0.0, -100.0));
    return regions;
}

}  // namespace

TEST_CASE("build_graph on empty and single-region input") {
    const DiseaseGraph empty = build_graph({}, 25.0);
    CHECK(empty.nodes.empty());
    CHECK(empty.edges.empty());

    const std::vector<DiseasedRegion> one{{"solo", {0, 0}, 2.0, 3.0}};
    const DiseaseGraph g = build_graph(one, 25.0);
    CHECK(g.nodes.size() == 1);
    CHECK(g.nodes[0].feature == 6.0);
    CHECK(g.edges.empty());
}

TEST_CASE("build_graph applies the neighbor radius strictly") {
    const std::vector<DiseasedRegion> regions{
        unit_region("a", 0, 0), unit_region("b", 10, 0), unit_region("c", 40, 0)};
    const DiseaseGraph g = build_graph(regions, 25.0);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].i == 0);
    CHECK(g.edges[0].j == 1);
    CHECK(g.edges[0].weight == doctest::Approx(10.0));
    CHECK(g.adjacency.at(0, 1) == g.adjacency.at(1, 0));
    CHECK(g.adjacency.at(0, 2) == 0.0);
}

TEST_CASE("build_graph boundary: distance equal to the radius is an edge") {
    const std::vector<DiseasedRegion> regions{unit_region("a", 0, 0), unit_region("b", 25, 0)};
    CHECK(build_graph(regions, 25.0).edges.size() == 1);
}

TEST_CASE("build_graph rejects coincident centers naming both regions") {
    const std::vector<DiseasedRegion> regions{{"first", {0, 0}, 2, 2}, {"second", {0.5, 0.5}, 1, 1}};
    CHECK_THROWS_WITH_AS(build_graph(regions, 25.0),
                         doctest::Contains("first") && doctest::Contains("second"),
                         ValidationError);
}

TEST_CASE("adjacency matrix mirrors the edge set symmetrically") {
    std::mt19937 rng(21);
    const DiseaseGraph g = random_graph(rng, 30, 0.3);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        CHECK(g.adjacency.at(i, i) == 0.0);
        for (std::size_t j = 0; j < g.nodes.size(); ++j)
            CHECK(g.adjacency.at(i, j) == g.adjacency.at(j, i));
    }
    double edge_sum = 0.0;
    for (const auto& e : g.edges) edge_sum += e.weight;
    double matrix_sum = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j) matrix_sum += g.adjacency.at(i, j);
    CHECK(matrix_sum == doctest::Approx(edge_sum));
}

TEST_CASE("message passing leaves isolated nodes unchanged") {
    DiseaseGraph g;
    g.nodes.push_back({"solo", 7.0});
    g.adjacency = SquareMatrix(1);
    const FeatureVector out = message_passing_step(g, {7.0});
    CHECK(out == FeatureVector{7.0});
}

TEST_CASE("message passing hand example: two nodes, weight 2") {
    DiseaseGraph g;
    g.nodes = {{"a", 4.0}, {"b", 6.0}};
    g.edges = {{0, 1, 2.0}};
    g.adjacency = SquareMatrix(2);
    g.adjacency.at(0, 1) = g.adjacency.at(1, 0) = 2.0;

    const FeatureVector out = message_passing_step(g, {4.0, 6.0});
    CHECK(out[0] == doctest::Approx(7.0));
    CHECK(out[1] == doctest::Approx(8.0));
}

TEST_CASE("message passing rejects mismatched feature length") {
    DiseaseGraph g;
    g.nodes = {{"a", 1.0}, {"b", 1.0}};
    g.adjacency = SquareMatrix(2);
    CHECK_THROWS_AS(message_passing_step(g, {1.0}), ValidationError);
}

TEST_CASE("matrix form equals the naive per-node oracle") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::size_t> size(2, 50);
    for (int trial = 0; trial < 30; ++trial) {
        const DiseaseGraph g = random_graph(rng, size(rng), 0.3);
        FeatureVector h = initial_features(g);
        for (int round = 0; round < 2; ++round) {
            const FeatureVector matrix_form = message_passing_step(g, h);
            const FeatureVector naive = oracle::message_pass_naive(g.nodes.size(), g.edges, h);
            REQUIRE(matrix_form.size() == naive.size());
            for (std::size_t i = 0; i < naive.size(); ++i)
                CHECK(std::abs(matrix_form[i] - naive[i]) <= 1e-9);
            h = matrix_form;
        }
    }
}

TEST_CASE("hadamard inverse flips nonzero entries only") {
    SquareMatrix m(2);
    m.at(0, 1) = 4.0;
    m.at(1, 0) = 4.0;
    const SquareMatrix inv = hadamard_inverse(m);
    CHECK(inv.at(0, 1) == 0.25);
    CHECK(inv.at(0, 0) == 0.0);
    CHECK(inv.at(1, 1) == 0.0);
}

TEST_CASE("hotspot scores: single node is the trivial hotspot") {
    const std::vector<DiseasedRegion> one{{"solo", {0, 0}, 3.0, 4.0}};
    const HotspotScores s = hotspot_scores(build_graph(one, 25.0));
    CHECK(s.scores == std::vector<double>{1.0});
    CHECK(s.primary_hotspot == 0);
}

TEST_CASE("hotspot scores on the unit path graph A-B-C") {
    // Two rounds of the update on unit areas and unit weights:
    //   [1,1,1] -> [2,3,2] -> [5,7,5], normalized [5/7, 1, 5/7].
    DiseaseGraph g;
    g.nodes = {{"A", 1.0}, {"B", 1.0}, {"C", 1.0}};
    g.edges = {{0, 1, 1.0}, {1, 2, 1.0}};
    g.adjacency = SquareMatrix(3);
    g.adjacency.at(0, 1) = g.adjacency.at(1, 0) = 1.0;
    g.adjacency.at(1, 2) = g.adjacency.at(2, 1) = 1.0;

    FeatureVector expected = initial_features(g);
    expected = oracle::message_pass_naive(3, g.edges, expected);
    expected = oracle::message_pass_naive(3, g.edges, expected);
    REQUIRE(expected == FeatureVector{5.0, 7.0, 5.0});

    const HotspotScores s = hotspot_scores(g);
    CHECK(s.primary_hotspot == 1);
    CHECK(s.scores[0] == doctest::Approx(5.0 / 7.0).epsilon(1e-12));
    CHECK(s.scores[1] == 1.0);
    CHECK(s.scores[2] == doctest::Approx(5.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("hotspot scores: radial cluster peaks at the center") {
    const std::vector<DiseasedRegion> regions = radial_cluster();
    const DiseaseGraph g = build_graph(regions, 25.0);
    const HotspotScores s = hotspot_scores(g);

    CHECK(s.primary_hotspot == 0);
    CHECK(g.nodes[0].region_id == "center");

    // Cross-check the argmax with the naive oracle.
    FeatureVector h = initial_features(g);
    h = oracle::message_pass_naive(g.nodes.size(), g.edges, h);
    h = oracle::message_pass_naive(g.nodes.size(), g.edges, h);
    CHECK(std::max_element(h.begin(), h.end()) - h.begin() == 0);

    double worst_ring = 2.0, best_outlier = 0.0;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (regions[i].id.starts_with("ring")) worst_ring = std::min(worst_ring, s.scores[i]);
        if (regions[i].id.starts_with("out")) best_outlier = std::max(best_outlier, s.scores[i]);
    }
    CHECK(best_outlier < worst_ring);
}

TEST_CASE("hotspot scores are max-normalized into (0, 1]") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const DiseaseGraph g = random_graph(rng, 25, 0.3);
        const HotspotScores s = hotspot_scores(g);
        CHECK(*std::max_element(s.scores.begin(), s.scores.end()) == 1.0);
        for (const double v : s.scores) {
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(s.scores[s.primary_hotspot] == 1.0);
    }
}

TEST_CASE("relabeling nodes permutes scores identically") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> coord(0.0, 60.0);
    std::uniform_real_distribution<double> dim(0.5, 4.0);

    std::vector<DiseasedRegion> regions;
    for (int i = 0; i < 12; ++i)
        regions.push_back({"r" + std::to_string(i), {coord(rng), coord(rng)}, dim(rng), dim(rng)});

    const HotspotScores base = hotspot_scores(build_graph(regions, 25.0));

    std::vector<std::size_t> perm(regions.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<DiseasedRegion> shuffled(regions.size());
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled[perm[i]] = regions[i];

    const HotspotScores permuted = hotspot_scores(build_graph(shuffled, 25.0));
    for (std::size_t i = 0; i < perm.size(); ++i)
        CHECK(permuted.scores[perm[i]] == doctest::Approx(base.scores[i]).epsilon(1e-12));
}

TEST_CASE("adding an edge strictly increases the endpoint's update") {
    std::mt19937 rng(31);
    const DiseaseGraph g = random_graph(rng, 10, 0.25);
    DiseaseGraph extended = g;

    // Find a non-adjacent pair to connect.
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        for (std::size_t v = u + 1; v < g.nodes.size(); ++v) {
            if (g.adjacency.at(u, v) != 0.0) continue;
            extended.edges.push_back({u, v, 5.0});
            extended.adjacency.at(u, v) = extended.adjacency.at(v, u) = 5.0;

            const FeatureVector h = initial_features(g);
            const FeatureVector before = message_passing_step(g, h);
            const FeatureVector after = message_passing_step(extended, h);
            CHECK(after[u] > before[u]);
            CHECK(after[v] > before[v]);
            return;
        }
    }
    FAIL("random graph was complete; no pair to extend");
}

TEST_CASE("scores are invariant under uniform area scaling") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> coord(0.0, 50.0);
    std::vector<DiseasedRegion> regions;
    for (int i = 0; i < 10; ++i)
        regions.push_back({"r" + std::to_string(i), {coord(rng), coord(rng)}, 2.0, 1.0 + i * 0.3});

    const HotspotScores base = hotspot_scores(build_graph(regions, 25.0));

    DiseaseGraph scaled = build_graph(regions, 25.0);
    for (auto& node : scaled.nodes) node.feature *= 17.5;
    const HotspotScores s = hotspot_scores(scaled);

    for (std::size_t i = 0; i < base.scores.size(); ++i)
        CHECK(s.scores[i] == doctest::Approx(base.scores[i]).epsilon(1e-12));
    CHECK(s.primary_hotspot == base.primary_hotspot);
}

TEST_CASE("hotspot scores reject the empty graph") {
    CHECK_THROWS_AS(hotspot_scores(build_graph({}, 25.0)), ValidationError);
}

TEST_CASE("round count knob: zero rounds scores raw areas") {
    const std::vector<DiseasedRegion> regions{unit_region("a", 0, 0), {"b", {9.0, -1.0}, 2, 2}};
    const HotspotScores s = hotspot_scores(build_graph(regions, 25.0), 0);
    CHECK(s.scores[0] == doctest::Approx(0.25));
    CHECK(s.scores[1] == 1.0);
}
