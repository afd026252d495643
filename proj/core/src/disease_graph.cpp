#include "sprayplan/disease_graph.hpp"

#include <algorithm>
#include <cmath>

#include "sprayplan/errors.hpp"

namespace sprayplan {

namespace {
constexpr double kCoincidenceEpsilon = 1e-9;  // meters
}

DiseaseGraph build_graph(std::span<const DiseasedRegion> regions, double neighbor_radius) {
    if (!(neighbor_radius > 0.0)) throw ValidationError("neighbor_radius must be > 0");

    const std::size_t n = regions.size();
    DiseaseGraph g;
    g.nodes.reserve(n);
    g.adjacency = SquareMatrix(n);

    std::vector<PlanarPoint> centers;
    centers.reserve(n);
    for (const auto& r : regions) {
        validate(r);
        centers.push_back(region_center(r));
        g.nodes.push_back({r.id, region_area(r)});
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dist = std::hypot(centers[j].x - centers[i].x,
                                           centers[j].y - centers[i].y);
            if (dist < kCoincidenceEpsilon)
                throw ValidationError("regions '" + regions[i].id + "' and '" + regions[j].id +
                                      "' have coincident centers");
            if (dist <= neighbor_radius) {
                g.edges.push_back({i, j, dist});
                g.adjacency.at(i, j) = dist;
                g.adjacency.at(j, i) = dist;
            }
        }
    }
    return g;
}

SquareMatrix hadamard_inverse(const SquareMatrix& m) {
    const std::size_t n = m.size();
    SquareMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (const double v = m.at(i, j); v != 0.0) inv.at(i, j) = 1.0 / v;
    return inv;
}

FeatureVector message_passing_step(const DiseaseGraph& g, const FeatureVector& h) {
    const std::size_t n = g.nodes.size();
    if (h.size() != n)
        throw ValidationError("feature vector length does not match node count");

    const SquareMatrix inv = hadamard_inverse(g.adjacency);
    FeatureVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double aggregated = 0.0;
        for (std::size_t j = 0; j < n; ++j) aggregated += inv.at(i, j) * h[j];
        out[i] = h[i] + aggregated;
    }
    return out;
}

HotspotScores hotspot_scores(const DiseaseGraph& g, int rounds) {
    if (g.nodes.empty()) throw ValidationError("hotspot scores undefined for an empty graph");
    if (rounds < 0) throw ValidationError("message passing rounds must be >= 0");

    FeatureVector h(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) h[i] = g.nodes[i].feature;

    for (int k = 0; k < rounds; ++k) h = message_passing_step(g, h);

    HotspotScores result;
    const auto max_it = std::max_element(h.begin(), h.end());
    result.primary_hotspot = static_cast<std::size_t>(max_it - h.begin());
    result.scores.resize(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) result.scores[i] = h[i] / *max_it;
    return result;
}

}  // namespace sprayplan
