#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sprayplan/types.hpp"

namespace sprayplan {

/// Complete Euclidean instance over the launch point (index 0) and the
/// region centers (indices 1..n-1).
struct MetricInstance {
    std::vector<PlanarPoint> points;
    std::vector<double> dist;  // n*n row-major

    std::size_t size() const { return points.size(); }
    double distance(std::size_t i, std::size_t j) const { return dist[i * points.size() + j]; }
};

struct WeightedEdge {
    std::size_t i = 0;
    std::size_t j = 0;  // i < j
    double weight = 0.0;
};

/// Closed tour: a permutation of all indices starting and ending at 0.
struct TourPlan {
    std::vector<std::size_t> order;
    double length = 0.0;
};

MetricInstance build_metric_instance(const PlanarPoint& start,
                                     std::span<const DiseasedRegion> regions);

/// Kruskal with (weight, i, j) lexicographic tie-breaking; n-1 edges.
std::vector<WeightedEdge> minimum_spanning_tree(const MetricInstance& m);

/// Vertices of odd degree in the tree; always evenly many.
std::vector<std::size_t> odd_degree_vertices(std::span<const WeightedEdge> tree, std::size_t n);

/// Minimum-weight perfect matching on the odd vertex set. Exact subset DP up
/// to 18 vertices; greedy nearest-pair beyond that (forfeits the 1.5 bound).
std::vector<WeightedEdge> min_weight_perfect_matching(std::span<const std::size_t> odd,
                                                      const MetricInstance& m);

/// Hierholzer walk over a connected even-degree multigraph; traverses every
/// edge exactly once, starting and ending at `start`.
std::vector<std::size_t> eulerian_circuit(
    std::span<const std::pair<std::size_t, std::size_t>> multigraph_edges, std::size_t n,
    std::size_t start);

/// Christofides: MST + odd-vertex matching + Eulerian shortcutting, starting
/// and ending at index 0. Deterministic for a fixed instance.
TourPlan christofides_tour(const MetricInstance& m);

/// Exact optimum by permutation enumeration; n <= 10 enforced. Testing and
/// small-instance oracle.
TourPlan brute_force_tour(const MetricInstance& m);

}  // namespace sprayplan
