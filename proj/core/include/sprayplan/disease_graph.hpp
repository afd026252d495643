#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sprayplan/types.hpp"

namespace sprayplan {

/// Dense square matrix, row-major.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), cells_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  private:
    std::size_t n_ = 0;
    std::vector<double> cells_;
};

struct GraphNode {
    std::string region_id;
    double feature = 0.0;  // region area, m^2
};

struct GraphEdge {
    std::size_t i = 0;
    std::size_t j = 0;      // i < j
    double weight = 0.0;    // center distance, meters
};

/// Proximity graph over diseased regions. Edges join regions whose centers
/// are within the neighbor radius; the adjacency matrix mirrors the edge
/// set symmetrically with a zero diagonal.
struct DiseaseGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    SquareMatrix adjacency;
};

using FeatureVector = std::vector<double>;

struct HotspotScores {
    std::vector<double> scores;       // in (0, 1], max-normalized
    std::size_t primary_hotspot = 0;  // argmax; ties break to lowest index
};

/// One node per region (feature = area); an edge wherever the center
/// distance is positive and at most neighbor_radius. Coincident centers
/// (distance < 1e-9 m) are rejected.
DiseaseGraph build_graph(std::span<const DiseasedRegion> regions, double neighbor_radius);

/// Elementwise reciprocal of the nonzero entries; zeros stay zero.
SquareMatrix hadamard_inverse(const SquareMatrix& m);

/// One inverse-distance aggregation round: H' = H + hadamard_inverse(A) x H,
/// i.e. h'_u = h_u + sum over neighbors v of h_v / w(u,v).
FeatureVector message_passing_step(const DiseaseGraph& g, const FeatureVector& h);

/// Runs `rounds` aggregation rounds from the initial areas and normalizes by
/// the maximum, so the strongest node scores exactly 1.
HotspotScores hotspot_scores(const DiseaseGraph& g, int rounds = 2);

}  // namespace sprayplan
