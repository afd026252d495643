#pragma once

// Test-only reference implementations. Each oracle recomputes a quantity by
// a route independent of the library code path it checks: naive loops,
// exhaustive enumeration, or direct closed forms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "sprayplan/disease_graph.hpp"
#include "sprayplan/tsp.hpp"
#include "sprayplan/types.hpp"

namespace oracle {

/// Per-node evaluation over the edge list: h'_u = h_u + sum h_v / w(u,v).
inline std::vector<double> message_pass_naive(std::size_t n,
                                              std::span<const sprayplan::GraphEdge> edges,
                                              const std::vector<double>& h) {
    std::vector<double> out = h;
    (void)n;
    for (const auto& e : edges) {
        out[e.i] += h[e.j] / e.weight;
        out[e.j] += h[e.i] / e.weight;
    }
    return out;
}

namespace detail {

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

inline void spanning_subsets(const sprayplan::MetricInstance& m,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             std::size_t from, std::vector<std::size_t>& chosen, double& best) {
    const std::size_t need = m.size() - 1;
    if (chosen.size() == need) {
        Dsu dsu(m.size());
        double weight = 0.0;
        std::size_t merges = 0;
        for (const std::size_t e : chosen) {
            if (dsu.unite(edges[e].first, edges[e].second)) ++merges;
            weight += m.distance(edges[e].first, edges[e].second);
        }
        if (merges == need) best = std::min(best, weight);
        return;
    }
    if (from >= edges.size() || edges.size() - from < need - chosen.size()) return;
    chosen.push_back(from);
    spanning_subsets(m, edges, from + 1, chosen, best);
    chosen.pop_back();
    spanning_subsets(m, edges, from + 1, chosen, best);
}

inline void matchings(const sprayplan::MetricInstance& m, std::vector<std::size_t>& left,
                      double weight, double& best) {
    if (left.empty()) {
        best = std::min(best, weight);
        return;
    }
    const std::size_t a = left[0];
    for (std::size_t k = 1; k < left.size(); ++k) {
        const std::size_t b = left[k];
        std::vector<std::size_t> rest;
        for (std::size_t i = 1; i < left.size(); ++i)
            if (i != k) rest.push_back(left[i]);
        matchings(m, rest, weight + m.distance(a, b), best);
    }
}

}  // namespace detail

/// Minimum spanning weight by trying every (n-1)-edge subset.
inline double mst_weight_exhaustive(const sprayplan::MetricInstance& m) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) edges.emplace_back(i, j);
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> chosen;
    detail::spanning_subsets(m, edges, 0, chosen, best);
    return best;
}

/// Minimum perfect-matching weight by enumerating every pairing.
inline double matching_weight_exhaustive(std::span<const std::size_t> odd,
                                         const sprayplan::MetricInstance& m) {
    if (odd.empty()) return 0.0;
    std::vector<std::size_t> left(odd.begin(), odd.end());
    double best = std::numeric_limits<double>::infinity();
    detail::matchings(m, left, 0.0, best);
    return best;
}

inline double polyline_ground_length(std::span<const sprayplan::Waypoint> waypoints) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
        const double dx = waypoints[i + 1].x - waypoints[i].x;
        const double dy = waypoints[i + 1].y - waypoints[i].y;
        total += std::sqrt(dx * dx + dy * dy);
    }
    return total;
}

/// Distinct row heights of a sweep, in emission order.
inline std::vector<double> sweep_row_values(std::span<const sprayplan::Waypoint> waypoints) {
    std::vector<double> rows;
    for (const auto& w : waypoints)
        if (rows.empty() || rows.back() != w.y) rows.push_back(w.y);
    return rows;
}

/// Largest distance from any 0.05 m grid line inside [y_min, y_min+height]
/// to the nearest sweep row.
inline double worst_row_gap(double y_min, double height, std::span<const double> rows) {
    double worst = 0.0;
    const long long steps = static_cast<long long>(std::floor(height / 0.05));
    for (long long k = 0; k <= steps; ++k) {
        const double y = y_min + 0.05 * static_cast<double>(k);
        double nearest = std::numeric_limits<double>::infinity();
        for (const double row : rows) nearest = std::min(nearest, std::abs(y - row));
        worst = std::max(worst, nearest);
    }
    return worst;
}

}  // namespace oracle
