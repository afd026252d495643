#include "sprayplan/tsp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <tuple>

#include "sprayplan/errors.hpp"

namespace sprayplan {

namespace {

// Union-find with path halving.
struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

constexpr std::size_t kExactMatchingLimit = 18;

std::vector<WeightedEdge> matching_exact(std::span<const std::size_t> odd,
                                         const MetricInstance& m) {
    const std::size_t k = odd.size();
    const std::uint32_t full = (1u << k) - 1u;
    const double inf = std::numeric_limits<double>::infinity();

    // dp[mask] = cheapest perfect matching of the vertices in mask.
    std::vector<double> dp(full + 1u, inf);
    std::vector<std::uint8_t> mate(full + 1u, 0);  // partner chosen for the lowest bit
    dp[0] = 0.0;
    for (std::uint32_t mask = 1u; mask <= full; ++mask) {
        const auto i = static_cast<std::size_t>(std::countr_zero(mask));
        for (std::size_t j = i + 1; j < k; ++j) {
            if (!(mask >> j & 1u)) continue;
            const std::uint32_t rest = mask & ~(1u << i) & ~(1u << j);
            if (dp[rest] == inf) continue;
            const double cand = dp[rest] + m.distance(odd[i], odd[j]);
            if (cand < dp[mask]) {
                dp[mask] = cand;
                mate[mask] = static_cast<std::uint8_t>(j);
            }
        }
    }

    std::vector<WeightedEdge> result;
    std::uint32_t mask = full;
    while (mask != 0u) {
        const auto i = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t j = mate[mask];
        result.push_back({std::min(odd[i], odd[j]), std::max(odd[i], odd[j]),
                          m.distance(odd[i], odd[j])});
        mask &= ~(1u << i) & ~(1u << j);
    }
    return result;
}

std::vector<WeightedEdge> matching_greedy(std::span<const std::size_t> odd,
                                          const MetricInstance& m) {
    std::vector<std::size_t> left(odd.begin(), odd.end());
    std::sort(left.begin(), left.end());
    std::vector<WeightedEdge> result;
    while (!left.empty()) {
        std::size_t best_a = 0, best_b = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < left.size(); ++a) {
            for (std::size_t b = a + 1; b < left.size(); ++b) {
                const double d = m.distance(left[a], left[b]);
                if (d < best) {
                    best = d;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        result.push_back({left[best_a], left[best_b], best});
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(best_b));
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(best_a));
    }
    return result;
}

double tour_length(const MetricInstance& m, std::span<const std::size_t> order) {
    double len = 0.0;
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
        len += m.distance(order[k], order[k + 1]);
    return len;
}

}  // namespace

MetricInstance build_metric_instance(const PlanarPoint& start,
                                     std::span<const DiseasedRegion> regions) {
    validate(start);
    MetricInstance m;
    m.points.reserve(regions.size() + 1);
    m.points.push_back(start);
    for (const auto& r : regions) {
        validate(r);
        m.points.push_back(region_center(r));
    }

    const std::size_t n = m.points.size();
    m.dist.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::hypot(m.points[j].x - m.points[i].x,
                                        m.points[j].y - m.points[i].y);
            m.dist[i * n + j] = d;
            m.dist[j * n + i] = d;
        }
    }
    return m;
}

std::vector<WeightedEdge> minimum_spanning_tree(const MetricInstance& m) {
    const std::size_t n = m.size();
    if (n == 0) throw ValidationError("metric instance is empty");

    std::vector<WeightedEdge> all;
    all.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all.push_back({i, j, m.distance(i, j)});
    std::sort(all.begin(), all.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::tie(a.weight, a.i, a.j) < std::tie(b.weight, b.i, b.j);
    });

    std::vector<WeightedEdge> tree;
    tree.reserve(n - 1);
    DisjointSets sets(n);
    for (const auto& e : all) {
        if (sets.unite(e.i, e.j)) {
            tree.push_back(e);
            if (tree.size() == n - 1) break;
        }
    }
    return tree;
}

std::vector<std::size_t> odd_degree_vertices(std::span<const WeightedEdge> tree, std::size_t n) {
    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : tree) {
        ++degree[e.i];
        ++degree[e.j];
    }
    std::vector<std::size_t> odd;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] % 2 == 1) odd.push_back(v);
    return odd;
}

std::vector<WeightedEdge> min_weight_perfect_matching(std::span<const std::size_t> odd,
                                                      const MetricInstance& m) {
    if (odd.size() % 2 != 0)
        throw ValidationError("perfect matching requires an even vertex set");
    if (odd.empty()) return {};
    if (odd.size() <= kExactMatchingLimit) return matching_exact(odd, m);
    return matching_greedy(odd, m);
}

std::vector<std::size_t> eulerian_circuit(
    std::span<const std::pair<std::size_t, std::size_t>> multigraph_edges, std::size_t n,
    std::size_t start) {
    if (start >= n) throw ValidationError("eulerian start vertex out of range");

    // (neighbor, edge id) per vertex, sorted for a deterministic walk.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
    for (std::size_t id = 0; id < multigraph_edges.size(); ++id) {
        const auto [a, b] = multigraph_edges[id];
        if (a >= n || b >= n) throw ValidationError("eulerian edge endpoint out of range");
        adj[a].emplace_back(b, id);
        adj[b].emplace_back(a, id);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() % 2 != 0)
            throw ValidationError("eulerian circuit requires all degrees even");
        std::sort(adj[v].begin(), adj[v].end());
    }

    std::vector<std::size_t> next(n, 0);
    std::vector<bool> used(multigraph_edges.size(), false);
    std::vector<std::size_t> stack{start};
    std::vector<std::size_t> walk;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        auto& cursor = next[v];
        while (cursor < adj[v].size() && used[adj[v][cursor].second]) ++cursor;
        if (cursor == adj[v].size()) {
            walk.push_back(v);
            stack.pop_back();
        } else {
            const auto [to, id] = adj[v][cursor];
            used[id] = true;
            stack.push_back(to);
        }
    }
    if (walk.size() != multigraph_edges.size() + 1)
        throw ValidationError("eulerian circuit requires a connected multigraph");
    std::reverse(walk.begin(), walk.end());
    return walk;
}

TourPlan christofides_tour(const MetricInstance& m) {
    const std::size_t n = m.size();
    if (n == 0) throw ValidationError("metric instance is empty");
    if (n == 1) return {{0, 0}, 0.0};

    const auto tree = minimum_spanning_tree(m);
    const auto odd = odd_degree_vertices(tree, n);
    const auto matching = min_weight_perfect_matching(odd, m);

    std::vector<std::pair<std::size_t, std::size_t>> multigraph;
    multigraph.reserve(tree.size() + matching.size());
    for (const auto& e : tree) multigraph.emplace_back(e.i, e.j);
    for (const auto& e : matching) multigraph.emplace_back(e.i, e.j);

    const auto walk = eulerian_circuit(multigraph, n, 0);

    // Shortcut: keep the first occurrence of each vertex, then close at 0.
    TourPlan tour;
    tour.order.reserve(n + 1);
    std::vector<bool> visited(n, false);
    for (const std::size_t v : walk) {
        if (!visited[v]) {
            visited[v] = true;
            tour.order.push_back(v);
        }
    }
    tour.order.push_back(0);
    tour.length = tour_length(m, tour.order);
    return tour;
}

TourPlan brute_force_tour(const MetricInstance& m) {
    const std::size_t n = m.size();
    if (n == 0) throw ValidationError("metric instance is empty");
    if (n > 10) throw ValidationError("brute force tour limited to 10 points");
    if (n == 1) return {{0, 0}, 0.0};

    std::vector<std::size_t> perm(n - 1);
    std::iota(perm.begin(), perm.end(), std::size_t{1});

    TourPlan best;
    best.length = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> order(n + 1, 0);
    do {
        std::copy(perm.begin(), perm.end(), order.begin() + 1);
        const double len = tour_length(m, order);
        if (len < best.length) {
            best.length = len;
            best.order = order;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace sprayplan
