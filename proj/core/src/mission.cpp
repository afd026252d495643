#include "sprayplan/mission.hpp"

#include <cmath>

#include "sprayplan/coverage.hpp"
#include "sprayplan/errors.hpp"
#include "sprayplan/geo.hpp"

namespace sprayplan {

namespace {

double ground_length(std::span<const Waypoint> waypoints) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
        total += std::hypot(waypoints[i + 1].x - waypoints[i].x,
                            waypoints[i + 1].y - waypoints[i].y);
    return total;
}

}  // namespace

MissionPlan plan_mission(std::span<const DiseasedRegion> regions, const MissionParams& params,
                         const SprayerConfig& cfg, const PlanOptions& options) {
    if (regions.empty()) throw ValidationError("mission needs at least one region");
    validate(params);
    validate(cfg);

    MissionPlan plan;
    plan.graph = build_graph(regions, params.neighbor_radius);
    plan.scores = hotspot_scores(plan.graph, params.message_passing_rounds);

    const MetricInstance metric = build_metric_instance(params.start_point, regions);
    plan.tour = christofides_tour(metric);

    const double transit_altitude =
        cfg.crop_height +
        params.transit_height_above_crop.value_or(cfg.base_flight_height_above_crop);
    const PlanarPoint start = params.start_point;

    auto& fp = plan.flight_path;
    fp.waypoints.push_back({start.x, start.y, transit_altitude, 0.0});

    for (std::size_t k = 1; k + 1 < plan.tour.order.size(); ++k) {
        const std::size_t region_index = plan.tour.order[k] - 1;
        const DiseasedRegion& region = regions[region_index];
        const double score = plan.scores.scores[region_index];

        const DosagePlan dosage = plan_dosage(score, cfg);
        std::vector<Waypoint> sweep = region_sweep(region, dosage, cfg);
        if (options.sparse_rows) {
            SweepPath path{{}, 2.0 * dosage.effective_spray_radius};
            path.points.reserve(sweep.size());
            for (const auto& w : sweep) path.points.push_back({w.x, w.y});
            const SweepPath endpoints = row_endpoints_only(path);
            std::vector<Waypoint> reduced;
            reduced.reserve(endpoints.points.size());
            for (const auto& p : endpoints.points)
                reduced.push_back({p.x, p.y, sweep.front().altitude, sweep.front().flow});
            sweep = std::move(reduced);
        }

        // Approach the sweep entry at transit altitude with the sprayer off.
        fp.waypoints.push_back({sweep.front().x, sweep.front().y, transit_altitude, 0.0});
        const std::size_t first = fp.waypoints.size();
        fp.waypoints.insert(fp.waypoints.end(), sweep.begin(), sweep.end());
        const std::size_t last = fp.waypoints.size() - 1;
        fp.per_region_spans.push_back({region.id, first, last});

        // Climb back out before the next transit leg.
        fp.waypoints.push_back({sweep.back().x, sweep.back().y, transit_altitude, 0.0});

        plan.report.regions.push_back({region.id, score, dosage_multiplier(score, cfg.intensity_factor),
                                       cfg.crop_height + dosage.flight_height_above_crop,
                                       2.0 * dosage.effective_spray_radius});
    }

    fp.waypoints.push_back({start.x, start.y, transit_altitude, 0.0});
    fp.total_ground_length = ground_length(fp.waypoints);

    plan.report.tour_length = plan.tour.length;
    plan.report.total_path_length = fp.total_ground_length;
    plan.report.waypoint_count = fp.waypoints.size();
    return plan;
}

std::vector<GeoWaypoint> flight_path_to_gps(const FlightPath& fp, const GeoPoint& anchor) {
    validate(anchor);
    std::vector<GeoWaypoint> out;
    out.reserve(fp.waypoints.size());
    for (const auto& w : fp.waypoints) {
        const GeoPoint g = planar_to_gps({w.x, w.y}, anchor);
        out.push_back({g.lat, g.lon, w.altitude, w.flow});
    }
    return out;
}

}  // namespace sprayplan
