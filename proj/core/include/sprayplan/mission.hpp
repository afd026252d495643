#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sprayplan/disease_graph.hpp"
#include "sprayplan/tsp.hpp"
#include "sprayplan/types.hpp"

namespace sprayplan {

/// Contiguous waypoint range [first, last] spraying one region.
struct RegionSpan {
    std::string region_id;
    std::size_t first = 0;
    std::size_t last = 0;
};

/// The executable mission: waypoints from the launch point through every
/// region sweep and back. Transit waypoints carry flow 0.
struct FlightPath {
    std::vector<Waypoint> waypoints;
    std::vector<RegionSpan> per_region_spans;  // in tour order
    double total_ground_length = 0.0;          // 2-D polyline length, meters
};

struct RegionReportEntry {
    std::string id;
    double score = 0.0;
    double dosage_multiplier = 1.0;
    double altitude = 0.0;     // sweep altitude over this region
    double row_spacing = 0.0;
};

struct MissionReport {
    std::vector<RegionReportEntry> regions;  // in tour order
    double tour_length = 0.0;                // center-to-center cycle, meters
    double total_path_length = 0.0;          // equals FlightPath ground length
    std::size_t waypoint_count = 0;
};

/// Full planning result. The hotspot graph, scores, and tour are the
/// intermediates the flight path was assembled from; plots and reports
/// reuse them.
struct MissionPlan {
    FlightPath flight_path;
    MissionReport report;
    DiseaseGraph graph;        // node order follows the region list
    HotspotScores scores;
    TourPlan tour;             // index 0 = start point, i+1 = region i
};

struct PlanOptions {
    bool sparse_rows = false;  // emit only row endpoints of each sweep
};

/// Scores hotspots, orders regions with Christofides, sweeps each region at
/// its prescribed dosage, and stitches transit legs between sweeps.
MissionPlan plan_mission(std::span<const DiseasedRegion> regions, const MissionParams& params,
                         const SprayerConfig& cfg, const PlanOptions& options = {});

struct GeoWaypoint {
    double lat = 0.0;
    double lon = 0.0;
    double altitude = 0.0;
    double flow = 0.0;
};

/// Projects every waypoint through the anchor; altitude and flow unchanged.
std::vector<GeoWaypoint> flight_path_to_gps(const FlightPath& fp, const GeoPoint& anchor);

}  // namespace sprayplan
