#include "sprayplan/coverage.hpp"

#include <cmath>

#include "sprayplan/errors.hpp"

namespace sprayplan {

SweepPath boustrophedon_path(double x_min, double y_min, double width, double height,
                             double distance) {
    if (!(width > 0.0) || !(height > 0.0))
        throw ValidationError("sweep needs positive width and height");
    if (!(distance > 0.0)) throw ValidationError("sweep needs positive row spacing");

    SweepPath sweep;
    sweep.row_spacing = distance;

    const double remainder = std::fmod(height, distance);
    const double buffer = remainder / 2.0;
    const double y_end = y_min + height;
    const double x_end = x_min + width;

    // Unit columns x_min + 0..last_col, the farthest still inside the
    // rectangle. Computed directly instead of by a running `x += 1` so the
    // turn-around column is bit-stable for non-integer origins.
    long long last_col = static_cast<long long>(std::floor(width));
    while (last_col > 0 && x_min + static_cast<double>(last_col) > x_end) --last_col;
    while (x_min + static_cast<double>(last_col + 1) <= x_end) ++last_col;

    if (height > distance) {
        const double y_start = y_min + (remainder == 0.0 ? distance / 2.0 : buffer);
        for (long long row = 0;; ++row) {
            const double y = y_start + static_cast<double>(row) * distance;
            if (y > y_end) break;
            if (row % 2 == 0) {
                for (long long c = 0; c <= last_col; ++c)
                    sweep.points.push_back({x_min + static_cast<double>(c), y});
            } else {
                for (long long c = last_col; c >= 0; --c)
                    sweep.points.push_back({x_min + static_cast<double>(c), y});
            }
        }
    } else {
        // Single centered row, y rounded to one decimal.
        const double y = std::round((y_min + height / 2.0) * 10.0) / 10.0;
        for (long long c = 0; c <= last_col; ++c)
            sweep.points.push_back({x_min + static_cast<double>(c), y});
    }
    return sweep;
}

SweepPath row_endpoints_only(const SweepPath& sweep) {
    SweepPath out;
    out.row_spacing = sweep.row_spacing;
    const auto& pts = sweep.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const bool row_start = i == 0 || pts[i].y != pts[i - 1].y;
        const bool row_end = i + 1 == pts.size() || pts[i + 1].y != pts[i].y;
        if (row_start || row_end) out.points.push_back(pts[i]);
    }
    return out;
}

double dosage_multiplier(double score, double intensity_factor) {
    if (!(score >= 0.0) || !(score <= 1.0))
        throw ValidationError("hotspot score must be in [0, 1]");
    if (!(intensity_factor >= 1.0)) throw ValidationError("intensity_factor must be >= 1");
    return 1.0 + (intensity_factor - 1.0) * score;
}

DosagePlan plan_dosage_vrs(double score, const SprayerConfig& cfg) {
    DosagePlan plan;
    plan.flow_multiplier = dosage_multiplier(score, cfg.intensity_factor);
    plan.flight_height_above_crop = cfg.base_flight_height_above_crop;
    plan.effective_spray_radius = cfg.base_spray_radius;
    return plan;
}

DosagePlan plan_dosage_altitude(double score, const SprayerConfig& cfg) {
    const double m = dosage_multiplier(score, cfg.intensity_factor);
    // Deposition per area scales with 1/radius^2, so a dose factor m needs
    // radius (and with it flight height) shrunk by sqrt(m).
    const double shrink = std::sqrt(m);
    DosagePlan plan;
    plan.flow_multiplier = 1.0;
    plan.flight_height_above_crop = cfg.base_flight_height_above_crop / shrink;
    plan.effective_spray_radius = cfg.base_spray_radius / shrink;
    return plan;
}

DosagePlan plan_dosage(double score, const SprayerConfig& cfg) {
    return cfg.vrs_built_in ? plan_dosage_vrs(score, cfg) : plan_dosage_altitude(score, cfg);
}

std::vector<Waypoint> region_sweep(const DiseasedRegion& region, const DosagePlan& plan,
                                   const SprayerConfig& cfg) {
    validate(region);
    const SweepPath sweep = boustrophedon_path(region.origin.x, region.origin.y, region.width,
                                               region.height, 2.0 * plan.effective_spray_radius);
    const double altitude = cfg.crop_height + plan.flight_height_above_crop;

    std::vector<Waypoint> waypoints;
    waypoints.reserve(sweep.points.size());
    for (const auto& p : sweep.points)
        waypoints.push_back({p.x, p.y, altitude, plan.flow_multiplier});
    return waypoints;
}

}  // namespace sprayplan
