#pragma once

#include <vector>

#include "sprayplan/types.hpp"

namespace sprayplan {

/// Serpentine sweep over one rectangle, rows `row_spacing` apart.
struct SweepPath {
    std::vector<PlanarPoint> points;
    double row_spacing = 0.0;
};

/// Per-region dosage realization. Exactly one of {flow_multiplier,
/// flight_height_above_crop} deviates from base, depending on sprayer mode.
struct DosagePlan {
    double flow_multiplier = 1.0;
    double flight_height_above_crop = 0.0;
    double effective_spray_radius = 0.0;
};

/// Back-and-forth sweep of the rectangle [x_min, x_min+width] x
/// [y_min, y_min+height]. Rows start at y_min + (height mod distance)/2
/// (or y_min + distance/2 when height divides evenly) and step by
/// `distance`; waypoints step 1 m in x, alternating direction per row.
/// A rectangle no taller than `distance` gets a single centered row,
/// its y rounded to one decimal.
SweepPath boustrophedon_path(double x_min, double y_min, double width, double height,
                             double distance);

/// Keeps only the first and last waypoint of each row.
SweepPath row_endpoints_only(const SweepPath& sweep);

/// Affine dosage ramp: 1 at score 0, intensity_factor at score 1.
double dosage_multiplier(double score, double intensity_factor);

/// Flow-modulated dosage at constant altitude (built-in variable rate).
DosagePlan plan_dosage_vrs(double score, const SprayerConfig& cfg);

/// Altitude-modulated dosage at constant flow: lowering flight height by
/// sqrt(m) shrinks the spray cone so deposition rises by m.
DosagePlan plan_dosage_altitude(double score, const SprayerConfig& cfg);

/// Dispatches on cfg.vrs_built_in.
DosagePlan plan_dosage(double score, const SprayerConfig& cfg);

/// The region's sweep with altitude and flow attached; rows are spaced
/// 2 x effective_spray_radius apart.
std::vector<Waypoint> region_sweep(const DiseasedRegion& region, const DosagePlan& plan,
                                   const SprayerConfig& cfg);

}  // namespace sprayplan
