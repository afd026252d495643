#pragma once

#include <optional>
#include <string>

namespace sprayplan {

/// Planar field coordinates in meters: +x east, +y north.
struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Spherical coordinates in degrees.
struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;
};

/// Axis-aligned rectangle flagged by the detector.
/// `origin` is the lower-left corner (x_min, y_min).
struct DiseasedRegion {
    std::string id;
    PlanarPoint origin;
    double width = 0.0;
    double height = 0.0;
};

PlanarPoint region_center(const DiseasedRegion& r);
double region_area(const DiseasedRegion& r);

void validate(const PlanarPoint& p);
void validate(const GeoPoint& p);
void validate(const DiseasedRegion& r);

/// Nozzle and flight geometry. The spray cone ties the two base quantities:
/// base_spray_radius = base_flight_height_above_crop * tan(spray_angle/2).
struct SprayerConfig {
    double crop_height = 0.0;
    double base_flight_height_above_crop = 0.0;
    double spray_angle_deg = 0.0;  // full cone angle
    double base_spray_radius = 0.0;
    double intensity_factor = 1.0;  // dosage multiplier at the primary hotspot
    bool vrs_built_in = false;
};

/// Builds a consistent config, deriving whichever of {spray_angle_deg,
/// base_spray_radius} was omitted. Supplying both cross-checks them at
/// 1e-6 relative tolerance.
SprayerConfig make_sprayer_config(double crop_height,
                                  double base_flight_height_above_crop,
                                  std::optional<double> spray_angle_deg,
                                  std::optional<double> base_spray_radius,
                                  double intensity_factor,
                                  bool vrs_built_in);

void validate(const SprayerConfig& cfg);

enum class CoordinateMode { planar, gps };

struct MissionParams {
    PlanarPoint start_point;        // launch corner
    double neighbor_radius = 25.0;  // meters, hotspot graph edge threshold
    CoordinateMode coordinate_mode = CoordinateMode::planar;
    std::optional<GeoPoint> gps_anchor;  // present iff coordinate_mode == gps
    int message_passing_rounds = 2;
    // Altitude above crop on transit legs; base flight height when unset.
    std::optional<double> transit_height_above_crop;
};

void validate(const MissionParams& params);

/// One 4-tuple of the executable mission: position, altitude above ground,
/// and sprayer flow multiplier (0 = sprayer off).
struct Waypoint {
    double x = 0.0;
    double y = 0.0;
    double altitude = 0.0;
    double flow = 0.0;
};

}  // namespace sprayplan
