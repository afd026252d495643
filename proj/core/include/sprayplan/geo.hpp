#pragma once

#include <string>

#include "sprayplan/types.hpp"

namespace sprayplan {

/// Spherical Earth model, radius fixed at 6,371,000 m.
inline constexpr double kEarthRadiusMeters = 6'371'000.0;

/// Great-circle distance in meters. Symmetric; zero for identical points.
double haversine_distance(const GeoPoint& a, const GeoPoint& b);

/// Point `meters` east of p along the parallel. Rejects the poles.
GeoPoint offset_east(const GeoPoint& p, double meters);
GeoPoint offset_west(const GeoPoint& p, double meters);

/// Point `meters` north of p along the meridian. Rejects results past a pole.
GeoPoint offset_north(const GeoPoint& p, double meters);
GeoPoint offset_south(const GeoPoint& p, double meters);

/// Axis-aligned box in (lat, lon) degrees.
struct GeoBounds {
    double south = 0.0;
    double west = 0.0;
    double north = 0.0;
    double east = 0.0;
};

/// Projects a GPS point into the planar frame anchored at `anchor`
/// (+x east, +y north). Exact algebraic inverse of planar_to_gps.
PlanarPoint gps_to_planar(const GeoPoint& p, const GeoPoint& anchor);

GeoPoint planar_to_gps(const PlanarPoint& p, const GeoPoint& anchor);

/// Converts a GPS rectangle to a planar region: width/height via haversine
/// along the box edges, origin at the planar offset of the southwest corner.
DiseasedRegion gps_region_to_planar(const std::string& id, const GeoBounds& box,
                                    const GeoPoint& anchor);

}  // namespace sprayplan
