#include "sprayplan/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sprayplan/errors.hpp"

namespace sprayplan {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double checked_cos_lat(const GeoPoint& p) {
    const double c = std::cos(p.lat * kDegToRad);
    if (std::abs(c) < 1e-12)
        throw ValidationError("east/west offset undefined at the poles");
    return c;
}

}  // namespace

double haversine_distance(const GeoPoint& a, const GeoPoint& b) {
    validate(a);
    validate(b);
    const double phi1 = a.lat * kDegToRad;
    const double phi2 = b.lat * kDegToRad;
    const double dphi = (b.lat - a.lat) * kDegToRad;
    const double dlambda = (b.lon - a.lon) * kDegToRad;

    const double s_phi = std::sin(dphi / 2.0);
    const double s_lam = std::sin(dlambda / 2.0);
    double h = s_phi * s_phi + std::cos(phi1) * std::cos(phi2) * s_lam * s_lam;
    h = std::clamp(h, 0.0, 1.0);  // guard asin against rounding
    return 2.0 * kEarthRadiusMeters * std::asin(std::sqrt(h));
}

GeoPoint offset_east(const GeoPoint& p, double meters) {
    validate(p);
    const double cos_lat = checked_cos_lat(p);
    GeoPoint out{p.lat, p.lon + meters / (kEarthRadiusMeters * cos_lat) * kRadToDeg};
    return out;
}

GeoPoint offset_west(const GeoPoint& p, double meters) { return offset_east(p, -meters); }

GeoPoint offset_north(const GeoPoint& p, double meters) {
    validate(p);
    GeoPoint out{p.lat + meters / kEarthRadiusMeters * kRadToDeg, p.lon};
    if (out.lat < -90.0 || out.lat > 90.0)
        throw ValidationError("north/south offset crosses a pole");
    return out;
}

GeoPoint offset_south(const GeoPoint& p, double meters) { return offset_north(p, -meters); }

PlanarPoint gps_to_planar(const GeoPoint& p, const GeoPoint& anchor) {
    validate(p);
    const double cos_lat = checked_cos_lat(anchor);
    return {(p.lon - anchor.lon) * kDegToRad * kEarthRadiusMeters * cos_lat,
            (p.lat - anchor.lat) * kDegToRad * kEarthRadiusMeters};
}

GeoPoint planar_to_gps(const PlanarPoint& p, const GeoPoint& anchor) {
    validate(p);
    return offset_north(offset_east(anchor, p.x), p.y);
}

DiseasedRegion gps_region_to_planar(const std::string& id, const GeoBounds& box,
                                    const GeoPoint& anchor) {
    const GeoPoint sw{box.south, box.west};
    const GeoPoint se{box.south, box.east};
    const GeoPoint nw{box.north, box.west};
    validate(sw);
    validate(GeoPoint{box.north, box.east});
    if (box.north <= box.south || box.east <= box.west)
        throw ValidationError("gps region '" + id + "' is degenerate");

    DiseasedRegion r;
    r.id = id;
    r.origin = gps_to_planar(sw, anchor);
    r.width = haversine_distance(sw, se);   // measured at the southern edge
    r.height = haversine_distance(sw, nw);
    validate(r);
    return r;
}

}  // namespace sprayplan
