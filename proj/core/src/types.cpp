#include "sprayplan/types.hpp"

#include <cmath>
#include <numbers>

#include "sprayplan/errors.hpp"

namespace sprayplan {

namespace {

bool finite(double v) { return std::isfinite(v); }

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

}  // namespace

PlanarPoint region_center(const DiseasedRegion& r) {
    return {r.origin.x + r.width / 2.0, r.origin.y + r.height / 2.0};
}

double region_area(const DiseasedRegion& r) { return r.width * r.height; }

void validate(const PlanarPoint& p) {
    if (!finite(p.x) || !finite(p.y)) fail("planar point has non-finite coordinates");
}

void validate(const GeoPoint& p) {
    if (!finite(p.lat) || !finite(p.lon)) fail("geo point has non-finite coordinates");
    if (p.lat < -90.0 || p.lat > 90.0) fail("latitude out of [-90, 90]");
    if (p.lon < -180.0 || p.lon > 180.0) fail("longitude out of [-180, 180]");
}

void validate(const DiseasedRegion& r) {
    if (r.id.empty()) fail("region id must not be empty");
    validate(r.origin);
    if (!finite(r.width) || !finite(r.height))
        fail("region '" + r.id + "' has non-finite dimensions");
    if (r.width <= 0.0 || r.height <= 0.0)
        fail("region '" + r.id + "' must have positive width and height");
}

SprayerConfig make_sprayer_config(double crop_height,
                                  double base_flight_height_above_crop,
                                  std::optional<double> spray_angle_deg,
                                  std::optional<double> base_spray_radius,
                                  double intensity_factor,
                                  bool vrs_built_in) {
    if (!spray_angle_deg && !base_spray_radius)
        fail("sprayer config needs spray_angle_deg or base_spray_radius");

    SprayerConfig cfg;
    cfg.crop_height = crop_height;
    cfg.base_flight_height_above_crop = base_flight_height_above_crop;
    cfg.intensity_factor = intensity_factor;
    cfg.vrs_built_in = vrs_built_in;

    if (spray_angle_deg) {
        cfg.spray_angle_deg = *spray_angle_deg;
        const double half_rad = *spray_angle_deg / 2.0 * std::numbers::pi / 180.0;
        cfg.base_spray_radius =
            base_spray_radius.value_or(base_flight_height_above_crop * std::tan(half_rad));
    } else {
        cfg.base_spray_radius = *base_spray_radius;
        cfg.spray_angle_deg =
            2.0 * std::atan2(*base_spray_radius, base_flight_height_above_crop) * 180.0 /
            std::numbers::pi;
    }
    validate(cfg);
    return cfg;
}

void validate(const SprayerConfig& cfg) {
    if (!finite(cfg.crop_height) || cfg.crop_height <= 0.0) fail("crop_height must be > 0");
    if (!finite(cfg.base_flight_height_above_crop) || cfg.base_flight_height_above_crop <= 0.0)
        fail("base_flight_height_above_crop must be > 0");
    if (!finite(cfg.spray_angle_deg) || cfg.spray_angle_deg <= 0.0 || cfg.spray_angle_deg >= 180.0)
        fail("spray_angle_deg must be in (0, 180)");
    if (!finite(cfg.base_spray_radius) || cfg.base_spray_radius <= 0.0)
        fail("base_spray_radius must be > 0");
    if (!finite(cfg.intensity_factor) || cfg.intensity_factor < 1.0)
        fail("intensity_factor must be >= 1");

    const double half_rad = cfg.spray_angle_deg / 2.0 * std::numbers::pi / 180.0;
    const double expected = cfg.base_flight_height_above_crop * std::tan(half_rad);
    if (std::abs(cfg.base_spray_radius - expected) / cfg.base_spray_radius > 1e-6)
        fail("base_spray_radius inconsistent with flight height and spray angle");
}

void validate(const MissionParams& params) {
    validate(params.start_point);
    if (!finite(params.neighbor_radius) || params.neighbor_radius <= 0.0)
        fail("neighbor_radius must be > 0");
    const bool gps = params.coordinate_mode == CoordinateMode::gps;
    if (gps && !params.gps_anchor) fail("gps coordinate mode requires a gps_anchor");
    if (!gps && params.gps_anchor) fail("gps_anchor given but coordinate mode is planar");
    if (params.gps_anchor) validate(*params.gps_anchor);
    if (params.message_passing_rounds < 0) fail("message_passing_rounds must be >= 0");
    if (params.transit_height_above_crop &&
        (!finite(*params.transit_height_above_crop) || *params.transit_height_above_crop <= 0.0))
        fail("transit_height_above_crop must be > 0");
}

}  // namespace sprayplan
