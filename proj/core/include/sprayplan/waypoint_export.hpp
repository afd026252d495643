#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "sprayplan/mission.hpp"
#include "sprayplan/types.hpp"

namespace sprayplan {

enum class WaypointFormat { csv, geojson };

/// Shortest decimal representation that round-trips the exact double.
/// Locale-independent, '.' separator.
std::string format_double(double value);

/// Writes content to path via a temp file + rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Planar waypoint CSV: header x,y,altitude,flow, LF endings.
std::string waypoints_to_csv(const FlightPath& fp);

/// GPS waypoint CSV: header lat,lon,altitude,flow.
std::string waypoints_to_csv_gps(const std::vector<GeoWaypoint>& waypoints);

/// One LineString feature; altitude/flow as per-coordinate property arrays.
std::string waypoints_to_geojson(const std::vector<GeoWaypoint>& waypoints);

/// Serializes the flight path in the requested format. CSV columns are
/// lat/lon when an anchor is present, x/y otherwise; GeoJSON requires the
/// anchor.
void export_waypoints(const FlightPath& fp, WaypointFormat format,
                      const std::filesystem::path& path,
                      const std::optional<GeoPoint>& gps_anchor);

std::string report_to_json(const MissionReport& report);

void write_report(const MissionReport& report, const std::filesystem::path& path);

}  // namespace sprayplan
