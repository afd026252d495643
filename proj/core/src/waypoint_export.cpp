#include "sprayplan/waypoint_export.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "sprayplan/errors.hpp"

namespace sprayplan {

namespace {
using nlohmann::json;
}

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write file: " + path.string());
        out << content;
        if (!out) throw IoError("failed writing file: " + path.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move output into place: " + path.string());
}

std::string waypoints_to_csv(const FlightPath& fp) {
    std::string out = "x,y,altitude,flow\n";
    for (const auto& w : fp.waypoints) {
        out += format_double(w.x);
        out += ',';
        out += format_double(w.y);
        out += ',';
        out += format_double(w.altitude);
        out += ',';
        out += format_double(w.flow);
        out += '\n';
    }
    return out;
}

std::string waypoints_to_csv_gps(const std::vector<GeoWaypoint>& waypoints) {
    std::string out = "lat,lon,altitude,flow\n";
    for (const auto& w : waypoints) {
        out += format_double(w.lat);
        out += ',';
        out += format_double(w.lon);
        out += ',';
        out += format_double(w.altitude);
        out += ',';
        out += format_double(w.flow);
        out += '\n';
    }
    return out;
}

std::string waypoints_to_geojson(const std::vector<GeoWaypoint>& waypoints) {
    json coords = json::array();
    json altitude = json::array();
    json flow = json::array();
    for (const auto& w : waypoints) {
        coords.push_back({w.lon, w.lat});
        altitude.push_back(w.altitude);
        flow.push_back(w.flow);
    }
    const json doc = {
        {"type", "FeatureCollection"},
        {"features",
         {{{"type", "Feature"},
           {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
           {"properties", {{"altitude", altitude}, {"flow", flow}}}}}},
    };
    return doc.dump(2) + "\n";
}

void export_waypoints(const FlightPath& fp, WaypointFormat format,
                      const std::filesystem::path& path,
                      const std::optional<GeoPoint>& gps_anchor) {
    switch (format) {
        case WaypointFormat::csv:
            if (gps_anchor)
                write_file_atomic(path, waypoints_to_csv_gps(flight_path_to_gps(fp, *gps_anchor)));
            else
                write_file_atomic(path, waypoints_to_csv(fp));
            return;
        case WaypointFormat::geojson:
            if (!gps_anchor)
                throw ValidationError("geojson export requires gps mode (no anchor given)");
            write_file_atomic(path, waypoints_to_geojson(flight_path_to_gps(fp, *gps_anchor)));
            return;
    }
    throw ValidationError("unknown waypoint format");
}

std::string report_to_json(const MissionReport& report) {
    json regions = json::array();
    for (const auto& r : report.regions) {
        regions.push_back({{"id", r.id},
                           {"score", r.score},
                           {"dosage_multiplier", r.dosage_multiplier},
                           {"altitude", r.altitude},
                           {"row_spacing", r.row_spacing}});
    }
    const json doc = {{"tour_length", report.tour_length},
                      {"total_path_length", report.total_path_length},
                      {"waypoint_count", report.waypoint_count},
                      {"regions", regions}};
    return doc.dump(2) + "\n";
}

void write_report(const MissionReport& report, const std::filesystem::path& path) {
    write_file_atomic(path, report_to_json(report));
}

}  // namespace sprayplan
