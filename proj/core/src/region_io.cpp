#include "sprayplan/region_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>

#include <json.hpp>

#include "sprayplan/errors.hpp"
#include "sprayplan/geo.hpp"
#include "sprayplan/waypoint_export.hpp"

namespace sprayplan {

namespace {

using nlohmann::json;

json parse_json_file(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw IoError("cannot read file: " + path.string());
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
    if (!obj[key].is_number()) throw ValidationError(where + ": field '" + key + "' must be a number");
    return obj[key].get<double>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
    if (!obj[key].is_string()) throw ValidationError(where + ": field '" + key + "' must be a string");
    return obj[key].get<std::string>();
}

GeoPoint parse_geo_point(const json& obj, const std::string& where) {
    GeoPoint p{require_number(obj, "lat", where), require_number(obj, "lon", where)};
    validate(p);
    return p;
}

// Four corners of an axis-aligned lat/lon box, in any order.
GeoBounds bounds_from_corners(const json& corners, const std::string& where) {
    if (!corners.is_array() || corners.size() != 4)
        throw ValidationError(where + ": 'corners' must be an array of 4 points");
    std::vector<GeoPoint> pts;
    for (const auto& c : corners) pts.push_back(parse_geo_point(c, where));

    GeoBounds box;
    box.south = box.north = pts[0].lat;
    box.west = box.east = pts[0].lon;
    for (const auto& p : pts) {
        box.south = std::min(box.south, p.lat);
        box.north = std::max(box.north, p.lat);
        box.west = std::min(box.west, p.lon);
        box.east = std::max(box.east, p.lon);
    }

    constexpr double tol = 1e-9;  // degrees
    bool seen[2][2] = {};
    for (const auto& p : pts) {
        const bool at_south = std::abs(p.lat - box.south) <= tol;
        const bool at_north = std::abs(p.lat - box.north) <= tol;
        const bool at_west = std::abs(p.lon - box.west) <= tol;
        const bool at_east = std::abs(p.lon - box.east) <= tol;
        if ((!at_south && !at_north) || (!at_west && !at_east))
            throw ValidationError(where + ": corners do not form an axis-aligned box");
        seen[at_north ? 1 : 0][at_east ? 1 : 0] = true;
    }
    if (!(seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1]))
        throw ValidationError(where + ": corners do not cover all four box corners");
    return box;
}

DiseasedRegion parse_planar_region(const json& entry, const std::string& where) {
    DiseasedRegion r;
    r.id = require_string(entry, "id", where);
    r.origin.x = require_number(entry, "x_min", where);
    r.origin.y = require_number(entry, "y_min", where);
    r.width = require_number(entry, "width", where);
    r.height = require_number(entry, "height", where);
    validate(r);
    return r;
}

DiseasedRegion parse_gps_region(const json& entry, const GeoPoint& anchor,
                                const std::string& where) {
    const std::string id = require_string(entry, "id", where);
    if (entry.contains("corners")) {
        return gps_region_to_planar(id, bounds_from_corners(entry["corners"], where), anchor);
    }
    if (entry.contains("southwest")) {
        DiseasedRegion r;
        r.id = id;
        r.origin = gps_to_planar(parse_geo_point(entry["southwest"], where), anchor);
        r.width = require_number(entry, "width_m", where);
        r.height = require_number(entry, "height_m", where);
        validate(r);
        return r;
    }
    throw ValidationError(where + ": gps region needs 'corners' or 'southwest' + dimensions");
}

RegionFileData load_regions_json(const std::filesystem::path& path) {
    const json doc = parse_json_file(path);
    const std::string where = path.filename().string();
    if (!doc.is_object()) throw ValidationError(where + ": top level must be an object");
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != 1)
        throw ValidationError(where + ": unsupported or missing schema version (expected 1)");

    RegionFileData data;
    const std::string mode = require_string(doc, "coordinate_mode", where);
    if (mode == "planar") {
        data.coordinate_mode = CoordinateMode::planar;
    } else if (mode == "gps") {
        data.coordinate_mode = CoordinateMode::gps;
    } else {
        throw ValidationError(where + ": coordinate_mode must be 'planar' or 'gps'");
    }

    if (data.coordinate_mode == CoordinateMode::gps) {
        if (!doc.contains("gps_anchor"))
            throw ValidationError(where + ": gps mode requires 'gps_anchor'");
        data.gps_anchor = parse_geo_point(doc["gps_anchor"], where + ": gps_anchor");
    } else if (doc.contains("gps_anchor")) {
        throw ValidationError(where + ": 'gps_anchor' given but coordinate_mode is planar");
    }

    if (!doc.contains("regions") || !doc["regions"].is_array())
        throw ValidationError(where + ": missing 'regions' array");

    for (std::size_t i = 0; i < doc["regions"].size(); ++i) {
        const std::string entry_where = where + ": regions[" + std::to_string(i) + "]";
        const json& entry = doc["regions"][i];
        if (!entry.is_object()) throw ValidationError(entry_where + ": must be an object");
        data.regions.push_back(data.coordinate_mode == CoordinateMode::planar
                                   ? parse_planar_region(entry, entry_where)
                                   : parse_gps_region(entry, *data.gps_anchor, entry_where));
    }
    return data;
}

double parse_csv_number(const std::string& field, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(where + ": '" + field + "' is not a number");
    }
}

RegionFileData load_regions_csv(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw IoError("cannot read file: " + path.string());
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path.string());

    RegionFileData data;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = path.filename().string() + ":" + std::to_string(line_no);

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5)
            throw ValidationError(where + ": expected 5 fields id,x_min,y_min,width,height");

        if (line_no == 1) {
            if (fields[0] != "id" || fields[1] != "x_min" || fields[2] != "y_min" ||
                fields[3] != "width" || fields[4] != "height")
                throw ValidationError(where + ": header must be id,x_min,y_min,width,height");
            continue;
        }
        DiseasedRegion r;
        r.id = fields[0];
        r.origin.x = parse_csv_number(fields[1], where);
        r.origin.y = parse_csv_number(fields[2], where);
        r.width = parse_csv_number(fields[3], where);
        r.height = parse_csv_number(fields[4], where);
        validate(r);
        data.regions.push_back(std::move(r));
    }
    return data;
}

}  // namespace

RegionFileData load_regions(const std::filesystem::path& path) {
    RegionFileData data = path.extension() == ".csv" ? load_regions_csv(path)
                                                     : load_regions_json(path);
    std::unordered_set<std::string> ids;
    for (const auto& r : data.regions)
        if (!ids.insert(r.id).second)
            throw ValidationError("duplicate region id '" + r.id + "'");
    return data;
}

void write_regions_json(std::span<const DiseasedRegion> regions,
                        const std::filesystem::path& path) {
    json doc;
    doc["version"] = 1;
    doc["coordinate_mode"] = "planar";
    doc["regions"] = json::array();
    for (const auto& r : regions) {
        validate(r);
        doc["regions"].push_back({{"id", r.id},
                                  {"x_min", r.origin.x},
                                  {"y_min", r.origin.y},
                                  {"width", r.width},
                                  {"height", r.height}});
    }
    write_file_atomic(path, doc.dump(2) + "\n");
}

AppConfig load_config(const std::filesystem::path& path) {
    const json doc = parse_json_file(path);
    const std::string where = path.filename().string();
    if (!doc.is_object()) throw ValidationError(where + ": top level must be an object");

    AppConfig cfg;
    const bool has_sprayer_fields =
        doc.contains("crop_height") || doc.contains("base_flight_height_above_crop") ||
        doc.contains("spray_angle_deg") || doc.contains("base_spray_radius") ||
        doc.contains("intensity_factor") || doc.contains("vrs_built_in");
    if (has_sprayer_fields) {
        std::optional<double> angle;
        std::optional<double> radius;
        if (doc.contains("spray_angle_deg"))
            angle = require_number(doc, "spray_angle_deg", where);
        if (doc.contains("base_spray_radius"))
            radius = require_number(doc, "base_spray_radius", where);
        cfg.sprayer = make_sprayer_config(
            require_number(doc, "crop_height", where),
            require_number(doc, "base_flight_height_above_crop", where), angle, radius,
            doc.contains("intensity_factor") ? require_number(doc, "intensity_factor", where)
                                             : 1.0,
            doc.contains("vrs_built_in") ? doc["vrs_built_in"].get<bool>() : false);
    }

    if (doc.contains("start_point"))
        cfg.mission.start_point = {require_number(doc["start_point"], "x", where + ": start_point"),
                                   require_number(doc["start_point"], "y", where + ": start_point")};
    if (doc.contains("neighbor_radius"))
        cfg.mission.neighbor_radius = require_number(doc, "neighbor_radius", where);
    if (doc.contains("message_passing_rounds")) {
        if (!doc["message_passing_rounds"].is_number_integer())
            throw ValidationError(where + ": message_passing_rounds must be an integer");
        cfg.mission.message_passing_rounds = doc["message_passing_rounds"].get<int>();
    }
    if (doc.contains("transit_height_above_crop"))
        cfg.mission.transit_height_above_crop =
            require_number(doc, "transit_height_above_crop", where);

    validate(cfg.mission);
    return cfg;
}

}  // namespace sprayplan
