#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "sprayplan/types.hpp"

namespace sprayplan {

/// Parsed region file: regions in file order, already in planar meters
/// (GPS inputs are projected against the file's anchor).
struct RegionFileData {
    CoordinateMode coordinate_mode = CoordinateMode::planar;
    std::optional<GeoPoint> gps_anchor;
    std::vector<DiseasedRegion> regions;
};

/// Reads a .json region file (planar or gps entries) or a planar .csv with
/// header id,x_min,y_min,width,height.
RegionFileData load_regions(const std::filesystem::path& path);

/// Writes a planar region file (version 1 JSON schema).
void write_regions_json(std::span<const DiseasedRegion> regions,
                        const std::filesystem::path& path);

/// Sprayer and mission settings from one config file. The sprayer block is
/// absent when the file carries no sprayer geometry (enough for scoring and
/// tour queries, not for full planning).
struct AppConfig {
    std::optional<SprayerConfig> sprayer;
    MissionParams mission;  // coordinate_mode/gps_anchor are filled from the region file
};

/// Reads a JSON config. Defaults: neighbor_radius 25, message_passing_rounds
/// 2, intensity_factor 1, vrs_built_in false, start_point (0,0).
AppConfig load_config(const std::filesystem::path& path);

}  // namespace sprayplan
