// sprayplan CLI: plan spray missions, score hotspots, or print the visiting
// order for a region file. Exit codes: 0 success, 1 validation error, 2 I/O
// error. Diagnostics go to stderr.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sprayplan/disease_graph.hpp"
#include "sprayplan/errors.hpp"
#include "sprayplan/mission.hpp"
#include "sprayplan/region_io.hpp"
#include "sprayplan/svg_plots.hpp"
#include "sprayplan/tsp.hpp"
#include "sprayplan/waypoint_export.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
    std::string regions_path;
    std::string config_path;
    std::string out_dir;
    std::string format = "csv";
    bool plots = false;
    bool sparse = false;
    long seed = 0;  // reserved; plans are deterministic
};

sprayplan::AppConfig load_config_or_default(const std::string& path) {
    if (path.empty()) return {};
    return sprayplan::load_config(path);
}

sprayplan::MissionParams merged_params(const sprayplan::RegionFileData& file,
                                       sprayplan::AppConfig& cfg) {
    sprayplan::MissionParams params = cfg.mission;
    params.coordinate_mode = file.coordinate_mode;
    params.gps_anchor = file.gps_anchor;
    return params;
}

int run_plan(const Options& opt) {
    const sprayplan::RegionFileData file = sprayplan::load_regions(opt.regions_path);
    sprayplan::AppConfig cfg = sprayplan::load_config(opt.config_path);
    if (!cfg.sprayer)
        throw sprayplan::ValidationError(opt.config_path +
                                         ": planning requires sprayer geometry "
                                         "(crop_height, base_flight_height_above_crop, "
                                         "spray_angle_deg or base_spray_radius)");
    const sprayplan::MissionParams params = merged_params(file, cfg);

    const sprayplan::MissionPlan plan =
        sprayplan::plan_mission(file.regions, params, *cfg.sprayer, {opt.sparse});

    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec || !fs::is_directory(opt.out_dir))
        throw sprayplan::IoError("cannot create output directory: " + opt.out_dir);

    const bool geojson = opt.format == "geojson";
    const fs::path waypoint_file =
        fs::path(opt.out_dir) / (geojson ? "waypoints.geojson" : "waypoints.csv");
    sprayplan::export_waypoints(plan.flight_path,
                                geojson ? sprayplan::WaypointFormat::geojson
                                        : sprayplan::WaypointFormat::csv,
                                waypoint_file, file.gps_anchor);
    sprayplan::write_report(plan.report, fs::path(opt.out_dir) / "report.json");
    if (opt.plots) sprayplan::render_plots(plan, file.regions, opt.out_dir);

    std::cerr << "wrote " << waypoint_file.string() << " (" << plan.report.waypoint_count
              << " waypoints)\n";
    return 0;
}

int run_score(const Options& opt) {
    const sprayplan::RegionFileData file = sprayplan::load_regions(opt.regions_path);
    sprayplan::AppConfig cfg = load_config_or_default(opt.config_path);
    const sprayplan::MissionParams params = merged_params(file, cfg);

    const sprayplan::DiseaseGraph graph =
        sprayplan::build_graph(file.regions, params.neighbor_radius);
    const sprayplan::HotspotScores scores =
        sprayplan::hotspot_scores(graph, params.message_passing_rounds);

    json region_ids = json::array();
    for (const auto& node : graph.nodes) region_ids.push_back(node.region_id);
    const json doc = {{"primary_hotspot", scores.primary_hotspot},
                      {"region_ids", region_ids},
                      {"scores", scores.scores}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_tour(const Options& opt) {
    const sprayplan::RegionFileData file = sprayplan::load_regions(opt.regions_path);
    sprayplan::AppConfig cfg = load_config_or_default(opt.config_path);
    const sprayplan::MissionParams params = merged_params(file, cfg);

    const sprayplan::MetricInstance metric =
        sprayplan::build_metric_instance(params.start_point, file.regions);
    const sprayplan::TourPlan tour = sprayplan::christofides_tour(metric);

    json order = json::array();
    for (const std::size_t idx : tour.order)
        if (idx != 0) order.push_back(file.regions[idx - 1].id);
    const json doc = {{"start", {{"x", params.start_point.x}, {"y", params.start_point.y}}},
                      {"order", order},
                      {"length", tour.length}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variable-rate spray mission planner for diseased field regions"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* plan = app.add_subcommand("plan", "Compute the full flight plan");
    plan->add_option("--regions", opt.regions_path, "Region file (.json or .csv)")->required();
    plan->add_option("--config", opt.config_path, "Sprayer/mission config (.json)")->required();
    plan->add_option("--out", opt.out_dir, "Output directory")->required();
    plan->add_option("--format", opt.format, "Waypoint format: csv or geojson")
        ->check(CLI::IsMember({"csv", "geojson"}));
    plan->add_flag("--plots", opt.plots, "Also render SVG plots");
    plan->add_flag("--sparse", opt.sparse, "Emit only sweep row endpoints");
    plan->add_option("--seed", opt.seed, "Reserved; plans are deterministic");

    CLI::App* score = app.add_subcommand("score", "Print hotspot scores as JSON");
    score->add_option("--regions", opt.regions_path, "Region file (.json or .csv)")->required();
    score->add_option("--config", opt.config_path, "Optional config (.json)");

    CLI::App* tour = app.add_subcommand("tour", "Print the region visiting order as JSON");
    tour->add_option("--regions", opt.regions_path, "Region file (.json or .csv)")->required();
    tour->add_option("--config", opt.config_path, "Optional config (.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (plan->parsed()) return run_plan(opt);
        if (score->parsed()) return run_score(opt);
        if (tour->parsed()) return run_tour(opt);
    } catch (const sprayplan::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sprayplan::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
