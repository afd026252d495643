#pragma once

#include <filesystem>
#include <span>

#include "sprayplan/mission.hpp"
#include "sprayplan/types.hpp"

namespace sprayplan {

/// Writes four SVGs into out_dir: hotspot_graph.svg (nodes shaded red by
/// score), tour.svg (visiting order over the region layout), altitude_map.svg
/// and flow_map.svg (spray waypoints colored by value). Output is
/// deterministic for a fixed plan.
void render_plots(const MissionPlan& plan, std::span<const DiseasedRegion> regions,
                  const std::filesystem::path& out_dir);

}  // namespace sprayplan
