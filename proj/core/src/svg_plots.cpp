#include "sprayplan/svg_plots.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <system_error>
#include <vector>

#include "sprayplan/errors.hpp"
#include "sprayplan/waypoint_export.hpp"

namespace sprayplan {

namespace {

std::string px(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, r.ptr);
}

// Two-point blue-to-red ramp; t in [0, 1].
std::string ramp_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(0x2c + t * (0xd7 - 0x2c)));
    const int g = static_cast<int>(std::lround(0x7b + t * (0x19 - 0x7b)));
    const int b = static_cast<int>(std::lround(0xb6 + t * (0x1c - 0xb6)));
    return "rgb(" + std::to_string(r) + "," + std::to_string(g) + "," + std::to_string(b) + ")";
}

class Frame {
  public:
    Frame(double min_x, double min_y, double max_x, double max_y) {
        const double pad = std::max({(max_x - min_x) * 0.05, (max_y - min_y) * 0.05, 1.0});
        min_x_ = min_x - pad;
        min_y_ = min_y - pad;
        max_x_ = max_x + pad;
        max_y_ = max_y + pad;
        scale_ = kContentWidth / (max_x_ - min_x_);
        content_height_ = (max_y_ - min_y_) * scale_;
    }

    double x(double wx) const { return kMargin + (wx - min_x_) * scale_; }
    double y(double wy) const { return kMargin + (max_y_ - wy) * scale_; }
    double len(double meters) const { return meters * scale_; }

    double width() const { return kContentWidth + 2 * kMargin; }
    double height() const { return content_height_ + 2 * kMargin + kLegendHeight; }
    double legend_y() const { return content_height_ + 2 * kMargin + 18.0; }

    static constexpr double kContentWidth = 720.0;
    static constexpr double kMargin = 30.0;
    static constexpr double kLegendHeight = 46.0;

  private:
    double min_x_ = 0.0, min_y_ = 0.0, max_x_ = 0.0, max_y_ = 0.0;
    double scale_ = 1.0;
    double content_height_ = 0.0;
};

class Svg {
  public:
    explicit Svg(const Frame& frame) : frame_(frame) {
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(frame.width()) +
                 "\" height=\"" + px(frame.height()) + "\">\n";
        body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    void title(const std::string& text) {
        body_ += "<text x=\"" + px(Frame::kMargin) +
                 "\" y=\"18\" font-family=\"sans-serif\" font-size=\"14\">" + text + "</text>\n";
    }

    void open_group(const std::string& id) { body_ += "<g id=\"" + id + "\">\n"; }
    void close_group() { body_ += "</g>\n"; }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0) {
        body_ += "<line x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x2) +
                 "\" y2=\"" + px(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 px(stroke_width) + "\"/>\n";
    }

    void circle(double cx, double cy, double r, const std::string& fill,
                const std::string& extra = "") {
        body_ += "<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" + px(r) +
                 "\" fill=\"" + fill + "\"" + extra + "/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& stroke) {
        body_ += "<rect x=\"" + px(x) + "\" y=\"" + px(y) + "\" width=\"" + px(w) +
                 "\" height=\"" + px(h) + "\" fill=\"" + fill + "\" stroke=\"" + stroke +
                 "\"/>\n";
    }

    void polyline(const std::string& points, const std::string& stroke, double stroke_width) {
        body_ += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + px(stroke_width) + "\"/>\n";
    }

    void label(double x, double y, const std::string& text) {
        body_ += "<text x=\"" + px(x) + "\" y=\"" + px(y) +
                 "\" font-family=\"sans-serif\" font-size=\"12\">" + text + "</text>\n";
    }

    void write(const std::filesystem::path& path) {
        body_ += "</svg>\n";
        write_file_atomic(path, body_);
    }

    const Frame& frame() const { return frame_; }

  private:
    Frame frame_;
    std::string body_;
};

void draw_region_outlines(Svg& svg, std::span<const DiseasedRegion> regions) {
    const Frame& f = svg.frame();
    for (const auto& r : regions)
        svg.rect(f.x(r.origin.x), f.y(r.origin.y + r.height), f.len(r.width), f.len(r.height),
                 "none", "#bbbbbb");
}

// Swatch + min/max annotation for a value-colored layer.
void value_legend(Svg& svg, const std::string& caption, double min_v, double max_v) {
    const Frame& f = svg.frame();
    const double y = f.legend_y();
    svg.circle(Frame::kMargin + 6, y - 4, 5, ramp_color(0.0));
    svg.label(Frame::kMargin + 16, y, "min " + format_double(min_v));
    if (max_v != min_v) {
        svg.circle(Frame::kMargin + 126, y - 4, 5, ramp_color(1.0));
        svg.label(Frame::kMargin + 136, y, "max " + format_double(max_v));
    }
    svg.label(Frame::kMargin + 260, y, caption);
}

Frame mission_frame(const MissionPlan& plan, std::span<const DiseasedRegion> regions) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x, max_x = -min_x, max_y = -min_x;
    for (const auto& r : regions) {
        min_x = std::min(min_x, r.origin.x);
        min_y = std::min(min_y, r.origin.y);
        max_x = std::max(max_x, r.origin.x + r.width);
        max_y = std::max(max_y, r.origin.y + r.height);
    }
    for (const auto& w : plan.flight_path.waypoints) {
        min_x = std::min(min_x, w.x);
        min_y = std::min(min_y, w.y);
        max_x = std::max(max_x, w.x);
        max_y = std::max(max_y, w.y);
    }
    return {min_x, min_y, max_x, max_y};
}

void render_hotspot_graph(const MissionPlan& plan, std::span<const DiseasedRegion> regions,
                          const Frame& frame, const std::filesystem::path& path) {
    Svg svg(frame);
    svg.title("Hotspot scores");
    svg.open_group("data");
    std::vector<PlanarPoint> centers;
    centers.reserve(regions.size());
    for (const auto& r : regions) centers.push_back(region_center(r));
    for (const auto& e : plan.graph.edges)
        svg.line(frame.x(centers[e.i].x), frame.y(centers[e.i].y), frame.x(centers[e.j].x),
                 frame.y(centers[e.j].y), "#999999");
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const double radius_px =
            std::clamp(frame.len(std::sqrt(region_area(regions[i]) / std::numbers::pi)), 3.0, 24.0);
        svg.circle(frame.x(centers[i].x), frame.y(centers[i].y), radius_px, "rgb(255,0,0)",
                   " fill-opacity=\"" + format_double(plan.scores.scores[i]) +
                       "\" stroke=\"#333333\"");
    }
    svg.close_group();
    svg.open_group("legend");
    for (int k = 0; k <= 2; ++k) {
        const double s = k * 0.5;
        svg.circle(Frame::kMargin + 6 + 90.0 * k, frame.legend_y() - 4, 5, "rgb(255,0,0)",
                   " fill-opacity=\"" + format_double(s) + "\" stroke=\"#333333\"");
        svg.label(Frame::kMargin + 16 + 90.0 * k, frame.legend_y(), format_double(s));
    }
    svg.label(Frame::kMargin + 280, frame.legend_y(), "hotspot score");
    svg.close_group();
    svg.write(path);
}

void render_tour(const MissionPlan& plan, std::span<const DiseasedRegion> regions,
                 const Frame& frame, const std::filesystem::path& path) {
    Svg svg(frame);
    svg.title("Visiting order");
    svg.open_group("data");
    draw_region_outlines(svg, regions);

    const PlanarPoint start{plan.flight_path.waypoints.front().x,
                            plan.flight_path.waypoints.front().y};
    std::string points;
    for (const std::size_t idx : plan.tour.order) {
        const PlanarPoint p = idx == 0 ? start : region_center(regions[idx - 1]);
        points += px(frame.x(p.x)) + "," + px(frame.y(p.y)) + " ";
    }
    svg.polyline(points, "#1f77b4", 1.5);
    svg.rect(frame.x(start.x) - 4, frame.y(start.y) - 4, 8, 8, "#1f77b4", "none");
    svg.close_group();
    svg.open_group("legend");
    svg.label(Frame::kMargin, frame.legend_y(),
              "tour length " + format_double(plan.tour.length) + " m");
    svg.close_group();
    svg.write(path);
}

// Shared by the altitude and flow maps: gray transit polyline, spray
// waypoints colored by the selected value.
template <typename ValueFn>
void render_value_map(const MissionPlan& plan, std::span<const DiseasedRegion> regions,
                      const Frame& frame, const std::filesystem::path& path,
                      const std::string& title, const std::string& caption, ValueFn value) {
    Svg svg(frame);
    svg.title(title);

    const auto& fp = plan.flight_path;
    std::vector<bool> spraying(fp.waypoints.size(), false);
    for (const auto& span : fp.per_region_spans)
        for (std::size_t i = span.first; i <= span.last; ++i) spraying[i] = true;

    double min_v = std::numeric_limits<double>::infinity();
    double max_v = -min_v;
    for (std::size_t i = 0; i < fp.waypoints.size(); ++i) {
        if (!spraying[i]) continue;
        min_v = std::min(min_v, value(fp.waypoints[i]));
        max_v = std::max(max_v, value(fp.waypoints[i]));
    }

    std::string points;
    for (const auto& w : fp.waypoints) points += px(frame.x(w.x)) + "," + px(frame.y(w.y)) + " ";
    svg.polyline(points, "#cccccc", 0.8);
    draw_region_outlines(svg, regions);

    svg.open_group("data");
    for (std::size_t i = 0; i < fp.waypoints.size(); ++i) {
        if (!spraying[i]) continue;
        const double v = value(fp.waypoints[i]);
        const double t = max_v > min_v ? (v - min_v) / (max_v - min_v) : 0.0;
        svg.circle(frame.x(fp.waypoints[i].x), frame.y(fp.waypoints[i].y), 2.0, ramp_color(t));
    }
    svg.close_group();
    svg.open_group("legend");
    value_legend(svg, caption, min_v, max_v);
    svg.close_group();
    svg.write(path);
}

}  // namespace

void render_plots(const MissionPlan& plan, std::span<const DiseasedRegion> regions,
                  const std::filesystem::path& out_dir) {
    if (plan.flight_path.waypoints.empty())
        throw ValidationError("cannot plot an empty flight path");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
        throw IoError("cannot create plot directory: " + out_dir.string());

    const Frame frame = mission_frame(plan, regions);
    render_hotspot_graph(plan, regions, frame, out_dir / "hotspot_graph.svg");
    render_tour(plan, regions, frame, out_dir / "tour.svg");
    render_value_map(
        plan, regions, frame, out_dir / "altitude_map.svg", "Flight altitude",
        "altitude (m)", [](const Waypoint& w) { return w.altitude; });
    render_value_map(
        plan, regions, frame, out_dir / "flow_map.svg", "Sprayer flow rate",
        "flow multiplier", [](const Waypoint& w) { return w.flow; });
}

}  // namespace sprayplan
