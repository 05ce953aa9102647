#include "gad/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gad/errors.hpp"

namespace gad {

const char* label_color(Label l) {
    switch (l) {
        case Label::intersection: return kIntersectionColor;
        case Label::boundary: return kBoundaryColor;
        case Label::manifold: return kManifoldColor;
    }
    return kManifoldColor;
}

namespace {

struct Range {
    double lo = 0.0, hi = 1.0;
};

Range axis_range(const PointCloud& cloud, int axis) {
    Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (index_t i = 0; i < cloud.size(); ++i) {
        const double v = cloud.point(i)[static_cast<std::size_t>(axis)];
        r.lo = std::min(r.lo, v);
        r.hi = std::max(r.hi, v);
    }
    if (cloud.empty()) return {0.0, 1.0};
    if (r.lo == r.hi) {
        r.lo -= 1.0;
        r.hi += 1.0;
    }
    return r;
}

std::string round2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void render_panel(std::ostream& out, const PointCloud& cloud, const std::vector<Label>* labels,
                  const PlotConfig& cfg, int axis_x, int axis_y, double offset_x,
                  const char* title) {
    const Range rx = axis_range(cloud, axis_x);
    const Range ry = axis_range(cloud, axis_y);
    const double inner_w = cfg.panel_width - 2.0 * cfg.margin;
    const double inner_h = cfg.panel_height - 2.0 * cfg.margin;

    out << "<g>\n";
    out << "<rect x=\"" << round2(offset_x + cfg.margin) << "\" y=\"" << round2(cfg.margin)
        << "\" width=\"" << round2(inner_w) << "\" height=\"" << round2(inner_h)
        << "\" fill=\"none\" stroke=\"#444444\"/>\n";
    out << "<text x=\"" << round2(offset_x + cfg.panel_width / 2.0) << "\" y=\""
        << round2(cfg.margin - 10.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << title
        << "</text>\n";

    for (index_t i = 0; i < cloud.size(); ++i) {
        const std::span<const double> p = cloud.point(i);
        const double fx = (p[static_cast<std::size_t>(axis_x)] - rx.lo) / (rx.hi - rx.lo);
        // SVG y grows downward.
        const double fy = 1.0 - (p[static_cast<std::size_t>(axis_y)] - ry.lo) / (ry.hi - ry.lo);
        const char* color =
            labels != nullptr ? label_color((*labels)[static_cast<std::size_t>(i)]) : kManifoldColor;
        out << "<circle cx=\"" << round2(offset_x + cfg.margin + fx * inner_w) << "\" cy=\""
            << round2(cfg.margin + fy * inner_h) << "\" r=\"" << round2(cfg.point_radius)
            << "\" fill=\"" << color << "\"/>\n";
    }
    out << "</g>\n";
}

}  // namespace

std::string scatter_svg(const PointCloud& cloud, const std::vector<Label>* labels,
                        const PlotConfig& cfg) {
    if (!cloud.empty() && cloud.ambient_dim() != 2 && cloud.ambient_dim() != 3) {
        throw data_error("scatter plots need 2D or 3D points; project higher dimensions first");
    }
    if (labels != nullptr && labels->size() != static_cast<std::size_t>(cloud.size())) {
        throw std::invalid_argument("label count does not match point count");
    }

    const int panels = cloud.ambient_dim() == 3 ? 3 : 1;
    const int width = cfg.panel_width * panels;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << cfg.panel_height << "\" viewBox=\"0 0 " << width << ' ' << cfg.panel_height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    if (panels == 1) {
        render_panel(out, cloud, labels, cfg, 0, 1, 0.0, "x / y");
    } else {
        render_panel(out, cloud, labels, cfg, 0, 1, 0.0, "x / y");
        render_panel(out, cloud, labels, cfg, 0, 2, cfg.panel_width, "x / z");
        render_panel(out, cloud, labels, cfg, 1, 2, 2.0 * cfg.panel_width, "y / z");
    }
    out << "</svg>\n";
    return out.str();
}

void write_scatter_svg(const std::string& path, const PointCloud& cloud,
                       const std::vector<Label>* labels, const PlotConfig& cfg) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << scatter_svg(cloud, labels, cfg);
    if (!out) throw io_error("write failed for " + path);
}

}  // namespace gad
