#pragma once

#include <string>
#include <vector>

#include "gad/detector.hpp"
#include "gad/point_cloud.hpp"

namespace gad {

struct PlotConfig {
    int panel_width = 480;
    int panel_height = 480;
    double margin = 36.0;
    double point_radius = 2.0;
};

// Marker colours by class.
inline constexpr const char* kIntersectionColor = "#d62728";  // red
inline constexpr const char* kBoundaryColor = "#17becf";      // cyan
inline constexpr const char* kManifoldColor = "#9e9e9e";      // grey

const char* label_color(Label l);

// Scatter plot of a 2D or 3D cloud. 2D clouds give one panel; 3D clouds give
// three axis-pair panels (xy, xz, yz), each drawing every point. labels may
// be null (all points grey) and must otherwise match the cloud size. Higher
// dimensions are rejected; project first.
std::string scatter_svg(const PointCloud& cloud, const std::vector<Label>* labels,
                        const PlotConfig& cfg = {});

void write_scatter_svg(const std::string& path, const PointCloud& cloud,
                       const std::vector<Label>* labels, const PlotConfig& cfg = {});

}  // namespace gad
