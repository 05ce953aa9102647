#include "gad/point_cloud.hpp"

#include <cmath>
#include <string>

namespace gad {

PointCloud::PointCloud(std::vector<double> coords, int ambient_dim)
    : coords_(std::move(coords)), dim_(ambient_dim) {
    if (dim_ <= 0) throw std::invalid_argument("ambient_dim must be positive");
    if (coords_.size() % dim_ != 0)
        throw data_error("coordinate buffer size " + std::to_string(coords_.size()) +
                         " is not a multiple of ambient_dim " + std::to_string(dim_));
    for (double c : coords_)
        if (!std::isfinite(c)) throw data_error("non-finite coordinate in point cloud");
}

void PointCloud::push_back(std::span<const double> p) {
    if (dim_ == 0) dim_ = static_cast<int>(p.size());
    if (static_cast<int>(p.size()) != dim_)
        throw data_error("point of length " + std::to_string(p.size()) +
                         " in cloud of ambient_dim " + std::to_string(dim_));
    for (double c : p) {
        if (!std::isfinite(c)) throw data_error("non-finite coordinate in point cloud");
        coords_.push_back(c);
    }
}

PointCloud PointCloud::subset(std::span<const index_t> indices) const {
    PointCloud out;
    out.dim_ = dim_;
    out.coords_.reserve(indices.size() * dim_);
    for (index_t i : indices) {
        if (i < 0 || i >= size()) throw std::out_of_range("subset index out of range");
        auto p = point(i);
        out.coords_.insert(out.coords_.end(), p.begin(), p.end());
    }
    if (ground_truth_) {
        std::vector<GroundTruthLabel> gt;
        gt.reserve(indices.size());
        for (index_t i : indices) gt.push_back((*ground_truth_)[i]);
        out.ground_truth_ = std::move(gt);
        out.ground_truth_radius = ground_truth_radius;
    }
    return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        const double d = a[c] - b[c];
        acc += d * d;
    }
    return acc;
}

}  // namespace gad
