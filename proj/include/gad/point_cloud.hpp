#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gad/errors.hpp"

namespace gad {

using index_t = std::int32_t;

// Per-point annotation produced by the synthetic generators.
// stratum_id: 0 = manifold interior, 1 = rim/boundary zone,
// 2 = singular zone; generators may offset by 10*sheet to keep
// sheet identity (id % 10 gives the stratum kind).
struct GroundTruthLabel {
    bool near_singularity = false;
    double distance_to_singular_locus = 0.0;
    int stratum_id = 0;
};

enum class StratumKind { manifold = 0, boundary = 1, intersection = 2 };

inline StratumKind stratum_kind(int stratum_id) {
    return static_cast<StratumKind>(stratum_id % 10);
}

// Finite point set in R^n, coordinates stored row-major.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::vector<double> coords, int ambient_dim);

    int ambient_dim() const { return dim_; }
    index_t size() const { return static_cast<index_t>(dim_ == 0 ? 0 : coords_.size() / dim_); }
    bool empty() const { return coords_.empty(); }

    std::span<const double> point(index_t i) const {
        return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
    }
    const std::vector<double>& coords() const { return coords_; }

    void push_back(std::span<const double> p);

    // Squared Euclidean distance between points i and j.
    double squared_distance(index_t i, index_t j) const {
        const double* a = coords_.data() + static_cast<std::size_t>(i) * dim_;
        const double* b = coords_.data() + static_cast<std::size_t>(j) * dim_;
        double acc = 0.0;
        for (int c = 0; c < dim_; ++c) {
            const double d = a[c] - b[c];
            acc += d * d;
        }
        return acc;
    }
    double distance(index_t i, index_t j) const { return std::sqrt(squared_distance(i, j)); }

    // Cloud restricted to the given point indices; ground truth follows along.
    PointCloud subset(std::span<const index_t> indices) const;

    std::optional<std::vector<GroundTruthLabel>>& ground_truth() { return ground_truth_; }
    const std::optional<std::vector<GroundTruthLabel>>& ground_truth() const { return ground_truth_; }

    // The proximity radius the generator used when setting near_singularity.
    double ground_truth_radius = 0.0;

private:
    std::vector<double> coords_;
    int dim_ = 0;
    std::optional<std::vector<GroundTruthLabel>> ground_truth_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);

inline double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace gad
