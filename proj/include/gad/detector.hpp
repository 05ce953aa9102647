#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gad/persistence.hpp"
#include "gad/point_cloud.hpp"
#include "gad/spatial_index.hpp"

namespace gad {

enum class Label : std::uint8_t { boundary = 0, manifold = 1, intersection = 2 };

const char* label_name(Label l);
Label label_from_name(const std::string& name);

// N_y = 0 -> boundary, N_y = 1 -> manifold, N_y >= 2 -> intersection.
Label label_from_long_bars(int n_long_bars);

enum PointFlags : std::uint8_t {
    kFlagNone = 0,
    kFlagSparseAnnulus = 1,  // |A_y| < min_annulus_size; classified boundary
};

std::string flags_to_string(std::uint8_t flags);
std::uint8_t flags_from_string(const std::string& s);

struct DetectorConfig {
    double r = 0.0;             // inner annulus radius
    double s = 0.0;             // outer annulus radius
    int k = 2;                  // intrinsic dimension; homology degree k - 1
    double t_max = 0.0;         // filtration cap; 0 -> 2 * s
    int max_dim = 0;            // simplex dimension cap; 0 -> k
    int min_annulus_size = 0;   // 0 -> k + 1
    int threads = 1;            // 0 -> hardware concurrency

    // Resolves defaults and applies the documented r/s swap rule (a swapped
    // pair is accepted with a warning rather than rejected). Throws
    // std::invalid_argument on r == s, nonpositive radii, or k < 2.
    DetectorConfig normalized(bool* swapped = nullptr) const;
};

struct PointClassification {
    Label label = Label::boundary;
    int n_long_bars = 0;
    int annulus_size = 0;
    std::uint8_t flags = kFlagNone;
};

struct Partition {
    std::vector<Label> labels;
    std::vector<int> n_long_bars;
    std::vector<int> annulus_sizes;
    std::vector<std::uint8_t> flags;

    std::size_t size() const { return labels.size(); }
    std::array<std::size_t, 3> class_counts() const;
};

// Long-bar count of a point set treated as an annulus A_y: degree k-1
// barcode of its Rips filtration, bars longer than s - r. The config must
// already be normalized.
int annulus_long_bar_count(const PointCloud& annulus_points, const DetectorConfig& cfg);

PointClassification classify_point(const PointCloud& cloud, const SpatialIndex& index, index_t y,
                                   const DetectorConfig& cfg);

// Classifies the listed points against the whole cloud, in parallel when
// cfg.threads != 1. Output is identical for any thread count. Throws
// data_error on out-of-range indices.
std::vector<PointClassification> classify_subset(const PointCloud& cloud,
                                                 std::span<const index_t> indices,
                                                 const DetectorConfig& cfg);

// classify_subset over every point, assembled into a Partition.
Partition detect(const PointCloud& cloud, const DetectorConfig& cfg);

struct LocalSvdScore {
    double score = 0.0;
    int annulus_size = 0;  // 0 means the score is a placeholder
};

// Fraction of local variance captured by the best k-dimensional fit of the
// annulus around y: sum of the first k squared singular values over the
// total. Near 1 away from intersections.
LocalSvdScore local_svd_score(const PointCloud& cloud, const SpatialIndex& index, index_t y,
                              const DetectorConfig& cfg);

struct EvaluationReport {
    // confusion[true][predicted], classes ordered boundary, manifold, intersection.
    std::array<std::array<std::size_t, 3>, 3> confusion{};
    std::array<double, 3> precision{};
    std::array<double, 3> recall{};
    double proximity_radius = 0.0;

    std::size_t total() const;
};

// Scores a partition against generator ground truth. The positive class for
// the intersection row is distance_to_singular_locus <= proximity_radius;
// boundary truth comes from the generator's rim strata. Throws data_error
// if the cloud has no ground truth.
EvaluationReport evaluate(const Partition& partition, const PointCloud& cloud,
                          double proximity_radius);

}  // namespace gad
