#pragma once

#include <vector>

#include "gad/point_cloud.hpp"

namespace gad {

struct AnnulusQuery {
    index_t center_index = 0;
    double inner_radius = 0.0;  // r
    double outer_radius = 0.0;  // s, must satisfy 0 < r < s
};

// Range-search structure over an immutable cloud. A k-d tree is built for
// ambient_dim <= 8; higher dimensions fall back to a linear scan, which is
// what the tree degenerates to there anyway. Queries are read-only and
// safe to run concurrently.
class SpatialIndex {
public:
    static constexpr int kMaxTreeDim = 8;

    explicit SpatialIndex(const PointCloud& cloud);

    index_t size() const { return static_cast<index_t>(order_.size()); }
    bool uses_tree() const { return uses_tree_; }

    // Indices of all points with distance(center, p) <= radius, center included.
    std::vector<index_t> ball(std::span<const double> center, double radius) const;

    // Indices i != center with r <= distance <= s (closed bounds, exact
    // comparisons on squared distances). Sorted ascending.
    std::vector<index_t> annulus(const AnnulusQuery& q) const;

private:
    struct Node {
        int split_dim = -1;
        double split_value = 0.0;
        index_t begin = 0, end = 0;  // leaf range into order_
        int left = -1, right = -1;
    };

    void build(index_t begin, index_t end, int node);
    void ball_recurse(int node, std::span<const double> center, double sq_radius,
                      std::vector<index_t>& out) const;

    const PointCloud* cloud_;
    bool uses_tree_ = false;
    std::vector<index_t> order_;
    std::vector<Node> nodes_;
    std::vector<double> lo_, hi_;  // per-node bounding boxes, flattened
};

std::vector<index_t> annulus_neighbors(const PointCloud& cloud, const SpatialIndex& index,
                                       const AnnulusQuery& q);

// Brute-force reference for the same query; used as the range-search oracle.
std::vector<index_t> annulus_neighbors_brute_force(const PointCloud& cloud, const AnnulusQuery& q);

// Connected components under "distance <= radius" adjacency (single linkage).
// Returns one component id per point, ids numbered from 0 in order of first
// appearance. Empty cloud gives an empty vector.
std::vector<int> single_linkage_components(const PointCloud& cloud, double radius);

}  // namespace gad
