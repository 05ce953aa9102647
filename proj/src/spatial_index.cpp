#include "gad/spatial_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gad {

namespace {
constexpr index_t kLeafSize = 16;
}

SpatialIndex::SpatialIndex(const PointCloud& cloud) : cloud_(&cloud) {
    order_.resize(cloud.size());
    std::iota(order_.begin(), order_.end(), 0);
    uses_tree_ = cloud.ambient_dim() > 0 && cloud.ambient_dim() <= kMaxTreeDim && cloud.size() > kLeafSize;
    if (!uses_tree_) return;
    nodes_.push_back({});
    lo_.resize(cloud.ambient_dim());
    hi_.resize(cloud.ambient_dim());
    build(0, cloud.size(), 0);
}

void SpatialIndex::build(index_t begin, index_t end, int node) {
    const int dim = cloud_->ambient_dim();
    // Bounding box of the range, to pick the widest split dimension.
    std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
    std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
    for (index_t k = begin; k < end; ++k) {
        auto p = cloud_->point(order_[k]);
        for (int c = 0; c < dim; ++c) {
            lo[c] = std::min(lo[c], p[c]);
            hi[c] = std::max(hi[c], p[c]);
        }
    }
    nodes_[node].begin = begin;
    nodes_[node].end = end;
    const std::size_t box = static_cast<std::size_t>(node) * dim;
    if (lo_.size() < box + dim) {
        lo_.resize(box + dim);
        hi_.resize(box + dim);
    }
    std::copy(lo.begin(), lo.end(), lo_.begin() + box);
    std::copy(hi.begin(), hi.end(), hi_.begin() + box);

    if (end - begin <= kLeafSize) return;

    int split = 0;
    for (int c = 1; c < dim; ++c)
        if (hi[c] - lo[c] > hi[split] - lo[split]) split = c;
    if (hi[split] - lo[split] == 0.0) return;  // all points coincide; stay a leaf

    const index_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](index_t a, index_t b) { return cloud_->point(a)[split] < cloud_->point(b)[split]; });
    nodes_[node].split_dim = split;
    nodes_[node].split_value = cloud_->point(order_[mid])[split];

    const int left = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    nodes_.push_back({});
    nodes_[node].left = left;
    nodes_[node].right = left + 1;
    build(begin, mid, left);
    build(mid, end, left + 1);
}

std::vector<index_t> SpatialIndex::ball(std::span<const double> center, double radius) const {
    if (static_cast<int>(center.size()) != cloud_->ambient_dim())
        throw std::invalid_argument("query dimension mismatch");
    if (radius < 0.0) throw std::invalid_argument("radius must be nonnegative");
    std::vector<index_t> out;
    const double sq = radius * radius;
    if (!uses_tree_) {
        for (index_t i = 0; i < cloud_->size(); ++i)
            if (squared_distance(center, cloud_->point(i)) <= sq) out.push_back(i);
        return out;
    }
    ball_recurse(0, center, sq, out);
    std::sort(out.begin(), out.end());
    return out;
}

void SpatialIndex::ball_recurse(int node, std::span<const double> center, double sq_radius,
                                std::vector<index_t>& out) const {
    const Node& nd = nodes_[node];
    const int dim = cloud_->ambient_dim();
    const std::size_t box = static_cast<std::size_t>(node) * dim;
    double sq_box = 0.0;
    for (int c = 0; c < dim; ++c) {
        double d = 0.0;
        if (center[c] < lo_[box + c]) d = lo_[box + c] - center[c];
        else if (center[c] > hi_[box + c]) d = center[c] - hi_[box + c];
        sq_box += d * d;
    }
    if (sq_box > sq_radius) return;
    if (nd.left < 0) {
        for (index_t k = nd.begin; k < nd.end; ++k) {
            const index_t i = order_[k];
            if (squared_distance(center, cloud_->point(i)) <= sq_radius) out.push_back(i);
        }
        return;
    }
    ball_recurse(nd.left, center, sq_radius, out);
    ball_recurse(nd.right, center, sq_radius, out);
}

std::vector<index_t> SpatialIndex::annulus(const AnnulusQuery& q) const {
    if (q.center_index < 0 || q.center_index >= cloud_->size())
        throw std::out_of_range("annulus center index " + std::to_string(q.center_index) +
                                " out of range for cloud of size " + std::to_string(cloud_->size()));
    if (!(q.inner_radius > 0.0) || !(q.inner_radius < q.outer_radius))
        throw std::invalid_argument("annulus radii must satisfy 0 < r < s");
    const double sq_r = q.inner_radius * q.inner_radius;
    const double sq_s = q.outer_radius * q.outer_radius;
    auto center = cloud_->point(q.center_index);
    std::vector<index_t> out;
    for (index_t i : ball(center, q.outer_radius)) {
        if (i == q.center_index) continue;
        const double sq = squared_distance(center, cloud_->point(i));
        if (sq >= sq_r && sq <= sq_s) out.push_back(i);
    }
    return out;
}

std::vector<index_t> annulus_neighbors(const PointCloud& cloud, const SpatialIndex& index,
                                       const AnnulusQuery& q) {
    (void)cloud;
    return index.annulus(q);
}

std::vector<index_t> annulus_neighbors_brute_force(const PointCloud& cloud, const AnnulusQuery& q) {
    if (q.center_index < 0 || q.center_index >= cloud.size())
        throw std::out_of_range("annulus center index out of range");
    if (!(q.inner_radius > 0.0) || !(q.inner_radius < q.outer_radius))
        throw std::invalid_argument("annulus radii must satisfy 0 < r < s");
    const double sq_r = q.inner_radius * q.inner_radius;
    const double sq_s = q.outer_radius * q.outer_radius;
    std::vector<index_t> out;
    for (index_t i = 0; i < cloud.size(); ++i) {
        if (i == q.center_index) continue;
        const double sq = cloud.squared_distance(q.center_index, i);
        if (sq >= sq_r && sq <= sq_s) out.push_back(i);
    }
    return out;
}

std::vector<int> single_linkage_components(const PointCloud& cloud, double radius) {
    const index_t n = cloud.size();
    std::vector<int> comp(n, -1);
    if (n == 0) return comp;
    SpatialIndex index(cloud);
    int next = 0;
    std::vector<index_t> stack;
    for (index_t seed = 0; seed < n; ++seed) {
        if (comp[seed] >= 0) continue;
        comp[seed] = next;
        stack.push_back(seed);
        while (!stack.empty()) {
            const index_t i = stack.back();
            stack.pop_back();
            for (index_t j : index.ball(cloud.point(i), radius)) {
                if (comp[j] < 0) {
                    comp[j] = next;
                    stack.push_back(j);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace gad
