#include "gad/detector.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "gad/errors.hpp"
#include "gad/rips.hpp"

namespace gad {

const char* label_name(Label l) {
    switch (l) {
        case Label::boundary: return "boundary";
        case Label::manifold: return "manifold";
        case Label::intersection: return "intersection";
    }
    return "unknown";
}

Label label_from_name(const std::string& name) {
    if (name == "boundary") return Label::boundary;
    if (name == "manifold") return Label::manifold;
    if (name == "intersection") return Label::intersection;
    throw std::invalid_argument("unknown label name: " + name);
}

Label label_from_long_bars(int n_long_bars) {
    if (n_long_bars <= 0) return Label::boundary;
    if (n_long_bars == 1) return Label::manifold;
    return Label::intersection;
}

std::string flags_to_string(std::uint8_t flags) {
    if (flags & kFlagSparseAnnulus) return "sparse_annulus";
    return "";
}

std::uint8_t flags_from_string(const std::string& s) {
    if (s.empty()) return kFlagNone;
    if (s == "sparse_annulus") return kFlagSparseAnnulus;
    throw std::invalid_argument("unknown flag string: " + s);
}

DetectorConfig DetectorConfig::normalized(bool* swapped) const {
    DetectorConfig out = *this;
    if (swapped != nullptr) *swapped = false;
    if (!(out.r > 0.0) || !(out.s > 0.0)) {
        throw std::invalid_argument("annulus radii must be positive");
    }
    if (out.r == out.s) {
        throw std::invalid_argument("annulus radii must differ");
    }
    if (out.r > out.s) {
        std::swap(out.r, out.s);
        if (swapped != nullptr) *swapped = true;
        std::fprintf(stderr, "warning: inner radius exceeded outer radius; using (r, s) = (%g, %g)\n",
                     out.r, out.s);
    }
    if (out.k < 2) {
        throw std::invalid_argument("intrinsic dimension k must be at least 2");
    }
    if (out.t_max <= 0.0) out.t_max = 2.0 * out.s;
    if (out.max_dim <= 0) out.max_dim = out.k;
    if (out.max_dim < out.k) {
        throw std::invalid_argument("max_dim must allow degree k-1 homology");
    }
    if (out.min_annulus_size <= 0) out.min_annulus_size = out.k + 1;
    if (out.threads < 0) {
        throw std::invalid_argument("threads must be nonnegative");
    }
    if (out.threads == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        out.threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    return out;
}

std::array<std::size_t, 3> Partition::class_counts() const {
    std::array<std::size_t, 3> counts{};
    for (Label l : labels) counts[static_cast<std::size_t>(l)] += 1;
    return counts;
}

int annulus_long_bar_count(const PointCloud& annulus_points, const DetectorConfig& cfg) {
    const Filtration f = build_rips_filtration(annulus_points, cfg.max_dim, cfg.t_max);
    const Barcode bc = compute_barcode(f, cfg.k - 1);
    return count_long_bars(bc, cfg.k - 1, cfg.s - cfg.r, cfg.t_max);
}

PointClassification classify_point(const PointCloud& cloud, const SpatialIndex& index, index_t y,
                                   const DetectorConfig& cfg) {
    const std::vector<index_t> neighbors = index.annulus(AnnulusQuery{y, cfg.r, cfg.s});
    PointClassification out;
    out.annulus_size = static_cast<int>(neighbors.size());
    if (out.annulus_size < cfg.min_annulus_size) {
        out.label = Label::boundary;
        out.n_long_bars = 0;
        out.flags = kFlagSparseAnnulus;
        return out;
    }
    const PointCloud annulus = cloud.subset(neighbors);
    out.n_long_bars = annulus_long_bar_count(annulus, cfg);
    out.label = label_from_long_bars(out.n_long_bars);
    return out;
}

std::vector<PointClassification> classify_subset(const PointCloud& cloud,
                                                 std::span<const index_t> indices,
                                                 const DetectorConfig& raw_cfg) {
    const DetectorConfig cfg = raw_cfg.normalized();
    for (const index_t i : indices) {
        if (i < 0 || i >= cloud.size()) {
            throw data_error("point index " + std::to_string(i) + " out of range");
        }
    }
    const SpatialIndex index(cloud);
    const std::size_t n = indices.size();
    std::vector<PointClassification> out(n);

    // Each worker claims the next unprocessed slot and writes only to that
    // slot, so the result does not depend on the worker count or schedule.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            out[i] = classify_point(cloud, index, indices[i], cfg);
        }
    };

    const int threads = std::min<int>(cfg.threads, n == 0 ? 1 : static_cast<int>(n));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return out;
}

Partition detect(const PointCloud& cloud, const DetectorConfig& cfg) {
    std::vector<index_t> all(static_cast<std::size_t>(cloud.size()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<index_t>(i);
    const std::vector<PointClassification> results = classify_subset(cloud, all, cfg);

    Partition out;
    out.labels.reserve(results.size());
    out.n_long_bars.reserve(results.size());
    out.annulus_sizes.reserve(results.size());
    out.flags.reserve(results.size());
    for (const PointClassification& c : results) {
        out.labels.push_back(c.label);
        out.n_long_bars.push_back(c.n_long_bars);
        out.annulus_sizes.push_back(c.annulus_size);
        out.flags.push_back(c.flags);
    }
    return out;
}

LocalSvdScore local_svd_score(const PointCloud& cloud, const SpatialIndex& index, index_t y,
                              const DetectorConfig& cfg) {
    const std::vector<index_t> neighbors = index.annulus(AnnulusQuery{y, cfg.r, cfg.s});
    LocalSvdScore out;
    out.annulus_size = static_cast<int>(neighbors.size());
    if (neighbors.empty()) return out;

    const std::size_t d = cloud.ambient_dim();
    Eigen::MatrixXd centered(static_cast<Eigen::Index>(neighbors.size()),
                             static_cast<Eigen::Index>(d));
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
        const std::span<const double> p = cloud.point(neighbors[i]);
        for (std::size_t j = 0; j < d; ++j) {
            centered(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p[j];
        }
    }
    mean = centered.colwise().mean();
    centered.rowwise() -= mean;

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
    const Eigen::VectorXd sigma = svd.singularValues();
    double total = 0.0;
    double leading = 0.0;
    for (Eigen::Index j = 0; j < sigma.size(); ++j) {
        const double sq = sigma[j] * sigma[j];
        total += sq;
        if (j < cfg.k) leading += sq;
    }
    out.score = total > 0.0 ? leading / total : 0.0;
    return out;
}

std::size_t EvaluationReport::total() const {
    std::size_t n = 0;
    for (const auto& row : confusion) {
        for (std::size_t c : row) n += c;
    }
    return n;
}

EvaluationReport evaluate(const Partition& partition, const PointCloud& cloud,
                          double proximity_radius) {
    if (!cloud.ground_truth().has_value()) {
        throw data_error("evaluation requires generator ground truth");
    }
    const std::vector<GroundTruthLabel>& truth = *cloud.ground_truth();
    if (truth.size() != partition.size()) {
        throw data_error("partition size does not match cloud size");
    }

    EvaluationReport report;
    report.proximity_radius = proximity_radius;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        Label expected = Label::manifold;
        if (truth[i].distance_to_singular_locus <= proximity_radius) {
            expected = Label::intersection;
        } else if (stratum_kind(truth[i].stratum_id) == StratumKind::boundary) {
            expected = Label::boundary;
        }
        const std::size_t t = static_cast<std::size_t>(expected);
        const std::size_t p = static_cast<std::size_t>(partition.labels[i]);
        report.confusion[t][p] += 1;
    }
    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t row_total = 0;
        std::size_t col_total = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            row_total += report.confusion[c][j];
            col_total += report.confusion[j][c];
        }
        report.recall[c] = row_total > 0 ? static_cast<double>(report.confusion[c][c]) /
                                               static_cast<double>(row_total)
                                         : 0.0;
        report.precision[c] = col_total > 0 ? static_cast<double>(report.confusion[c][c]) /
                                                  static_cast<double>(col_total)
                                            : 0.0;
    }
    return report;
}

}  // namespace gad
