#include "gad/datasets.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "gad/spatial_index.hpp"

namespace gad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

double wrapped_phi_gap(double a, double b) {
    const double d = std::fabs(wrap_phi(a) - wrap_phi(b));
    return std::min(d, kTwoPi - d);
}

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

std::array<double, 3> diff3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

}  // namespace

double Rng::normal() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

void add_ball_noise(std::vector<double>& point, double radius, Rng& rng) {
    if (radius <= 0.0) return;
    const std::size_t dim = point.size();
    std::vector<double> dir(dim);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            dir[c] = rng.normal();
            norm += dir[c] * dir[c];
        }
        norm = std::sqrt(norm);
    } while (norm == 0.0);
    const double len = radius * std::pow(rng.uniform01(), 1.0 / static_cast<double>(dim));
    for (std::size_t c = 0; c < dim; ++c) point[c] += dir[c] * (len / norm);
}

void HennebergParams::validate() const {
    if (!(beta_min >= 0.4 && beta_max <= 0.6 && beta_min <= beta_max)) {
        throw std::invalid_argument("beta range must lie within [0.4, 0.6]");
    }
    if (random_count < 0) throw std::invalid_argument("random_count must be nonnegative");
    if (random_count == 0 && (beta_count < 1 || phi_count < 3)) {
        throw std::invalid_argument("grid needs beta_count >= 1 and phi_count >= 3");
    }
    if (noise < 0.0) throw std::invalid_argument("noise must be nonnegative");
    if (proximity_radius < 0.0) throw std::invalid_argument("proximity_radius must be nonnegative");
    if (boundary_margin < 0.0) throw std::invalid_argument("boundary_margin must be nonnegative");
}

std::array<double, 3> henneberg_point(double beta, double phi) {
    if (beta == 0.0) throw std::domain_error("parametrisation divides by beta = 0");
    const double b2 = beta * beta;
    const double b3 = b2 * beta;
    const double b4 = b2 * b2;
    const double b6 = b3 * b3;
    const double x =
        2.0 * (b2 - 1.0) * std::cos(phi) / beta - 2.0 * (b6 - 1.0) * std::cos(3.0 * phi) / (3.0 * b3);
    const double y =
        -(6.0 * b2 * (b2 - 1.0) * std::sin(phi) + 2.0 * (b6 - 1.0) * std::sin(3.0 * phi)) / (3.0 * b3);
    const double z = 2.0 * (b4 + 1.0) * std::cos(2.0 * phi) / b2;
    return {x, y, z};
}

std::array<double, 3> henneberg_dbeta(double beta, double phi) {
    if (beta == 0.0) throw std::domain_error("parametrisation divides by beta = 0");
    const double ib2 = 1.0 / (beta * beta);
    const double b2 = beta * beta;
    const double ib3 = ib2 / beta;
    const double ib4 = ib2 * ib2;
    const double dx = 2.0 * (1.0 + ib2) * std::cos(phi) - 2.0 * (b2 + ib4) * std::cos(3.0 * phi);
    const double dy = -2.0 * (1.0 + ib2) * std::sin(phi) - 2.0 * (b2 + ib4) * std::sin(3.0 * phi);
    const double dz = 4.0 * (beta - ib3) * std::cos(2.0 * phi);
    return {dx, dy, dz};
}

std::array<double, 3> henneberg_dphi(double beta, double phi) {
    if (beta == 0.0) throw std::domain_error("parametrisation divides by beta = 0");
    const double ib = 1.0 / beta;
    const double b3 = beta * beta * beta;
    const double ib3 = ib * ib * ib;
    const double ib2 = ib * ib;
    const double b2 = beta * beta;
    const double dx = -2.0 * (beta - ib) * std::sin(phi) + 2.0 * (b3 - ib3) * std::sin(3.0 * phi);
    const double dy = -2.0 * (beta - ib) * std::cos(phi) - 2.0 * (b3 - ib3) * std::cos(3.0 * phi);
    const double dz = -4.0 * (b2 + ib2) * std::sin(2.0 * phi);
    return {dx, dy, dz};
}

double henneberg_area_density(double beta, double phi) {
    const std::array<double, 3> a = henneberg_dbeta(beta, phi);
    const std::array<double, 3> b = henneberg_dphi(beta, phi);
    const std::array<double, 3> cross = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                         a[0] * b[1] - a[1] * b[0]};
    return norm3(cross);
}

PointCloud SelfIntersectionLocus::points() const {
    std::vector<double> coords;
    coords.reserve(samples.size() * 3);
    for (const LocusSample& s : samples) {
        coords.insert(coords.end(), s.position.begin(), s.position.end());
    }
    return PointCloud(std::move(coords), 3);
}

namespace {

struct ParamPair {
    double b1, p1, b2, p2;
};

std::int64_t cell_key(const std::array<double, 3>& p, double cell) {
    const auto c = [cell](double v) {
        return static_cast<std::int64_t>(std::floor(v / cell)) & 0x1fffff;
    };
    return (c(p[0]) << 42) | (c(p[1]) << 21) | c(p[2]);
}

double pair_gap(const ParamPair& q, std::array<double, 3>& out_mid) {
    const std::array<double, 3> f1 = henneberg_point(q.b1, q.p1);
    const std::array<double, 3> f2 = henneberg_point(q.b2, q.p2);
    out_mid = {(f1[0] + f2[0]) / 2.0, (f1[1] + f2[1]) / 2.0, (f1[2] + f2[2]) / 2.0};
    return norm3(diff3(f1, f2));
}

// Damped Gauss-Newton on the 3-equation, 4-unknown system F(b1,p1) = F(b2,p2).
// Returns true when the image gap drops below tol.
bool refine_pair(ParamPair& q, double beta_min, double beta_max, double tol) {
    std::array<double, 3> mid{};
    double gap = pair_gap(q, mid);
    for (int iter = 0; iter < 40 && gap >= tol * 0.25; ++iter) {
        const std::array<double, 3> db1 = henneberg_dbeta(q.b1, q.p1);
        const std::array<double, 3> dp1 = henneberg_dphi(q.b1, q.p1);
        const std::array<double, 3> db2 = henneberg_dbeta(q.b2, q.p2);
        const std::array<double, 3> dp2 = henneberg_dphi(q.b2, q.p2);
        const std::array<double, 3> f1 = henneberg_point(q.b1, q.p1);
        const std::array<double, 3> f2 = henneberg_point(q.b2, q.p2);

        Eigen::MatrixXd jac(3, 4);
        Eigen::Vector3d res;
        for (int row = 0; row < 3; ++row) {
            jac(row, 0) = db1[row];
            jac(row, 1) = dp1[row];
            jac(row, 2) = -db2[row];
            jac(row, 3) = -dp2[row];
            res(row) = f1[row] - f2[row];
        }
        const Eigen::VectorXd step =
            jac.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(-res);

        double t = 1.0;
        ParamPair best = q;
        double best_gap = gap;
        for (int halving = 0; halving < 12; ++halving) {
            ParamPair trial = q;
            trial.b1 = std::clamp(trial.b1 + t * step(0), beta_min, beta_max);
            trial.p1 = wrap_phi(trial.p1 + t * step(1));
            trial.b2 = std::clamp(trial.b2 + t * step(2), beta_min, beta_max);
            trial.p2 = wrap_phi(trial.p2 + t * step(3));
            std::array<double, 3> m{};
            const double g = pair_gap(trial, m);
            if (g < best_gap) {
                best = trial;
                best_gap = g;
                break;
            }
            t /= 2.0;
        }
        if (best_gap >= gap) break;
        q = best;
        gap = best_gap;
    }
    return gap < tol;
}

}  // namespace

SelfIntersectionLocus self_intersection_locus(const HennebergParams& params, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    params.validate();

    constexpr int kBetaNodes = 96;
    constexpr int kPhiNodes = 512;
    const double beta_span = params.beta_max - params.beta_min;

    std::vector<std::array<double, 2>> param(static_cast<std::size_t>(kBetaNodes) * kPhiNodes);
    std::vector<std::array<double, 3>> pos(param.size());
    for (int i = 0; i < kBetaNodes; ++i) {
        const double beta =
            kBetaNodes == 1 ? params.beta_min
                            : params.beta_min + beta_span * static_cast<double>(i) / (kBetaNodes - 1);
        for (int j = 0; j < kPhiNodes; ++j) {
            const double phi = kTwoPi * static_cast<double>(j) / kPhiNodes;
            const std::size_t idx = static_cast<std::size_t>(i) * kPhiNodes + j;
            param[idx] = {beta, phi};
            pos[idx] = henneberg_point(beta, phi);
        }
    }

    // Coarse matching radius: beyond the largest gap between adjacent grid
    // nodes, so every locus point has a candidate pair somewhere nearby.
    double max_adjacent = 0.0;
    for (int i = 0; i < kBetaNodes; ++i) {
        for (int j = 0; j < kPhiNodes; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * kPhiNodes + j;
            const std::size_t right = static_cast<std::size_t>(i) * kPhiNodes + (j + 1) % kPhiNodes;
            max_adjacent = std::max(max_adjacent, norm3(diff3(pos[idx], pos[right])));
            if (i + 1 < kBetaNodes) {
                const std::size_t up = static_cast<std::size_t>(i + 1) * kPhiNodes + j;
                max_adjacent = std::max(max_adjacent, norm3(diff3(pos[idx], pos[up])));
            }
        }
    }
    const double coarse_eps = 1.3 * max_adjacent;

    std::unordered_map<std::int64_t, std::vector<std::size_t>> grid;
    grid.reserve(param.size() * 2);
    for (std::size_t idx = 0; idx < pos.size(); ++idx) {
        grid[cell_key(pos[idx], coarse_eps)].push_back(idx);
    }

    // One refinement attempt per raw-midpoint cell keeps the pass fast while
    // still visiting every stretch of the locus.
    std::unordered_set<std::int64_t> attempted;
    std::vector<LocusSample> accepted;

    const auto consider = [&](std::size_t a, std::size_t b) {
        if (wrapped_phi_gap(param[a][1], param[b][1]) < kPhiSeparationFloor) return;
        if (norm3(diff3(pos[a], pos[b])) > coarse_eps) return;
        ParamPair q{param[a][0], param[a][1], param[b][0], param[b][1]};
        std::array<double, 3> mid{};
        pair_gap(q, mid);
        if (!attempted.insert(cell_key(mid, kLocusSampleSpacing)).second) return;
        if (!refine_pair(q, params.beta_min, params.beta_max, tol)) return;
        if (wrapped_phi_gap(q.p1, q.p2) < kPhiSeparationFloor) return;
        LocusSample s;
        pair_gap(q, s.position);
        if (std::tie(q.b1, q.p1) > std::tie(q.b2, q.p2)) {
            std::swap(q.b1, q.b2);
            std::swap(q.p1, q.p2);
        }
        s.beta1 = q.b1;
        s.phi1 = q.p1;
        s.beta2 = q.b2;
        s.phi2 = q.p2;
        accepted.push_back(s);
    };

    for (std::size_t a = 0; a < pos.size(); ++a) {
        std::vector<std::size_t> partners;
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dz = -1; dz <= 1; ++dz) {
                    const std::array<double, 3> probe = {pos[a][0] + dx * coarse_eps,
                                                         pos[a][1] + dy * coarse_eps,
                                                         pos[a][2] + dz * coarse_eps};
                    const auto it = grid.find(cell_key(probe, coarse_eps));
                    if (it == grid.end()) continue;
                    for (std::size_t b : it->second) {
                        if (b > a) partners.push_back(b);
                    }
                }
            }
        }
        std::sort(partners.begin(), partners.end());
        partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
        for (std::size_t b : partners) consider(a, b);
    }

    // Well-spaced curve samples; processing order is fixed, so the result is
    // deterministic.
    std::sort(accepted.begin(), accepted.end(), [](const LocusSample& l, const LocusSample& r) {
        return std::tie(l.position[0], l.position[1], l.position[2], l.beta1, l.phi1) <
               std::tie(r.position[0], r.position[1], r.position[2], r.beta1, r.phi1);
    });
    SelfIntersectionLocus locus;
    for (const LocusSample& s : accepted) {
        bool close = false;
        for (const LocusSample& kept : locus.samples) {
            if (norm3(diff3(s.position, kept.position)) < kLocusSampleSpacing) {
                close = true;
                break;
            }
        }
        if (!close) locus.samples.push_back(s);
    }

    if (!locus.samples.empty()) {
        const std::vector<int> comp = single_linkage_components(locus.points(), kLocusLinkRadius);
        int max_id = -1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            locus.samples[i].component = comp[i];
            max_id = std::max(max_id, comp[i]);
        }
        locus.component_count = max_id + 1;
    }
    return locus;
}

PointCloud henneberg_rim(const HennebergParams& params, int samples_per_edge) {
    params.validate();
    if (samples_per_edge < 3) throw std::invalid_argument("samples_per_edge must be at least 3");
    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(samples_per_edge) * 6);
    for (const double beta : {params.beta_min, params.beta_max}) {
        for (int j = 0; j < samples_per_edge; ++j) {
            const double phi = kTwoPi * static_cast<double>(j) / samples_per_edge;
            const std::array<double, 3> p = henneberg_point(beta, phi);
            coords.insert(coords.end(), p.begin(), p.end());
        }
    }
    return PointCloud(std::move(coords), 3);
}

namespace {

double min_distance_to(const PointCloud& targets, std::span<const double> p) {
    double best = std::numeric_limits<double>::infinity();
    for (index_t i = 0; i < targets.size(); ++i) {
        best = std::min(best, squared_distance(targets.point(i), p));
    }
    return std::sqrt(best);
}

}  // namespace

PointCloud sample_henneberg(const HennebergParams& params) {
    params.validate();

    std::vector<std::array<double, 2>> param;
    if (params.random_count > 0) {
        param.reserve(static_cast<std::size_t>(params.random_count));
        Rng rng(params.seed);
        double density_bound = 0.0;
        if (params.uniform_area) {
            for (int i = 0; i < 64; ++i) {
                const double beta = params.beta_min +
                                    (params.beta_max - params.beta_min) * (i + 0.5) / 64.0;
                for (int j = 0; j < 256; ++j) {
                    density_bound =
                        std::max(density_bound, henneberg_area_density(beta, kTwoPi * j / 256.0));
                }
            }
            density_bound *= 1.05;
        }
        while (param.size() < static_cast<std::size_t>(params.random_count)) {
            const double beta = rng.uniform(params.beta_min, params.beta_max);
            const double phi = rng.uniform(0.0, kTwoPi);
            if (params.uniform_area &&
                rng.uniform01() * density_bound > henneberg_area_density(beta, phi)) {
                continue;
            }
            param.push_back({beta, phi});
        }
    } else {
        param.reserve(static_cast<std::size_t>(params.beta_count) * params.phi_count);
        for (int i = 0; i < params.beta_count; ++i) {
            const double beta = params.beta_count == 1
                                    ? params.beta_min
                                    : params.beta_min + (params.beta_max - params.beta_min) *
                                                            static_cast<double>(i) /
                                                            (params.beta_count - 1);
            for (int j = 0; j < params.phi_count; ++j) {
                param.push_back({beta, kTwoPi * static_cast<double>(j) / params.phi_count});
            }
        }
    }

    const SelfIntersectionLocus locus = self_intersection_locus(params, 1e-9);
    const PointCloud locus_points = locus.points();
    const PointCloud rim =
        params.boundary_margin > 0.0 ? henneberg_rim(params, 2048) : PointCloud();

    Rng noise_rng(params.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<double> coords;
    coords.reserve(param.size() * 3);
    std::vector<GroundTruthLabel> truth;
    truth.reserve(param.size());
    for (const std::array<double, 2>& bp : param) {
        const std::array<double, 3> surface = henneberg_point(bp[0], bp[1]);
        std::vector<double> p(surface.begin(), surface.end());
        add_ball_noise(p, params.noise, noise_rng);

        GroundTruthLabel label;
        // Locus samples are kLocusSampleSpacing apart, so this distance is
        // accurate to about half that spacing.
        label.distance_to_singular_locus =
            locus_points.empty() ? std::numeric_limits<double>::infinity()
                                 : min_distance_to(locus_points, p);
        label.near_singularity = label.distance_to_singular_locus <= params.proximity_radius;
        int kind = 0;
        if (label.near_singularity) {
            kind = 2;
        } else if (params.boundary_margin > 0.0 &&
                   min_distance_to(rim, std::span<const double>(surface.data(), 3)) <=
                       params.boundary_margin) {
            kind = 1;
        }
        label.stratum_id = kind;
        truth.push_back(label);
        coords.insert(coords.end(), p.begin(), p.end());
    }

    PointCloud cloud(std::move(coords), 3);
    cloud.ground_truth() = std::move(truth);
    cloud.ground_truth_radius = params.proximity_radius;
    return cloud;
}

void GeneratorSpec::validate() const {
    if (count <= 0) throw std::invalid_argument("count must be positive");
    if (noise < 0.0) throw std::invalid_argument("noise must be nonnegative");
    if (proximity_radius < 0.0) throw std::invalid_argument("proximity_radius must be nonnegative");
    if (boundary_margin < 0.0) throw std::invalid_argument("boundary_margin must be nonnegative");
}

PointCloud sample_planes(const GeneratorSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(spec.count) * 3);
    std::vector<GroundTruthLabel> truth;
    truth.reserve(static_cast<std::size_t>(spec.count));

    for (int i = 0; i < spec.count; ++i) {
        const int sheet = i % 2;  // the squares have equal area
        const double u = rng.uniform(-1.0, 1.0);
        const double v = rng.uniform(-1.0, 1.0);
        std::vector<double> p = sheet == 0 ? std::vector<double>{u, v, 0.0}
                                           : std::vector<double>{u, 0.0, v};
        const double rim_distance = 1.0 - std::max(std::fabs(u), std::fabs(v));
        add_ball_noise(p, spec.noise, rng);

        // Distance to the segment {(t, 0, 0) : |t| <= 1}.
        const double overshoot = std::max(0.0, std::fabs(p[0]) - 1.0);
        GroundTruthLabel label;
        label.distance_to_singular_locus =
            std::sqrt(overshoot * overshoot + p[1] * p[1] + p[2] * p[2]);
        label.near_singularity = label.distance_to_singular_locus <= spec.proximity_radius;
        int kind = 0;
        if (label.near_singularity) {
            kind = 2;
        } else if (rim_distance <= spec.boundary_margin) {
            kind = 1;
        }
        label.stratum_id = sheet * 10 + kind;
        truth.push_back(label);
        coords.insert(coords.end(), p.begin(), p.end());
    }

    PointCloud cloud(std::move(coords), 3);
    cloud.ground_truth() = std::move(truth);
    cloud.ground_truth_radius = spec.proximity_radius;
    return cloud;
}

PointCloud sample_hemisphere_plane(const GeneratorSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const double plane_area = 16.0;
    const double hemisphere_area = kTwoPi;
    const int plane_count = static_cast<int>(
        std::lround(spec.count * plane_area / (plane_area + hemisphere_area)));

    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(spec.count) * 3);
    std::vector<GroundTruthLabel> truth;
    truth.reserve(static_cast<std::size_t>(spec.count));

    for (int i = 0; i < spec.count; ++i) {
        const int sheet = i < plane_count ? 0 : 1;
        std::vector<double> p;
        double rim_distance = std::numeric_limits<double>::infinity();
        if (sheet == 0) {
            const double u = rng.uniform(-2.0, 2.0);
            const double v = rng.uniform(-2.0, 2.0);
            p = {u, v, 0.0};
            rim_distance = 2.0 - std::max(std::fabs(u), std::fabs(v));
        } else {
            // Uniform area on the upper hemisphere: height is uniform.
            const double z = rng.uniform01();
            const double phi = rng.uniform(0.0, kTwoPi);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            p = {rho * std::cos(phi), rho * std::sin(phi), z};
        }
        add_ball_noise(p, spec.noise, rng);

        // Distance to the unit circle in the z = 0 plane.
        const double radial = std::sqrt(p[0] * p[0] + p[1] * p[1]) - 1.0;
        GroundTruthLabel label;
        label.distance_to_singular_locus = std::sqrt(radial * radial + p[2] * p[2]);
        label.near_singularity = label.distance_to_singular_locus <= spec.proximity_radius;
        int kind = 0;
        if (label.near_singularity) {
            kind = 2;
        } else if (rim_distance <= spec.boundary_margin) {
            kind = 1;
        }
        label.stratum_id = sheet * 10 + kind;
        truth.push_back(label);
        coords.insert(coords.end(), p.begin(), p.end());
    }

    PointCloud cloud(std::move(coords), 3);
    cloud.ground_truth() = std::move(truth);
    cloud.ground_truth_radius = spec.proximity_radius;
    return cloud;
}

namespace {

PointCloud sample_round_shape(const GeneratorSpec& spec, int dim) {
    spec.validate();
    Rng rng(spec.seed);
    std::vector<double> coords;
    coords.reserve(static_cast<std::size_t>(spec.count) * dim);
    std::vector<GroundTruthLabel> truth(static_cast<std::size_t>(spec.count));
    for (GroundTruthLabel& label : truth) {
        label.distance_to_singular_locus = std::numeric_limits<double>::infinity();
    }

    for (int i = 0; i < spec.count; ++i) {
        std::vector<double> p;
        if (dim == 2) {
            const double theta = rng.uniform(0.0, kTwoPi);
            p = {std::cos(theta), std::sin(theta)};
        } else {
            const double z = rng.uniform(-1.0, 1.0);
            const double phi = rng.uniform(0.0, kTwoPi);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            p = {rho * std::cos(phi), rho * std::sin(phi), z};
        }
        add_ball_noise(p, spec.noise, rng);
        coords.insert(coords.end(), p.begin(), p.end());
    }

    PointCloud cloud(std::move(coords), dim);
    cloud.ground_truth() = std::move(truth);
    cloud.ground_truth_radius = spec.proximity_radius;
    return cloud;
}

}  // namespace

PointCloud sample_circle(const GeneratorSpec& spec) { return sample_round_shape(spec, 2); }

PointCloud sample_sphere(const GeneratorSpec& spec) { return sample_round_shape(spec, 3); }

PointCloud generate(const GeneratorSpec& spec) {
    spec.validate();
    if (spec.shape == "henneberg") {
        HennebergParams hp;
        hp.seed = spec.seed;
        hp.noise = spec.noise;
        if (spec.proximity_radius > 0.0) hp.proximity_radius = spec.proximity_radius;
        hp.boundary_margin = spec.boundary_margin;
        // Resize the default 62 x 88 grid to about spec.count points,
        // keeping the aspect ratio.
        hp.beta_count = std::max(
            2, static_cast<int>(std::lround(std::sqrt(spec.count * 62.0 / 88.0))));
        hp.phi_count = std::max(
            3, static_cast<int>(std::lround(static_cast<double>(spec.count) / hp.beta_count)));
        return sample_henneberg(hp);
    }
    if (spec.shape == "planes") return sample_planes(spec);
    if (spec.shape == "hemisphere_plane") return sample_hemisphere_plane(spec);
    if (spec.shape == "circle") return sample_circle(spec);
    if (spec.shape == "sphere") return sample_sphere(spec);
    throw std::invalid_argument("unknown shape: " + spec.shape);
}

const std::vector<std::string>& generator_shapes() {
    static const std::vector<std::string> shapes = {"henneberg", "planes", "hemisphere_plane",
                                                    "circle", "sphere"};
    return shapes;
}

}  // namespace gad
