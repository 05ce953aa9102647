#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gad/point_cloud.hpp"

namespace gad {

// Deterministic scalar source. Draws are derived from raw mt19937_64 output
// so identical seeds give bit-identical streams on every platform, which the
// distribution classes in <random> do not guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard Gaussian via Box-Muller; one value per call, no carried state.
    double normal();

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// In-place perturbation drawn uniformly from the closed ball of the given
// radius, so every displacement norm is <= radius.
void add_ball_noise(std::vector<double>& point, double radius, Rng& rng);

struct HennebergParams {
    double beta_min = 0.4;
    double beta_max = 0.6;
    int beta_count = 62;        // grid rows over [beta_min, beta_max]
    int phi_count = 88;         // grid columns over [0, 2*pi), periodic
    int random_count = 0;       // > 0 switches to random parameter sampling
    bool uniform_area = false;  // random mode: weight by the surface area element
    std::uint64_t seed = 0;
    double noise = 0.0;             // ball radius of the isotropic perturbation
    double proximity_radius = 1.5;  // near_singularity cutoff in the ground truth
    double boundary_margin = 0.0;   // rim stratum width, 0 disables rim marking

    void validate() const;  // throws std::invalid_argument
};

// The immersion F(beta, phi) -> R^3 and its parameter derivatives.
// Throws std::domain_error at beta = 0 where the parametrisation blows up.
std::array<double, 3> henneberg_point(double beta, double phi);
std::array<double, 3> henneberg_dbeta(double beta, double phi);
std::array<double, 3> henneberg_dphi(double beta, double phi);

// Norm of dF/dbeta x dF/dphi: the surface area element.
double henneberg_area_density(double beta, double phi);

struct LocusSample {
    std::array<double, 3> position{};  // midpoint of the two images
    double beta1 = 0.0, phi1 = 0.0;    // first preimage
    double beta2 = 0.0, phi2 = 0.0;    // second preimage
    int component = -1;
};

struct SelfIntersectionLocus {
    std::vector<LocusSample> samples;
    int component_count = 0;

    PointCloud points() const;
};

// Numerical self-intersection oracle: scans a dense parameter grid for 3D
// coincidences between parameter points separated by at least kPhiSeparationFloor
// in phi, refines each candidate pair with damped Gauss-Newton until the two
// images agree within tol, deduplicates into well-spaced curve samples, and
// groups the samples into spatial components.
SelfIntersectionLocus self_intersection_locus(const HennebergParams& params, double tol);

// Constants of the locus search, exposed so tests can reason about them.
inline constexpr double kPhiSeparationFloor = 0.5;
inline constexpr double kLocusSampleSpacing = 0.05;
inline constexpr double kLocusLinkRadius = 0.6;

// Boundary curves of the parameter rectangle's image: the beta_min and
// beta_max rows, phi sampled densely. phi is periodic, so these two curves
// are the entire rim.
PointCloud henneberg_rim(const HennebergParams& params, int samples_per_edge);

// Points on the surface with ground truth (distance to the self-intersection
// locus, rim strata within boundary_margin of the rim image).
PointCloud sample_henneberg(const HennebergParams& params);

struct GeneratorSpec {
    std::string shape;      // henneberg | planes | hemisphere_plane | circle | sphere
    int count = 2000;
    double noise = 0.0;     // ball radius of the isotropic perturbation
    std::uint64_t seed = 0;
    double proximity_radius = 0.0;  // 0 keeps each shape's default
    double boundary_margin = 0.0;   // rim stratum width where the shape has a rim

    void validate() const;  // throws std::invalid_argument
};

// Two unit squares in R^3 crossing along a segment: {|x|,|y| <= 1, z = 0}
// and {|x|,|z| <= 1, y = 0}. Singular locus: the segment y = z = 0.
PointCloud sample_planes(const GeneratorSpec& spec);

// Upper unit hemisphere glued to the square {|x|,|y| <= 2, z = 0} along the
// equator. Singular locus: the unit circle in the z = 0 plane.
PointCloud sample_hemisphere_plane(const GeneratorSpec& spec);

// Unit circle in R^2. No singular locus; distances are +infinity.
PointCloud sample_circle(const GeneratorSpec& spec);

// Unit sphere in R^3. No singular locus; distances are +infinity.
PointCloud sample_sphere(const GeneratorSpec& spec);

// Dispatch on spec.shape; henneberg resizes the default grid to about
// spec.count points. Throws std::invalid_argument for unknown shapes.
PointCloud generate(const GeneratorSpec& spec);

const std::vector<std::string>& generator_shapes();

}  // namespace gad
