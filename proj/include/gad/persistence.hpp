#pragma once

#include <iosfwd>
#include <limits>
#include <vector>

#include "gad/rips.hpp"

namespace gad {

constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

// Half-open interval [birth, death) in a fixed homology degree.
struct PersistenceInterval {
    int dim = 0;
    double birth = 0.0;
    double death = kInfiniteDeath;

    double length() const { return death - birth; }
    bool is_infinite() const { return death == kInfiniteDeath; }
    bool operator==(const PersistenceInterval&) const = default;
};

struct Barcode {
    std::vector<PersistenceInterval> intervals;  // sorted by (dim, birth, death)

    std::vector<PersistenceInterval> in_dim(int dim) const;
    // Number of intervals with birth <= t < death in the given degree.
    int rank_at(int dim, double t) const;
};

// Persistence barcode of the filtration over GF(2), via column reduction
// with the clearing optimization (columns processed by decreasing
// dimension). Degrees 0 .. min(max_degree, f.max_dim() - 1) are reported;
// zero-length intervals are dropped; cycles alive at the scale cap get
// death = +inf. Throws data_error on a filtration violating the face
// ordering.
Barcode compute_barcode(const Filtration& f, int max_degree);

// Betti numbers of the subcomplex at scale t, degrees 0..max_degree,
// computed by dense Gaussian elimination over GF(2). Independent of the
// reduction above; serves as its oracle.
std::vector<int> betti_numbers_at_scale(const Filtration& f, double t, int max_degree);

// Exact bottleneck distance between the degree-dim parts of two barcodes
// (optimal matching with diagonal projections; binary search over the
// candidate thresholds). Infinite intervals match only infinite intervals;
// mismatched infinite counts give +inf.
double bottleneck_distance(const Barcode& a, const Barcode& b, int dim);

// Number of degree-dim intervals with death - birth strictly greater than
// threshold; infinite deaths count as infinite length. t_max records the
// scale cap the barcode was computed under and does not alter the count.
int count_long_bars(const Barcode& bc, int dim, double threshold, double t_max);

// Text export, one line per interval: "dim birth death", "inf" for
// infinite deaths, in the stable (dim, birth, death) order.
void write_barcode_text(const Barcode& bc, std::ostream& os);

}  // namespace gad
