#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gad/point_cloud.hpp"

namespace gad {

// Vertex subsets are kept sorted ascending; dimension is count - 1.
struct Simplex {
    std::vector<index_t> vertices;
    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    bool operator==(const Simplex&) const = default;
};

struct FiltrationEntry {
    double value = 0.0;  // diameter of the simplex
    Simplex simplex;
};

// Total order: ascending value, then ascending dimension, then
// lexicographic vertex order. Deterministic across runs and platforms.
bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b);

// Ordered list of simplices with their diameters; every face precedes its
// cofaces and carries a value no larger than theirs.
class Filtration {
public:
    Filtration() = default;
    Filtration(std::vector<FiltrationEntry> entries, int max_dim, double t_max);

    const std::vector<FiltrationEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    int max_dim() const { return max_dim_; }
    double t_max() const { return t_max_; }

    // Positions of the codimension-1 faces of entry i, sorted ascending.
    // Throws data_error if a face is missing or ordered after its coface.
    std::vector<std::uint32_t> boundary_positions(std::uint32_t i) const;

private:
    void build_position_map();

    std::vector<FiltrationEntry> entries_;
    int max_dim_ = 0;
    double t_max_ = 0.0;
    // Open-addressing map from vertex set to position, built once.
    std::vector<std::int64_t> slots_;
    std::uint64_t mask_ = 0;
    std::uint32_t find_position(const std::vector<index_t>& vertices) const;
};

// All simplices of dimension <= max_dim with diameter <= t_max over the
// given points, tagged with their diameters, in filtration order.
Filtration build_rips_filtration(const PointCloud& points, int max_dim, double t_max);

// Debug/oracle export, one line per entry: "value dim v0 v1 ...".
void write_filtration_text(const Filtration& f, std::ostream& os);

}  // namespace gad
