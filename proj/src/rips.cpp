#include "gad/rips.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gad/errors.hpp"

namespace gad {

bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
    return std::lexicographical_compare(a.simplex.vertices.begin(), a.simplex.vertices.end(),
                                        b.simplex.vertices.begin(), b.simplex.vertices.end());
}

namespace {

std::uint64_t hash_vertices(const std::vector<index_t>& vs) {
    std::uint64_t h = 1469598103934665603ull;
    for (index_t v : vs) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

Filtration::Filtration(std::vector<FiltrationEntry> entries, int max_dim, double t_max)
    : entries_(std::move(entries)), max_dim_(max_dim), t_max_(t_max) {
    build_position_map();
}

void Filtration::build_position_map() {
    std::uint64_t cap = 16;
    while (cap < entries_.size() * 2) cap <<= 1;
    mask_ = cap - 1;
    slots_.assign(cap, -1);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        std::uint64_t h = hash_vertices(entries_[i].simplex.vertices) & mask_;
        while (slots_[h] >= 0) {
            if (entries_[slots_[h]].simplex.vertices == entries_[i].simplex.vertices)
                throw data_error("duplicate simplex in filtration");
            h = (h + 1) & mask_;
        }
        slots_[h] = static_cast<std::int64_t>(i);
    }
}

std::uint32_t Filtration::find_position(const std::vector<index_t>& vertices) const {
    std::uint64_t h = hash_vertices(vertices) & mask_;
    while (slots_[h] >= 0) {
        if (entries_[slots_[h]].simplex.vertices == vertices)
            return static_cast<std::uint32_t>(slots_[h]);
        h = (h + 1) & mask_;
    }
    return UINT32_MAX;
}

std::vector<std::uint32_t> Filtration::boundary_positions(std::uint32_t i) const {
    const FiltrationEntry& e = entries_[i];
    const int d = e.simplex.dim();
    std::vector<std::uint32_t> faces;
    if (d == 0) return faces;
    faces.reserve(d + 1);
    std::vector<index_t> face(e.simplex.vertices.size() - 1);
    for (std::size_t drop = 0; drop < e.simplex.vertices.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t k = 0; k < e.simplex.vertices.size(); ++k)
            if (k != drop) face[w++] = e.simplex.vertices[k];
        const std::uint32_t pos = find_position(face);
        if (pos == UINT32_MAX)
            throw data_error("filtration is not closed under faces");
        if (pos >= i || entries_[pos].value > e.value)
            throw data_error("filtration violates face-before-coface ordering");
        faces.push_back(pos);
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

Filtration build_rips_filtration(const PointCloud& points, int max_dim, double t_max) {
    if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");

    const index_t n = points.size();
    std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = i + 1; j < n; ++j) {
            const double d = points.distance(i, j);
            dist[static_cast<std::size_t>(i) * n + j] = d;
            dist[static_cast<std::size_t>(j) * n + i] = d;
        }
    auto d_of = [&](index_t i, index_t j) { return dist[static_cast<std::size_t>(i) * n + j]; };

    // Neighbors with larger index within the scale cap.
    std::vector<std::vector<index_t>> nbrs(n);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = i + 1; j < n; ++j)
            if (d_of(i, j) <= t_max) nbrs[i].push_back(j);

    std::vector<FiltrationEntry> entries;
    struct Frontier {
        Simplex simplex;
        double value;
        std::vector<index_t> candidates;
    };
    std::vector<Frontier> level;
    for (index_t v = 0; v < n; ++v) {
        entries.push_back({0.0, Simplex{{v}}});
        if (max_dim >= 1) level.push_back({Simplex{{v}}, 0.0, nbrs[v]});
    }

    // Incremental expansion: extend each simplex by common upper neighbors.
    std::vector<Frontier> next;
    for (int d = 1; d <= max_dim && !level.empty(); ++d) {
        next.clear();
        for (const Frontier& fr : level) {
            for (std::size_t ci = 0; ci < fr.candidates.size(); ++ci) {
                const index_t c = fr.candidates[ci];
                double value = fr.value;
                for (index_t u : fr.simplex.vertices) value = std::max(value, d_of(u, c));
                Simplex ext = fr.simplex;
                ext.vertices.push_back(c);
                entries.push_back({value, ext});
                if (d < max_dim) {
                    std::vector<index_t> cand;
                    std::set_intersection(fr.candidates.begin() + ci + 1, fr.candidates.end(),
                                          nbrs[c].begin(), nbrs[c].end(), std::back_inserter(cand));
                    next.push_back({std::move(ext), value, std::move(cand)});
                }
            }
        }
        level.swap(next);
    }

    std::sort(entries.begin(), entries.end(), filtration_less);
    return Filtration(std::move(entries), max_dim, t_max);
}

void write_filtration_text(const Filtration& f, std::ostream& os) {
    char buf[64];
    for (const FiltrationEntry& e : f.entries()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.value);
        os << buf << ' ' << e.simplex.dim();
        for (index_t v : e.simplex.vertices) os << ' ' << v;
        os << '\n';
    }
}

}  // namespace gad
