#include "gad/persistence.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "gad/errors.hpp"

namespace gad {

std::vector<PersistenceInterval> Barcode::in_dim(int dim) const {
    std::vector<PersistenceInterval> out;
    for (const auto& iv : intervals)
        if (iv.dim == dim) out.push_back(iv);
    return out;
}

int Barcode::rank_at(int dim, double t) const {
    int count = 0;
    for (const auto& iv : intervals)
        if (iv.dim == dim && iv.birth <= t && t < iv.death) ++count;
    return count;
}

namespace {

// Symmetric difference of two sorted position lists.
void add_column(const std::vector<std::uint32_t>& other, std::vector<std::uint32_t>& col,
                std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                  std::back_inserter(scratch));
    col.swap(scratch);
}

}  // namespace

Barcode compute_barcode(const Filtration& f, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    const std::size_t n = f.size();
    const auto& entries = f.entries();

    // Only columns of dimension <= top_dim can pair degrees we report.
    const int report_max = std::min(max_degree, f.max_dim() - 1);
    Barcode bc;
    if (report_max < 0 || n == 0) return bc;
    const int top_dim = report_max + 1;

    std::vector<std::vector<std::uint32_t>> reduced(n);
    std::vector<std::int64_t> pivot_of_low(n, -1);
    std::vector<bool> cleared(n, false);
    std::vector<bool> paired_as_birth(n, false);
    std::vector<std::uint32_t> scratch;

    std::vector<std::vector<std::uint32_t>> by_dim(f.max_dim() + 1);
    for (std::uint32_t i = 0; i < n; ++i)
        by_dim[entries[i].simplex.dim()].push_back(i);

    for (int d = std::min(top_dim, f.max_dim()); d >= 1; --d) {
        for (std::uint32_t j : by_dim[d]) {
            if (cleared[j]) continue;
            std::vector<std::uint32_t> col = f.boundary_positions(j);
            while (!col.empty()) {
                const std::uint32_t low = col.back();
                const std::int64_t other = pivot_of_low[low];
                if (other < 0) break;
                add_column(reduced[other], col, scratch);
            }
            if (col.empty()) continue;  // positive column, may generate in degree d
            const std::uint32_t low = col.back();
            pivot_of_low[low] = j;
            paired_as_birth[low] = true;
            cleared[low] = true;
            const double birth = entries[low].value;
            const double death = entries[j].value;
            if (birth != death && d - 1 <= report_max)
                bc.intervals.push_back({d - 1, birth, death});
            reduced[j] = std::move(col);
        }
    }

    // Unpaired positive simplices generate intervals that never die.
    for (std::uint32_t i = 0; i < n; ++i) {
        const int d = entries[i].simplex.dim();
        if (d > report_max || paired_as_birth[i]) continue;
        if (!reduced[i].empty()) continue;  // negative column
        // Dimension-d columns above top_dim were never reduced, but those
        // dimensions are not reported anyway.
        bc.intervals.push_back({d, entries[i].value, kInfiniteDeath});
    }

    std::sort(bc.intervals.begin(), bc.intervals.end(), [](const auto& a, const auto& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return bc;
}

namespace {

// Dense GF(2) matrix with 64-bit packed rows; rank by Gaussian elimination.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= 1ull << (c % 64); }

    int rank() {
        int rk = 0;
        std::size_t row = 0;
        for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
            const std::size_t w = c / 64;
            const std::uint64_t bit = 1ull << (c % 64);
            std::size_t pivot = row;
            while (pivot < rows_ && !(bits_[pivot * words_ + w] & bit)) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != row)
                std::swap_ranges(bits_.begin() + pivot * words_, bits_.begin() + (pivot + 1) * words_,
                                 bits_.begin() + row * words_);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                if (bits_[r * words_ + w] & bit)
                    for (std::size_t k = 0; k < words_; ++k) bits_[r * words_ + k] ^= bits_[row * words_ + k];
            }
            ++row;
            ++rk;
        }
        return rk;
    }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

std::vector<int> betti_numbers_at_scale(const Filtration& f, double t, int max_degree) {
    if (t < 0.0) throw std::invalid_argument("scale t must be >= 0");
    const auto& entries = f.entries();

    // Local index per dimension for the subcomplex at scale t.
    std::map<std::vector<index_t>, std::size_t> local;
    std::vector<std::size_t> count_by_dim(f.max_dim() + 2, 0);
    for (const auto& e : entries) {
        if (e.value > t) continue;
        local[e.simplex.vertices] = count_by_dim[e.simplex.dim()]++;
    }

    // rank of each boundary map del_d : C_d -> C_{d-1}.
    std::vector<int> rank_del(f.max_dim() + 2, 0);
    for (int d = 1; d <= f.max_dim(); ++d) {
        if (count_by_dim[d] == 0) continue;
        BitMatrix m(count_by_dim[d - 1], count_by_dim[d]);
        std::vector<index_t> face;
        for (const auto& e : entries) {
            if (e.value > t || e.simplex.dim() != d) continue;
            const std::size_t col = local[e.simplex.vertices];
            face.assign(e.simplex.vertices.size() - 1, 0);
            for (std::size_t drop = 0; drop < e.simplex.vertices.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t k = 0; k < e.simplex.vertices.size(); ++k)
                    if (k != drop) face[w++] = e.simplex.vertices[k];
                auto it = local.find(face);
                if (it == local.end()) throw data_error("subcomplex is not closed under faces");
                m.set(it->second, col);
            }
        }
        rank_del[d] = m.rank();
    }

    std::vector<int> betti(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        const std::size_t n_d = d < static_cast<int>(count_by_dim.size()) ? count_by_dim[d] : 0;
        const int r_d = (d == 0 || d >= static_cast<int>(rank_del.size())) ? 0 : rank_del[d];
        const int r_up = d + 1 < static_cast<int>(rank_del.size()) ? rank_del[d + 1] : 0;
        betti[d] = static_cast<int>(n_d) - r_d - r_up;
    }
    return betti;
}

namespace {

struct FinitePoint {
    double birth, death;
    double to_diagonal() const { return (death - birth) / 2.0; }
};

// Perfect matching feasibility at threshold lambda for the augmented
// bipartite graph (intervals plus one diagonal slot per opposite interval).
class BottleneckFeasibility {
public:
    BottleneckFeasibility(const std::vector<FinitePoint>& a, const std::vector<FinitePoint>& b)
        : a_(a), b_(b), na_(a.size()), nb_(b.size()) {}

    bool feasible(double lambda) {
        const std::size_t nu = na_ + nb_;
        match_u_.assign(nu, -1);
        match_v_.assign(nu, -1);
        for (std::size_t u = 0; u < nu; ++u) {
            seen_.assign(nu, false);
            if (!augment(u, lambda)) return false;
        }
        return true;
    }

private:
    bool edge(std::size_t u, std::size_t v, double lambda) const {
        const bool u_real = u < na_;
        const bool v_real = v < nb_;
        if (u_real && v_real) {
            const auto& p = a_[u];
            const auto& q = b_[v];
            return std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death)) <= lambda;
        }
        if (u_real) return a_[u].to_diagonal() <= lambda;   // v is a diagonal slot
        if (v_real) return b_[v].to_diagonal() <= lambda;   // u is a diagonal slot
        return true;                                        // diagonal to diagonal
    }

    bool augment(std::size_t u, double lambda) {
        for (std::size_t v = 0; v < na_ + nb_; ++v) {
            if (seen_[v] || !edge(u, v, lambda)) continue;
            seen_[v] = true;
            if (match_v_[v] < 0 || augment(static_cast<std::size_t>(match_v_[v]), lambda)) {
                match_u_[u] = static_cast<std::int64_t>(v);
                match_v_[v] = static_cast<std::int64_t>(u);
                return true;
            }
        }
        return false;
    }

    const std::vector<FinitePoint>& a_;
    const std::vector<FinitePoint>& b_;
    std::size_t na_, nb_;
    std::vector<std::int64_t> match_u_, match_v_;
    std::vector<bool> seen_;
};

}  // namespace

double bottleneck_distance(const Barcode& a, const Barcode& b, int dim) {
    std::vector<FinitePoint> fa, fb;
    std::vector<double> inf_a, inf_b;
    for (const auto& iv : a.intervals) {
        if (iv.dim != dim) continue;
        if (iv.is_infinite()) inf_a.push_back(iv.birth);
        else fa.push_back({iv.birth, iv.death});
    }
    for (const auto& iv : b.intervals) {
        if (iv.dim != dim) continue;
        if (iv.is_infinite()) inf_b.push_back(iv.birth);
        else fb.push_back({iv.birth, iv.death});
    }

    if (inf_a.size() != inf_b.size()) return kInfiniteDeath;
    double result = 0.0;
    // Sorted matching is optimal for the one-dimensional bottleneck problem.
    std::sort(inf_a.begin(), inf_a.end());
    std::sort(inf_b.begin(), inf_b.end());
    for (std::size_t i = 0; i < inf_a.size(); ++i)
        result = std::max(result, std::abs(inf_a[i] - inf_b[i]));

    if (fa.empty() && fb.empty()) return result;

    std::vector<double> candidates{0.0};
    for (const auto& p : fa) candidates.push_back(p.to_diagonal());
    for (const auto& q : fb) candidates.push_back(q.to_diagonal());
    for (const auto& p : fa)
        for (const auto& q : fb)
            candidates.push_back(std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death)));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    BottleneckFeasibility fs(fa, fb);
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (fs.feasible(candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    return std::max(result, candidates[lo]);
}

int count_long_bars(const Barcode& bc, int dim, double threshold, double t_max) {
    (void)t_max;
    if (threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");
    int count = 0;
    for (const auto& iv : bc.intervals)
        if (iv.dim == dim && (iv.is_infinite() || iv.death - iv.birth > threshold)) ++count;
    return count;
}

void write_barcode_text(const Barcode& bc, std::ostream& os) {
    char buf[64];
    for (const auto& iv : bc.intervals) {
        os << iv.dim << ' ';
        std::snprintf(buf, sizeof(buf), "%.17g", iv.birth);
        os << buf << ' ';
        if (iv.is_infinite()) {
            os << "inf";
        } else {
            std::snprintf(buf, sizeof(buf), "%.17g", iv.death);
            os << buf;
        }
        os << '\n';
    }
}

}  // namespace gad
