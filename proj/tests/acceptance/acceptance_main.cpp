// Acceptance checks for the detector pipeline. Each criterion prints one
// PASS/FAIL/WAIVED line and the run writes acceptance_manifest.json next to
// the working directory. An optional argument runs a single criterion.
#include <json.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gad/datasets.hpp"
#include "gad/detector.hpp"
#include "gad/io.hpp"
#include "gad/persistence.hpp"
#include "gad/rips.hpp"

using namespace gad;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    int id = 0;
    std::string name;
    std::string status;  // PASS | FAIL | WAIVED
    std::string detail;
    double seconds = 0.0;
};

// Accumulates requirement violations; the criterion passes when none remain.
class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }

    bool passed() const { return failures_.empty(); }
    std::string summary() const {
        std::string out;
        for (const std::string& f : failures_) {
            if (!out.empty()) out += "; ";
            out += f;
        }
        for (const std::string& n : notes_) {
            if (!out.empty()) out += "; ";
            out += n;
        }
        return out;
    }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string strf(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "gad_acceptance";
    fs::create_directories(dir);
    return dir;
}

// ---------------------------------------------------------------------------
// 1: barcodes of random clouds match the Gaussian-elimination oracle.

void criterion_ranks(Check& check) {
    const auto t0 = Clock::now();
    Rng rng(2025);
    const int clouds = 200;
    long probes_checked = 0;
    for (int rep = 0; rep < clouds; ++rep) {
        const int dim = 2 + rep % 2;
        const int n = 3 + static_cast<int>(rng.raw() % 10);  // at most 12 points
        std::vector<double> coords;
        for (int i = 0; i < n * dim; ++i) coords.push_back(rng.uniform(-1.0, 1.0));
        const PointCloud points(std::move(coords), dim);
        const double t_max = 0.8 + 1.4 * rng.uniform01();

        const Filtration f = build_rips_filtration(points, 3, t_max);
        const Barcode bc = compute_barcode(f, 2);

        // The subcomplex only changes at filtration values, so probing each
        // distinct value covers every subcomplex of the filtration.
        std::set<double> values;
        for (const FiltrationEntry& e : f.entries()) values.insert(e.value);
        for (double t : values) {
            const std::vector<int> betti = betti_numbers_at_scale(f, t, 2);
            for (int d = 0; d <= 2; ++d) {
                ++probes_checked;
                if (bc.rank_at(d, t) != betti[d]) {
                    check.require(false, strf("cloud %d: degree %d rank %d != betti %d at t=%.17g",
                                              rep, d, bc.rank_at(d, t), betti[d], t));
                    return;
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    check.require(elapsed < 60.0, strf("took %.1fs, budget 60s", elapsed));
    check.note(strf("%d clouds, %ld rank probes, %.1fs", clouds, probes_checked, elapsed));
}

// ---------------------------------------------------------------------------
// 2: golden barcodes with no tolerance beyond the arithmetic itself.

void criterion_goldens(Check& check) {
    {
        const PointCloud square({0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0}, 2);
        const Barcode bc = compute_barcode(build_rips_filtration(square, 2, 2.0), 1);
        const auto deg1 = bc.in_dim(1);
        check.require(deg1.size() == 1, strf("square: %zu loop bars, wanted 1", deg1.size()));
        if (deg1.size() == 1) {
            check.require(deg1[0].birth == 1.0, "square: loop born off 1.0");
            check.require(deg1[0].death == std::sqrt(2.0), "square: loop dead off sqrt(2)");
        }
        const auto deg0 = bc.in_dim(0);
        check.require(deg0.size() == 4, "square: wanted 4 component bars");
        for (int i = 0; i < 3; ++i) {
            check.require(deg0[static_cast<std::size_t>(i)].birth == 0.0 &&
                              deg0[static_cast<std::size_t>(i)].death == 1.0,
                          "square: short component bar off [0,1)");
        }
        check.require(deg0.back().is_infinite(), "square: missing the infinite bar");
    }
    {
        const double d = 0.73;
        const PointCloud two({0.0, 0.0, d, 0.0}, 2);
        const Barcode bc = compute_barcode(build_rips_filtration(two, 1, 2.0), 0);
        check.require(bc.intervals.size() == 2, "two points: wanted exactly 2 bars");
        check.require(bc.intervals.size() == 2 && bc.intervals[0].birth == 0.0 &&
                          bc.intervals[0].death == d,
                      "two points: finite bar off [0,d)");
        check.require(bc.intervals.size() == 2 && bc.intervals[1].is_infinite(),
                      "two points: missing the infinite bar");
    }
    {
        const PointCloud triangle({0.0, 0.0, 1.0, 0.0, 0.5, std::sqrt(3.0) / 2.0}, 2);
        const Barcode bc = compute_barcode(build_rips_filtration(triangle, 2, 2.0), 1);
        check.require(bc.in_dim(1).empty(), "filled triangle: loop bar should be empty");
    }
    check.note("exact equality on all three golden barcodes");
}

// ---------------------------------------------------------------------------
// 3: perturbations of radius eps move barcodes by at most 2*eps.

void criterion_stability(Check& check) {
    Rng rng(31);
    int clouds = 0;
    double worst_ratio = 0.0;
    for (double eps : {0.01, 0.05}) {
        for (int rep = 0; rep < 25; ++rep) {
            const int dim = 2 + rep % 2;
            const int n = 10 + static_cast<int>(rng.raw() % 21);  // at most 30 points
            std::vector<double> coords;
            for (int i = 0; i < n * dim; ++i) coords.push_back(rng.uniform(-1.0, 1.0));
            const PointCloud base(std::move(coords), dim);

            std::vector<double> moved(base.coords());
            for (index_t i = 0; i < n; ++i) {
                std::vector<double> p(moved.begin() + i * dim, moved.begin() + (i + 1) * dim);
                add_ball_noise(p, eps, rng);
                std::copy(p.begin(), p.end(), moved.begin() + i * dim);
            }
            const PointCloud shifted(std::move(moved), dim);

            const Barcode a = compute_barcode(build_rips_filtration(base, 2, 4.0), 1);
            const Barcode b = compute_barcode(build_rips_filtration(shifted, 2, 4.0), 1);
            ++clouds;
            for (int d = 0; d <= 1; ++d) {
                const double dist = bottleneck_distance(a, b, d);
                worst_ratio = std::max(worst_ratio, dist / (2.0 * eps));
                if (dist > 2.0 * eps + 1e-9) {
                    check.require(false, strf("eps=%.2f rep=%d degree %d: bottleneck %.6f > %.6f",
                                              eps, rep, d, dist, 2.0 * eps));
                    return;
                }
            }
        }
    }
    check.note(strf("%d clouds, worst distance at %.0f%% of the 2*eps bound", clouds,
                    100.0 * worst_ratio));
}

// ---------------------------------------------------------------------------
// 4: the three annulus archetypes give long-bar counts 1, 0, and 3.

PointCloud cylinder_band(double radius, int angles, double angle_span, int rows,
                         double row_step) {
    std::vector<double> coords;
    for (int zi = 0; zi < rows; ++zi) {
        const double z = (zi - rows / 2) * row_step;
        for (int j = 0; j < angles; ++j) {
            const double theta = angle_span * j / angles;
            coords.push_back(radius * std::cos(theta));
            coords.push_back(radius * std::sin(theta));
            coords.push_back(z);
        }
    }
    return PointCloud(std::move(coords), 3);
}

index_t exact_point(const PointCloud& cloud, double x, double y, double z) {
    for (index_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        if (p[0] == x && p[1] == y && p[2] == z) return i;
    }
    return -1;
}

void criterion_archetypes(Check& check) {
    const DetectorConfig cfg = DetectorConfig{.r = 1.0, .s = 1.5, .t_max = 3.0}.normalized();

    // Interior point of a wide band around a cylinder: one loop.
    const PointCloud band = cylinder_band(1.25, 36, 2.0 * 3.14159265358979323846, 13, 0.3);
    const index_t band_center = exact_point(band, 1.25, 0.0, 0.0);
    check.require(band_center >= 0, "band: probe point missing");
    const SpatialIndex band_index(band);
    const PointClassification on_band = classify_point(band, band_index, band_center, cfg);
    check.require(on_band.n_long_bars == 1,
                  strf("band interior: %d long bars, wanted 1", on_band.n_long_bars));

    // Point on the straight edge of a half band: no loop.
    const PointCloud half = cylinder_band(1.25, 19, 19.0 / 18.0 * 3.14159265358979323846, 13, 0.3);
    const index_t half_edge = exact_point(half, 1.25, 0.0, 0.0);
    check.require(half_edge >= 0, "half band: probe point missing");
    const SpatialIndex half_index(half);
    const PointClassification on_edge = classify_point(half, half_index, half_edge, cfg);
    check.require(on_edge.n_long_bars == 0,
                  strf("half-band edge: %d long bars, wanted 0", on_edge.n_long_bars));

    // Two circles glued at two points, the annulus around a crossing: three loops.
    std::vector<double> glued;
    for (int j = 0; j < 40; ++j) {
        const double a = 2.0 * 3.14159265358979323846 * j / 40.0;
        glued.push_back(1.25 * std::cos(a));
        glued.push_back(1.25 * std::sin(a));
        glued.push_back(0.0);
    }
    for (int j = 0; j < 40; ++j) {
        if (j == 0 || j == 20) continue;  // shared with the first circle
        const double a = 2.0 * 3.14159265358979323846 * j / 40.0;
        glued.push_back(1.25 * std::cos(a));
        glued.push_back(0.0);
        glued.push_back(1.25 * std::sin(a));
    }
    const PointCloud wedge(std::move(glued), 3);
    const int n_glued = annulus_long_bar_count(wedge, cfg);
    check.require(n_glued == 3, strf("glued circles: %d long bars, wanted 3", n_glued));

    check.note(strf("long bars %d/%d/%d for band/half/glued", on_band.n_long_bars,
                    on_edge.n_long_bars, n_glued));
}

// ---------------------------------------------------------------------------
// 5: crossing planes, 4000 points: calibrated radii hit the accuracy bars.

// Calibration: 4000 points over two unit squares put about 500 points per
// unit area on each sheet. The annulus (r, s) = (0.15, 0.25) then holds about
// 60 on-sheet points, the loop around an interior point is born near the
// sampling gap (~0.06) and dies near sqrt(3)*r (~0.26), and the long-bar
// threshold s - r = 0.10 sits between the two with margin on both sides.
constexpr double kPlanesR = 0.15;
constexpr double kPlanesS = 0.25;

PointCloud planes_cloud(int count, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.shape = "planes";
    spec.count = count;
    spec.seed = seed;
    spec.proximity_radius = kPlanesR;
    spec.boundary_margin = kPlanesS;
    return sample_planes(spec);
}

void criterion_planes(Check& check) {
    const PointCloud cloud = planes_cloud(4000, 20250822);

    DetectorConfig cfg{.r = kPlanesR, .s = kPlanesS, .threads = 4};
    const auto t0 = Clock::now();
    const Partition partition = detect(cloud, cfg);
    const double elapsed = seconds_since(t0);

    const EvaluationReport report = evaluate(partition, cloud, kPlanesR);
    check.require(report.recall[2] >= 0.90,
                  strf("intersection recall %.3f < 0.90", report.recall[2]));
    check.require(report.precision[2] >= 0.80,
                  strf("intersection precision %.3f < 0.80", report.precision[2]));
    check.require(report.recall[1] >= 0.95,
                  strf("manifold interior accuracy %.3f < 0.95", report.recall[1]));
    check.require(elapsed < 120.0, strf("detect took %.1fs, budget 120s", elapsed));
    check.note(strf("(r,s)=(%.2f,%.2f): recall %.3f, precision %.3f, interior %.3f, %.1fs",
                    kPlanesR, kPlanesS, report.recall[2], report.precision[2], report.recall[1],
                    elapsed));
}

// ---------------------------------------------------------------------------
// 6: the surface grid at (r, s) = (1.5, 2.0).

void criterion_surface(Check& check) {
    HennebergParams params;  // 62 x 88 grid, proximity 1.5
    const PointCloud cloud = sample_henneberg(params);
    check.require(cloud.size() == 5456, strf("grid size %d != 5456", cloud.size()));

    const SelfIntersectionLocus locus = self_intersection_locus(params, 1e-9);
    check.require(locus.component_count == 4,
                  strf("locus has %d components, wanted 4", locus.component_count));

    DetectorConfig cfg{.r = 1.5, .s = 2.0, .threads = 1};
    const auto t0 = Clock::now();
    const Partition serial = detect(cloud, cfg);
    const double serial_s = seconds_since(t0);
    check.require(serial_s < 600.0, strf("single-thread detect %.1fs, budget 600s", serial_s));

    cfg.threads = 4;
    const auto t1 = Clock::now();
    const Partition partition = detect(cloud, cfg);
    const double pooled_s = seconds_since(t1);
    check.require(pooled_s < 180.0, strf("4-worker detect %.1fs, budget 180s", pooled_s));
    check.require(partition.labels == serial.labels, "worker count changed the labels");

    const EvaluationReport report = evaluate(partition, cloud, 1.5);
    check.require(report.recall[2] >= 0.75,
                  strf("intersection recall %.3f < 0.75", report.recall[2]));
    check.require(report.precision[2] >= 0.70,
                  strf("intersection precision %.3f < 0.70", report.precision[2]));

    // Boundary labels should concentrate near the image of the beta edges.
    const PointCloud rim = henneberg_rim(params, 2048);
    std::size_t boundary_total = 0;
    std::size_t boundary_near_rim = 0;
    for (index_t i = 0; i < cloud.size(); ++i) {
        if (partition.labels[static_cast<std::size_t>(i)] != Label::boundary) continue;
        boundary_total += 1;
        double best_sq = std::numeric_limits<double>::infinity();
        for (index_t j = 0; j < rim.size(); ++j) {
            best_sq = std::min(best_sq, squared_distance(cloud.point(i), rim.point(j)));
        }
        if (std::sqrt(best_sq) <= cfg.s) boundary_near_rim += 1;
    }
    const double rim_fraction =
        boundary_total > 0 ? static_cast<double>(boundary_near_rim) /
                                 static_cast<double>(boundary_total)
                           : 1.0;
    check.require(rim_fraction >= 0.80,
                  strf("only %.3f of boundary labels near the rim", rim_fraction));
    check.note(strf("recall %.3f, precision %.3f, rim fraction %.3f (%zu boundary), "
                    "%.1fs serial / %.1fs pooled",
                    report.recall[2], report.precision[2], rim_fraction, boundary_total, serial_s,
                    pooled_s));
}

// ---------------------------------------------------------------------------
// 7: conformation dataset, when a local copy exists.

std::string cyclooctane_path() {
    if (const char* env = std::getenv("GAD_CYCLOOCTANE_CSV")) return env;
    return "data/cyclooctane.csv";
}

bool criterion_conformations(Check& check) {
    const std::string path = cyclooctane_path();
    if (!fs::exists(path)) {
        check.note("dataset not present; place it at data/cyclooctane.csv or set "
                   "GAD_CYCLOOCTANE_CSV");
        return false;  // waived
    }
    const PointCloud cloud = load_cloud(path);
    DetectorConfig cfg{.r = 0.25, .s = 0.4, .threads = 4};
    const Partition partition = detect(cloud, cfg);

    std::vector<index_t> intersections;
    for (index_t i = 0; i < cloud.size(); ++i) {
        if (partition.labels[static_cast<std::size_t>(i)] == Label::intersection) {
            intersections.push_back(i);
        }
    }
    check.require(!intersections.empty(), "no intersection points found");
    if (!intersections.empty()) {
        const PointCloud singular = cloud.subset(intersections);
        const std::vector<int> comp = single_linkage_components(singular, cfg.s);
        int clusters = 0;
        for (int c : comp) clusters = std::max(clusters, c + 1);
        check.require(clusters == 2, strf("%d singular clusters, wanted 2", clusters));
        check.note(strf("%zu intersection points in %d clusters", intersections.size(), clusters));
    }
    return true;
}

// ---------------------------------------------------------------------------
// 8: partitions are byte-identical for 1 and 8 workers on every dataset.

std::string partition_file(const PointCloud& cloud, DetectorConfig cfg, const char* name,
                           int threads) {
    cfg.threads = threads;
    const Partition partition = detect(cloud, cfg);
    const std::string path =
        (work_dir() / strf("%s_t%d.csv", name, threads)).string();
    save_partition(partition_rows(partition), path);
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_determinism(Check& check) {
    struct Entry {
        const char* name;
        PointCloud cloud;
        DetectorConfig cfg;
    };
    std::vector<Entry> entries;
    entries.push_back({"band", cylinder_band(1.25, 36, 2.0 * 3.14159265358979323846, 13, 0.3),
                       DetectorConfig{.r = 1.0, .s = 1.5}});
    entries.push_back({"planes", planes_cloud(4000, 20250822),
                       DetectorConfig{.r = kPlanesR, .s = kPlanesS}});
    {
        HennebergParams params;
        entries.push_back({"surface", sample_henneberg(params), DetectorConfig{.r = 1.5, .s = 2.0}});
    }
    if (fs::exists(cyclooctane_path())) {
        entries.push_back({"conformations", load_cloud(cyclooctane_path()),
                           DetectorConfig{.r = 0.25, .s = 0.4}});
    } else {
        check.note("conformation dataset absent, compared the three synthetic clouds");
    }

    for (const Entry& e : entries) {
        const std::string serial = partition_file(e.cloud, e.cfg, e.name, 1);
        const std::string pooled = partition_file(e.cloud, e.cfg, e.name, 8);
        check.require(slurp(serial) == slurp(pooled),
                      strf("%s: partitions differ between 1 and 8 workers", e.name));
    }
}

// ---------------------------------------------------------------------------
// 9: rigid motions leave labels alone; doubling scales along with the radii.

void criterion_equivariance(Check& check) {
    const PointCloud cloud = planes_cloud(1500, 77);
    const DetectorConfig cfg{.r = kPlanesR, .s = kPlanesS};
    const Partition base = detect(cloud, cfg);

    const double ca = std::cos(0.6), sa = std::sin(0.6);
    const double cb = std::cos(1.1), sb = std::sin(1.1);
    std::vector<double> moved;
    moved.reserve(cloud.coords().size());
    for (index_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        const double x1 = ca * p[0] - sa * p[1];
        const double y1 = sa * p[0] + ca * p[1];
        const double z1 = p[2];
        moved.push_back(x1 + 0.25);
        moved.push_back(cb * y1 - sb * z1 - 1.5);
        moved.push_back(sb * y1 + cb * z1 + 0.75);
    }
    const Partition rotated = detect(PointCloud(std::move(moved), 3), cfg);
    check.require(rotated.labels == base.labels, "labels changed under a rigid motion");

    std::vector<double> doubled(cloud.coords());
    for (double& c : doubled) c *= 2.0;
    const DetectorConfig scaled_cfg{.r = 2.0 * kPlanesR, .s = 2.0 * kPlanesS};
    const Partition scaled = detect(PointCloud(std::move(doubled), 3), scaled_cfg);
    check.require(scaled.labels == base.labels, "labels changed under doubling");
    check.require(scaled.n_long_bars == base.n_long_bars, "bar counts changed under doubling");
    check.require(scaled.annulus_sizes == base.annulus_sizes,
                  "annulus sizes changed under doubling");

    const auto counts = base.class_counts();
    check.note(strf("1500 points: %zu boundary / %zu manifold / %zu intersection, all equal",
                    counts[0], counts[1], counts[2]));
}

// ---------------------------------------------------------------------------

struct Criterion {
    int id;
    const char* name;
    // Returns false when the criterion was waived.
    std::function<bool(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 9) {
            std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "barcode matches elimination oracle", [](Check& c) { criterion_ranks(c); return true; }},
        {2, "golden barcodes", [](Check& c) { criterion_goldens(c); return true; }},
        {3, "perturbation stability", [](Check& c) { criterion_stability(c); return true; }},
        {4, "annulus archetypes", [](Check& c) { criterion_archetypes(c); return true; }},
        {5, "crossing planes accuracy", [](Check& c) { criterion_planes(c); return true; }},
        {6, "surface grid accuracy", [](Check& c) { criterion_surface(c); return true; }},
        {7, "conformation dataset", [](Check& c) { return criterion_conformations(c); }},
        {8, "worker determinism", [](Check& c) { criterion_determinism(c); return true; }},
        {9, "motion and scale equivariance",
         [](Check& c) { criterion_equivariance(c); return true; }},
    };

    ordered_json manifest;
    manifest["criteria"] = ordered_json::array();
    int failed = 0, passed = 0, waived = 0;

    for (const Criterion& criterion : criteria) {
        if (only != 0 && criterion.id != only) continue;
        Outcome outcome;
        outcome.id = criterion.id;
        outcome.name = criterion.name;

        Check check;
        const auto t0 = Clock::now();
        bool ran = true;
        try {
            ran = criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, strf("threw: %s", e.what()));
        }
        outcome.seconds = seconds_since(t0);
        outcome.detail = check.summary();
        if (!ran) {
            outcome.status = "WAIVED";
            ++waived;
        } else if (check.passed()) {
            outcome.status = "PASS";
            ++passed;
        } else {
            outcome.status = "FAIL";
            ++failed;
        }

        std::printf("criterion %d (%s): %s - %s\n", outcome.id, outcome.name.c_str(),
                    outcome.status.c_str(),
                    outcome.detail.empty() ? "ok" : outcome.detail.c_str());
        std::fflush(stdout);

        ordered_json entry;
        entry["id"] = outcome.id;
        entry["name"] = outcome.name;
        entry["status"] = outcome.status;
        entry["detail"] = outcome.detail;
        entry["seconds"] = outcome.seconds;
        manifest["criteria"].push_back(entry);
    }

    manifest["passed"] = passed;
    manifest["failed"] = failed;
    manifest["waived"] = waived;

    const std::string manifest_path =
        only == 0 ? "acceptance_manifest.json" : strf("acceptance_manifest_%d.json", only);
    std::ofstream out(manifest_path);
    out << manifest.dump(2) << '\n';

    return failed == 0 ? 0 : 1;
}
