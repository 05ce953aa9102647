#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "gad/datasets.hpp"
#include "gad/detector.hpp"
#include "gad/persistence.hpp"
#include "gad/point_cloud.hpp"
#include "gad/rips.hpp"
#include "gad/spatial_index.hpp"

namespace py = pybind11;

namespace {

gad::PointCloud cloud_from_array(const py::array_t<double>& points) {
    const py::buffer_info info = points.request();
    if (info.ndim != 2) throw std::invalid_argument("points must be a 2D array");
    const auto n = static_cast<std::size_t>(info.shape[0]);
    const auto d = static_cast<std::size_t>(info.shape[1]);
    if (d == 0) throw std::invalid_argument("points need at least one coordinate");

    auto view = points.unchecked<2>();
    std::vector<double> coords;
    coords.reserve(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            coords.push_back(view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(c)));
        }
    }
    return gad::PointCloud(std::move(coords), static_cast<int>(d));
}

py::array_t<double> array_from_cloud(const gad::PointCloud& cloud) {
    const auto n = static_cast<py::ssize_t>(cloud.size());
    const auto d = static_cast<py::ssize_t>(cloud.ambient_dim());
    py::array_t<double> out({n, d});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i) {
        const std::span<const double> p = cloud.point(static_cast<gad::index_t>(i));
        for (py::ssize_t c = 0; c < d; ++c) view(i, c) = p[static_cast<std::size_t>(c)];
    }
    return out;
}

py::array_t<double> barcode_to_array(const gad::Barcode& bc) {
    const auto n = static_cast<py::ssize_t>(bc.intervals.size());
    py::array_t<double> out({n, static_cast<py::ssize_t>(3)});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i) {
        const gad::PersistenceInterval& iv = bc.intervals[static_cast<std::size_t>(i)];
        view(i, 0) = iv.dim;
        view(i, 1) = iv.birth;
        view(i, 2) = iv.death;
    }
    return out;
}

gad::Barcode barcode_from_array(const py::array_t<double>& bars) {
    const py::buffer_info info = bars.request();
    if (info.ndim != 2 || info.shape[1] != 3) {
        throw std::invalid_argument("barcode must be an (n, 3) array of dim, birth, death");
    }
    auto view = bars.unchecked<2>();
    gad::Barcode bc;
    for (py::ssize_t i = 0; i < info.shape[0]; ++i) {
        gad::PersistenceInterval iv;
        iv.dim = static_cast<int>(view(i, 0));
        iv.birth = view(i, 1);
        iv.death = view(i, 2);
        bc.intervals.push_back(iv);
    }
    return bc;
}

gad::DetectorConfig make_config(double r, double s, int k, double t_max, int max_dim,
                                int min_annulus, int threads) {
    gad::DetectorConfig cfg;
    cfg.r = r;
    cfg.s = s;
    cfg.k = k;
    cfg.t_max = t_max;
    cfg.max_dim = max_dim;
    cfg.min_annulus_size = min_annulus;
    cfg.threads = threads;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Point-cloud singularity detection via local persistent homology";

    m.def("label_names", [] {
        return std::vector<std::string>{"boundary", "manifold", "intersection"};
    });

    m.def(
        "generate",
        [](const std::string& shape, int count, double noise, std::uint64_t seed, double proximity,
           double boundary_margin) {
            gad::GeneratorSpec spec;
            spec.shape = shape;
            spec.count = count > 0 ? count : (shape == "henneberg" ? 5456 : 2000);
            spec.noise = noise;
            spec.seed = seed;
            spec.proximity_radius = proximity;
            spec.boundary_margin = boundary_margin;
            const gad::PointCloud cloud = gad::generate(spec);

            const auto n = static_cast<py::ssize_t>(cloud.size());
            py::array_t<double> distance(n);
            py::array_t<bool> near(n);
            py::array_t<int> stratum(n);
            const std::vector<gad::GroundTruthLabel>& truth = *cloud.ground_truth();
            for (py::ssize_t i = 0; i < n; ++i) {
                const gad::GroundTruthLabel& t = truth[static_cast<std::size_t>(i)];
                distance.mutable_at(i) = t.distance_to_singular_locus;
                near.mutable_at(i) = t.near_singularity;
                stratum.mutable_at(i) = t.stratum_id;
            }
            py::dict out;
            out["points"] = array_from_cloud(cloud);
            out["distance"] = distance;
            out["near_singularity"] = near;
            out["stratum_id"] = stratum;
            return out;
        },
        py::arg("shape"), py::arg("count") = 0, py::arg("noise") = 0.0, py::arg("seed") = 0,
        py::arg("proximity") = 0.0, py::arg("boundary_margin") = 0.0);

    m.def(
        "detect",
        [](const py::array_t<double>& points, double r, double s, int k, double t_max, int max_dim,
           int min_annulus, int threads) {
            const gad::PointCloud cloud = cloud_from_array(points);
            const gad::Partition partition =
                gad::detect(cloud, make_config(r, s, k, t_max, max_dim, min_annulus, threads));

            const auto n = static_cast<py::ssize_t>(partition.size());
            py::array_t<std::int8_t> labels(n);
            py::array_t<int> bars(n);
            py::array_t<int> sizes(n);
            py::array_t<std::uint8_t> flags(n);
            for (py::ssize_t i = 0; i < n; ++i) {
                const std::size_t j = static_cast<std::size_t>(i);
                labels.mutable_at(i) = static_cast<std::int8_t>(partition.labels[j]);
                bars.mutable_at(i) = partition.n_long_bars[j];
                sizes.mutable_at(i) = partition.annulus_sizes[j];
                flags.mutable_at(i) = partition.flags[j];
            }
            py::dict out;
            out["labels"] = labels;
            out["n_long_bars"] = bars;
            out["annulus_sizes"] = sizes;
            out["flags"] = flags;
            return out;
        },
        py::arg("points"), py::arg("r"), py::arg("s"), py::arg("k") = 2, py::arg("t_max") = 0.0,
        py::arg("max_dim") = 0, py::arg("min_annulus") = 0, py::arg("threads") = 1);

    m.def(
        "barcode",
        [](const py::array_t<double>& points, int max_dim, double t_max, int max_degree) {
            const gad::PointCloud cloud = cloud_from_array(points);
            const gad::Filtration f = gad::build_rips_filtration(cloud, max_dim, t_max);
            return barcode_to_array(gad::compute_barcode(f, max_degree));
        },
        py::arg("points"), py::arg("max_dim"), py::arg("t_max"), py::arg("max_degree"),
        "Vietoris-Rips persistence intervals as rows of (dim, birth, death); death is inf "
        "for essential classes");

    m.def(
        "bottleneck_distance",
        [](const py::array_t<double>& bars_a, const py::array_t<double>& bars_b, int dim) {
            return gad::bottleneck_distance(barcode_from_array(bars_a), barcode_from_array(bars_b),
                                            dim);
        },
        py::arg("bars_a"), py::arg("bars_b"), py::arg("dim"));

    m.def(
        "local_svd_scores",
        [](const py::array_t<double>& points, double r, double s, int k) {
            const gad::PointCloud cloud = cloud_from_array(points);
            const gad::SpatialIndex index(cloud);
            const gad::DetectorConfig cfg =
                make_config(r, s, k, 0.0, 0, 0, 1).normalized();
            py::array_t<double> out(static_cast<py::ssize_t>(cloud.size()));
            for (gad::index_t i = 0; i < cloud.size(); ++i) {
                out.mutable_at(static_cast<py::ssize_t>(i)) =
                    gad::local_svd_score(cloud, index, i, cfg).score;
            }
            return out;
        },
        py::arg("points"), py::arg("r"), py::arg("s"), py::arg("k") = 2);
}
