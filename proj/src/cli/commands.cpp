#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Dense>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gad/datasets.hpp"
#include "gad/detector.hpp"
#include "gad/errors.hpp"
#include "gad/io.hpp"
#include "gad/point_cloud.hpp"
#include "gad/svg.hpp"

#ifndef GAD_VERSION
#define GAD_VERSION "0.0.0"
#endif

namespace gad::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// h.csv -> h.truth.csv, h.manifest.json, ...
std::string sibling(const std::string& path, const char* suffix) {
    const std::filesystem::path p(path);
    return (p.parent_path() / (p.stem().string() + suffix)).string();
}

void write_json(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw io_error("write failed for " + path);
}

json hash_entries(const std::vector<std::string>& paths) {
    json entries = json::object();
    for (const std::string& p : paths) entries[p] = hex64(fnv1a64_file(p));
    return entries;
}

json manifest_skeleton(const char* command) {
    json doc;
    doc["command"] = command;
    doc["version"] = GAD_VERSION;
    return doc;
}

struct GenerateOpts {
    std::string shape;
    int count = 0;  // 0 keeps the shape default
    double noise = 0.0;
    std::uint64_t seed = 0;
    double proximity = 0.0;
    double boundary_margin = 0.0;
    std::string out;
    std::string truth_out;
    std::string manifest;
};

int cmd_generate(const GenerateOpts& opt) {
    GeneratorSpec spec;
    spec.shape = opt.shape;
    spec.count = opt.count > 0 ? opt.count : (opt.shape == "henneberg" ? 5456 : 2000);
    spec.noise = opt.noise;
    spec.seed = opt.seed;
    spec.proximity_radius = opt.proximity;
    spec.boundary_margin = opt.boundary_margin;

    const auto t0 = Clock::now();
    const PointCloud cloud = generate(spec);
    const double generate_ms = ms_since(t0);

    const std::string truth_path =
        opt.truth_out.empty() ? sibling(opt.out, ".truth.csv") : opt.truth_out;
    const auto t1 = Clock::now();
    save_cloud(cloud, opt.out);
    save_ground_truth(cloud, truth_path);
    const double write_ms = ms_since(t1);

    json doc = manifest_skeleton("generate");
    doc["config"] = {{"shape", spec.shape},       {"count", spec.count},
                     {"noise", spec.noise},       {"seed", spec.seed},
                     {"proximity", spec.proximity_radius},
                     {"boundary_margin", spec.boundary_margin}};
    doc["points"] = cloud.size();
    doc["ambient_dim"] = cloud.ambient_dim();
    doc["outputs"] = hash_entries({opt.out, truth_path});
    doc["timings_ms"] = {{"generate", generate_ms}, {"write", write_ms}};
    write_json(doc, opt.manifest.empty() ? sibling(opt.out, ".manifest.json") : opt.manifest);

    std::printf("generated %d %s points -> %s (truth: %s)\n", static_cast<int>(cloud.size()),
                spec.shape.c_str(), opt.out.c_str(), truth_path.c_str());
    return 0;
}

struct DetectOpts {
    std::string in;
    double r = 0.0;
    double s = 0.0;
    int k = 2;
    double t_max = 0.0;
    int max_dim = 0;
    int min_annulus = 0;
    int threads = 1;
    std::string subset;
    std::string out;
    std::string svd_out;
    std::string manifest;
};

std::vector<index_t> read_index_list(const std::string& path, index_t limit) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path + " for reading");
    std::vector<index_t> indices;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        char* end = nullptr;
        const long v = std::strtol(line.c_str(), &end, 10);
        while (end != nullptr && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
        if (end == line.c_str() || *end != '\0') {
            throw data_error(path + ":" + std::to_string(line_no) + ": expected one index per line");
        }
        if (v < 0 || v >= limit) {
            throw data_error(path + ":" + std::to_string(line_no) + ": index " +
                             std::to_string(v) + " out of range");
        }
        indices.push_back(static_cast<index_t>(v));
    }
    if (indices.empty()) throw data_error(path + ": no indices");
    return indices;
}

int cmd_detect(const DetectOpts& opt) {
    DetectorConfig cfg;
    cfg.r = opt.r;
    cfg.s = opt.s;
    cfg.k = opt.k;
    cfg.t_max = opt.t_max;
    cfg.max_dim = opt.max_dim;
    cfg.min_annulus_size = opt.min_annulus;
    cfg.threads = opt.threads;
    bool swapped = false;
    const DetectorConfig normalized = cfg.normalized(&swapped);

    const auto t0 = Clock::now();
    const PointCloud cloud = load_cloud(opt.in);
    const double load_ms = ms_since(t0);

    std::vector<index_t> indices;
    if (opt.subset.empty()) {
        indices.resize(static_cast<std::size_t>(cloud.size()));
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<index_t>(i);
    } else {
        indices = read_index_list(opt.subset, cloud.size());
    }

    const auto t1 = Clock::now();
    const std::vector<PointClassification> results = classify_subset(cloud, indices, normalized);
    const double detect_ms = ms_since(t1);

    std::vector<PartitionRow> rows(results.size());
    std::array<std::size_t, 3> counts{};
    for (std::size_t i = 0; i < results.size(); ++i) {
        rows[i] = {indices[i], results[i].label, results[i].n_long_bars, results[i].annulus_size,
                   results[i].flags};
        counts[static_cast<std::size_t>(results[i].label)] += 1;
    }

    const auto t2 = Clock::now();
    save_partition(rows, opt.out);
    std::vector<std::string> outputs = {opt.out};
    if (!opt.svd_out.empty()) {
        const SpatialIndex index(cloud);
        std::ofstream svd(opt.svd_out);
        if (!svd) throw io_error("cannot open " + opt.svd_out + " for writing");
        svd << "index,svd_score,annulus_size\n";
        for (const index_t i : indices) {
            const LocalSvdScore score = local_svd_score(cloud, index, i, normalized);
            svd << i << ',' << format_double(score.score) << ',' << score.annulus_size << '\n';
        }
        if (!svd) throw io_error("write failed for " + opt.svd_out);
        outputs.push_back(opt.svd_out);
    }
    const double write_ms = ms_since(t2);

    json doc = manifest_skeleton("detect");
    doc["config"] = {{"r", normalized.r},
                     {"s", normalized.s},
                     {"k", normalized.k},
                     {"t_max", normalized.t_max},
                     {"max_dim", normalized.max_dim},
                     {"min_annulus_size", normalized.min_annulus_size},
                     {"threads", normalized.threads},
                     {"radii_swapped", swapped}};
    doc["inputs"] = hash_entries(opt.subset.empty()
                                     ? std::vector<std::string>{opt.in}
                                     : std::vector<std::string>{opt.in, opt.subset});
    doc["points_processed"] = rows.size();
    doc["class_counts"] = {{"boundary", counts[0]},
                           {"manifold", counts[1]},
                           {"intersection", counts[2]}};
    doc["outputs"] = hash_entries(outputs);
    doc["timings_ms"] = {{"load", load_ms}, {"detect", detect_ms}, {"write", write_ms}};
    write_json(doc, opt.manifest.empty() ? sibling(opt.out, ".manifest.json") : opt.manifest);

    std::printf("%zu points: %zu boundary, %zu manifold, %zu intersection -> %s\n", rows.size(),
                counts[0], counts[1], counts[2], opt.out.c_str());
    return 0;
}

struct EvaluateOpts {
    std::string points;
    std::string truth;
    std::string partition;
    double proximity = 0.0;
    std::string out;
    std::string manifest;
};

int cmd_evaluate(const EvaluateOpts& opt) {
    PointCloud cloud = load_cloud(opt.points);
    load_ground_truth(cloud, opt.truth);
    const std::vector<PartitionRow> rows = load_partition(opt.partition);
    const Partition partition = partition_from_rows(rows, cloud.size());
    const EvaluationReport report = evaluate(partition, cloud, opt.proximity);

    static const char* kClassNames[3] = {"boundary", "manifold", "intersection"};
    json confusion = json::object();
    for (int t = 0; t < 3; ++t) {
        json row = json::object();
        for (int p = 0; p < 3; ++p) row[kClassNames[p]] = report.confusion[t][p];
        confusion[kClassNames[t]] = row;
    }
    json scores = json::object();
    for (int c = 0; c < 3; ++c) {
        scores[kClassNames[c]] = {{"precision", report.precision[c]},
                                  {"recall", report.recall[c]}};
    }

    const std::string report_path =
        opt.out.empty() ? sibling(opt.partition, ".report.json") : opt.out;
    json doc = manifest_skeleton("evaluate");
    doc["proximity_radius"] = report.proximity_radius;
    doc["inputs"] = hash_entries({opt.points, opt.truth, opt.partition});
    doc["confusion"] = confusion;  // rows are true classes, columns predictions
    doc["scores"] = scores;
    write_json(doc, report_path);
    write_json(doc, opt.manifest.empty() ? sibling(report_path, ".manifest.json") : opt.manifest);

    std::printf("intersection precision %.3f recall %.3f -> %s\n",
                report.precision[2], report.recall[2], report_path.c_str());
    return 0;
}

struct ProjectOpts {
    std::string in;
    int target_dim = 2;
    std::string out;
    std::string manifest;
};

int cmd_project(const ProjectOpts& opt) {
    const PointCloud cloud = load_cloud(opt.in);
    if (opt.target_dim < 1 || opt.target_dim > cloud.ambient_dim()) {
        throw std::invalid_argument("target dimension must be in [1, ambient_dim]");
    }
    const auto n = static_cast<Eigen::Index>(cloud.size());
    const auto d = static_cast<Eigen::Index>(cloud.ambient_dim());

    Eigen::MatrixXd data(n, d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::span<const double> p = cloud.point(static_cast<index_t>(i));
        for (Eigen::Index c = 0; c < d; ++c) data(i, c) = p[static_cast<std::size_t>(c)];
    }
    const Eigen::RowVectorXd mean = data.colwise().mean();
    data.rowwise() -= mean;

    const auto t0 = Clock::now();
    const Eigen::BDCSVD<Eigen::MatrixXd> svd(data, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::MatrixXd projected = data * svd.matrixV().leftCols(opt.target_dim);
    const double svd_ms = ms_since(t0);

    double total = 0.0, captured = 0.0;
    const Eigen::VectorXd sigma = svd.singularValues();
    for (Eigen::Index j = 0; j < sigma.size(); ++j) {
        total += sigma[j] * sigma[j];
        if (j < opt.target_dim) captured += sigma[j] * sigma[j];
    }
    const double captured_fraction = total > 0.0 ? captured / total : 1.0;

    std::ofstream out(opt.out);
    if (!out) throw io_error("cannot open " + opt.out + " for writing");
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index c = 0; c < opt.target_dim; ++c) {
            if (c > 0) out << ',';
            out << format_double(projected(i, c));
        }
        out << '\n';
    }
    if (!out) throw io_error("write failed for " + opt.out);

    json doc = manifest_skeleton("project");
    doc["config"] = {{"method", "pca"}, {"target_dim", opt.target_dim}};
    doc["inputs"] = hash_entries({opt.in});
    doc["captured_variance"] = captured_fraction;
    doc["outputs"] = hash_entries({opt.out});
    doc["timings_ms"] = {{"svd", svd_ms}};
    write_json(doc, opt.manifest.empty() ? sibling(opt.out, ".manifest.json") : opt.manifest);

    std::printf("projected %d points to %dD (%.4f of variance) -> %s\n",
                static_cast<int>(cloud.size()), opt.target_dim, captured_fraction,
                opt.out.c_str());
    return 0;
}

struct PlotOpts {
    std::string points;
    std::string partition;
    std::string out;
    std::string manifest;
};

int cmd_plot(const PlotOpts& opt) {
    // A zero-byte points file plots as empty axes instead of failing.
    std::error_code size_ec;
    const auto file_size = std::filesystem::file_size(opt.points, size_ec);
    const PointCloud cloud =
        (!size_ec && file_size == 0) ? PointCloud() : load_cloud(opt.points);
    std::vector<Label> labels;
    const std::vector<Label>* label_ptr = nullptr;
    if (!opt.partition.empty()) {
        labels.assign(static_cast<std::size_t>(cloud.size()), Label::manifold);
        for (const PartitionRow& row : load_partition(opt.partition)) {
            if (row.index < 0 || row.index >= cloud.size()) {
                throw data_error("partition row index " + std::to_string(row.index) +
                                 " out of range for " + std::to_string(cloud.size()) + " points");
            }
            labels[static_cast<std::size_t>(row.index)] = row.label;
        }
        label_ptr = &labels;
    }
    write_scatter_svg(opt.out, cloud, label_ptr);

    json doc = manifest_skeleton("plot");
    doc["inputs"] = hash_entries(opt.partition.empty()
                                     ? std::vector<std::string>{opt.points}
                                     : std::vector<std::string>{opt.points, opt.partition});
    doc["outputs"] = hash_entries({opt.out});
    write_json(doc, opt.manifest.empty() ? sibling(opt.out, ".manifest.json") : opt.manifest);

    std::printf("plotted %d points -> %s\n", static_cast<int>(cloud.size()), opt.out.c_str());
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Partitions a point cloud into manifold, boundary, and intersection points "
                 "via local persistent homology"};
    app.set_version_flag("--version", GAD_VERSION);
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* generate = app.add_subcommand("generate", "Sample a synthetic shape with ground truth");
    generate->add_option("--shape", gen.shape, "One of: henneberg, planes, hemisphere_plane, circle, sphere")
        ->required()
        ->check(CLI::IsMember(generator_shapes()));
    generate->add_option("--count", gen.count, "Point count (default: 5456 henneberg, else 2000)");
    generate->add_option("--noise", gen.noise, "Radius of isotropic perturbation");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--proximity", gen.proximity, "Ground-truth near-singularity radius");
    generate->add_option("--boundary-margin", gen.boundary_margin, "Rim stratum width");
    generate->add_option("--out", gen.out, "Points CSV path")->required();
    generate->add_option("--truth-out", gen.truth_out, "Sidecar path (default <out>.truth.csv)");
    generate->add_option("--manifest", gen.manifest, "Manifest path (default <out>.manifest.json)");

    DetectOpts det;
    CLI::App* detect = app.add_subcommand("detect", "Label each point by its annulus barcode");
    detect->add_option("--in", det.in, "Points CSV")->required();
    detect->add_option("--r", det.r, "Inner annulus radius")->required();
    detect->add_option("--s", det.s, "Outer annulus radius")->required();
    detect->add_option("--k", det.k, "Intrinsic dimension; homology degree k-1");
    detect->add_option("--t-max", det.t_max, "Filtration cap (default 2s)");
    detect->add_option("--max-dim", det.max_dim, "Simplex dimension cap (default k)");
    detect->add_option("--min-annulus", det.min_annulus, "Sparse-annulus cutoff (default k+1)");
    detect->add_option("--threads", det.threads, "Worker threads (0 = hardware)");
    detect->add_option("--subset", det.subset, "File listing point indices to classify");
    detect->add_option("--out", det.out, "Partition CSV path")->required();
    detect->add_option("--svd-out", det.svd_out, "Also write local SVD scores CSV");
    detect->add_option("--manifest", det.manifest, "Manifest path (default <out>.manifest.json)");

    EvaluateOpts eva;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Score a partition against ground truth");
    evaluate->add_option("--points", eva.points, "Points CSV")->required();
    evaluate->add_option("--truth", eva.truth, "Ground-truth sidecar CSV")->required();
    evaluate->add_option("--partition", eva.partition, "Partition CSV")->required();
    evaluate->add_option("--proximity", eva.proximity, "Distance that counts as near the singular locus")
        ->required();
    evaluate->add_option("--out", eva.out, "Report JSON path (default <partition>.report.json)");
    evaluate->add_option("--manifest", eva.manifest, "Manifest path");

    ProjectOpts proj;
    CLI::App* project = app.add_subcommand("project", "PCA projection to a lower dimension");
    project->add_option("--in", proj.in, "Points CSV")->required();
    project->add_option("--target-dim", proj.target_dim, "Output dimension (default 2)");
    project->add_option("--out", proj.out, "Projected CSV path")->required();
    project->add_option("--manifest", proj.manifest, "Manifest path (default <out>.manifest.json)");

    PlotOpts plot;
    CLI::App* plot_cmd = app.add_subcommand("plot", "Scatter SVG of labelled points");
    plot_cmd->add_option("--points", plot.points, "Points CSV, 2D or 3D")->required();
    plot_cmd->add_option("--partition", plot.partition, "Partition CSV for colours");
    plot_cmd->add_option("--out", plot.out, "SVG path")->required();
    plot_cmd->add_option("--manifest", plot.manifest, "Manifest path (default <out>.manifest.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << GAD_VERSION << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (detect->parsed()) return cmd_detect(det);
        if (evaluate->parsed()) return cmd_evaluate(eva);
        if (project->parsed()) return cmd_project(proj);
        if (plot_cmd->parsed()) return cmd_plot(plot);
        std::fprintf(stderr, "error: no command given\n");
        return 2;
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const data_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}

}  // namespace gad::cli
