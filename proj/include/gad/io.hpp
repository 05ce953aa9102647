#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gad/detector.hpp"
#include "gad/point_cloud.hpp"

namespace gad {

// Reads a rectangular numeric CSV (no header). Throws io_error when the file
// cannot be opened and data_error, naming the offending line, for ragged
// rows, non-numeric or non-finite fields, or an empty file.
PointCloud load_cloud(const std::string& path);

// One row per point, full double precision, no header.
void save_cloud(const PointCloud& cloud, const std::string& path);

// Ground-truth sidecar, header "index,near_singularity,distance,stratum_id".
void save_ground_truth(const PointCloud& cloud, const std::string& path);

// Attaches sidecar labels to the cloud; row count and indices must match.
void load_ground_truth(PointCloud& cloud, const std::string& path);

struct PartitionRow {
    index_t index = 0;
    Label label = Label::boundary;
    int n_long_bars = 0;
    int annulus_size = 0;
    std::uint8_t flags = kFlagNone;
};

std::vector<PartitionRow> partition_rows(const Partition& partition);
Partition partition_from_rows(const std::vector<PartitionRow>& rows, index_t cloud_size);

// Partition CSV, header "index,label,n_long_bars,annulus_size,flags".
void save_partition(const std::vector<PartitionRow>& rows, const std::string& path);
std::vector<PartitionRow> load_partition(const std::string& path);

// FNV-1a over the raw file bytes; stable fingerprint for run manifests.
std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t value);

// Shortest decimal form that round-trips a double ("%.17g").
std::string format_double(double value);

}  // namespace gad
