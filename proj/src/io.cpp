#include "gad/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gad/errors.hpp"

namespace gad {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw, const std::string& path, std::size_t line_no) {
    const std::string field = trimmed(raw);
    if (field.empty()) {
        throw data_error(path + ":" + std::to_string(line_no) + ": empty field");
    }
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) {
        throw data_error(path + ":" + std::to_string(line_no) + ": non-numeric field '" + field +
                         "'");
    }
    return value;
}

long parse_long(const std::string& raw, const std::string& path, std::size_t line_no) {
    const std::string field = trimmed(raw);
    char* end = nullptr;
    const long value = std::strtol(field.c_str(), &end, 10);
    if (field.empty() || end != field.c_str() + field.size()) {
        throw data_error(path + ":" + std::to_string(line_no) + ": non-integer field '" + field +
                         "'");
    }
    return value;
}

std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path + " for reading");
    return in;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    return out;
}

void check_write(const std::ofstream& out, const std::string& path) {
    if (!out) throw io_error("write failed for " + path);
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

PointCloud load_cloud(const std::string& path) {
    std::ifstream in = open_for_read(path);
    std::vector<double> coords;
    std::size_t columns = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) {
            if (in.peek() == std::char_traits<char>::eof()) break;  // trailing newline
            throw data_error(path + ":" + std::to_string(line_no) + ": blank line");
        }
        const std::vector<std::string> fields = split_csv_line(line);
        if (columns == 0) {
            columns = fields.size();
        } else if (fields.size() != columns) {
            throw data_error(path + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(columns) + " fields, found " +
                             std::to_string(fields.size()));
        }
        for (const std::string& f : fields) {
            const double v = parse_double(f, path, line_no);
            if (!std::isfinite(v)) {
                throw data_error(path + ":" + std::to_string(line_no) +
                                 ": non-finite coordinate '" + trimmed(f) + "'");
            }
            coords.push_back(v);
        }
    }
    if (columns == 0) throw data_error(path + ": empty file");
    return PointCloud(std::move(coords), static_cast<int>(columns));
}

void save_cloud(const PointCloud& cloud, const std::string& path) {
    std::ofstream out = open_for_write(path);
    for (index_t i = 0; i < cloud.size(); ++i) {
        const std::span<const double> p = cloud.point(i);
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c > 0) out << ',';
            out << format_double(p[c]);
        }
        out << '\n';
    }
    check_write(out, path);
}

void save_ground_truth(const PointCloud& cloud, const std::string& path) {
    if (!cloud.ground_truth().has_value()) {
        throw data_error("cloud has no ground truth to save");
    }
    std::ofstream out = open_for_write(path);
    out << "index,near_singularity,distance,stratum_id\n";
    const std::vector<GroundTruthLabel>& truth = *cloud.ground_truth();
    for (std::size_t i = 0; i < truth.size(); ++i) {
        out << i << ',' << (truth[i].near_singularity ? 1 : 0) << ','
            << format_double(truth[i].distance_to_singular_locus) << ',' << truth[i].stratum_id
            << '\n';
    }
    check_write(out, path);
}

void load_ground_truth(PointCloud& cloud, const std::string& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line) || trimmed(line) != "index,near_singularity,distance,stratum_id") {
        throw data_error(path + ":1: expected header index,near_singularity,distance,stratum_id");
    }
    std::vector<GroundTruthLabel> truth;
    truth.reserve(static_cast<std::size_t>(cloud.size()));
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 4) {
            throw data_error(path + ":" + std::to_string(line_no) + ": expected 4 fields");
        }
        if (parse_long(fields[0], path, line_no) != static_cast<long>(truth.size())) {
            throw data_error(path + ":" + std::to_string(line_no) + ": indices must be 0,1,2,...");
        }
        GroundTruthLabel label;
        const long near = parse_long(fields[1], path, line_no);
        if (near != 0 && near != 1) {
            throw data_error(path + ":" + std::to_string(line_no) + ": near_singularity must be 0 or 1");
        }
        label.near_singularity = near == 1;
        label.distance_to_singular_locus = parse_double(fields[2], path, line_no);
        label.stratum_id = static_cast<int>(parse_long(fields[3], path, line_no));
        truth.push_back(label);
    }
    if (truth.size() != static_cast<std::size_t>(cloud.size())) {
        throw data_error(path + ": has " + std::to_string(truth.size()) + " rows for a cloud of " +
                         std::to_string(cloud.size()) + " points");
    }
    cloud.ground_truth() = std::move(truth);
}

std::vector<PartitionRow> partition_rows(const Partition& partition) {
    std::vector<PartitionRow> rows(partition.size());
    for (std::size_t i = 0; i < partition.size(); ++i) {
        rows[i] = {static_cast<index_t>(i), partition.labels[i], partition.n_long_bars[i],
                   partition.annulus_sizes[i], partition.flags[i]};
    }
    return rows;
}

Partition partition_from_rows(const std::vector<PartitionRow>& rows, index_t cloud_size) {
    if (rows.size() != static_cast<std::size_t>(cloud_size)) {
        throw data_error("partition covers " + std::to_string(rows.size()) + " points, cloud has " +
                         std::to_string(cloud_size));
    }
    Partition p;
    p.labels.resize(rows.size());
    p.n_long_bars.resize(rows.size());
    p.annulus_sizes.resize(rows.size());
    p.flags.resize(rows.size());
    for (const PartitionRow& row : rows) {
        if (row.index < 0 || row.index >= cloud_size) {
            throw data_error("partition row index " + std::to_string(row.index) + " out of range");
        }
        const std::size_t i = static_cast<std::size_t>(row.index);
        p.labels[i] = row.label;
        p.n_long_bars[i] = row.n_long_bars;
        p.annulus_sizes[i] = row.annulus_size;
        p.flags[i] = row.flags;
    }
    return p;
}

void save_partition(const std::vector<PartitionRow>& rows, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "index,label,n_long_bars,annulus_size,flags\n";
    for (const PartitionRow& row : rows) {
        out << row.index << ',' << label_name(row.label) << ',' << row.n_long_bars << ','
            << row.annulus_size << ',' << flags_to_string(row.flags) << '\n';
    }
    check_write(out, path);
}

std::vector<PartitionRow> load_partition(const std::string& path) {
    std::ifstream in = open_for_read(path);
    std::string line;
    if (!std::getline(in, line) || trimmed(line) != "index,label,n_long_bars,annulus_size,flags") {
        throw data_error(path + ":1: expected header index,label,n_long_bars,annulus_size,flags");
    }
    std::vector<PartitionRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 5) {
            throw data_error(path + ":" + std::to_string(line_no) + ": expected 5 fields");
        }
        PartitionRow row;
        row.index = static_cast<index_t>(parse_long(fields[0], path, line_no));
        try {
            row.label = label_from_name(trimmed(fields[1]));
            row.flags = flags_from_string(trimmed(fields[4]));
        } catch (const std::invalid_argument& e) {
            throw data_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        row.n_long_bars = static_cast<int>(parse_long(fields[2], path, line_no));
        row.annulus_size = static_cast<int>(parse_long(fields[3], path, line_no));
        rows.push_back(row);
    }
    return rows;
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path + " for hashing");
    std::uint64_t hash = 14695981039346656037ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace gad
