#pragma once

#include <stdexcept>
#include <string>

namespace gad {

// File and stream failures (missing input, unwritable output).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent data (ragged CSV, mismatched row counts,
// filtrations violating the face ordering).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gad
