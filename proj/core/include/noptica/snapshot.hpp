// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace noptica {

/// Binary matrix snapshot: 16-byte header (little-endian uint64 N,
/// little-endian uint64 step index) followed by the row-major matrix as
/// little-endian float64 (re, im) pairs.
struct Snapshot {
    std::uint64_t step_index;
    Eigen::MatrixXcd matrix;
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

}  // namespace noptica
