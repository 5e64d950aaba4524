// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "noptica/snapshot.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include "noptica/errors.hpp"

namespace noptica {

namespace {

void put_u64_le(char* out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    }
}

std::uint64_t get_u64_le(const char* in) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[i])) << (8 * i);
    }
    return v;
}

void put_f64_le(char* out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64_le(out, bits);
}

double get_f64_le(const char* in) {
    const std::uint64_t bits = get_u64_le(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

void write_snapshot(const std::string& path, const Snapshot& snap) {
    const auto n = static_cast<std::uint64_t>(snap.matrix.rows());
    if (snap.matrix.rows() != snap.matrix.cols() || n == 0) {
        throw domain_error("write_snapshot: matrix must be square and non-empty");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw domain_error("write_snapshot: cannot open '" + path + "'");
    }
    char header[16];
    put_u64_le(header, n);
    put_u64_le(header + 8, snap.step_index);
    out.write(header, sizeof(header));

    std::vector<char> buffer(16 * n);
    for (std::uint64_t row = 0; row < n; ++row) {
        for (std::uint64_t col = 0; col < n; ++col) {
            const auto& z = snap.matrix(static_cast<Eigen::Index>(row),
                                        static_cast<Eigen::Index>(col));
            put_f64_le(buffer.data() + 16 * col, z.real());
            put_f64_le(buffer.data() + 16 * col + 8, z.imag());
        }
        out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    }
    if (!out) {
        throw numeric_error("write_snapshot: write to '" + path + "' failed");
    }
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw domain_error("read_snapshot: cannot open '" + path + "'");
    }
    char header[16];
    in.read(header, sizeof(header));
    if (!in) {
        throw domain_error("read_snapshot: '" + path + "' shorter than the 16-byte header");
    }
    const std::uint64_t n = get_u64_le(header);
    if (n == 0 || n > (1u << 20)) {
        throw domain_error("read_snapshot: implausible matrix dimension "
                           + std::to_string(n));
    }
    Snapshot snap;
    snap.step_index = get_u64_le(header + 8);
    snap.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::vector<char> buffer(16 * n);
    for (std::uint64_t row = 0; row < n; ++row) {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        if (!in) {
            throw domain_error("read_snapshot: '" + path + "' truncated at row "
                               + std::to_string(row));
        }
        for (std::uint64_t col = 0; col < n; ++col) {
            snap.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = {
                get_f64_le(buffer.data() + 16 * col),
                get_f64_le(buffer.data() + 16 * col + 8)};
        }
    }
    return snap;
}

}  // namespace noptica
