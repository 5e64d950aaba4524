// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "noptica/errors.hpp"

namespace noptica::cli {

/// Floating-point values are printed with 17 significant digits so that
/// reruns and regression baselines compare byte for byte.
inline std::string fmt(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

using JsonValue = std::variant<double, std::int64_t, bool, std::string>;

/// Minimal flat JSON-object writer with deterministic key order and
/// 17-digit doubles.
class JsonObject {
  public:
    JsonObject& field(const std::string& key, JsonValue value) {
        fields_.emplace_back(key, std::move(value));
        return *this;
    }

    std::string str(int indent = 2) const {
        std::string out = "{\n";
        const std::string pad(indent, ' ');
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            out += pad + '"' + fields_[i].first + "\": ";
            const auto& v = fields_[i].second;
            if (std::holds_alternative<double>(v)) {
                out += fmt(std::get<double>(v));
            } else if (std::holds_alternative<std::int64_t>(v)) {
                out += std::to_string(std::get<std::int64_t>(v));
            } else if (std::holds_alternative<bool>(v)) {
                out += std::get<bool>(v) ? "true" : "false";
            } else {
                out += '"';
                for (char c : std::get<std::string>(v)) {
                    if (c == '"' || c == '\\') out += '\\';
                    out += c;
                }
                out += '"';
            }
            if (i + 1 < fields_.size()) out += ',';
            out += '\n';
        }
        out += "}\n";
        return out;
    }

  private:
    std::vector<std::pair<std::string, JsonValue>> fields_;
};

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw domain_error("cannot open output file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw numeric_error("write to '" + path + "' failed");
    }
}

}  // namespace noptica::cli
