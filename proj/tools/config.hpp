// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "noptica/beam.hpp"
#include "noptica/medium.hpp"
#include "noptica/structure.hpp"

namespace noptica::cli {

enum class ModelKind { hard_sphere, tabulated, pair_correlation };

/// Fully validated run configuration. Parsed from a strict JSON file
/// (unknown keys are rejected), with every physical precondition checked
/// up front so subcommands can assume valid inputs.
struct RunConfig {
    // medium, in SI
    double number_density = 0.0;
    double scattering_length = 0.0;
    double hard_sphere_diameter = 0.0;
    double thickness = 0.0;
    std::optional<double> temperature;

    // beam
    double momentum = 0.0;

    // structure model
    ModelKind model_kind = ModelKind::hard_sphere;
    std::string model_path;  // resolved; empty for hard_sphere

    // direction grid
    int n_polar = 64;
    int n_azimuth = 8;

    // integrator
    std::optional<double> dt;
    int steps = 1000;
    int store_every = 1;

    // reserved for a future inelastic extension; parsed and echoed, never
    // consumed by the static model
    double epsilon = 0.0;

    Medium medium() const;
    Beam beam() const;
    StructureModel structure_model() const;

    /// Resolved-config JSON, written next to every output.
    std::string echo_json() const;
};

/// Load and validate a config file. Relative structure-table paths are
/// resolved against the config file's directory.
RunConfig load_config(const std::string& path);

}  // namespace noptica::cli
