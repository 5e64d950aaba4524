// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <set>

#include "emit.hpp"
#include "noptica/constants.hpp"

namespace noptica::cli {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw domain_error("config: unknown key '" + item.key() + "' in " + where);
        }
    }
}

double number_at(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) {
        throw domain_error("config: missing key '" + key + "' in " + where);
    }
    if (!obj.at(key).is_number()) {
        throw domain_error("config: '" + key + "' in " + where + " must be a number");
    }
    const double v = obj.at(key).get<double>();
    if (!std::isfinite(v)) {
        throw domain_error("config: '" + key + "' in " + where + " must be finite");
    }
    return v;
}

int integer_at(const json& obj, const std::string& where, const std::string& key,
               int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number_integer()) {
        throw domain_error("config: '" + key + "' in " + where + " must be an integer");
    }
    return obj.at(key).get<int>();
}

}  // namespace

Medium RunConfig::medium() const {
    return Medium(number_density, scattering_length, hard_sphere_diameter, thickness,
                  temperature);
}

Beam RunConfig::beam() const {
    return Beam(momentum);
}

StructureModel RunConfig::structure_model() const {
    switch (model_kind) {
        case ModelKind::hard_sphere:
            return StructureModel::hard_sphere(hard_sphere_diameter, number_density);
        case ModelKind::tabulated:
            return StructureModel::tabulated_from_csv(model_path);
        case ModelKind::pair_correlation:
            return StructureModel::pair_correlation_from_csv(model_path, number_density);
    }
    throw domain_error("config: invalid structure model");
}

std::string RunConfig::echo_json() const {
    JsonObject obj;
    obj.field("number_density_per_m3", number_density)
        .field("scattering_length_m", scattering_length)
        .field("hard_sphere_diameter_m", hard_sphere_diameter)
        .field("thickness_m", thickness);
    if (temperature) obj.field("temperature_K", *temperature);
    obj.field("momentum_kg_m_per_s", momentum)
        .field("wavelength_m", 2.0 * std::numbers::pi * constants::hbar / momentum);
    switch (model_kind) {
        case ModelKind::hard_sphere:
            obj.field("structure_model", std::string("hard_sphere"));
            break;
        case ModelKind::tabulated:
            obj.field("structure_model", std::string("tabulated"));
            break;
        case ModelKind::pair_correlation:
            obj.field("structure_model", std::string("pair_correlation"));
            break;
    }
    if (!model_path.empty()) obj.field("structure_path", model_path);
    obj.field("n_polar", static_cast<std::int64_t>(n_polar))
        .field("n_azimuth", static_cast<std::int64_t>(n_azimuth));
    if (dt) obj.field("dt_s", *dt);
    obj.field("steps", static_cast<std::int64_t>(steps))
        .field("store_every", static_cast<std::int64_t>(store_every))
        .field("epsilon_J", epsilon);
    return obj.str();
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw domain_error("config: cannot open '" + path + "'");
    }
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw domain_error("config: '" + path + "' is not valid JSON: " + e.what());
    }
    require_keys(root, "top level",
                 {"medium", "beam", "structure", "grid", "integrator", "epsilon_J"});

    RunConfig cfg;

    if (!root.contains("medium") || !root["medium"].is_object()) {
        throw domain_error("config: missing 'medium' object");
    }
    const json& medium = root["medium"];
    require_keys(medium, "medium",
                 {"number_density_per_m3", "number_density_per_cm3", "scattering_length_m",
                  "hard_sphere_diameter_m", "thickness_m", "temperature_K"});
    const bool per_m3 = medium.contains("number_density_per_m3");
    const bool per_cm3 = medium.contains("number_density_per_cm3");
    if (per_m3 == per_cm3) {
        throw domain_error("config: medium needs exactly one of number_density_per_m3 "
                           "or number_density_per_cm3");
    }
    cfg.number_density = per_m3 ? number_at(medium, "medium", "number_density_per_m3")
                                : number_at(medium, "medium", "number_density_per_cm3") * 1e6;
    cfg.scattering_length = number_at(medium, "medium", "scattering_length_m");
    cfg.hard_sphere_diameter = medium.contains("hard_sphere_diameter_m")
                                   ? number_at(medium, "medium", "hard_sphere_diameter_m")
                                   : 0.0;
    cfg.thickness = number_at(medium, "medium", "thickness_m");
    if (medium.contains("temperature_K")) {
        cfg.temperature = number_at(medium, "medium", "temperature_K");
    }

    if (!root.contains("beam") || !root["beam"].is_object()) {
        throw domain_error("config: missing 'beam' object");
    }
    const json& beam = root["beam"];
    require_keys(beam, "beam", {"wavelength_angstrom", "wavelength_m", "momentum_kg_m_per_s"});
    const int beam_keys = static_cast<int>(beam.contains("wavelength_angstrom"))
                          + static_cast<int>(beam.contains("wavelength_m"))
                          + static_cast<int>(beam.contains("momentum_kg_m_per_s"));
    if (beam_keys != 1) {
        throw domain_error("config: beam needs exactly one of wavelength_angstrom, "
                           "wavelength_m or momentum_kg_m_per_s");
    }
    if (beam.contains("momentum_kg_m_per_s")) {
        cfg.momentum = number_at(beam, "beam", "momentum_kg_m_per_s");
    } else {
        const double wavelength =
            beam.contains("wavelength_m")
                ? number_at(beam, "beam", "wavelength_m")
                : number_at(beam, "beam", "wavelength_angstrom") * 1e-10;
        cfg.momentum = Beam::from_wavelength(wavelength).momentum();
    }

    if (root.contains("structure")) {
        const json& structure = root["structure"];
        require_keys(structure, "structure", {"model", "path"});
        if (!structure.contains("model") || !structure["model"].is_string()) {
            throw domain_error("config: structure.model must be a string");
        }
        const std::string kind = structure["model"].get<std::string>();
        if (kind == "hard_sphere") {
            cfg.model_kind = ModelKind::hard_sphere;
            if (structure.contains("path")) {
                throw domain_error("config: structure.path is not used by hard_sphere");
            }
        } else if (kind == "tabulated" || kind == "pair_correlation") {
            cfg.model_kind =
                kind == "tabulated" ? ModelKind::tabulated : ModelKind::pair_correlation;
            if (!structure.contains("path") || !structure["path"].is_string()) {
                throw domain_error("config: structure model '" + kind + "' needs a path");
            }
            std::filesystem::path table(structure["path"].get<std::string>());
            if (table.is_relative()) {
                table = std::filesystem::path(path).parent_path() / table;
            }
            cfg.model_path = table.string();
        } else {
            throw domain_error("config: unknown structure model '" + kind + "'");
        }
    }

    if (root.contains("grid")) {
        const json& grid = root["grid"];
        require_keys(grid, "grid", {"n_polar", "n_azimuth"});
        cfg.n_polar = integer_at(grid, "grid", "n_polar", cfg.n_polar);
        cfg.n_azimuth = integer_at(grid, "grid", "n_azimuth", cfg.n_azimuth);
    }

    if (root.contains("integrator")) {
        const json& integrator = root["integrator"];
        require_keys(integrator, "integrator", {"dt_s", "steps", "store_every"});
        if (integrator.contains("dt_s")) {
            cfg.dt = number_at(integrator, "integrator", "dt_s");
        }
        cfg.steps = integer_at(integrator, "integrator", "steps", cfg.steps);
        cfg.store_every = integer_at(integrator, "integrator", "store_every", cfg.store_every);
    }

    if (root.contains("epsilon_J")) {
        cfg.epsilon = number_at(root, "top level", "epsilon_J");
        if (cfg.epsilon < 0.0) {
            throw domain_error("config: epsilon_J must be >= 0");
        }
    }

    // construct every domain object once so all preconditions are checked
    // here rather than halfway through a run
    (void)cfg.medium();
    (void)cfg.beam();
    if (cfg.model_kind == ModelKind::hard_sphere) {
        (void)cfg.structure_model();
    }
    if (cfg.n_polar < 2 || cfg.n_azimuth < 1) {
        throw domain_error("config: grid needs n_polar >= 2 and n_azimuth >= 1");
    }
    if (cfg.dt && !(*cfg.dt > 0.0)) {
        throw domain_error("config: integrator.dt_s must be positive");
    }
    if (cfg.steps < 1 || cfg.store_every < 1) {
        throw domain_error("config: integrator.steps and store_every must be >= 1");
    }
    return cfg;
}

}  // namespace noptica::cli
