// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
//
// noptica command-line tool: coherent neutron-optics quantities, diffuse
// scattering curves, Lindblad evolution on the elastic shell and Wigner
// phase-space diagnostics, driven by a JSON config plus flag overrides.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "config.hpp"
#include "emit.hpp"
#include "noptica/constants.hpp"
#include "noptica/diffuse.hpp"
#include "noptica/interferometry.hpp"
#include "noptica/lindblad.hpp"
#include "noptica/optics.hpp"
#include "noptica/snapshot.hpp"
#include "noptica/threads.hpp"
#include "noptica/wigner.hpp"

namespace {

constexpr double pi = std::numbers::pi;
using namespace noptica;
using cli::fmt;
using cli::JsonObject;
using cli::RunConfig;

std::string config_echo_path(const std::string& output) {
    std::filesystem::path p(output);
    p.replace_extension(".config.json");
    return p.string();
}

void write_outputs(const std::string& output, const std::string& content,
                   const std::string& echo) {
    cli::write_text_file(output, content);
    cli::write_text_file(config_echo_path(output), echo);
}

// refract and phase share one record: indices, phase shift and the complex
// optical potential at sigma_t = sigma_d
void run_optics_record(const RunConfig& cfg, const std::string& output) {
    const Medium medium = cfg.medium();
    const Beam beam = cfg.beam();
    const StructureModel model = cfg.structure_model();

    const double sigma_d = diffusion_cross_section(medium, beam, model);
    const PhaseShift chi = phase_shift(medium, beam, sigma_d);
    const OpticalPotential u = complex_optical_potential(medium, beam, model);

    JsonObject record;
    record.field("n_exact", refractive_index_gs(medium, beam, IndexForm::exact))
        .field("n_first_order", refractive_index_gs(medium, beam, IndexForm::first_order))
        .field("chi_prime", chi.chi_prime)
        .field("chi_double_prime", chi.chi_double_prime)
        .field("U_re_J", u.value.real())
        .field("U_im_J", u.value.imag());
    write_outputs(output, record.str(), cfg.echo_json());
}

void run_sq(const RunConfig& cfg, const std::string& output, double q_max, int points) {
    if (!(q_max > 0.0) || points < 2) {
        throw domain_error("sq: need --q-max > 0 and --points >= 2");
    }
    const StructureModel model = cfg.structure_model();
    std::vector<std::string> rows(points);
    parallel_for(points, [&](int i) {
        const double q = q_max * i / (points - 1);
        rows[i] = fmt(q) + "," + fmt(model(q)) + "\n";
    });
    std::string csv = "q_per_m,S\n";
    for (const auto& row : rows) csv += row;
    write_outputs(output, csv, cfg.echo_json());
}

void run_diffuse(const RunConfig& cfg, const std::string& output, double phi_min,
                 double phi_max, int points) {
    if (cfg.model_kind != cli::ModelKind::hard_sphere) {
        throw domain_error("diffuse: the closed-form and small-angle columns exist only "
                           "for the hard_sphere structure model");
    }
    if (!(phi_min >= 0.0) || !(phi_max <= pi) || !(phi_min < phi_max) || points < 2) {
        throw domain_error("diffuse: need 0 <= --phi-min < --phi-max <= pi and --points >= 2");
    }
    const Medium medium = cfg.medium();
    const Beam beam = cfg.beam();
    const StructureModel model = cfg.structure_model();

    std::vector<std::string> rows(points);
    parallel_for(points, [&](int i) {
        const double phi = phi_min + (phi_max - phi_min) * i / (points - 1);
        rows[i] = fmt(phi) + "," + fmt(acceptance_closed_form(medium, beam, phi)) + ","
                  + fmt(acceptance_quadrature(medium, beam, model, phi)) + ","
                  + fmt(acceptance_small_angle(medium, beam, phi)) + "\n";
    });
    std::string csv = "phi_rad,A_closed,A_quadrature,A_small_angle\n";
    for (const auto& row : rows) csv += row;
    write_outputs(output, csv, cfg.echo_json());
}

void run_evolve(const RunConfig& cfg, const std::string& output, int j0,
                int snapshot_every) {
    if (!cfg.dt) {
        throw domain_error("evolve: no time step; set --dt or integrator.dt_s");
    }
    const Medium medium = cfg.medium();
    const Beam beam = cfg.beam();
    const StructureModel model = cfg.structure_model();
    const DirectionGrid grid = build_direction_grid(cfg.n_polar, cfg.n_azimuth);
    const JumpOperatorSet jumps = build_jump_operators(grid, medium, beam, model);

    if (j0 < 0) j0 = (cfg.n_polar - 1) * cfg.n_azimuth;  // most forward node
    if (j0 >= grid.size()) {
        throw domain_error("evolve: --j0 out of range for this grid");
    }

    const DensityMatrix rho0 = DensityMatrix::basis_state(grid.size(), j0);
    const Trajectory traj = evolve(rho0, jumps, optical_potential(medium), *cfg.dt,
                                   cfg.steps, cfg.store_every);

    std::string csv = "t_s,trace,min_eig,rho_j0j0,ot_residual\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const auto& diag = traj.diagnostics[k];
        csv += fmt(traj.times[k]) + "," + fmt(traj.states[k].trace().real()) + ","
               + fmt(diag.min_eigenvalue) + "," + fmt(traj.states[k](j0, j0).real()) + ","
               + fmt(diag.ot_residual_relative) + "\n";
    }
    write_outputs(output, csv, cfg.echo_json());

    if (snapshot_every > 0) {
        const std::filesystem::path stem = std::filesystem::path(output).replace_extension();
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
            const auto step = static_cast<std::uint64_t>(
                std::llround(traj.times[k] / *cfg.dt));
            if (k + 1 != traj.times.size() && step % snapshot_every != 0) continue;
            Snapshot snap{step, traj.states[k]};
            write_snapshot(stem.string() + "_step" + std::to_string(step) + ".bin", snap);
        }
    }
}

void run_wigner(const std::string& input, const std::string& output, double p_min,
                double dp, int x_points) {
    const Snapshot snap = read_snapshot(input);
    const MomentumState1D state(snap.matrix, p_min, dp);
    if (x_points <= 0) x_points = 2 * state.dim();
    const std::vector<double> x =
        conjugate_x_grid(dp, x_points, -pi * constants::hbar / dp);
    const WignerField field = wigner_transform(state, x);

    std::string csv = "x_m,p_kg_m_per_s,f_w_per_J_s\n";
    for (std::size_t s = 0; s < field.p_grid().size(); ++s) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            csv += fmt(x[i]) + "," + fmt(field.p_grid()[s]) + ","
                   + fmt(field.values()(static_cast<int>(s), static_cast<int>(i))) + "\n";
        }
    }
    JsonObject params;
    params.field("input", input)
        .field("p_min_kg_m_per_s", p_min)
        .field("dp_kg_m_per_s", dp)
        .field("x_points", static_cast<std::int64_t>(x_points))
        .field("snapshot_step", static_cast<std::int64_t>(snap.step_index));
    cli::write_text_file(output, csv);
    cli::write_text_file(config_echo_path(output), params.str());
}

void run_visibility(const RunConfig& cfg, const std::string& output, double phi) {
    const VisibilityBudget budget =
        visibility_budget(cfg.medium(), cfg.beam(), cfg.structure_model(), phi);
    JsonObject record;
    record.field("phi_rad", phi)
        .field("chi_prime", budget.chi.chi_prime)
        .field("chi_double_prime", budget.chi.chi_double_prime)
        .field("a_phi", budget.a_phi)
        .field("transmitted_flux_fraction", budget.transmitted_flux_fraction)
        .field("coherent_flux_fraction", budget.coherent_flux_fraction)
        .field("corrected_fringe_amplitude", budget.corrected_fringe_amplitude)
        .field("first_order_valid", budget.first_order_valid);
    write_outputs(output, record.str(), cfg.echo_json());
}

void run_infer_szero(const RunConfig& cfg, const std::string& output, double measured_a,
                     double phi) {
    const Medium medium = cfg.medium();
    const Beam beam = cfg.beam();
    double s_zero = 0.0;
    bool valid = true;
    try {
        s_zero = infer_s_zero(measured_a, medium, beam, phi);
    } catch (const small_angle_validity_error&) {
        valid = false;
        const double b = medium.scattering_length();
        s_zero = measured_a
                 / (pi * medium.number_density() * b * b * medium.thickness() * phi * phi);
    }
    JsonObject record;
    record.field("measured_A", measured_a)
        .field("phi_rad", phi)
        .field("s_zero", s_zero)
        .field("small_angle_valid", valid);
    write_outputs(output, record.str(), cfg.echo_json());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"neutron-matter interaction calculator: optical potentials, refractive "
                 "indices, diffuse-scattering acceptance and Lindblad dynamics"};
    app.require_subcommand(1);

    std::string config_path;
    std::function<void()> action;

    // refract / phase
    for (const char* name : {"refract", "phase"}) {
        auto* sub = app.add_subcommand(
            name, "emit refractive indices, phase shift and optical potential as JSON");
        auto output = std::make_shared<std::string>(std::string(name) + ".json");
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("-o,--output", *output, "output path")->capture_default_str();
        sub->callback([&, output] {
            action = [&, output] { run_optics_record(cli::load_config(config_path), *output); };
        });
    }

    {
        auto* sub = app.add_subcommand("sq", "tabulate the static structure factor as CSV");
        auto output = std::make_shared<std::string>("sq.csv");
        auto q_max = std::make_shared<double>(0.0);
        auto points = std::make_shared<int>(100);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("-o,--output", *output, "output path")->capture_default_str();
        sub->add_option("--q-max", *q_max, "largest wavenumber [1/m]")->required();
        sub->add_option("--points", *points, "number of rows")->capture_default_str();
        sub->callback([&, output, q_max, points] {
            action = [&, output, q_max, points] {
                run_sq(cli::load_config(config_path), *output, *q_max, *points);
            };
        });
    }

    {
        auto* sub = app.add_subcommand(
            "diffuse", "tabulate the acceptance integral A(phi) as CSV (hard sphere)");
        auto output = std::make_shared<std::string>("diffuse.csv");
        auto phi_min = std::make_shared<double>(0.0);
        auto phi_max = std::make_shared<double>(pi);
        auto points = std::make_shared<int>(50);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("-o,--output", *output, "output path")->capture_default_str();
        sub->add_option("--phi-min", *phi_min, "smallest acceptance angle [rad]")->capture_default_str();
        sub->add_option("--phi-max", *phi_max, "largest acceptance angle [rad]")->capture_default_str();
        sub->add_option("--points", *points, "number of rows")->capture_default_str();
        sub->callback([&, output, phi_min, phi_max, points] {
            action = [&, output, phi_min, phi_max, points] {
                run_diffuse(cli::load_config(config_path), *output, *phi_min, *phi_max,
                            *points);
            };
        });
    }

    {
        auto* sub = app.add_subcommand(
            "evolve", "integrate the master equation from a forward pure state");
        auto output = std::make_shared<std::string>("evolve.csv");
        auto grid = std::make_shared<std::string>();
        auto dt = std::make_shared<double>(0.0);
        auto steps = std::make_shared<int>(0);
        auto store_every = std::make_shared<int>(0);
        auto j0 = std::make_shared<int>(-1);
        auto snapshot_every = std::make_shared<int>(0);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("-o,--output", *output, "trajectory CSV path")->capture_default_str();
        sub->add_option("--grid", *grid, "direction grid as N_polar,N_azimuth");
        sub->add_option("--dt", *dt, "time step [s]");
        sub->add_option("--steps", *steps, "number of RK4 steps");
        sub->add_option("--store-every", *store_every, "store every k-th step");
        sub->add_option("--j0", *j0, "initial direction index (default: most forward)");
        sub->add_option("--snapshot-every", *snapshot_every,
                        "write binary state snapshots every k stored steps");
        sub->callback([&, output, grid, dt, steps, store_every, j0, snapshot_every] {
            action = [&, output, grid, dt, steps, store_every, j0, snapshot_every] {
                RunConfig cfg = cli::load_config(config_path);
                if (!grid->empty()) {
                    if (std::sscanf(grid->c_str(), "%d,%d", &cfg.n_polar, &cfg.n_azimuth)
                        != 2) {
                        throw domain_error("evolve: --grid expects N_polar,N_azimuth");
                    }
                }
                if (*dt > 0.0) cfg.dt = *dt;
                if (*steps > 0) cfg.steps = *steps;
                if (*store_every > 0) cfg.store_every = *store_every;
                run_evolve(cfg, *output, *j0, *snapshot_every);
            };
        });
    }

    {
        auto* sub = app.add_subcommand(
            "wigner", "phase-space transform of a momentum-basis snapshot");
        auto output = std::make_shared<std::string>("wigner.csv");
        auto input = std::make_shared<std::string>();
        auto p_min = std::make_shared<double>(0.0);
        auto dp = std::make_shared<double>(0.0);
        auto x_points = std::make_shared<int>(0);
        sub->add_option("--input", *input, "binary matrix snapshot")->required();
        sub->add_option("-o,--output", *output, "output CSV path")->capture_default_str();
        sub->add_option("--p-min", *p_min, "momentum of the first grid point [kg m/s]")
            ->required();
        sub->add_option("--dp", *dp, "momentum grid spacing [kg m/s]")->required();
        sub->add_option("--x-points", *x_points, "x samples (default 2N)");
        sub->callback([&, output, input, p_min, dp, x_points] {
            action = [output, input, p_min, dp, x_points] {
                run_wigner(*input, *output, *p_min, *dp, *x_points);
            };
        });
    }

    {
        auto* sub = app.add_subcommand(
            "visibility", "interference visibility budget at an acceptance angle");
        auto output = std::make_shared<std::string>("visibility.json");
        auto phi = std::make_shared<double>(0.0);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("-o,--output", *output, "output path")->capture_default_str();
        sub->add_option("--phi", *phi, "acceptance angle [rad]")->required();
        sub->callback([&, output, phi] {
            action = [&, output, phi] {
                run_visibility(cli::load_config(config_path), *output, *phi);
            };
        });
    }

    {
        auto* sub = app.add_subcommand(
            "infer-szero", "estimate S_c(0) from a measured small-angle acceptance");
        auto output = std::make_shared<std::string>("infer_szero.json");
        auto measured = std::make_shared<double>(0.0);
        auto phi = std::make_shared<double>(0.0);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("-o,--output", *output, "output path")->capture_default_str();
        sub->add_option("--A", *measured, "measured acceptance value")->required();
        sub->add_option("--phi", *phi, "acceptance angle [rad]")->required();
        sub->callback([&, output, measured, phi] {
            action = [&, output, measured, phi] {
                run_infer_szero(cli::load_config(config_path), *output, *measured, *phi);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        action();
    } catch (const numeric_error& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
