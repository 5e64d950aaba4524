// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
//
// Integration tests that drive the installed CLI binary (path in the
// NOPTICA_CLI environment variable) through temp-dir fixtures.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "noptica/diffuse.hpp"
#include "noptica/optics.hpp"
#include "noptica/snapshot.hpp"

using namespace noptica;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt17(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string cli_path() {
    const char* env = std::getenv("NOPTICA_CLI");
    REQUIRE_MESSAGE(env != nullptr, "NOPTICA_CLI must point at the binary");
    return env;
}

int run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: ", path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<double>> parse_csv(const fs::path& path, std::string* header) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    REQUIRE(std::getline(in, line));
    if (header) *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double json_number(const std::string& text, const std::string& key) {
    const auto at = text.find('"' + key + '"');
    REQUIRE_MESSAGE(at != std::string::npos, "key not found: ", key);
    const auto colon = text.find(':', at);
    return std::stod(text.substr(colon + 1));
}

struct Workspace {
    fs::path dir;

    Workspace() {
        dir = fs::temp_directory_path()
              / ("noptica_cli_" + std::to_string(::getpid()) + "_"
                 + std::to_string(counter()));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }

    static int counter() {
        static int n = 0;
        return n++;
    }

    fs::path write_config(const std::string& name, const std::string& body) const {
        const fs::path path = dir / name;
        std::ofstream out(path);
        out << body;
        return path;
    }

    std::string arg(const fs::path& p) const { return p.string(); }
};

const char* kBaseConfig = R"({
  "medium": {
    "number_density_per_m3": 2.7e25,
    "scattering_length_m": 6e-15,
    "hard_sphere_diameter_m": 3e-10,
    "thickness_m": 1e-2
  },
  "beam": { "wavelength_angstrom": 1.8 },
  "structure": { "model": "hard_sphere" },
  "integrator": { "dt_s": 1e-4, "steps": 40 }
})";

Medium base_medium() { return Medium(2.7e25, 6e-15, 3e-10, 1e-2); }

}  // namespace

TEST_CASE("cli: usage and config error paths") {
    Workspace ws;
    CHECK(run("frobnicate") == 1);
    CHECK(run("") == 1);
    CHECK(run("sq --q-max 1e10") == 1);  // missing required --config

    CHECK(run("sq --config " + ws.arg(ws.dir / "missing.json") + " --q-max 1e10 -o "
              + ws.arg(ws.dir / "out.csv"))
          == 2);

    const auto bad = ws.write_config("bad.json", R"({"medium": {}, "typo": 1})");
    CHECK(run("refract --config " + ws.arg(bad) + " -o " + ws.arg(ws.dir / "r.json")) == 2);

    const auto invalid = ws.write_config("invalid.json", "{ not json");
    CHECK(run("refract --config " + ws.arg(invalid) + " -o " + ws.arg(ws.dir / "r.json"))
          == 2);
}

TEST_CASE("cli: sq emits the requested grid and is deterministic") {
    Workspace ws;
    const auto config = ws.write_config("run.json", kBaseConfig);
    const auto out = ws.dir / "sq.csv";
    CHECK(run("sq --config " + ws.arg(config) + " --q-max 5e10 --points 100 -o "
              + ws.arg(out))
          == 0);

    std::string header;
    const auto rows = parse_csv(out, &header);
    CHECK(header == "q_per_m,S");
    CHECK(rows.size() == 100);
    CHECK(rows.front()[0] == 0.0);
    CHECK(rows.back()[0] == 5e10);

    const auto model = StructureModel::hard_sphere(3e-10, 2.7e25);
    for (const auto& row : rows) {
        CHECK(std::abs(row[1] - model(row[0])) <= 1e-15);
    }

    // byte-identical rerun, also under a different thread cap
    const std::string first = slurp(out);
    CHECK(run("sq --config " + ws.arg(config) + " --q-max 5e10 --points 100 -o "
              + ws.arg(out))
          == 0);
    CHECK(slurp(out) == first);
    const std::string env_cmd = "NOPTICA_THREADS=1 " + cli_path() + " sq --config "
                                + ws.arg(config) + " --q-max 5e10 --points 100 -o "
                                + ws.arg(out) + " > /dev/null 2>&1";
    CHECK(std::system(env_cmd.c_str()) == 0);
    CHECK(slurp(out) == first);

    // config echo sits next to the output
    CHECK(fs::exists(ws.dir / "sq.config.json"));
}

TEST_CASE("cli: per-cm3 densities convert to the same run") {
    Workspace ws;
    const auto si = ws.write_config("si.json", kBaseConfig);
    const std::string cm3 = R"({
  "medium": {
    "number_density_per_cm3": 2.7e19,
    "scattering_length_m": 6e-15,
    "hard_sphere_diameter_m": 3e-10,
    "thickness_m": 1e-2
  },
  "beam": { "wavelength_angstrom": 1.8 },
  "structure": { "model": "hard_sphere" }
})";
    const auto cgs = ws.write_config("cgs.json", cm3);
    const auto out_si = ws.dir / "si.csv";
    const auto out_cgs = ws.dir / "cgs.csv";
    CHECK(run("sq --config " + ws.arg(si) + " --q-max 2e10 --points 7 -o " + ws.arg(out_si))
          == 0);
    CHECK(run("sq --config " + ws.arg(cgs) + " --q-max 2e10 --points 7 -o "
              + ws.arg(out_cgs))
          == 0);
    CHECK(slurp(out_si) == slurp(out_cgs));
}

TEST_CASE("cli: refract and phase emit the optics record") {
    Workspace ws;
    const auto config = ws.write_config("run.json", kBaseConfig);
    const auto out = ws.dir / "refract.json";
    CHECK(run("refract --config " + ws.arg(config) + " -o " + ws.arg(out)) == 0);

    const std::string text = slurp(out);
    const Medium medium = base_medium();
    const Beam beam = beam_from_wavelength(1.8e-10);
    const auto model = StructureModel::hard_sphere(3e-10, 2.7e25);

    CHECK(std::abs(json_number(text, "n_exact")
                   - refractive_index_gs(medium, beam, IndexForm::exact))
          <= 1e-15);
    CHECK(std::abs(json_number(text, "U_re_J") - optical_potential(medium))
          <= 1e-15 * std::abs(optical_potential(medium)));
    const double sigma_d = diffusion_cross_section(medium, beam, model);
    const PhaseShift chi = phase_shift(medium, beam, sigma_d);
    CHECK(std::abs(json_number(text, "chi_double_prime") - chi.chi_double_prime)
          <= 1e-12 * chi.chi_double_prime);

    const auto out2 = ws.dir / "phase.json";
    CHECK(run("phase --config " + ws.arg(config) + " -o " + ws.arg(out2)) == 0);
    CHECK(slurp(out2) == text);
}

TEST_CASE("cli: diffuse curve closes the A(pi) identity") {
    Workspace ws;
    const auto config = ws.write_config("run.json", kBaseConfig);
    const auto out = ws.dir / "diffuse.csv";
    CHECK(run("diffuse --config " + ws.arg(config)
              + " --phi-max 3.141592653589793 --points 50 -o " + ws.arg(out))
          == 0);

    std::string header;
    const auto rows = parse_csv(out, &header);
    CHECK(header == "phi_rad,A_closed,A_quadrature,A_small_angle");
    CHECK(rows.size() == 50);

    const Medium medium = base_medium();
    const Beam beam = beam_from_wavelength(1.8e-10);
    const auto model = StructureModel::hard_sphere(3e-10, 2.7e25);
    const double budget = medium.number_density()
                          * diffusion_cross_section(medium, beam, model)
                          * medium.thickness();
    const auto& last = rows.back();
    CHECK(std::abs(last[0] - pi) < 1e-12);
    CHECK(std::abs(last[2] - budget) <= 1e-8 * budget);
    CHECK(std::abs(last[1] - budget) <= 1e-7 * budget);

    // tabulated model is rejected for this subcommand
    const std::string tab_config = R"({
  "medium": { "number_density_per_m3": 2.7e25, "scattering_length_m": 6e-15,
              "thickness_m": 1e-2 },
  "beam": { "wavelength_angstrom": 1.8 },
  "structure": { "model": "tabulated", "path": "table.csv" }
})";
    const auto tab = ws.write_config("tab.json", tab_config);
    {
        std::ofstream table(ws.dir / "table.csv");
        table << "q_per_m,S\n0,1\n1e12,1\n";
    }
    CHECK(run("diffuse --config " + ws.arg(tab) + " -o " + ws.arg(ws.dir / "d2.csv")) == 2);
    // but sq accepts it
    CHECK(run("sq --config " + ws.arg(tab) + " --q-max 1e10 --points 5 -o "
              + ws.arg(ws.dir / "sq2.csv"))
          == 0);
}

TEST_CASE("cli: evolve trajectory, snapshots, and the wigner chain") {
    Workspace ws;
    const auto config = ws.write_config("run.json", kBaseConfig);
    const auto out = ws.dir / "evolve.csv";
    CHECK(run("evolve --config " + ws.arg(config)
              + " --grid 4,1 --steps 40 --store-every 10 --snapshot-every 20 -o "
              + ws.arg(out))
          == 0);

    std::string header;
    const auto rows = parse_csv(out, &header);
    CHECK(header == "t_s,trace,min_eig,rho_j0j0,ot_residual");
    CHECK(rows.size() == 5);  // t = 0 plus four stored steps
    for (const auto& row : rows) {
        CHECK(std::abs(row[1] - 1.0) <= 1e-9);   // trace
        CHECK(row[2] >= -1e-9);                  // min eigenvalue
        CHECK(row[4] <= 1e-12);                  // optical-theorem residual
    }
    // the forward population decays from 1
    CHECK(rows.front()[3] == 1.0);
    CHECK(rows.back()[3] < 1.0);

    const fs::path snap_path = ws.dir / "evolve_step40.bin";
    CHECK(fs::exists(snap_path));
    const Snapshot snap = read_snapshot(snap_path.string());
    CHECK(snap.step_index == 40);
    CHECK(snap.matrix.rows() == 4);

    const auto wigner_out = ws.dir / "wigner.csv";
    CHECK(run("wigner --input " + ws.arg(snap_path) + " --p-min 3.6e-24 --dp 1e-27 -o "
              + ws.arg(wigner_out))
          == 0);
    const auto wigner_rows = parse_csv(wigner_out, &header);
    CHECK(header == "x_m,p_kg_m_per_s,f_w_per_J_s");
    CHECK(wigner_rows.size() == 7 * 8);  // (2N-1) slices x 2N x-points

    // stability guard: a huge dt is a numeric error
    CHECK(run("evolve --config " + ws.arg(config) + " --grid 4,1 --dt 1e3 -o "
              + ws.arg(ws.dir / "e2.csv"))
          == 3);
}

TEST_CASE("cli: visibility and s_zero inversion") {
    Workspace ws;
    const auto config = ws.write_config("run.json", kBaseConfig);
    const auto out = ws.dir / "vis.json";
    CHECK(run("visibility --config " + ws.arg(config) + " --phi 5e-6 -o " + ws.arg(out))
          == 0);
    const std::string text = slurp(out);
    const double a_phi = json_number(text, "a_phi");
    CHECK(a_phi >= 1e-16);
    CHECK(a_phi <= 1e-13);
    CHECK(text.find("\"first_order_valid\": true") != std::string::npos);

    const Medium medium = base_medium();
    const Beam beam = beam_from_wavelength(1.8e-10);
    const double synthetic = acceptance_closed_form(medium, beam, 1e-4);
    const auto inv = ws.dir / "szero.json";
    CHECK(run("infer-szero --config " + ws.arg(config) + " --A "
              + fmt17(synthetic) + " --phi 1e-4 -o " + ws.arg(inv))
          == 0);
    const std::string inv_text = slurp(inv);
    const double s_zero = json_number(inv_text, "s_zero");
    CHECK(std::abs(s_zero - (1.0 - medium.packing_fraction())) < 0.005);
    CHECK(inv_text.find("\"small_angle_valid\": true") != std::string::npos);

    // wide angle: value still reported, flag lowered
    const double wide = acceptance_closed_form(medium, beam, 0.8);
    const auto inv2 = ws.dir / "szero2.json";
    CHECK(run("infer-szero --config " + ws.arg(config) + " --A " + fmt17(wide)
              + " --phi 0.8 -o " + ws.arg(inv2))
          == 0);
    CHECK(slurp(inv2).find("\"small_angle_valid\": false") != std::string::npos);
}
