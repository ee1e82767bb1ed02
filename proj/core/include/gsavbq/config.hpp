#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "gsavbq/problem.hpp"
#include "gsavbq/stepper.hpp"

namespace gsavbq {

/// Run description read from a flat INI file:
///
///   [problem]  name (manufactured|marsigli|shear|quiescent), nx, ny, nu, kappa,
///              re, ri, pr, rho, delta
///   [time]     tau, T, bootstrap (auto|exact|substep)
///   [scheme]   k, l, stab (none|sa|sb), cs
///   [output]   dir, snapshot_every
///
/// Keys left out take the defaults of the named problem.
struct RunConfig {
    std::string problem = "manufactured";
    int nx = 129;
    int ny = 129;
    double nu = 1.0;
    double kappa = 1.0;
    double re = 5000.0;
    double ri = 4.0;
    double pr = 1.0;
    double rho = 100.0;
    double delta = 0.5;

    double tau = 0.0;
    double T = 0.0;
    std::string bootstrap = "auto";

    double k = 3.0;
    double l = 1.0;
    std::string stab = "none";
    double cs = 0.5;

    std::string out_dir = "out";
    int snapshot_every = 0;  ///< 0 writes only the final snapshot

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Defaults of the named problem; throws std::invalid_argument for unknown names.
RunConfig default_config(const std::string& problem);

/// Throws std::runtime_error on syntax errors, unknown sections or keys and
/// out-of-range values.
RunConfig parse_config(std::istream& is);
RunConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const RunConfig& cfg);

StabKind parse_stab(const std::string& s);
std::string to_string(StabKind k);
BootstrapMode parse_bootstrap(const std::string& s);

ProblemSpec build_spec(const RunConfig& cfg);
SchemeParams build_scheme(const RunConfig& cfg);
RunOptions build_run_options(const RunConfig& cfg);

}  // namespace gsavbq
