#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcs/hamiltonian.hpp"
#include "qcs/states.hpp"

namespace qcs {

// Malformed configuration input; the CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable input or unwritable output; the CLI maps this to exit code 3.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DeltaGrid {
    double start_s = 0.0;
    double stop_s = 0.0;
    int count = 1;

    std::vector<double> values() const;
};

// One experiment description. Frequencies are plain Hz in config files and
// converted to rad/s at the library boundary; all internal math is rad/s and
// seconds.
struct ExperimentConfig {
    std::vector<EntangledStateKind> protocols;
    std::vector<double> party_omega_hz;  // indexed by qubit; standard entry must be 0
    int standard_index = 0;
    DeltaGrid delta_grid;
    long long shots = 0;  // 0 = exact only
    long long trials = 0;
    std::uint64_t seed = 1729;
    std::vector<int> report_parties;   // empty = all non-standard parties
    std::vector<double> table_omega_hz;  // table command columns; empty = distinct party values
    std::string molecule_file;        // echo-verify input
    std::string output;               // empty = stdout

    void validate() const;
};

// Named presets covering the reproducible surfaces: "fig5", "fig6", "table1".
ExperimentConfig preset_config(const std::string& name);

ExperimentConfig load_experiment_config(const std::string& path);

// Molecule file schema: {"n": int, "omega_hz": [n], "j_hz": [n(n-1)/2]} with
// j_hz listing the upper triangle row by row.
MoleculeSpec load_molecule_file(const std::string& path);

}  // namespace qcs
