#pragma once

#include <cstddef>
#include <vector>

#include "qcs/exec.hpp"

namespace qcs {

// NMR internal Hamiltonian under the weak-coupling approximation:
//   H = -sum_j (omega_j/2) sigma_z^j + sum_{j<k} (pi/2) J_jk sigma_z^j sigma_z^k
// with omega in rad/s and J in Hz. Diagonal in the computational basis.
struct MoleculeSpec {
    int n = 0;
    std::vector<double> omega;                 // chemical shifts, rad/s
    std::vector<std::vector<double>> j_coupling;  // Hz, symmetric, zero diagonal

    static MoleculeSpec zero(int n);

    // throws std::invalid_argument when shapes or symmetry are off
    void validate() const;
};

// Target clock Hamiltonian: H_ideal = +sum_{j != standard} (omega_j/2) sigma_z^j,
// with the standard qubit's frequency pinned to zero.
struct IdealClockSpec {
    int n = 0;
    int standard_index = 0;
    std::vector<double> omega;  // rad/s; omega[standard_index] == 0

    void validate() const;
};

// Energy of one computational basis state, rad/s. z_j = +1 for bit 0, -1 for bit 1.
double internal_energy(const MoleculeSpec& spec, std::size_t basis_index);
double ideal_energy(const IdealClockSpec& spec, std::size_t basis_index);

// Full 2^n diagonal, the input to apply_diagonal_evolution and the dense oracle.
std::vector<double> internal_energy_table(const MoleculeSpec& spec, Exec exec = Exec::serial);
std::vector<double> ideal_energy_table(const IdealClockSpec& spec, Exec exec = Exec::serial);

}  // namespace qcs
