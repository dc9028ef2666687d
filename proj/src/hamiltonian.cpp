#include "qcs/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcs {

namespace {

// z eigenvalue of qubit j in basis index b, MSB-first labels
inline double z_of(std::size_t b, int n, int j) {
    return ((b >> (n - 1 - j)) & 1u) ? -1.0 : 1.0;
}

void check_index(std::size_t b, int n) {
    if (b >= (std::size_t{1} << n)) throw std::out_of_range("basis index out of range");
}

}  // namespace

MoleculeSpec MoleculeSpec::zero(int n) {
    MoleculeSpec spec;
    spec.n = n;
    spec.omega.assign(n, 0.0);
    spec.j_coupling.assign(n, std::vector<double>(n, 0.0));
    return spec;
}

void MoleculeSpec::validate() const {
    if (n < 1) throw std::invalid_argument("molecule needs n >= 1");
    if (omega.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("molecule omega list must have n entries");
    }
    if (j_coupling.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("j_coupling must be an n x n matrix");
    }
    for (int a = 0; a < n; ++a) {
        if (j_coupling[a].size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("j_coupling must be an n x n matrix");
        }
        if (j_coupling[a][a] != 0.0) throw std::invalid_argument("j_coupling diagonal must be zero");
        for (int b = a + 1; b < n; ++b) {
            if (j_coupling[a][b] != j_coupling[b][a]) {
                throw std::invalid_argument("j_coupling must be symmetric");
            }
        }
    }
}

void IdealClockSpec::validate() const {
    if (n < 1) throw std::invalid_argument("clock spec needs n >= 1");
    if (standard_index < 0 || standard_index >= n) {
        throw std::invalid_argument("standard_index out of range");
    }
    if (omega.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("clock omega list must have n entries");
    }
    if (omega[standard_index] != 0.0) {
        throw std::invalid_argument("standard clock frequency must be exactly zero");
    }
}

double internal_energy(const MoleculeSpec& spec, std::size_t basis_index) {
    check_index(basis_index, spec.n);
    double energy = 0.0;
    for (int j = 0; j < spec.n; ++j) {
        energy -= 0.5 * spec.omega[j] * z_of(basis_index, spec.n, j);
    }
    for (int j = 0; j < spec.n; ++j) {
        for (int k = j + 1; k < spec.n; ++k) {
            energy += 0.5 * std::numbers::pi * spec.j_coupling[j][k] *
                      z_of(basis_index, spec.n, j) * z_of(basis_index, spec.n, k);
        }
    }
    return energy;
}

double ideal_energy(const IdealClockSpec& spec, std::size_t basis_index) {
    check_index(basis_index, spec.n);
    double energy = 0.0;
    for (int j = 0; j < spec.n; ++j) {
        if (j == spec.standard_index) continue;
        energy += 0.5 * spec.omega[j] * z_of(basis_index, spec.n, j);
    }
    return energy;
}

std::vector<double> internal_energy_table(const MoleculeSpec& spec, Exec exec) {
    spec.validate();
    std::vector<double> table(std::size_t{1} << spec.n);
    double* out = table.data();
    for_each_index(table.size(), exec, [&, out](std::size_t b) { out[b] = internal_energy(spec, b); });
    return table;
}

std::vector<double> ideal_energy_table(const IdealClockSpec& spec, Exec exec) {
    spec.validate();
    std::vector<double> table(std::size_t{1} << spec.n);
    double* out = table.data();
    for_each_index(table.size(), exec, [&, out](std::size_t b) { out[b] = ideal_energy(spec, b); });
    return table;
}

}  // namespace qcs
