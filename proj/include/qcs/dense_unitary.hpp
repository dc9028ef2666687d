#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcs/state_vector.hpp"

namespace qcs {

// Dense matrix oracle for small registers (n <= 8). Row-major.
struct DenseUnitary {
    std::size_t dimension = 0;
    std::vector<cplx> entries;

    DenseUnitary() = default;
    explicit DenseUnitary(std::size_t dim)
        : dimension(dim), entries(dim * dim, cplx{0.0, 0.0}) {}

    cplx& at(std::size_t row, std::size_t col) { return entries[row * dimension + col]; }
    const cplx& at(std::size_t row, std::size_t col) const {
        return entries[row * dimension + col];
    }

    static DenseUnitary identity(std::size_t dim);

    // max-entry norm of U^dagger U - I
    double unitarity_defect() const;
};

DenseUnitary multiply(const DenseUnitary& a, const DenseUnitary& b);
DenseUnitary dagger(const DenseUnitary& u);

// Right-to-left operator product: the last listed factor is applied first in time.
DenseUnitary compose(std::span<const DenseUnitary> sequence);

// |trace(U^dagger V)| / d; 1 iff U = exp(i phi) V.
double unitary_fidelity_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v);

// diag(exp(-i*energies[b]*t))
DenseUnitary diagonal_evolution_unitary(std::span<const double> energies, double t);

// Simultaneous exp(-i pi Y/2) on each listed qubit:
// |b> -> (-1)^{#listed qubits in |1>} |b with listed bits flipped>.
DenseUnitary ry_pi_unitary(int num_qubits, std::span<const int> qubits);

StateVector apply_dense(const DenseUnitary& u, const StateVector& state);

}  // namespace qcs
