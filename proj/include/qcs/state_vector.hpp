#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qcs/exec.hpp"

namespace qcs {

using cplx = std::complex<double>;

// Basis convention, fixed for the whole library:
//   sigma_z|0> = +|0>, sigma_z|1> = -|1>; evolution is exp(-iHt);
//   qubit 0 is the leftmost label in ket strings, i.e. the most significant
//   bit of the basis index.
struct StateVector {
    int num_qubits = 0;
    std::vector<cplx> amplitudes;

    StateVector() = default;

    // |00...0>
    explicit StateVector(int n);

    StateVector(int n, std::vector<cplx> amps);

    std::size_t dim() const { return amplitudes.size(); }

    // bit of `qubit` inside basis index `b` under the MSB-first label order
    int bit(std::size_t b, int qubit) const {
        return static_cast<int>((b >> (num_qubits - 1 - qubit)) & 1u);
    }

    double norm_squared(Exec exec = Exec::serial) const;
};

// exp(-i pi Y/2) = [[0,-1],[1,0]] on the target qubit: |0> -> |1>, |1> -> -|0>.
StateVector apply_ry_pi(const StateVector& state, int qubit, Exec exec = Exec::serial);

// Phase accrual of exp(-iHt) with H = +(omega/2) sigma_z and angle = omega*t:
// amplitudes with the qubit in |0> pick up exp(-i*angle/2), in |1> exp(+i*angle/2).
StateVector apply_phase_rotation(const StateVector& state, int qubit, double angle,
                                 Exec exec = Exec::serial);

// Amplitude of basis state b is multiplied by exp(-i*energies[b]*t).
StateVector apply_diagonal_evolution(const StateVector& state, std::span<const double> energies,
                                     double t, Exec exec = Exec::serial);

namespace kernels {
// In-place variants behind the pure wrappers above; also the benchmark surface.
void ry_pi_inplace(StateVector& state, int qubit, Exec exec);
void phase_rotation_inplace(StateVector& state, int qubit, double angle, Exec exec);
void diagonal_evolution_inplace(StateVector& state, std::span<const double> energies, double t,
                                Exec exec);
// Probability that `qubit` measures |pos> = (|0>+|1>)/sqrt(2).
double pos_probability(const StateVector& state, int qubit, Exec exec);
// Project `qubit` onto |pos> (positive=true) or |neg> and renormalize by the
// given branch probability. The qubit stays in the register, collapsed.
void collapse_dual_inplace(StateVector& state, int qubit, bool positive, double branch_probability,
                           Exec exec);
}  // namespace kernels

}  // namespace qcs
