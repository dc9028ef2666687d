#include "qcs/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcs {

namespace {

void check_qubit(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                                std::to_string(state.num_qubits) + " qubits");
    }
}

}  // namespace

StateVector::StateVector(int n) : num_qubits(n) {
    if (n < 1) throw std::invalid_argument("state needs at least one qubit");
    amplitudes.assign(std::size_t{1} << n, cplx{0.0, 0.0});
    amplitudes[0] = cplx{1.0, 0.0};
}

StateVector::StateVector(int n, std::vector<cplx> amps) : num_qubits(n), amplitudes(std::move(amps)) {
    if (n < 1) throw std::invalid_argument("state needs at least one qubit");
    if (amplitudes.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("amplitude array length must be 2^num_qubits");
    }
}

double StateVector::norm_squared(Exec exec) const {
    return indexed_sum(amplitudes.size(), exec,
                       [&](std::size_t i) { return std::norm(amplitudes[i]); });
}

namespace kernels {

void ry_pi_inplace(StateVector& state, int qubit, Exec exec) {
    check_qubit(state, qubit);
    const std::size_t mask = std::size_t{1} << (state.num_qubits - 1 - qubit);
    const std::size_t lo = mask - 1;
    const std::size_t hi = ~lo;
    auto* amps = state.amplitudes.data();
    for_each_index(state.dim() / 2, exec, [=](std::size_t k) {
        const std::size_t i0 = ((k & hi) << 1) | (k & lo);
        const std::size_t i1 = i0 | mask;
        const cplx a0 = amps[i0];
        amps[i0] = -amps[i1];
        amps[i1] = a0;
    });
}

void phase_rotation_inplace(StateVector& state, int qubit, double angle, Exec exec) {
    check_qubit(state, qubit);
    if (!std::isfinite(angle)) throw std::invalid_argument("phase rotation angle must be finite");
    const cplx phase0{std::cos(angle / 2.0), -std::sin(angle / 2.0)};
    const cplx phase1 = std::conj(phase0);
    const std::size_t mask = std::size_t{1} << (state.num_qubits - 1 - qubit);
    auto* amps = state.amplitudes.data();
    for_each_index(state.dim(), exec,
                   [=](std::size_t b) { amps[b] *= (b & mask) ? phase1 : phase0; });
}

void diagonal_evolution_inplace(StateVector& state, std::span<const double> energies, double t,
                                Exec exec) {
    if (energies.size() != state.dim()) {
        throw std::invalid_argument("energy table length must be 2^num_qubits");
    }
    auto* amps = state.amplitudes.data();
    const double* e = energies.data();
    for_each_index(state.dim(), exec, [=](std::size_t b) {
        const double phi = -e[b] * t;
        amps[b] *= cplx{std::cos(phi), std::sin(phi)};
    });
}

double pos_probability(const StateVector& state, int qubit, Exec exec) {
    check_qubit(state, qubit);
    const std::size_t mask = std::size_t{1} << (state.num_qubits - 1 - qubit);
    const std::size_t lo = mask - 1;
    const std::size_t hi = ~lo;
    const auto* amps = state.amplitudes.data();
    return indexed_sum(state.dim() / 2, exec, [=](std::size_t k) {
        const std::size_t i0 = ((k & hi) << 1) | (k & lo);
        return 0.5 * std::norm(amps[i0] + amps[i0 | mask]);
    });
}

void collapse_dual_inplace(StateVector& state, int qubit, bool positive, double branch_probability,
                           Exec exec) {
    check_qubit(state, qubit);
    const std::size_t mask = std::size_t{1} << (state.num_qubits - 1 - qubit);
    const std::size_t lo = mask - 1;
    const std::size_t hi = ~lo;
    const double sign = positive ? 1.0 : -1.0;
    // <dual|pair> / sqrt(p), re-embedded as |dual> on the measured qubit
    const double scale = 0.5 / std::sqrt(branch_probability);
    auto* amps = state.amplitudes.data();
    for_each_index(state.dim() / 2, exec, [=](std::size_t k) {
        const std::size_t i0 = ((k & hi) << 1) | (k & lo);
        const std::size_t i1 = i0 | mask;
        const cplx c = (amps[i0] + sign * amps[i1]) * scale;
        amps[i0] = c;
        amps[i1] = sign * c;
    });
}

}  // namespace kernels

StateVector apply_ry_pi(const StateVector& state, int qubit, Exec exec) {
    StateVector out = state;
    kernels::ry_pi_inplace(out, qubit, exec);
    return out;
}

StateVector apply_phase_rotation(const StateVector& state, int qubit, double angle, Exec exec) {
    StateVector out = state;
    kernels::phase_rotation_inplace(out, qubit, angle, exec);
    return out;
}

StateVector apply_diagonal_evolution(const StateVector& state, std::span<const double> energies,
                                     double t, Exec exec) {
    StateVector out = state;
    kernels::diagonal_evolution_inplace(out, energies, t, exec);
    return out;
}

}  // namespace qcs
