#include "qcs/dense_unitary.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcs {

DenseUnitary DenseUnitary::identity(std::size_t dim) {
    DenseUnitary u(dim);
    for (std::size_t i = 0; i < dim; ++i) u.at(i, i) = cplx{1.0, 0.0};
    return u;
}

double DenseUnitary::unitarity_defect() const {
    const DenseUnitary gram = multiply(dagger(*this), *this);
    double worst = 0.0;
    for (std::size_t r = 0; r < dimension; ++r) {
        for (std::size_t c = 0; c < dimension; ++c) {
            const cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            worst = std::max(worst, std::abs(gram.at(r, c) - want));
        }
    }
    return worst;
}

DenseUnitary multiply(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.dimension != b.dimension) throw std::invalid_argument("dimension mismatch in multiply");
    const std::size_t d = a.dimension;
    DenseUnitary out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const cplx ark = a.at(r, k);
            if (ark == cplx{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < d; ++c) {
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

DenseUnitary dagger(const DenseUnitary& u) {
    DenseUnitary out(u.dimension);
    for (std::size_t r = 0; r < u.dimension; ++r) {
        for (std::size_t c = 0; c < u.dimension; ++c) {
            out.at(c, r) = std::conj(u.at(r, c));
        }
    }
    return out;
}

DenseUnitary compose(std::span<const DenseUnitary> sequence) {
    if (sequence.empty()) throw std::invalid_argument("compose needs at least one factor");
    DenseUnitary out = sequence[0];
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        out = multiply(out, sequence[i]);
    }
    return out;
}

double unitary_fidelity_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v) {
    if (u.dimension != v.dimension) throw std::invalid_argument("dimension mismatch in fidelity");
    cplx trace{0.0, 0.0};
    for (std::size_t r = 0; r < u.dimension; ++r) {
        for (std::size_t k = 0; k < u.dimension; ++k) {
            trace += std::conj(u.at(k, r)) * v.at(k, r);
        }
    }
    return std::abs(trace) / static_cast<double>(u.dimension);
}

DenseUnitary diagonal_evolution_unitary(std::span<const double> energies, double t) {
    DenseUnitary u(energies.size());
    for (std::size_t b = 0; b < energies.size(); ++b) {
        const double phi = -energies[b] * t;
        u.at(b, b) = cplx{std::cos(phi), std::sin(phi)};
    }
    return u;
}

DenseUnitary ry_pi_unitary(int num_qubits, std::span<const int> qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::size_t flip = 0;
    for (int q : qubits) {
        if (q < 0 || q >= num_qubits) throw std::out_of_range("pulse qubit out of range");
        flip |= std::size_t{1} << (num_qubits - 1 - q);
    }
    DenseUnitary u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const double sign = (std::popcount(col & flip) & 1) ? -1.0 : 1.0;
        u.at(col ^ flip, col) = cplx{sign, 0.0};
    }
    return u;
}

StateVector apply_dense(const DenseUnitary& u, const StateVector& state) {
    if (u.dimension != state.dim()) throw std::invalid_argument("dimension mismatch in apply_dense");
    StateVector out = state;
    for (std::size_t r = 0; r < u.dimension; ++r) {
        cplx acc{0.0, 0.0};
        for (std::size_t c = 0; c < u.dimension; ++c) {
            acc += u.at(r, c) * state.amplitudes[c];
        }
        out.amplitudes[r] = acc;
    }
    return out;
}

}  // namespace qcs
