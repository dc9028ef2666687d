#include "qcs/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcs {

void EntangledStateKind::validate() const {
    switch (family) {
        case Family::bell:
            if (n != 2) throw std::invalid_argument("Bell state is two qubits");
            return;
        case Family::w:
            if (n < 2) throw std::invalid_argument("W state needs n >= 2");
            return;
        case Family::dicke:
            if (n < 2 || k < 1 || k > n - 1) {
                throw std::invalid_argument("Dicke state needs 1 <= k <= n-1");
            }
            return;
    }
    throw std::invalid_argument("unknown state family");
}

std::string EntangledStateKind::label() const {
    switch (family) {
        case Family::bell:
            return "bell";
        case Family::w:
            return "w" + std::to_string(n);
        case Family::dicke:
            return "dicke" + std::to_string(n) + "_" + std::to_string(k);
    }
    return "invalid";
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return acc;
}

std::vector<std::size_t> hamming_weight_states(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n, n >= 1");
    std::vector<std::size_t> indices;
    indices.reserve(binomial(n, k));
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t b = 0; b < dim; ++b) {
        if (std::popcount(b) == k) indices.push_back(b);
    }
    return indices;
}

StateVector prepare_bell() {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector(2, {cplx{r, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{r, 0.0}});
}

StateVector prepare_dicke(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("Dicke state needs 1 <= k <= n-1");
    StateVector state(n);
    state.amplitudes[0] = cplx{0.0, 0.0};
    const auto support = hamming_weight_states(n, k);
    const double amp = 1.0 / std::sqrt(static_cast<double>(support.size()));
    for (std::size_t b : support) state.amplitudes[b] = cplx{amp, 0.0};
    return state;
}

StateVector prepare_w(int n) {
    if (n < 2) throw std::invalid_argument("W state needs n >= 2");
    return prepare_dicke(n, 1);
}

StateVector prepare_state(const EntangledStateKind& kind) {
    kind.validate();
    switch (kind.family) {
        case EntangledStateKind::Family::bell:
            return prepare_bell();
        case EntangledStateKind::Family::w:
            return prepare_w(kind.n);
        case EntangledStateKind::Family::dicke:
            return prepare_dicke(kind.n, kind.k);
    }
    throw std::invalid_argument("unknown state family");
}

}  // namespace qcs
