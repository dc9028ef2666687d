#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcs/state_vector.hpp"

namespace qcs {

// (|0>+|1>)/sqrt(2) and (|0>-|1>)/sqrt(2); every protocol measurement happens
// in this basis.
struct DualBasis {
    static constexpr std::array<double, 2> pos{0.7071067811865476, 0.7071067811865476};
    static constexpr std::array<double, 2> neg{0.7071067811865476, -0.7071067811865476};
};

struct EntangledStateKind {
    enum class Family { bell, w, dicke };

    Family family = Family::bell;
    int n = 2;
    int k = 1;

    static EntangledStateKind bell() { return {Family::bell, 2, 1}; }
    static EntangledStateKind w(int n) { return {Family::w, n, 1}; }
    static EntangledStateKind dicke(int n, int k) { return {Family::dicke, n, k}; }

    // throws std::invalid_argument on a malformed kind
    void validate() const;

    std::string label() const;

    bool operator==(const EntangledStateKind&) const = default;
};

// (|00> + |11>)/sqrt(2)
StateVector prepare_bell();

// Uniform superposition of the n Hamming-weight-1 basis states.
StateVector prepare_w(int n);

// Uniform superposition of all C(n,k) Hamming-weight-k basis states.
StateVector prepare_dicke(int n, int k);

StateVector prepare_state(const EntangledStateKind& kind);

// Strictly increasing list of basis indices with popcount k.
std::vector<std::size_t> hamming_weight_states(int n, int k);

std::uint64_t binomial(int n, int k);

}  // namespace qcs
