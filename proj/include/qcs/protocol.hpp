#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcs/state_vector.hpp"
#include "qcs/states.hpp"

namespace qcs {

// One clock keeper: qubit index, transition frequency, and how far this
// party's local t=0 lags behind the standard clock.
struct PartyConfig {
    int index = 0;
    double omega = 0.0;  // rad/s, >= 0
    double delta = 0.0;  // seconds, signed; positive when this party's clock runs behind
};

struct ProtocolConfig {
    EntangledStateKind state_kind;
    std::vector<PartyConfig> parties;  // one per qubit
    int standard_index = 0;

    // throws std::invalid_argument on inconsistent configs
    void validate() const;
};

// Both projective branches of a dual-basis measurement. A zero-probability
// branch carries no collapsed state.
struct DualMeasurement {
    double p_pos = 0.0;
    double p_neg = 0.0;
    std::optional<StateVector> collapsed_pos;
    std::optional<StateVector> collapsed_neg;
};

DualMeasurement measure_dual_basis(const StateVector& state, int qubit, Exec exec = Exec::serial);

// Conditional outcome statistics for every non-standard party, both standard
// branches, plus the standard marginal. Exact (no sampling).
struct PartyOutcome {
    int index = 0;
    double omega = 0.0;
    double delta = 0.0;
    double p_pos_given_pos = 0.0;
    double p_neg_given_pos = 0.0;
    double p_pos_given_neg = 0.0;
    double p_neg_given_neg = 0.0;
};

struct ConditionalOutcomeTable {
    double marginal_standard_pos = 0.0;
    std::vector<PartyOutcome> parties;  // non-standard parties, config order
};

// Prepare the entangled register, measure the standard qubit in the dual basis
// at global t=0, evolve each remaining party by its own omega*delta, and read
// off all conditional probabilities.
ConditionalOutcomeTable run_protocol_exact(const ProtocolConfig& config);

// Closed forms: Bell (1+cos)/2, W 1/2+cos/n, Dicke 1/2 + k(n-k)/(n(n-1)) cos.
double analytic_probability(const EntangledStateKind& kind, double omega, double delta);

// Finite statistics: per shot, draw the standard outcome then each party's
// outcome from its conditional row. outcome index 0 = pos, 1 = neg.
struct ShotRecord {
    long long shots = 0;
    std::uint64_t seed = 0;
    std::array<long long, 2> standard_counts{0, 0};
    // per party: [standard outcome][party outcome]
    std::vector<std::array<std::array<long long, 2>, 2>> party_counts;

    // empirical P(pos on party p | standard pos); empty when no pos-branch shots landed
    std::optional<double> empirical_p_pos_given_pos(std::size_t party) const;
};

ShotRecord sample_shots(const ConditionalOutcomeTable& table, long long shots, std::uint64_t seed);

// One exact table per time offset; every non-standard party gets the same
// grid value while keeping its own frequency.
std::vector<ConditionalOutcomeTable> sweep(const ProtocolConfig& config,
                                           const std::vector<double>& deltas);

}  // namespace qcs
