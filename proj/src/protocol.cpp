#include "qcs/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcs/rng.hpp"

namespace qcs {

void ProtocolConfig::validate() const {
    state_kind.validate();
    if (parties.size() != static_cast<std::size_t>(state_kind.n)) {
        throw std::invalid_argument("need exactly one party per qubit");
    }
    std::vector<bool> seen(state_kind.n, false);
    bool standard_listed = false;
    for (const auto& party : parties) {
        if (party.index < 0 || party.index >= state_kind.n) {
            throw std::invalid_argument("party index out of range");
        }
        if (seen[party.index]) throw std::invalid_argument("duplicate party index");
        seen[party.index] = true;
        if (party.omega < 0.0) throw std::invalid_argument("party omega must be >= 0");
        if (party.index == standard_index) {
            standard_listed = true;
            if (party.omega != 0.0 || party.delta != 0.0) {
                throw std::invalid_argument("standard party must have omega = 0 and delta = 0");
            }
        }
    }
    if (!standard_listed) throw std::invalid_argument("standard party missing from list");
}

DualMeasurement measure_dual_basis(const StateVector& state, int qubit, Exec exec) {
    // branches whose weight is pure roundoff carry no collapsed state;
    // renormalizing them would only amplify noise
    constexpr double branch_floor = 1e-14;
    DualMeasurement result;
    result.p_pos = std::clamp(kernels::pos_probability(state, qubit, exec), 0.0, 1.0);
    result.p_neg = 1.0 - result.p_pos;
    if (result.p_pos > branch_floor) {
        StateVector branch = state;
        kernels::collapse_dual_inplace(branch, qubit, true, result.p_pos, exec);
        result.collapsed_pos = std::move(branch);
    }
    if (result.p_neg > branch_floor) {
        StateVector branch = state;
        kernels::collapse_dual_inplace(branch, qubit, false, result.p_neg, exec);
        result.collapsed_neg = std::move(branch);
    }
    return result;
}

ConditionalOutcomeTable run_protocol_exact(const ProtocolConfig& config) {
    config.validate();
    const StateVector initial = prepare_state(config.state_kind);
    const DualMeasurement split = measure_dual_basis(initial, config.standard_index);

    ConditionalOutcomeTable table;
    table.marginal_standard_pos = split.p_pos;

    // Evolve each party's qubit by its own phase in both branches, then read
    // that qubit's dual-basis marginal.
    const auto conditional = [&](const std::optional<StateVector>& branch,
                                 const PartyConfig& party) -> double {
        if (!branch) return 0.0;
        const StateVector evolved =
            apply_phase_rotation(*branch, party.index, party.omega * party.delta);
        return kernels::pos_probability(evolved, party.index, Exec::serial);
    };

    for (const auto& party : config.parties) {
        if (party.index == config.standard_index) continue;
        PartyOutcome outcome;
        outcome.index = party.index;
        outcome.omega = party.omega;
        outcome.delta = party.delta;
        outcome.p_pos_given_pos = conditional(split.collapsed_pos, party);
        outcome.p_neg_given_pos = 1.0 - outcome.p_pos_given_pos;
        outcome.p_pos_given_neg = conditional(split.collapsed_neg, party);
        outcome.p_neg_given_neg = 1.0 - outcome.p_pos_given_neg;
        table.parties.push_back(outcome);
    }
    return table;
}

double analytic_probability(const EntangledStateKind& kind, double omega, double delta) {
    kind.validate();
    const double c = std::cos(omega * delta);
    switch (kind.family) {
        case EntangledStateKind::Family::bell:
            return 0.5 * (1.0 + c);
        case EntangledStateKind::Family::w:
            return 0.5 + c / static_cast<double>(kind.n);
        case EntangledStateKind::Family::dicke: {
            const double n = static_cast<double>(kind.n);
            const double k = static_cast<double>(kind.k);
            return 0.5 + (k * (n - k)) / (n * (n - 1.0)) * c;
        }
    }
    throw std::invalid_argument("unknown state family");
}

std::optional<double> ShotRecord::empirical_p_pos_given_pos(std::size_t party) const {
    if (standard_counts[0] == 0) return std::nullopt;
    return static_cast<double>(party_counts.at(party)[0][0]) /
           static_cast<double>(standard_counts[0]);
}

ShotRecord sample_shots(const ConditionalOutcomeTable& table, long long shots,
                        std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    ShotRecord record;
    record.shots = shots;
    record.seed = seed;
    record.party_counts.assign(table.parties.size(), {});

    rng::Generator gen(seed);
    for (long long shot = 0; shot < shots; ++shot) {
        const int standard = gen.bernoulli(table.marginal_standard_pos) ? 0 : 1;
        ++record.standard_counts[standard];
        for (std::size_t p = 0; p < table.parties.size(); ++p) {
            const auto& party = table.parties[p];
            const double p_pos = standard == 0 ? party.p_pos_given_pos : party.p_pos_given_neg;
            const int outcome = gen.bernoulli(p_pos) ? 0 : 1;
            ++record.party_counts[p][standard][outcome];
        }
    }
    return record;
}

std::vector<ConditionalOutcomeTable> sweep(const ProtocolConfig& config,
                                           const std::vector<double>& deltas) {
    if (deltas.empty()) throw std::invalid_argument("sweep needs at least one delta");
    config.validate();
    std::vector<ConditionalOutcomeTable> tables(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        ProtocolConfig point = config;
        for (auto& party : point.parties) {
            if (party.index != config.standard_index) party.delta = deltas[i];
        }
        tables[i] = run_protocol_exact(point);
    }
    return tables;
}

}  // namespace qcs
