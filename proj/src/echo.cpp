#include "qcs/echo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcs {

double EchoSequence::total_delay() const {
    double total = 0.0;
    for (const auto& event : events) {
        if (const auto* delay = std::get_if<DelayEvent>(&event)) total += delay->duration;
    }
    return total;
}

int EchoSequence::delay_count() const {
    int count = 0;
    for (const auto& event : events) {
        if (std::holds_alternative<DelayEvent>(event)) ++count;
    }
    return count;
}

int EchoSequence::pulse_group_count() const {
    int count = 0;
    for (const auto& event : events) {
        if (std::holds_alternative<PulseEvent>(event)) ++count;
    }
    return count;
}

EchoSequence build_published_echo_sequence(double delta, ProductOrder order) {
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    const double tau = delta / 4.0;
    // Factors of the published product as printed, left to right (0-based qubits).
    const std::vector<std::vector<int>> pulses = {
        {1, 3}, {2}, {3}, {1, 3}, {0}, {1, 3}, {3}, {2, 0}, {1, 3},
    };
    EchoSequence seq;
    seq.n = 4;
    for (std::size_t i = 0; i < pulses.size(); ++i) {
        seq.events.emplace_back(PulseEvent{pulses[i]});
        if (i + 1 < pulses.size()) seq.events.emplace_back(DelayEvent{tau});
    }
    if (order == ProductOrder::right_to_left) {
        std::reverse(seq.events.begin(), seq.events.end());
    }
    return seq;
}

SignTable sign_table(const EchoSequence& seq) {
    SignTable table;
    table.n = seq.n;
    table.per_qubit_sums.assign(seq.n, 0);
    table.per_pair_sums.assign(seq.n, std::vector<long long>(seq.n, 0));
    table.pulse_counts.assign(seq.n, 0);

    std::vector<int> sign(seq.n, 1);
    bool have_tau = false;
    for (const auto& event : seq.events) {
        if (const auto* pulse = std::get_if<PulseEvent>(&event)) {
            for (int q : pulse->qubits) {
                if (q < 0 || q >= seq.n) throw std::out_of_range("pulse qubit out of range");
                sign[q] = -sign[q];
                ++table.pulse_counts[q];
            }
            continue;
        }
        const auto& delay = std::get<DelayEvent>(event);
        if (!have_tau) {
            table.segment_duration = delay.duration;
            have_tau = true;
        } else if (delay.duration != table.segment_duration) {
            throw unsupported_sequence("sign table needs equal delay durations");
        }
        ++table.segment_count;
        for (int j = 0; j < seq.n; ++j) {
            table.per_qubit_sums[j] += sign[j];
            for (int k = j + 1; k < seq.n; ++k) {
                table.per_pair_sums[j][k] += sign[j] * sign[k];
            }
        }
    }
    for (int j = 0; j < seq.n; ++j) {
        for (int k = j + 1; k < seq.n; ++k) {
            table.per_pair_sums[k][j] = table.per_pair_sums[j][k];
        }
    }
    return table;
}

DenseUnitary sequence_unitary(const EchoSequence& seq, const MoleculeSpec& molecule) {
    if (molecule.n != seq.n) throw std::invalid_argument("sequence and molecule sizes differ");
    if (seq.n > 8) throw std::length_error("dense sequence unitary limited to 8 qubits");
    molecule.validate();
    const auto energies = internal_energy_table(molecule);
    DenseUnitary u = DenseUnitary::identity(std::size_t{1} << seq.n);
    for (const auto& event : seq.events) {
        if (const auto* pulse = std::get_if<PulseEvent>(&event)) {
            u = multiply(ry_pi_unitary(seq.n, pulse->qubits), u);
        } else {
            const auto& delay = std::get<DelayEvent>(event);
            u = multiply(diagonal_evolution_unitary(energies, delay.duration), u);
        }
    }
    return u;
}

DenseUnitary sign_table_predicted_unitary(const SignTable& table, const MoleculeSpec& molecule) {
    if (molecule.n != table.n) throw std::invalid_argument("table and molecule sizes differ");
    if (table.n > 8) throw std::length_error("dense prediction limited to 8 qubits");
    molecule.validate();
    const int n = table.n;
    const double tau = table.segment_duration;
    // Effective molecule: every term scaled by its signed segment count. The
    // evolution time is folded into tau here, so evolve the table for t = 1.
    MoleculeSpec effective = MoleculeSpec::zero(n);
    for (int j = 0; j < n; ++j) {
        effective.omega[j] = molecule.omega[j] * static_cast<double>(table.per_qubit_sums[j]) * tau;
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            effective.j_coupling[j][k] =
                molecule.j_coupling[j][k] * static_cast<double>(table.per_pair_sums[j][k]) * tau;
        }
    }
    const auto energies = internal_energy_table(effective);
    DenseUnitary u = diagonal_evolution_unitary(energies, 1.0);
    std::vector<int> residual;
    for (int j = 0; j < n; ++j) {
        if (table.pulse_counts[j] % 2 != 0) residual.push_back(j);
    }
    if (!residual.empty()) {
        u = multiply(ry_pi_unitary(n, residual), u);
    }
    return u;
}

EchoSequence design_refocusing_sequence(int n, int standard_index, double delta) {
    if (n < 2) throw std::invalid_argument("refocusing design needs n >= 2");
    if (standard_index < 0 || standard_index >= n) {
        throw std::invalid_argument("standard_index out of range");
    }
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");

    const int t = n - 1;
    int levels = 1;
    long long capacity = 4;
    while (capacity < t) {
        capacity *= 4;
        ++levels;
    }
    const int m = 2 << (2 * levels);                 // 2 * 4^levels segments
    const double tau = delta / static_cast<double>(2 << levels);  // |sum| * tau = delta

    // Segment index layout: bit 0 alternates the standard qubit's sign, the
    // remaining 2*levels bits hold one base-4 digit per level. A non-standard
    // qubit's sign is +1 exactly when every digit matches its label, which
    // makes distinct rows orthogonal level by level and leaves each row with
    // net sum -m/2^levels after the parity fix below.
    std::vector<int> label_of_qubit(n, -1);
    {
        int next = 0;
        for (int q = 0; q < n; ++q) {
            if (q != standard_index) label_of_qubit[q] = next++;
        }
    }
    const int row_polarity = (levels % 2 == 0) ? -1 : 1;

    const auto row_sign = [&](int qubit, int segment) -> int {
        if (qubit == standard_index) return (segment & 1) ? -1 : 1;
        int sign = 1;
        const int label = label_of_qubit[qubit];
        for (int i = 0; i < levels; ++i) {
            const int digit = (segment >> (1 + 2 * i)) & 3;
            const int want = (label >> (2 * i)) & 3;
            if (digit != want) sign = -sign;
        }
        return sign * row_polarity;
    };

    EchoSequence seq;
    seq.n = n;
    std::vector<int> previous(n, 1);
    for (int s = 0; s <= m; ++s) {
        PulseEvent pulse;
        for (int q = 0; q < n; ++q) {
            const int sign = (s < m) ? row_sign(q, s) : 1;  // close back to +1
            if (sign != previous[q]) {
                pulse.qubits.push_back(q);
                previous[q] = sign;
            }
        }
        if (!pulse.qubits.empty()) seq.events.emplace_back(std::move(pulse));
        if (s < m) seq.events.emplace_back(DelayEvent{tau});
    }
    return seq;
}

EchoVerification verify_echo(const EchoSequence& seq, const MoleculeSpec& molecule,
                             const IdealClockSpec& ideal, double delta) {
    if (seq.n != molecule.n || seq.n != ideal.n) {
        throw std::invalid_argument("sequence, molecule and clock spec sizes differ");
    }
    ideal.validate();
    EchoVerification result;
    const DenseUnitary actual = sequence_unitary(seq, molecule);
    const DenseUnitary target =
        diagonal_evolution_unitary(ideal_energy_table(ideal), delta);
    result.fidelity = unitary_fidelity_up_to_global_phase(actual, target);
    result.residual_report = sign_table(seq);
    return result;
}

}  // namespace qcs
