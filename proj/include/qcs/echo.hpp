#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "qcs/dense_unitary.hpp"
#include "qcs/hamiltonian.hpp"

namespace qcs {

// Simultaneous pi rotations about y on a set of qubits.
struct PulseEvent {
    std::vector<int> qubits;
};

// Free evolution under the molecule's internal Hamiltonian.
struct DelayEvent {
    double duration = 0.0;  // seconds, >= 0
};

using EchoEvent = std::variant<PulseEvent, DelayEvent>;

// Pulse/delay schedule in temporal order: events[0] happens first.
struct EchoSequence {
    int n = 0;
    std::vector<EchoEvent> events;

    double total_delay() const;
    int delay_count() const;
    int pulse_group_count() const;
};

// Reading convention for a printed operator product. Standard quantum-mechanical
// composition applies the rightmost factor first; pulse-sequence diagrams are
// read the other way. Both are exposed so a transcribed product can be checked
// under either reading.
enum class ProductOrder { right_to_left, left_to_right };

// The published four-qubit refocusing product, transcribed factor by factor:
// 9 pulse groups interleaved with 8 delays of delta/4 (total evolution 2*delta).
EchoSequence build_published_echo_sequence(double delta,
                                       ProductOrder order = ProductOrder::right_to_left);

// Thrown by sign_table when the sequence is not an equal-delay pulse train.
struct unsupported_sequence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-qubit and per-pair sums of the +-1 toggling signs across the delay
// segments: the algebraic certificate of what a sequence refocuses. A pi pulse
// on qubit j flips the sign sigma_z^j carries during every later segment, so
// over m equal segments of length tau the sequence acts (up to the residual
// pulse product and a global phase) as the internal Hamiltonian with omega_j
// scaled by per_qubit_sums[j]/m and J_jk scaled by per_pair_sums[j][k]/m.
struct SignTable {
    int n = 0;
    int segment_count = 0;
    double segment_duration = 0.0;  // seconds
    std::vector<long long> per_qubit_sums;
    std::vector<std::vector<long long>> per_pair_sums;
    std::vector<int> pulse_counts;  // total pi pulses per qubit; odd => residual rotation
};

SignTable sign_table(const EchoSequence& seq);

// Exact dense product of the pulse and delay unitaries in temporal order.
// Dense oracle only: n <= 8.
DenseUnitary sequence_unitary(const EchoSequence& seq, const MoleculeSpec& molecule);

// The evolution the sign table predicts: residual pulses times the effective
// diagonal evolution. sequence_unitary must match this up to global phase.
DenseUnitary sign_table_predicted_unitary(const SignTable& table, const MoleculeSpec& molecule);

// Pulse schedule whose sign table has per-qubit sum 0 on the standard qubit,
// the same negative sum on every other qubit, and zero on every pair, so the
// sequence realizes exp(-i H_ideal delta) exactly for any molecule sharing the
// non-standard frequencies. Rows come from a tensor construction over
// mutually-orthogonal sign patterns; for n <= 5 the schedule has 8 segments of
// delta/4 (net fraction -1/2, the published geometry), beyond that the segment
// count grows and the net fraction halves per level.
EchoSequence design_refocusing_sequence(int n, int standard_index, double delta);

struct EchoVerification {
    double fidelity = 0.0;
    SignTable residual_report;
};

// Fidelity of the sequence against exp(-i H_ideal delta), plus the sign sums
// that show which terms failed to refocus.
EchoVerification verify_echo(const EchoSequence& seq, const MoleculeSpec& molecule,
                             const IdealClockSpec& ideal, double delta);

}  // namespace qcs
