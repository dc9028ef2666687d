#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcs/exec.hpp"
#include "qcs/protocol.hpp"

namespace qcs {

// Amplitude of the cosine oscillation in the conditional outcome probability.
struct AmplitudeFigure {
    int n = 0;
    int k = 0;
    double a0 = 0.0;  // k(n-k)/(n(n-1)), in (0, 1/2]
};

AmplitudeFigure amplitude(int n, int k);

// floor(n/2); maximizes amplitude(n, .) over k.
int k_opt(int n);

// Oscillation amplitude of a protocol kind: Bell 1/2, W 1/n, Dicke k(n-k)/(n(n-1)).
double amplitude_of_kind(const EntangledStateKind& kind);

// Principal-branch inversion of p = 1/2 + a0 cos(omega delta):
// delta_hat = arccos(clamp((p - 1/2)/a0, -1, 1)) / omega, in [0, pi/omega].
// A cosine cannot distinguish delta from 2 pi/omega - delta, so estimates are
// only meaningful on that branch; clamping absorbs statistical overshoot.
double invert_probability(double p, double a0, double omega);

struct MonteCarloResult {
    double std_s = 0.0;            // sample standard deviation of delta_hat, (trials-1) divisor
    double p_exact = 0.0;          // conditional P(pos | standard pos) at delta_true
    double mean_p_empirical = 0.0;
    double mean_delta_hat_s = 0.0;
    double mean_abs_error_s = 0.0;
    long long valid_trials = 0;
    bool singular = false;    // omega*delta_true at a sin = 0 point: variance diverges
    bool degenerate = false;  // fewer than 2 usable trials: std is 0 by convention
};

// Shot-noise accuracy of the offset estimate: per trial, sample the exact
// conditional table, invert the empirical probability of the first
// non-standard party, and aggregate. Deterministic in (seed); trials draw
// from independently derived streams, so the two policies agree bit for bit.
MonteCarloResult monte_carlo_std(const EntangledStateKind& kind, double omega, double delta_true,
                                 long long shots, long long trials, std::uint64_t seed,
                                 Exec exec = Exec::parallel);

struct EstimationReport {
    struct Cell {
        EntangledStateKind kind;
        double omega = 0.0;       // rad/s
        double delta_true = 0.0;  // seconds
        MonteCarloResult result;
    };
    long long shots = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::vector<Cell> cells;  // kind-major, then frequency
};

// Protocols x frequencies grid of offset standard deviations, each cell at
// omega*delta = pi/2 (the maximum-sensitivity operating point).
EstimationReport comparison_table(std::span<const double> omegas,
                                  std::span<const EntangledStateKind> kinds, long long shots,
                                  long long trials, std::uint64_t seed,
                                  Exec exec = Exec::parallel);

}  // namespace qcs
