#include "qcs/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcs/rng.hpp"

namespace qcs {

AmplitudeFigure amplitude(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("amplitude needs 1 <= k <= n-1");
    AmplitudeFigure figure;
    figure.n = n;
    figure.k = k;
    figure.a0 = static_cast<double>(static_cast<long long>(k) * (n - k)) /
                static_cast<double>(static_cast<long long>(n) * (n - 1));
    return figure;
}

int k_opt(int n) {
    if (n < 2) throw std::invalid_argument("k_opt needs n >= 2");
    return n / 2;
}

double amplitude_of_kind(const EntangledStateKind& kind) {
    kind.validate();
    switch (kind.family) {
        case EntangledStateKind::Family::bell:
            return 0.5;
        case EntangledStateKind::Family::w:
            return 1.0 / static_cast<double>(kind.n);
        case EntangledStateKind::Family::dicke:
            return amplitude(kind.n, kind.k).a0;
    }
    throw std::invalid_argument("unknown state family");
}

double invert_probability(double p, double a0, double omega) {
    if (!(a0 > 0.0)) throw std::invalid_argument("invert_probability needs a0 > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("invert_probability needs omega > 0");
    const double c = std::clamp((p - 0.5) / a0, -1.0, 1.0);
    return std::acos(c) / omega;
}

namespace {

ProtocolConfig single_offset_config(const EntangledStateKind& kind, double omega,
                                    double delta_true) {
    ProtocolConfig config;
    config.state_kind = kind;
    config.standard_index = 0;
    for (int q = 0; q < kind.n; ++q) {
        PartyConfig party;
        party.index = q;
        party.omega = q == 0 ? 0.0 : omega;
        party.delta = q == 0 ? 0.0 : delta_true;
        config.parties.push_back(party);
    }
    return config;
}

}  // namespace

MonteCarloResult monte_carlo_std(const EntangledStateKind& kind, double omega, double delta_true,
                                 long long shots, long long trials, std::uint64_t seed, Exec exec) {
    if (shots < 1 || trials < 1) throw std::invalid_argument("shots and trials must be >= 1");
    kind.validate();
    if (!(omega > 0.0)) throw std::invalid_argument("monte_carlo_std needs omega > 0");

    const ConditionalOutcomeTable table =
        run_protocol_exact(single_offset_config(kind, omega, delta_true));
    const double a0 = amplitude_of_kind(kind);

    MonteCarloResult result;
    result.p_exact = table.parties.front().p_pos_given_pos;
    const double phase = omega * delta_true;
    result.singular =
        !(phase > 0.0 && phase < std::numbers::pi) || std::abs(std::sin(phase)) < 1e-9;

    // One derived stream per trial; slot-indexed results keep the outcome
    // independent of scheduling.
    std::vector<double> p_hat(trials, -1.0);
    const bool parallel = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (parallel)
    for (long long trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed =
            rng::derive_seed(seed, {static_cast<std::uint64_t>(trial)});
        const ShotRecord record = sample_shots(table, shots, trial_seed);
        const auto empirical = record.empirical_p_pos_given_pos(0);
        if (empirical) p_hat[trial] = *empirical;
    }

    std::vector<double> delta_hat;
    delta_hat.reserve(trials);
    double sum = 0.0;
    double sum_p = 0.0;
    double sum_abs_err = 0.0;
    for (long long trial = 0; trial < trials; ++trial) {
        if (p_hat[trial] < 0.0) continue;  // no standard-pos shots landed
        const double estimate = invert_probability(p_hat[trial], a0, omega);
        delta_hat.push_back(estimate);
        sum += estimate;
        sum_p += p_hat[trial];
        sum_abs_err += std::abs(estimate - delta_true);
    }
    const long long valid = static_cast<long long>(delta_hat.size());
    result.valid_trials = valid;
    if (valid >= 1) {
        result.mean_delta_hat_s = sum / static_cast<double>(valid);
        result.mean_p_empirical = sum_p / static_cast<double>(valid);
        result.mean_abs_error_s = sum_abs_err / static_cast<double>(valid);
    }
    if (valid < 2) {
        result.degenerate = true;
        return result;
    }
    double ss = 0.0;
    for (double estimate : delta_hat) {
        const double d = estimate - result.mean_delta_hat_s;
        ss += d * d;
    }
    result.std_s = std::sqrt(ss / static_cast<double>(valid - 1));
    return result;
}

EstimationReport comparison_table(std::span<const double> omegas,
                                  std::span<const EntangledStateKind> kinds, long long shots,
                                  long long trials, std::uint64_t seed, Exec exec) {
    if (omegas.empty() || kinds.empty()) {
        throw std::invalid_argument("comparison_table needs at least one omega and one kind");
    }
    EstimationReport report;
    report.shots = shots;
    report.trials = trials;
    report.seed = seed;
    for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
        for (std::size_t wi = 0; wi < omegas.size(); ++wi) {
            EstimationReport::Cell cell;
            cell.kind = kinds[ki];
            cell.omega = omegas[wi];
            cell.delta_true = (std::numbers::pi / 2.0) / omegas[wi];
            const std::uint64_t cell_seed = rng::derive_seed(
                seed, {static_cast<std::uint64_t>(ki), static_cast<std::uint64_t>(wi)});
            cell.result = monte_carlo_std(cell.kind, cell.omega, cell.delta_true, shots, trials,
                                          cell_seed, exec);
            report.cells.push_back(cell);
        }
    }
    return report;
}

}  // namespace qcs
