#include "qcs/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qcs/echo.hpp"
#include "qcs/estimator.hpp"
#include "qcs/protocol.hpp"
#include "qcs/rng.hpp"

namespace qcs {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

ProtocolConfig protocol_from(const ExperimentConfig& config, const EntangledStateKind& kind) {
    ProtocolConfig protocol;
    protocol.state_kind = kind;
    protocol.standard_index = config.standard_index;
    for (std::size_t q = 0; q < config.party_omega_hz.size(); ++q) {
        PartyConfig party;
        party.index = static_cast<int>(q);
        party.omega = two_pi * config.party_omega_hz[q];
        party.delta = 0.0;
        protocol.parties.push_back(party);
    }
    return protocol;
}

std::vector<int> reported_parties(const ExperimentConfig& config) {
    if (!config.report_parties.empty()) return config.report_parties;
    std::vector<int> parties;
    for (std::size_t q = 0; q < config.party_omega_hz.size(); ++q) {
        if (static_cast<int>(q) != config.standard_index) parties.push_back(static_cast<int>(q));
    }
    return parties;
}

void print_sign_table(const SignTable& table, const std::string& name, std::ostream& out) {
    out << "sign table [" << name << "]: segments=" << table.segment_count << "\n";
    out << "  per-qubit sums:";
    for (long long sum : table.per_qubit_sums) out << ' ' << sum;
    out << "\n  pulse counts: ";
    for (std::size_t j = 0; j < table.pulse_counts.size(); ++j) {
        out << (j ? " " : "") << table.pulse_counts[j];
    }
    out << "\n  per-pair sums (upper triangle):";
    for (int j = 0; j < table.n; ++j) {
        for (int k = j + 1; k < table.n; ++k) {
            out << ' ' << j << ',' << k << '=' << table.per_pair_sums[j][k];
        }
    }
    out << "\n";
}

}  // namespace

void cmd_sweep(const ExperimentConfig& config, std::ostream& out) {
    config.validate();
    const auto deltas = config.delta_grid.values();
    const auto parties = reported_parties(config);

    out << "protocol,delta_s,party,omega_hz,p_exact,p_analytic,p_sampled\n";
    for (std::size_t ki = 0; ki < config.protocols.size(); ++ki) {
        const auto& kind = config.protocols[ki];
        const auto tables = sweep(protocol_from(config, kind), deltas);
        for (std::size_t di = 0; di < deltas.size(); ++di) {
            const auto& table = tables[di];
            ShotRecord record;
            if (config.shots > 0) {
                record = sample_shots(table, config.shots,
                                      rng::derive_seed(config.seed, {ki, di}));
            }
            for (int party : parties) {
                const auto row = std::find_if(
                    table.parties.begin(), table.parties.end(),
                    [party](const PartyOutcome& outcome) { return outcome.index == party; });
                const double omega_hz = config.party_omega_hz[party];
                const double analytic =
                    analytic_probability(kind, two_pi * omega_hz, deltas[di]);
                out << kind.label() << ',' << fmt(deltas[di]) << ',' << party << ','
                    << fmt(omega_hz) << ',' << fmt(row->p_pos_given_pos) << ',' << fmt(analytic)
                    << ',';
                if (config.shots > 0) {
                    const std::size_t slot = row - table.parties.begin();
                    if (const auto sampled = record.empirical_p_pos_given_pos(slot)) {
                        out << fmt(*sampled);
                    }
                }
                out << '\n';
            }
        }
    }
}

void cmd_echo_verify(const ExperimentConfig& config, std::ostream& out) {
    if (config.molecule_file.empty()) {
        throw config_error("echo-verify needs a molecule_file in the config");
    }
    const MoleculeSpec molecule = load_molecule_file(config.molecule_file);
    if (config.standard_index < 0 || config.standard_index >= molecule.n) {
        throw config_error("standard_index out of range for the molecule");
    }
    if (config.delta_grid.count < 1) throw config_error("delta grid count must be >= 1");

    // The refocusing identity is checked in the molecule's own frame: the
    // target clock Hamiltonian keeps the non-standard chemical shifts and
    // zeroes the standard one. Nominal protocol frequencies enter elsewhere,
    // through the compensated-frame party settings.
    IdealClockSpec ideal;
    ideal.n = molecule.n;
    ideal.standard_index = config.standard_index;
    ideal.omega = molecule.omega;
    ideal.omega[config.standard_index] = 0.0;

    out << "molecule: n=" << molecule.n << " file=" << config.molecule_file << "\n";
    out << "standard qubit: " << config.standard_index << "\n";

    const auto deltas = config.delta_grid.values();
    const EchoSequence designed =
        design_refocusing_sequence(molecule.n, config.standard_index, deltas.front());
    print_sign_table(sign_table(designed), "designed", out);

    const bool published_applies = molecule.n == 4;
    if (published_applies) {
        print_sign_table(sign_table(build_published_echo_sequence(1.0, ProductOrder::right_to_left)),
                         "published, right-to-left", out);
        print_sign_table(sign_table(build_published_echo_sequence(1.0, ProductOrder::left_to_right)),
                         "published, left-to-right", out);
    } else {
        out << "published sequence: skipped (defined for 4 qubits, molecule has " << molecule.n
            << ")\n";
    }

    for (double delta : deltas) {
        out << "delta_s=" << fmt(delta) << "\n";
        const auto designed_result = verify_echo(
            design_refocusing_sequence(molecule.n, config.standard_index, delta), molecule, ideal,
            delta);
        out << "  designed fidelity: " << fmt(designed_result.fidelity) << "\n";
        if (published_applies) {
            const auto rl = verify_echo(build_published_echo_sequence(delta, ProductOrder::right_to_left),
                                        molecule, ideal, delta);
            const auto lr = verify_echo(build_published_echo_sequence(delta, ProductOrder::left_to_right),
                                        molecule, ideal, delta);
            out << "  published fidelity (right-to-left): " << fmt(rl.fidelity) << "\n";
            out << "  published fidelity (left-to-right): " << fmt(lr.fidelity) << "\n";
        }
    }
}

void cmd_table(const ExperimentConfig& config, std::ostream& out) {
    config.validate();
    if (config.shots < 1 || config.trials < 1) {
        throw config_error("table command needs shots >= 1 and trials >= 1");
    }
    std::vector<double> omegas_hz = config.table_omega_hz;
    if (omegas_hz.empty()) {
        std::set<double> distinct;
        for (std::size_t q = 0; q < config.party_omega_hz.size(); ++q) {
            if (static_cast<int>(q) != config.standard_index && config.party_omega_hz[q] > 0.0) {
                distinct.insert(config.party_omega_hz[q]);
            }
        }
        omegas_hz.assign(distinct.begin(), distinct.end());
    }
    if (omegas_hz.empty()) throw config_error("table command needs at least one frequency");

    std::vector<double> omegas_rad;
    for (double f : omegas_hz) omegas_rad.push_back(two_pi * f);

    const EstimationReport report =
        comparison_table(omegas_rad, config.protocols, config.shots, config.trials, config.seed);

    out << "protocol,omega_hz,delta_true_s,shots,trials,seed,std_us,mean_abs_error_us,"
           "p_exact,valid_trials,singular,degenerate\n";
    for (const auto& cell : report.cells) {
        out << cell.kind.label() << ',' << fmt(cell.omega / two_pi) << ',' << fmt(cell.delta_true)
            << ',' << report.shots << ',' << report.trials << ',' << report.seed << ','
            << fmt(cell.result.std_s * 1e6) << ',' << fmt(cell.result.mean_abs_error_s * 1e6) << ','
            << fmt(cell.result.p_exact) << ',' << cell.result.valid_trials << ','
            << (cell.result.singular ? 1 : 0) << ',' << (cell.result.degenerate ? 1 : 0) << '\n';
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"multiparty quantum clock synchronization toolkit"};
    app.require_subcommand(1);

    struct Options {
        std::string config_path;
        std::string preset;
        std::string out_path;
        std::uint64_t seed = 0;
        bool seed_set = false;
    };
    Options options;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", options.config_path, "experiment config file (JSON)");
        sub->add_option("--preset", options.preset, "named preset: fig5, fig6, table1");
        sub->add_option("--out", options.out_path, "output path (default: stdout)");
        sub->add_option_function<std::uint64_t>(
            "--seed",
            [&](std::uint64_t value) {
                options.seed = value;
                options.seed_set = true;
            },
            "override the config seed");
    };

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "exact probability sweep over a delta grid");
    CLI::App* echo_cmd =
        app.add_subcommand("echo-verify", "refocusing-sequence fidelity and sign-table report");
    CLI::App* table_cmd =
        app.add_subcommand("table", "protocols x frequencies offset standard deviations");
    add_common(sweep_cmd);
    add_common(echo_cmd);
    add_common(table_cmd);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        ExperimentConfig config;
        if (!options.preset.empty() && !options.config_path.empty()) {
            throw config_error("give either --config or --preset, not both");
        }
        if (!options.preset.empty()) {
            config = preset_config(options.preset);
        } else if (!options.config_path.empty()) {
            config = load_experiment_config(options.config_path);
        } else {
            throw config_error("need --config or --preset");
        }
        if (options.seed_set) config.seed = options.seed;
        if (!options.out_path.empty()) config.output = options.out_path;

        std::ostringstream buffer;
        if (sweep_cmd->parsed()) {
            cmd_sweep(config, buffer);
        } else if (echo_cmd->parsed()) {
            cmd_echo_verify(config, buffer);
        } else {
            cmd_table(config, buffer);
        }

        if (config.output.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(config.output, std::ios::binary);
            if (!file) throw io_error("cannot open output '" + config.output + "'");
            file << buffer.str();
            if (!file) throw io_error("write failed for '" + config.output + "'");
        }
        return 0;
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qcs
