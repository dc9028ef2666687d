#include "qcs/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcs {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error(path + ": " + e.what());
    }
}

template <class T>
T field(const json& j, const std::string& name) {
    if (!j.contains(name)) throw config_error("missing config field '" + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw config_error("config field '" + name + "': " + e.what());
    }
}

template <class T>
T field_or(const json& j, const std::string& name, T fallback) {
    if (!j.contains(name)) return fallback;
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw config_error("config field '" + name + "': " + e.what());
    }
}

EntangledStateKind parse_kind(const json& j) {
    const std::string kind = field<std::string>(j, "kind");
    if (kind == "bell") return EntangledStateKind::bell();
    if (kind == "w") return EntangledStateKind::w(field<int>(j, "n"));
    if (kind == "dicke") return EntangledStateKind::dicke(field<int>(j, "n"), field<int>(j, "k"));
    throw config_error("unknown protocol kind '" + kind + "' (expected bell, w, or dicke)");
}

}  // namespace

std::vector<double> DeltaGrid::values() const {
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(start_s);
        return out;
    }
    const double step = (stop_s - start_s) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) {
        out.push_back(start_s + step * static_cast<double>(i));
    }
    return out;
}

void ExperimentConfig::validate() const {
    if (protocols.empty()) throw config_error("config lists no protocols");
    for (const auto& kind : protocols) {
        try {
            kind.validate();
        } catch (const std::invalid_argument& e) {
            throw config_error(std::string("protocol: ") + e.what());
        }
        if (kind.n != static_cast<int>(party_omega_hz.size())) {
            throw config_error("protocol '" + kind.label() + "' needs " + std::to_string(kind.n) +
                               " parties, config lists " + std::to_string(party_omega_hz.size()));
        }
    }
    if (standard_index < 0 || standard_index >= static_cast<int>(party_omega_hz.size())) {
        throw config_error("standard_index out of range");
    }
    for (std::size_t i = 0; i < party_omega_hz.size(); ++i) {
        if (party_omega_hz[i] < 0.0) throw config_error("party frequencies must be >= 0");
    }
    if (party_omega_hz[standard_index] != 0.0) {
        throw config_error("the standard party's frequency must be 0");
    }
    if (delta_grid.count < 1) throw config_error("delta grid count must be >= 1");
    if (shots < 0) throw config_error("shots must be >= 0");
    if (trials < 0) throw config_error("trials must be >= 0");
    for (int party : report_parties) {
        if (party < 0 || party >= static_cast<int>(party_omega_hz.size())) {
            throw config_error("report party index out of range");
        }
        if (party == standard_index) {
            throw config_error("the standard party has no conditional row to report");
        }
    }
    for (double f : table_omega_hz) {
        if (!(f > 0.0)) throw config_error("table frequencies must be > 0");
    }
}

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig config;
    if (name == "fig5") {
        config.protocols = {EntangledStateKind::w(4), EntangledStateKind::dicke(4, 2)};
        config.party_omega_hz = {0.0, 250.0, 250.0, 250.0};
        config.delta_grid = {0.0, 0.005, 20};
        config.report_parties = {1};
        return config;
    }
    if (name == "fig6") {
        config.protocols = {EntangledStateKind::dicke(4, 2)};
        config.party_omega_hz = {0.0, 250.0, 150.0, 100.0};
        config.delta_grid = {0.0, 0.005, 20};
        return config;
    }
    if (name == "table1") {
        config.protocols = {EntangledStateKind::w(4), EntangledStateKind::dicke(4, 2)};
        config.party_omega_hz = {0.0, 250.0, 250.0, 250.0};
        config.delta_grid = {0.0, 0.0, 1};
        config.shots = 4096;
        config.trials = 200;
        config.table_omega_hz = {100.0, 150.0, 250.0};
        return config;
    }
    throw config_error("unknown preset '" + name + "' (expected fig5, fig6, or table1)");
}

ExperimentConfig load_experiment_config(const std::string& path) {
    const json j = parse_file(path);
    ExperimentConfig config;
    for (const json& kind : field_or<json>(j, "protocols", json::array())) {
        config.protocols.push_back(parse_kind(kind));
    }
    config.party_omega_hz = field<std::vector<double>>(j, "party_omega_hz");
    config.standard_index = field_or<int>(j, "standard_index", 0);
    if (j.contains("delta_grid")) {
        const json grid = j.at("delta_grid");
        config.delta_grid.start_s = field<double>(grid, "start_s");
        config.delta_grid.stop_s = field<double>(grid, "stop_s");
        config.delta_grid.count = field<int>(grid, "count");
    }
    config.shots = field_or<long long>(j, "shots", 0);
    config.trials = field_or<long long>(j, "trials", 0);
    config.seed = field_or<std::uint64_t>(j, "seed", config.seed);
    config.report_parties = field_or<std::vector<int>>(j, "report_parties", {});
    config.table_omega_hz = field_or<std::vector<double>>(j, "table_omega_hz", {});
    config.molecule_file = field_or<std::string>(j, "molecule_file", "");
    config.output = field_or<std::string>(j, "output", "");
    return config;
}

MoleculeSpec load_molecule_file(const std::string& path) {
    const json j = parse_file(path);
    const int n = field<int>(j, "n");
    if (n < 1 || n > 8) throw config_error("molecule file: n must be in 1..8");
    const auto omega_hz = field<std::vector<double>>(j, "omega_hz");
    if (omega_hz.size() != static_cast<std::size_t>(n)) {
        throw config_error("molecule file: omega_hz must list n entries");
    }
    const auto j_hz = field<std::vector<double>>(j, "j_hz");
    if (j_hz.size() != static_cast<std::size_t>(n) * (n - 1) / 2) {
        throw config_error("molecule file: j_hz must list n(n-1)/2 upper-triangle entries");
    }
    MoleculeSpec spec = MoleculeSpec::zero(n);
    constexpr double two_pi = 6.283185307179586;
    for (int q = 0; q < n; ++q) spec.omega[q] = two_pi * omega_hz[q];
    std::size_t next = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            spec.j_coupling[a][b] = j_hz[next];
            spec.j_coupling[b][a] = j_hz[next];
            ++next;
        }
    }
    return spec;
}

}  // namespace qcs
