// Command-line front end: one subcommand per experiment, machine-readable
// JSON or TSV reports. Diagnostics go to stderr (OMEGA_LOG=error|info|debug),
// results to --out or stdout.

#include "omega/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

namespace {

using omega::ScenarioConfig;

// Parses "key=val,key=val" option payloads such as --random and --steepen.
std::map<std::string, std::string> parse_kv(const std::string& payload) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(payload);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw omega::ConfigError("expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

void add_common_flags(CLI::App* cmd, ScenarioConfig& cfg,
                      std::string& input_file, std::string& builtin,
                      std::string& random_spec, std::string& steepen_spec) {
    cmd->add_option("--input", input_file, "Hamiltonian JSON matrix file");
    cmd->add_option("--builtin", builtin, "builtin model name (he-model)");
    cmd->add_option("--random", random_spec,
                    "random model spec: dim=<n>,seed=<s>,min-gap=<g>,spread=<r>");
    cmd->add_option("--tol", cfg.optimizer.tol_omega, "convergence tolerance");
    cmd->add_option("--max-iters", cfg.optimizer.max_iters, "iteration cap");
    cmd->add_option("--restarts", cfg.optimizer.restart_count, "random restarts");
    cmd->add_option("--steepen", steepen_spec, "steepening spec: N=<n>,T=<t>");
    cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
    cmd->add_option("--format", cfg.format, "json or tsv");
    cmd->add_option("--seed", cfg.seed, "run seed");
    cmd->add_option("--level", cfg.level, "target excited level n");
}

void resolve_source(ScenarioConfig& cfg, const std::string& input_file,
                    const std::string& builtin, const std::string& random_spec) {
    int named = (!input_file.empty()) + (!builtin.empty()) + (!random_spec.empty());
    if (named > 1)
        throw omega::ConfigError("exactly one Hamiltonian source allowed");
    if (!input_file.empty()) {
        cfg.source = ScenarioConfig::Source::File;
        cfg.input_file = input_file;
    } else if (!random_spec.empty()) {
        cfg.source = ScenarioConfig::Source::Random;
        for (const auto& [k, v] : parse_kv(random_spec)) {
            if (k == "dim") cfg.random_dim = std::stoi(v);
            else if (k == "seed") cfg.random_seed = std::stoull(v);
            else if (k == "min-gap") cfg.random_min_gap = std::stod(v);
            else if (k == "spread") cfg.random_spread = std::stod(v);
            else throw omega::ConfigError("unknown random key: " + k);
        }
    } else {
        cfg.source = ScenarioConfig::Source::Builtin;
        cfg.builtin = builtin.empty() ? "he-model" : builtin;
    }
}

void resolve_steepening(ScenarioConfig& cfg, const std::string& steepen_spec) {
    if (steepen_spec.empty()) return;
    omega::SteepeningParams params;
    for (const auto& [k, v] : parse_kv(steepen_spec)) {
        if (k == "N") params.scale_N = std::stod(v);
        else if (k == "T") params.curvature_T = std::stod(v);
        else throw omega::ConfigError("unknown steepen key: " + k);
    }
    cfg.steepening = params;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variational excited-state functional toolkit"};
    app.require_subcommand(1);

    ScenarioConfig cfg;
    std::string input_file, builtin, random_spec, steepen_spec;

    struct SubSpec {
        const char* name;
        const char* help;
    };
    const SubSpec subs[] = {
        {"spectrum", "exact eigenpairs of the model Hamiltonian"},
        {"omega-min", "minimize the excited-state functional"},
        {"hum", "Ritz values on a trial subspace with the upper-bound check"},
        {"refine", "alternating functional minimization and rotation refinement"},
        {"pathology", "three-level misidentification example"},
        {"bench", "property checks over random model ensembles"},
    };
    for (const auto& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common_flags(cmd, cfg, input_file, builtin, random_spec, steepen_spec);
        if (std::string(s.name) == "pathology") {
            cmd->add_option("--e0", cfg.pathology.e0, "lowest model energy");
            cmd->add_option("--e1", cfg.pathology.e1, "middle model energy");
            cmd->add_option("--e2", cfg.pathology.e2, "highest model energy");
            cmd->add_option("--epsilon", cfg.pathology.epsilon, "energy offset");
        }
        if (std::string(s.name) == "bench")
            cmd->add_option("--trials", cfg.trials, "number of random trials");
        if (std::string(s.name) == "hum")
            cmd->add_option("--basis-size", cfg.basis_size, "trial basis size");
        if (std::string(s.name) == "refine")
            cmd->add_option("--outer-rounds", cfg.outer_rounds,
                            "alternation round cap");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.task = app.get_subcommands().front()->get_name();
        resolve_source(cfg, input_file, builtin, random_spec);
        resolve_steepening(cfg, steepen_spec);
        const auto report = omega::run_scenario(cfg);
        omega::write_report(cfg, report);
    } catch (const omega::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ConfigError: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
