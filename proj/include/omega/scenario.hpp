#ifndef OMEGA_SCENARIO_HPP
#define OMEGA_SCENARIO_HPP

#include "omega/baselines.hpp"
#include "omega/models.hpp"
#include "omega/optimizer.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace omega {

struct ScenarioConfig {
    enum class Source { Builtin, File, Random };

    Source source = Source::Builtin;
    std::string builtin = "he-model";
    std::string input_file;
    int random_dim = 4;
    std::uint64_t random_seed = 0;
    double random_min_gap = 0.05;
    double random_spread = 2.0;

    std::string task = "spectrum";  // spectrum|omega-min|hum|refine|pathology|bench
    OptimizerConfig optimizer;
    std::optional<SteepeningParams> steepening;

    int level = 1;       // target level for omega-min
    int basis_size = 2;  // hum trial basis size
    int trials = 100;    // bench trial count
    int outer_rounds = 8;
    PathologyParams pathology{-2.903, -2.146, -2.06, 0.0};
    std::uint64_t seed = 0;

    std::string out_path;         // empty = stdout
    std::string format = "json";  // json|tsv
};

// Executes the configured task and returns the machine-readable report.
nlohmann::json run_scenario(const ScenarioConfig& config);

// Serializes a report per config.format and writes it to config.out_path
// (or stdout when empty).
void write_report(const ScenarioConfig& config, const nlohmann::json& report);

}  // namespace omega

#endif  // OMEGA_SCENARIO_HPP
