#include "omega/scenario.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace omega;

TEST_CASE("random model generation is deterministic and spectrum-exact") {
    const Matrix a = generate_random_model(6, 42, 0.05, 2.0);
    const Matrix b = generate_random_model(6, 42, 0.05, 2.0);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);

    const Matrix small = generate_random_model(2, 0, 0.05, 2.0);
    const SpectralDecomposition spec = spectral_decompose(small);
    CHECK(spec.energies[1] - spec.energies[0] >= 0.05 - 1e-10);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Matrix H = generate_random_model(5, seed, 0.07, 3.0);
        const SpectralDecomposition s = spectral_decompose(H);
        for (int k = 0; k + 1 < 5; ++k)
            CHECK(s.energies[k + 1] - s.energies[k] >= 0.07 - 1e-10);
    }

    CHECK_THROWS_AS(generate_random_model(5, 0, 0.0, 2.0), ConfigError);
    CHECK_THROWS_AS(generate_random_model(1, 0, 0.05, 2.0), ConfigError);
}

TEST_CASE("matrix JSON round-trip and asymmetry rejection") {
    const std::string path = "test_matrix.json";
    const Matrix H = generate_random_model(4, 3, 0.05, 2.0);
    write_matrix_json(path, H);
    const Matrix back = read_matrix_json(path);
    CHECK((H - back).cwiseAbs().maxCoeff() < 1e-15);

    // Small asymmetric noise is symmetrized away.
    Matrix noisy = H;
    noisy(0, 1) += 5e-13;
    write_matrix_json(path, noisy);
    const Matrix cleaned = read_matrix_json(path);
    CHECK(std::abs(cleaned(0, 1) - cleaned(1, 0)) == 0.0);

    // Gross asymmetry is rejected.
    Matrix bad = H;
    bad(0, 1) += 1e-3;
    write_matrix_json(path, bad);
    CHECK_THROWS_AS(read_matrix_json(path), IoError);

    std::remove(path.c_str());
    CHECK_THROWS_AS(read_matrix_json("no_such_file.json"), IoError);
}

TEST_CASE("spectrum task on the builtin model") {
    ScenarioConfig cfg;
    cfg.task = "spectrum";
    const auto report = run_scenario(cfg);
    const auto& energies = report["result"]["energies"];
    CHECK(energies[0].get<double>() == doctest::Approx(-2.903));
    CHECK(energies[1].get<double>() == doctest::Approx(-2.146));
    CHECK(energies[2].get<double>() == doctest::Approx(-2.06));
}

TEST_CASE("omega-min task reproduces the documented demonstration") {
    ScenarioConfig cfg;
    cfg.task = "omega-min";
    cfg.optimizer.tol_omega = 1e-10;
    const auto report = run_scenario(cfg);
    const auto& overlaps = report["result"]["overlaps_vs_oracle"];
    CHECK(std::abs(overlaps[0].get<double>()) < 1e-8);
    CHECK(std::abs(overlaps[2].get<double>()) < 1e-8);
    CHECK(report["result"]["energy"].get<double>() ==
          doctest::Approx(-2.146).epsilon(1e-8));
}

TEST_CASE("hum task reports roots and bound verdicts") {
    ScenarioConfig cfg;
    cfg.task = "hum";
    const auto report = run_scenario(cfg);
    for (const auto& ok : report["result"]["hum_bound_holds"])
        CHECK(ok.get<bool>());
}

TEST_CASE("pathology task emits the published constants") {
    ScenarioConfig cfg;
    cfg.task = "pathology";
    const auto report = run_scenario(cfg);
    CHECK(std::abs(report["result"]["a"].get<double>() - 0.9476) < 5e-5);
    CHECK(std::abs(report["result"]["b"].get<double>() - 0.3194) < 5e-5);
    CHECK(report["result"]["overlap_phi1_psi1"].get<double>() == 0.0);
}

TEST_CASE("bench task passes every trial at dim 6") {
    ScenarioConfig cfg;
    cfg.task = "bench";
    cfg.random_dim = 6;
    cfg.seed = 42;
    cfg.trials = 100;
    const auto report = run_scenario(cfg);
    CHECK(report["result"]["hum_bound_pass"].get<int>() == 100);
    CHECK(report["result"]["omega_at_eigenstate_pass"].get<int>() == 100);
}

TEST_CASE("reports are byte-identical for identical configs") {
    ScenarioConfig cfg;
    cfg.task = "refine";
    cfg.source = ScenarioConfig::Source::Random;
    cfg.random_dim = 4;
    cfg.random_seed = 9;
    cfg.random_min_gap = 0.1;
    cfg.seed = 5;
    const std::string a = run_scenario(cfg).dump();
    const std::string b = run_scenario(cfg).dump();
    CHECK(a == b);
}

TEST_CASE("refine task recovers both oracle states on the builtin model") {
    ScenarioConfig cfg;
    cfg.task = "refine";
    cfg.optimizer.tol_omega = 1e-10;
    const auto report = run_scenario(cfg);
    CHECK(std::pow(report["result"]["overlap_phi0_psi0"].get<double>(), 2) >=
          1.0 - 1e-8);
    CHECK(std::pow(report["result"]["overlap_phi1_psi1"].get<double>(), 2) >=
          1.0 - 1e-8);
}

TEST_CASE("unknown task is a typed config error") {
    ScenarioConfig cfg;
    cfg.task = "nonsense";
    CHECK_THROWS_AS(run_scenario(cfg), ConfigError);
}

TEST_CASE("tsv output has exactly one header row and one value row") {
    ScenarioConfig cfg;
    cfg.task = "pathology";
    cfg.format = "tsv";
    cfg.out_path = "test_report.tsv";
    write_report(cfg, run_scenario(cfg));
    std::ifstream in(cfg.out_path);
    std::string header, values, extra;
    CHECK(std::getline(in, header));
    CHECK(std::getline(in, values));
    CHECK(!std::getline(in, extra));
    CHECK(header.find("result.a") != std::string::npos);
    std::remove(cfg.out_path.c_str());
}
