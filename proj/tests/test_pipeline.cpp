#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "cvtda/pipeline.hpp"
#include "oracles.hpp"

using namespace cvtda;

namespace {

std::filesystem::path write_temp_csv(const std::string& name, const PointCloud& cloud) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    for (int i = 0; i < cloud.n(); ++i) {
        for (int j = 0; j < cloud.d(); ++j) {
            if (j) out << ",";
            out << std::setprecision(17) << cloud.coords(i, j);
        }
        out << "\n";
    }
    return path;
}

}  // namespace

TEST_CASE("config validation and grid", "[pipeline]") {
    RunConfig config;
    config.input_path = "x.csv";
    SECTION("exactly one scale source") {
        REQUIRE_THROWS_AS(validate(config), input_error);  // neither
        config.m = 3;
        config.epsilons = {0.5};
        REQUIRE_THROWS_AS(validate(config), input_error);  // both
        config.epsilons.clear();
        REQUIRE_NOTHROW(validate(config));
    }
    SECTION("register grid skips epsilon = 0") {
        config.m = 3;
        const std::vector<double> grid = epsilon_grid(config);
        REQUIRE(grid.size() == 7);
        REQUIRE(grid.front() == 0.25);
        REQUIRE(grid.back() == 1.75);
    }
}

TEST_CASE("config json round trip", "[pipeline]") {
    RunConfig config;
    config.input_path = "points.csv";
    config.epsilons = {0.5, 1.0};
    config.kmax = 3;
    config.mode = EstimationMode::pure;
    config.grover = true;
    config.seed = 99;
    const RunConfig back = config_from_json(to_json(config));
    REQUIRE(back.input_path == config.input_path);
    REQUIRE(back.epsilons == config.epsilons);
    REQUIRE(back.kmax == 3);
    REQUIRE(back.mode == EstimationMode::pure);
    REQUIRE(back.grover);
    REQUIRE(back.seed == 99);

    SECTION("auto markers parse as unset") {
        nlohmann::json j = to_json(config);
        j["s"] = "auto";
        j["window"] = "auto";
        const RunConfig c = config_from_json(j);
        REQUIRE(c.s == 0.0);
        REQUIRE(c.window == 0.0);
    }
}

TEST_CASE("run_pipeline on a spread-out cloud", "[pipeline]") {
    Eigen::MatrixXd coords(3, 2);
    coords << 0, 0, 10, 0, 0, 10;
    const auto path = write_temp_csv("cvtda_far.csv", PointCloud{coords});

    RunConfig config;
    config.input_path = path.string();
    config.epsilons = {0.5, 1.0, 2.0};
    config.kmax = 2;
    const RunReport report = run_pipeline(config);

    REQUIRE(report.n == 3);
    REQUIRE(report.records.size() == 9);
    for (const auto& rec : report.records) {
        if (rec.k == 0) REQUIRE(rec.betti_exact == 3);  // below the minimum gap everywhere
        else REQUIRE(rec.betti_exact == 0);
        REQUIRE(rec.estimate_mixed >= 0.0);
        REQUIRE(rec.estimate_pure >= 0.0);
        REQUIRE(rec.betti_exact <= rec.set_size);
        REQUIRE(rec.eigen_count_ok);
    }
}

TEST_CASE("circle sweep shows the beta_1 transition", "[pipeline]") {
    const auto path = write_temp_csv("cvtda_circle8.csv", oracle::circle_cloud(8));
    RunConfig config;
    config.input_path = path.string();
    config.epsilons = {0.5, 1.0, 1.9};
    config.kmax = 1;
    config.grover = true;
    config.samples = 2000;
    const RunReport report = run_pipeline(config);

    const auto find = [&](double eps, int k) -> const SectorRecord& {
        for (const auto& rec : report.records)
            if (rec.epsilon == eps && rec.k == k) return rec;
        throw std::runtime_error("record missing");
    };
    REQUIRE(find(0.5, 1).betti_exact == 0);
    REQUIRE(find(1.0, 1).betti_exact == 1);
    REQUIRE(find(1.9, 1).betti_exact == 0);
    REQUIRE(find(0.5, 0).betti_exact == 8);
    REQUIRE(find(1.0, 0).betti_exact == 1);

    SECTION("estimates track the exact values in mixed mode") {
        for (const auto& rec : report.records)
            REQUIRE_THAT(rec.estimate_mixed,
                         Catch::Matchers::WithinAbs(static_cast<double>(rec.betti_exact), 0.05));
    }
    SECTION("pure and mixed disagree somewhere (and both are reported)") {
        bool differ = false;
        for (const auto& rec : report.records)
            if (std::abs(rec.estimate_pure - rec.estimate_mixed) > 0.5) differ = true;
        REQUIRE(differ);
    }
    SECTION("grover preparation is recorded") {
        const SectorRecord& rec = find(1.0, 1);
        REQUIRE(rec.grover.enabled);
        REQUIRE(rec.grover.iterations >= 1);
        REQUIRE(rec.grover.success_probability > 0.4);
        REQUIRE(rec.grover.success_probability <= 1.0 + 1e-12);
    }
    SECTION("sampled estimates are attached and sane") {
        const SectorRecord& rec = find(1.0, 1);
        REQUIRE(rec.sampled_estimate.has_value());
        REQUIRE_THAT(*rec.sampled_estimate, Catch::Matchers::WithinAbs(1.0, 0.5));
    }
}

TEST_CASE("report json round trip and determinism", "[pipeline]") {
    const auto path = write_temp_csv("cvtda_round.csv", oracle::circle_cloud(6));
    RunConfig config;
    config.input_path = path.string();
    config.epsilons = {0.8, 1.2};
    config.kmax = 2;
    config.samples = 100;

    const RunReport a = run_pipeline(config);
    const RunReport b = run_pipeline(config);
    REQUIRE(to_json(a).dump() == to_json(b).dump());  // byte-identical serialization

    const RunReport back = report_from_json(to_json(a));
    REQUIRE(to_json(back) == to_json(a));

    SECTION("output directory contents") {
        const auto out_dir = std::filesystem::temp_directory_path() / "cvtda_out_test";
        std::filesystem::remove_all(out_dir);
        config.out_dir = out_dir.string();
        run_pipeline(config);
        REQUIRE(std::filesystem::exists(out_dir / "report.json"));
        REQUIRE(std::filesystem::exists(out_dir / "config.json"));
        REQUIRE(std::filesystem::exists(out_dir / "run_meta.json"));
        REQUIRE(std::filesystem::exists(out_dir / "dist_eps0.8_k0.tsv"));

        std::ifstream in(out_dir / "report.json");
        nlohmann::json j;
        in >> j;
        REQUIRE(j == to_json(a));
        REQUIRE_FALSE(j.contains("elapsed_seconds"));  // timing lives in run_meta.json

        std::ifstream tsv(out_dir / "dist_eps0.8_k0.tsv");
        std::string header;
        std::getline(tsv, header);
        REQUIRE(header == "q\tP");
    }
    SECTION("parallel workers produce the same report") {
        config.workers = 3;
        const RunReport parallel = run_pipeline(config);
        REQUIRE(to_json(parallel).dump() == to_json(a).dump());
    }
}

TEST_CASE("pipeline error paths", "[pipeline]") {
    RunConfig config;
    config.input_path = "/nonexistent/points.csv";
    config.epsilons = {1.0};
    REQUIRE_THROWS_AS(run_pipeline(config), io_error);
}

TEST_CASE("verification suites pass on small corpora", "[pipeline]") {
    REQUIRE(suite_chain_complex(5, 10).passed);
    REQUIRE(suite_dirac_square(6, 10).passed);
    REQUIRE(suite_distance_operator(7, 10).passed);
    const SuiteResult grover = suite_grover_closed_form(6, 12);
    REQUIRE(grover.passed);
    REQUIRE(grover.max_deviation < 1e-10);
}
