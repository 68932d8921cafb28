// Command-line front end: sweep scales over a point cloud, report exact and
// estimated Betti numbers, and run the verification suites.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvtda/pipeline.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

cvtda::RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cvtda::io_error("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw cvtda::input_error(std::string("config parse failure: ") + e.what());
    }
    return cvtda::config_from_json(j);
}

void print_records(const cvtda::RunReport& report) {
    std::printf("%-10s %-3s %-8s %-8s %-14s %-14s %s\n", "epsilon", "k", "|S_k|", "beta", "est(mixed)",
                "est(pure)", "flags");
    for (const auto& r : report.records) {
        std::string flags;
        if (!r.eigen_count_ok) flags += " eigen-count-mismatch";
        if (r.resolution_warning) flags += " resolution-warning";
        if (r.grover.enabled)
            flags += " grover(r=" + std::to_string(r.grover.iterations) +
                     ", p=" + std::to_string(r.grover.success_probability) + ")";
        std::printf("%-10.6g %-3d %-8ld %-8d %-14.6f %-14.6f%s\n", r.epsilon, r.k, r.set_size, r.betti_exact,
                    r.estimate_mixed, r.estimate_pure, flags.c_str());
    }
}

void print_suites(const cvtda::RunReport& report) {
    for (const auto& s : report.suites)
        std::printf("[%s] %-20s max deviation %.3e  %s\n", s.passed ? "PASS" : "FAIL", s.name.c_str(),
                    s.max_deviation, s.detail.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers of point clouds: exact combinatorial computation cross-checked "
                 "against a simulated continuous-variable eigenvalue readout"};
    app.require_subcommand(1);

    cvtda::RunConfig config;
    std::string config_path;
    std::string format_name = "csv";
    std::string mode_name = "mixed";
    std::string epsilons_csv;

    // A config file provides defaults; explicit flags override it.
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--config" && i + 1 < argc) config_path = argv[i + 1];
    }
    try {
        if (!config_path.empty()) {
            config = load_config_file(config_path);
            format_name = config.format == cvtda::PointFormat::csv ? "csv" : "json";
            mode_name = cvtda::to_string(config.mode);
        }
    } catch (const cvtda::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    auto* analyze = app.add_subcommand("analyze", "Sweep scales and estimate Betti numbers");
    analyze->add_option("--config", config_path, "JSON config file (flags override it)");
    analyze->add_option("--input", config.input_path, "point-cloud file");
    analyze->add_option("--format", format_name, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    analyze->add_flag("--normalize", config.normalize, "scale every point to the unit sphere");
    analyze->add_option("--m", config.m, "scale-register width; grid is x/2^(m-1), x=1..2^m-1");
    analyze->add_option("--epsilons", epsilons_csv, "comma-separated explicit scale list");
    analyze->add_option("--kmax", config.kmax, "largest homology dimension to report");
    analyze->add_option("--mode", mode_name, "pure|mixed")->check(CLI::IsMember({"pure", "mixed"}));
    analyze->add_option("--s", config.s, "squeezing parameter (<=0 = auto)");
    analyze->add_option("--gamma", config.gamma, "evolution strength (<=0 = auto)");
    analyze->add_option("--alpha", config.alpha, "spectral shift");
    analyze->add_option("--window", config.window, "kernel window halfwidth (<=0 = auto)");
    analyze->add_option("--samples", config.samples, "homodyne sample count (0 = analytic only)");
    analyze->add_option("--seed", config.seed, "sampling seed");
    analyze->add_flag("--grover", config.grover, "run the amplitude-amplification preparation per sector");
    analyze->add_option("--out", config.out_dir, "output directory for report.json and TSV distributions");
    analyze->add_option("--workers", config.workers, "parallel scale jobs");

    std::uint64_t verify_seed = 20240801;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Run all verification suites");
    verify->add_option("--seed", verify_seed, "corpus seed");
    verify->add_option("--out", verify_out, "optional directory for the suite report");

    std::string gates_out;
    int gates_nmax = 2;
    auto* gates = app.add_subcommand("gates", "Run the dual-rail conditional-swap sweep only");
    gates->add_option("--out", gates_out, "optional directory for the gate report");
    gates->add_option("--n-max", gates_nmax, "per-mode photon truncation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (analyze->parsed()) {
            config.format = cvtda::point_format_from_string(format_name);
            config.mode = mode_name == "pure" ? cvtda::EstimationMode::pure : cvtda::EstimationMode::mixed;
            if (!epsilons_csv.empty()) {
                config.epsilons.clear();
                std::size_t start = 0;
                while (start <= epsilons_csv.size()) {
                    const std::size_t comma = epsilons_csv.find(',', start);
                    const std::string token =
                        epsilons_csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                    if (!token.empty()) config.epsilons.push_back(std::stod(token));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            if (config.input_path.empty()) throw cvtda::input_error("analyze: --input is required");
            const cvtda::RunReport report = cvtda::run_pipeline(config);
            print_records(report);
            if (!config.out_dir.empty()) std::printf("report written to %s\n", config.out_dir.c_str());
            return exit_ok;
        }
        if (verify->parsed()) {
            const cvtda::RunReport report = cvtda::run_verification(verify_seed);
            print_suites(report);
            if (!verify_out.empty()) {
                std::filesystem::create_directories(verify_out);
                std::ofstream out(std::filesystem::path(verify_out) / "verification.json");
                out << cvtda::to_json(report).dump(2) << "\n";
            }
            return report.all_suites_passed() ? exit_ok : exit_verification_failure;
        }
        if (gates->parsed()) {
            const cvtda::AppendixReport report =
                cvtda::run_appendix_sweep(cvtda::appendix_t_values(), {1, 2}, gates_nmax);
            const nlohmann::json j = cvtda::appendix_report_json(report, 1e-10);
            std::cout << j.dump(2) << "\n";
            if (!gates_out.empty()) {
                std::filesystem::create_directories(gates_out);
                std::ofstream out(std::filesystem::path(gates_out) / "gates.json");
                out << j.dump(2) << "\n";
            }
            return report.passed(1e-10) ? exit_ok : exit_verification_failure;
        }
    } catch (const cvtda::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const cvtda::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification_failure;
    }
    return exit_ok;
}
