#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cvtda/complex.hpp"
#include "cvtda/cvsim.hpp"
#include "cvtda/errors.hpp"
#include "cvtda/fockgates.hpp"
#include "cvtda/geometry.hpp"
#include "cvtda/homology.hpp"
#include "cvtda/statevector.hpp"

namespace cvtda {

struct RunConfig {
    std::string input_path;
    PointFormat format = PointFormat::csv;
    bool normalize = false;
    int m = 0;                      // scale-register width; 0 means use the explicit list
    std::vector<double> epsilons;   // explicit scale list
    int kmax = 2;
    EstimationMode mode = EstimationMode::mixed;
    double s = 0.0;                 // <= 0 means auto
    double gamma = 0.0;             // <= 0 means auto
    double alpha = 1.0;
    double window = 0.0;            // <= 0 means auto
    int samples = 0;                // 0 = analytic only
    std::uint64_t seed = 1;
    bool grover = false;
    std::string out_dir;
    int workers = 1;
};

inline void validate(const RunConfig& config) {
    const bool has_m = config.m > 0;
    const bool has_list = !config.epsilons.empty();
    if (has_m == has_list)
        throw input_error("config: exactly one of the register width m and an explicit epsilon list is required");
    if (has_m && config.m > 16) throw input_error("config: register width m capped at 16");
    if (config.kmax < 0) throw input_error("config: kmax must be >= 0");
    if (config.workers < 1) throw input_error("config: workers must be >= 1");
    if (config.samples < 0) throw input_error("config: samples must be >= 0");
}

inline std::vector<double> epsilon_grid(const RunConfig& config) {
    if (!config.epsilons.empty()) return config.epsilons;
    std::vector<double> grid;
    const std::uint64_t count = std::uint64_t{1} << config.m;
    for (std::uint64_t x = 1; x < count; ++x) grid.push_back(scale_from_index(x, config.m).epsilon);
    return grid;
}

struct GroverRecord {
    bool enabled = false;
    int iterations = 0;
    double success_probability = 0.0;
};

struct SectorRecord {
    double epsilon = 0.0;
    int k = 0;
    long set_size = 0;
    int betti_exact = 0;
    double mass_mixed = 0.0;
    double estimate_mixed = 0.0;
    double mass_pure = 0.0;
    double estimate_pure = 0.0;
    double window = 0.0;
    double s = 0.0;
    double gamma = 0.0;
    double alpha = 0.0;
    bool eigen_count_ok = true;
    bool resolution_warning = false;
    GroverRecord grover;
    std::optional<double> sampled_estimate;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    std::string detail;
};

struct RunReport {
    int n = 0;
    std::string input;
    std::string mode;
    std::vector<SectorRecord> records;
    std::vector<SuiteResult> suites;
    double elapsed_seconds = 0.0;  // serialized into the run_meta sidecar, not into report.json

    bool all_suites_passed() const {
        for (const auto& s : suites)
            if (!s.passed) return false;
        return true;
    }
};

inline nlohmann::json to_json(const SectorRecord& r) {
    nlohmann::json j{{"epsilon", r.epsilon},
                     {"k", r.k},
                     {"set_size", r.set_size},
                     {"betti_exact", r.betti_exact},
                     {"mass_mixed", r.mass_mixed},
                     {"estimate_mixed", r.estimate_mixed},
                     {"mass_pure", r.mass_pure},
                     {"estimate_pure", r.estimate_pure},
                     {"window", r.window},
                     {"s", r.s},
                     {"gamma", r.gamma},
                     {"alpha", r.alpha},
                     {"eigen_count_ok", r.eigen_count_ok},
                     {"resolution_warning", r.resolution_warning}};
    if (r.grover.enabled)
        j["grover"] = {{"iterations", r.grover.iterations}, {"success_probability", r.grover.success_probability}};
    else
        j["grover"] = nullptr;
    if (r.sampled_estimate)
        j["sampled_estimate"] = *r.sampled_estimate;
    else
        j["sampled_estimate"] = nullptr;
    return j;
}

inline SectorRecord sector_record_from_json(const nlohmann::json& j) {
    SectorRecord r;
    r.epsilon = j.at("epsilon").get<double>();
    r.k = j.at("k").get<int>();
    r.set_size = j.at("set_size").get<long>();
    r.betti_exact = j.at("betti_exact").get<int>();
    r.mass_mixed = j.at("mass_mixed").get<double>();
    r.estimate_mixed = j.at("estimate_mixed").get<double>();
    r.mass_pure = j.at("mass_pure").get<double>();
    r.estimate_pure = j.at("estimate_pure").get<double>();
    r.window = j.at("window").get<double>();
    r.s = j.at("s").get<double>();
    r.gamma = j.at("gamma").get<double>();
    r.alpha = j.at("alpha").get<double>();
    r.eigen_count_ok = j.at("eigen_count_ok").get<bool>();
    r.resolution_warning = j.at("resolution_warning").get<bool>();
    if (!j.at("grover").is_null()) {
        r.grover.enabled = true;
        r.grover.iterations = j.at("grover").at("iterations").get<int>();
        r.grover.success_probability = j.at("grover").at("success_probability").get<double>();
    }
    if (!j.at("sampled_estimate").is_null()) r.sampled_estimate = j.at("sampled_estimate").get<double>();
    return r;
}

inline nlohmann::json to_json(const SuiteResult& s) {
    return nlohmann::json{
        {"name", s.name}, {"passed", s.passed}, {"max_deviation", s.max_deviation}, {"detail", s.detail}};
}

inline SuiteResult suite_result_from_json(const nlohmann::json& j) {
    return SuiteResult{j.at("name").get<std::string>(), j.at("passed").get<bool>(),
                       j.at("max_deviation").get<double>(), j.at("detail").get<std::string>()};
}

inline nlohmann::json to_json(const RunReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& s : report.suites) suites.push_back(to_json(s));
    return nlohmann::json{
        {"n", report.n}, {"input", report.input}, {"mode", report.mode}, {"records", records}, {"suites", suites}};
}

inline RunReport report_from_json(const nlohmann::json& j) {
    RunReport report;
    report.n = j.at("n").get<int>();
    report.input = j.at("input").get<std::string>();
    report.mode = j.at("mode").get<std::string>();
    for (const auto& r : j.at("records")) report.records.push_back(sector_record_from_json(r));
    for (const auto& s : j.at("suites")) report.suites.push_back(suite_result_from_json(s));
    return report;
}

inline nlohmann::json to_json(const RunConfig& c) {
    return nlohmann::json{{"input", c.input_path},
                          {"format", c.format == PointFormat::csv ? "csv" : "json"},
                          {"normalize", c.normalize},
                          {"m", c.m},
                          {"epsilons", c.epsilons},
                          {"kmax", c.kmax},
                          {"mode", to_string(c.mode)},
                          {"s", c.s},
                          {"gamma", c.gamma},
                          {"alpha", c.alpha},
                          {"window", c.window},
                          {"samples", c.samples},
                          {"seed", c.seed},
                          {"grover", c.grover},
                          {"out", c.out_dir},
                          {"workers", c.workers}};
}

inline RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    const auto number_or_auto = [](const nlohmann::json& v, double fallback) {
        if (v.is_string() && v.get<std::string>() == "auto") return fallback;
        return v.get<double>();
    };
    if (j.contains("input")) c.input_path = j.at("input").get<std::string>();
    if (j.contains("format")) c.format = point_format_from_string(j.at("format").get<std::string>());
    if (j.contains("normalize")) c.normalize = j.at("normalize").get<bool>();
    if (j.contains("m")) c.m = j.at("m").get<int>();
    if (j.contains("epsilons")) c.epsilons = j.at("epsilons").get<std::vector<double>>();
    if (j.contains("kmax")) c.kmax = j.at("kmax").get<int>();
    if (j.contains("mode")) {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode != "pure" && mode != "mixed") throw input_error("config: mode must be pure or mixed");
        c.mode = mode == "pure" ? EstimationMode::pure : EstimationMode::mixed;
    }
    if (j.contains("s")) c.s = number_or_auto(j.at("s"), 0.0);
    if (j.contains("gamma")) c.gamma = number_or_auto(j.at("gamma"), 0.0);
    if (j.contains("alpha")) c.alpha = number_or_auto(j.at("alpha"), 1.0);
    if (j.contains("window")) c.window = number_or_auto(j.at("window"), 0.0);
    if (j.contains("samples")) c.samples = j.at("samples").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("grover")) c.grover = j.at("grover").get<bool>();
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
    if (j.contains("workers")) c.workers = j.at("workers").get<int>();
    return c;
}

namespace detail {

inline std::string format_epsilon(double eps) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", eps);
    return buf;
}

template <typename Fn>
inline auto with_context(double eps, int k, Fn&& fn) {
    try {
        return fn();
    } catch (const io_error& e) {
        throw io_error("epsilon=" + format_epsilon(eps) + ", k=" + std::to_string(k) + ": " + e.what());
    } catch (const internal_error& e) {
        throw internal_error("epsilon=" + format_epsilon(eps) + ", k=" + std::to_string(k) + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw input_error("epsilon=" + format_epsilon(eps) + ", k=" + std::to_string(k) + ": " + e.what());
    }
}

}  // namespace detail

// Per-epsilon unit of work: enumerate, assemble, decompose, estimate.
struct EpsilonJobResult {
    std::vector<SectorRecord> records;
    std::vector<std::pair<std::string, SpectralDistribution>> distributions;  // tsv name -> data
};

inline EpsilonJobResult analyze_epsilon(const DistanceMatrix& dist, double eps, const RunConfig& config) {
    EpsilonJobResult out;
    const int n = dist.n();
    const int kmax_report = std::min(config.kmax, n - 1);
    // one extra simplex dimension so the top requested Betti number sees its
    // upper boundary map
    const int kmax_complex = std::min(kmax_report + 1, n - 1);
    const VietorisRipsComplex vr = enumerate_vr(dist, eps, kmax_complex);
    const DiracOperator dirac = dirac_operator(vr);
    const EigenDecomposition eig = eigendecompose(dirac, config.alpha);
    const PhaseEstimationParams params = auto_params(eig, config.s, config.gamma);

    for (int k = 0; k <= kmax_report; ++k) {
        SectorRecord rec;
        rec.epsilon = eps;
        rec.k = k;
        rec.set_size = vr.count(k);
        rec.s = params.s;
        rec.gamma = params.gamma;
        rec.alpha = params.alpha;
        detail::with_context(eps, k, [&] {
            rec.betti_exact = betti_exact(vr, k);
            const BettiEstimate mixed = estimate_betti(eig, vr, k, params, EstimationMode::mixed, config.window);
            const BettiEstimate pure = estimate_betti(eig, vr, k, params, EstimationMode::pure, config.window);
            rec.mass_mixed = mixed.mass;
            rec.estimate_mixed = mixed.estimate;
            rec.mass_pure = pure.mass;
            rec.estimate_pure = pure.estimate;
            rec.window = mixed.window;
            rec.resolution_warning = mixed.resolution_warning || pure.resolution_warning;

            // cross-check: kernel eigenvalue count attributed to this sector
            const double ztol = eig.zero_tolerance();
            double kernel_weight = 0.0;
            for (int i = 0; i < eig.dim(); ++i)
                if (std::abs(eig.values[i] - eig.alpha) < ztol && k < eig.sectors())
                    kernel_weight += eig.sector_weight(i, k);
            rec.eigen_count_ok = std::lround(kernel_weight) == rec.betti_exact;

            if (config.grover && rec.set_size > 0) {
                rec.grover.enabled = true;
                rec.grover.iterations = grover_auto_iterations(n, rec.set_size);
                const QuantumState amplified = grover_amplify(uniform_state(n), vr, k);
                rec.grover.success_probability = marked_mass(amplified, vr.sets[static_cast<std::size_t>(k)]);
            }

            if (rec.set_size > 0) {
                const SpectralDistribution cond = conditional_distribution(eig, vr, k, params, config.mode);
                if (config.samples > 0) {
                    const std::uint64_t sample_seed = config.seed + 1000003ull * static_cast<std::uint64_t>(k) +
                                                      std::bit_cast<std::uint64_t>(eps);
                    const auto samples = sample_homodyne(cond, config.samples, sample_seed);
                    rec.sampled_estimate = estimate_from_samples(samples, params.gamma * params.alpha,
                                                                 rec.window, rec.set_size);
                }
                out.distributions.emplace_back(
                    "dist_eps" + detail::format_epsilon(eps) + "_k" + std::to_string(k) + ".tsv", cond);
            }
            return 0;
        });
        out.records.push_back(std::move(rec));
    }
    return out;
}

inline RunReport run_pipeline(const RunConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();

    PointCloud cloud = load_point_cloud(config.input_path, config.format);
    if (config.normalize) cloud = normalize_to_unit_sphere(cloud);
    const DistanceMatrix dist = pairwise_sq_distances(cloud);
    const std::vector<double> grid = epsilon_grid(config);

    std::vector<EpsilonJobResult> jobs(grid.size());
    const int workers = std::min<int>(config.workers, static_cast<int>(grid.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) jobs[i] = analyze_epsilon(dist, grid[i], config);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
                        jobs[i] = analyze_epsilon(dist, grid[i], config);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    RunReport report;
    report.n = cloud.n();
    report.input = config.input_path;
    report.mode = to_string(config.mode);
    for (auto& job : jobs)
        for (auto& rec : job.records) report.records.push_back(std::move(rec));
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!config.out_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(config.out_dir, ec);
        if (ec) throw io_error("cannot create output directory '" + config.out_dir + "'");
        {
            std::ofstream out(fs::path(config.out_dir) / "report.json");
            if (!out) throw io_error("cannot write report.json");
            out << to_json(report).dump(2) << "\n";
        }
        {
            std::ofstream out(fs::path(config.out_dir) / "config.json");
            out << to_json(config).dump(2) << "\n";
        }
        {
            std::ofstream out(fs::path(config.out_dir) / "run_meta.json");
            out << nlohmann::json{{"elapsed_seconds", report.elapsed_seconds}}.dump(2) << "\n";
        }
        for (const auto& job : jobs)
            for (const auto& [name, dist_data] : job.distributions) {
                std::ofstream out(fs::path(config.out_dir) / name);
                write_distribution_tsv(out, dist_data);
            }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Verification suites. Each suite regenerates its own deterministic corpus.
// ---------------------------------------------------------------------------

namespace detail {

inline double gaussian(std::mt19937_64& rng) {
    const auto uniform01 = [&rng]() { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
    return std::sqrt(-2.0 * std::log(uniform01())) * std::cos(2.0 * std::numbers::pi * uniform01());
}

inline PointCloud random_sphere_cloud(std::mt19937_64& rng, int n, int d) {
    Eigen::MatrixXd coords(n, d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) coords(i, j) = gaussian(rng);
        const double norm = coords.row(i).norm();
        if (norm == 0.0) coords(i, 0) = 1.0;
        else coords.row(i) /= norm;
    }
    return PointCloud{std::move(coords)};
}

inline double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

inline Eigen::MatrixXcd exact_conjugation(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& gen,
                                          double p_r, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gen);
    Eigen::VectorXcd phases(gen.rows());
    for (Eigen::Index i = 0; i < gen.rows(); ++i)
        phases[i] = std::exp(std::complex<double>(0.0, t * p_r * solver.eigenvalues()[i]));
    const Eigen::MatrixXcd u = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    return u * rho * u.adjoint();
}

}  // namespace detail

inline SuiteResult suite_chain_complex(std::uint64_t seed, int clouds = 100) {
    std::mt19937_64 rng(seed);
    int checked = 0;
    for (int trial = 0; trial < clouds; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);  // 3..10
        const int d = 2 + static_cast<int>(rng() % 3);
        const PointCloud cloud = detail::random_sphere_cloud(rng, n, d);
        const double eps = 2.0 * (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        const VietorisRipsComplex vr = enumerate_vr(pairwise_sq_distances(cloud), eps, n - 1);
        if (!verify_chain_complex(vr))
            return SuiteResult{"chain-complex", false, 1.0,
                               "boundary product nonzero on trial " + std::to_string(trial)};
        ++checked;
    }
    return SuiteResult{"chain-complex", true, 0.0, std::to_string(checked) + " random complexes, exact zero"};
}

inline SuiteResult suite_dirac_square(std::uint64_t seed, int clouds = 100) {
    std::mt19937_64 rng(seed);
    int checked = 0;
    for (int trial = 0; trial < clouds; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const int d = 2 + static_cast<int>(rng() % 3);
        const PointCloud cloud = detail::random_sphere_cloud(rng, n, d);
        const double eps = 2.0 * (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        const VietorisRipsComplex vr = enumerate_vr(pairwise_sq_distances(cloud), eps, n - 1);
        if (!verify_dirac_square(vr))
            return SuiteResult{"dirac-square", false, 1.0,
                               "squared operator mismatch on trial " + std::to_string(trial)};
        ++checked;
    }
    return SuiteResult{"dirac-square", true, 0.0, std::to_string(checked) + " random complexes, exact equality"};
}

inline SuiteResult suite_distance_operator(std::uint64_t seed, int clouds = 50) {
    std::mt19937_64 rng(seed);
    double max_dev = 0.0;
    for (int trial = 0; trial < clouds; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int d = 2 + static_cast<int>(rng() % 4);
        PointCloud cloud = detail::random_sphere_cloud(rng, n, d);
        if (trial % 2 == 1) cloud.coords *= 1.0 + 0.5 * (static_cast<double>(rng() % 100) / 100.0);
        const DistanceProtocolResult protocol = derive_distance_operator(cloud);
        const DistanceMatrix reference = pairwise_sq_distances(cloud);
        max_dev = std::max(max_dev, (protocol.sq - reference.sq).cwiseAbs().maxCoeff());
    }
    return SuiteResult{"distance-operator", max_dev <= 1e-10, max_dev,
                       std::to_string(clouds) + " random clouds"};
}

inline SuiteResult suite_grover_closed_form(int max_n = 10, int max_r = 20) {
    double max_dev = 0.0;
    for (int n = 1; n <= max_n; ++n) {
        const long dim = 1L << n;
        for (long marked_count = 1; marked_count <= dim; ++marked_count) {
            std::vector<SimplexBits> marked;
            marked.reserve(static_cast<std::size_t>(marked_count));
            for (long w = 0; w < marked_count; ++w) marked.push_back(SimplexBits{static_cast<std::uint32_t>(w)});
            const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) / static_cast<double>(dim)));
            QuantumState state = uniform_state(n);
            for (int r = 0; r <= max_r; ++r) {
                if (r > 0) state = grover_amplify(std::move(state), marked, 1);
                const double simulated = marked_mass(state, marked);
                const double closed = std::pow(std::sin((2.0 * r + 1.0) * theta), 2.0);
                max_dev = std::max(max_dev, std::abs(simulated - closed));
            }
        }
    }
    return SuiteResult{"grover-closed-form", max_dev <= 1e-10, max_dev,
                       "n <= " + std::to_string(max_n) + ", all M, r <= " + std::to_string(max_r)};
}

inline SuiteResult suite_trotter_convergence() {
    std::vector<Eigen::MatrixXcd> generators;
    generators.push_back((Eigen::MatrixXcd(2, 2) << 1, 0, 0, 0).finished());
    generators.push_back((Eigen::MatrixXcd(2, 2) << 1.2, 0.3, 0.3, 0.7).finished());
    {
        Eigen::MatrixXcd g(4, 4);
        g << 1.0, 0.2, 0.0, 0.1,
             0.2, 0.8, 0.3, 0.0,
             0.0, 0.3, 0.6, 0.2,
             0.1, 0.0, 0.2, 0.4;
        generators.push_back(g);
    }

    double worst_ratio_dev = 0.0;
    for (const auto& gen : generators) {
        const long d = gen.rows();
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
        Eigen::VectorXcd psi(d);
        for (long i = 0; i < d; ++i) psi[i] = std::complex<double>(1.0 + 0.2 * static_cast<double>(i), 0.1);
        psi /= psi.norm();
        rho = psi * psi.adjoint();

        const double t = 1.0;
        const double p_r = 1.0;
        const double tr = gen.trace().real();
        const Eigen::MatrixXcd exact = detail::exact_conjugation(rho, gen, p_r, t);

        std::vector<double> errors;
        for (long steps = 40; steps <= 40 * (1L << 10); steps *= 2) {
            const double delta_t = t / (static_cast<double>(steps) * tr);
            const Eigen::MatrixXcd evolved = trotterized_evolution(rho, gen, p_r, t, delta_t);
            errors.push_back(detail::trace_distance(evolved, exact));
        }
        for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
            if (errors[i + 1] < 1e-12) break;
            const double ratio = errors[i] / errors[i + 1];
            worst_ratio_dev = std::max(worst_ratio_dev, std::abs(ratio - 2.0));
        }
    }
    return SuiteResult{"trotter-convergence", worst_ratio_dev <= 0.3, worst_ratio_dev,
                       "halving delta_t halves the trace-distance error"};
}

inline std::vector<double> appendix_t_values() {
    return {0.0, 0.3, -0.3, 0.7, -0.7, std::numbers::pi / 4.0, -std::numbers::pi / 4.0,
            std::numbers::pi / 2.0, -std::numbers::pi / 2.0, 1.5, -1.5};
}

inline SuiteResult suite_appendix_gates(int n_max = 2) {
    const AppendixReport report = run_appendix_sweep(appendix_t_values(), {1, 2}, n_max);
    const double fidelity_gap = 1.0 - report.min_ancilla_fidelity;
    return SuiteResult{"appendix-gates", report.passed(1e-10),
                       std::max(report.max_deviation, fidelity_gap),
                       std::to_string(report.cases.size()) + " sweep cases, n_max=" + std::to_string(n_max)};
}

inline RunReport run_verification(std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.mode = "verification";
    report.suites.push_back(suite_chain_complex(seed));
    report.suites.push_back(suite_dirac_square(seed + 1));
    report.suites.push_back(suite_distance_operator(seed + 2));
    report.suites.push_back(suite_grover_closed_form());
    report.suites.push_back(suite_trotter_convergence());
    report.suites.push_back(suite_appendix_gates());
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline nlohmann::json appendix_report_json(const AppendixReport& report, double tol) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases)
        cases.push_back({{"t_pr", c.t_pr},
                         {"pairs", c.pair_count},
                         {"max_deviation", c.max_deviation},
                         {"min_ancilla_fidelity", c.min_ancilla_fidelity}});
    return nlohmann::json{{"passed", report.passed(tol)},
                          {"tolerance", tol},
                          {"max_deviation", report.max_deviation},
                          {"min_ancilla_fidelity", report.min_ancilla_fidelity},
                          {"cases", cases}};
}

}  // namespace cvtda
