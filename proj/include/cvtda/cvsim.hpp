#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cvtda/errors.hpp"
#include "cvtda/homology.hpp"
#include "cvtda/statevector.hpp"

namespace cvtda {

// Knobs of the squeezed-qumode phase-estimation readout. The outcome density
// is a Gaussian mixture with component standard deviation 1/sqrt(2s); peaks
// separated by less than about 1/(gamma sqrt(s)) blur together.
struct PhaseEstimationParams {
    double s = 1.0;       // squeezing (inverse-variance scale)
    double gamma = 1.0;   // evolution strength
    double alpha = 1.0;   // spectral shift
    double q_min = -1.0;  // readout grid
    double q_max = 1.0;
    double q_step = 1e-3;

    long grid_size() const {
        return static_cast<long>(std::floor((q_max - q_min) / q_step)) + 1;
    }
};

// Full symmetric eigendecomposition of the shifted Dirac operator, with the
// per-sector weight profile of every eigenvector.
struct EigenDecomposition {
    double alpha = 0.0;
    Eigen::VectorXd values;         // ascending
    Eigen::MatrixXd vectors;        // column i pairs with values[i]
    std::vector<int> offsets;       // sector offsets inherited from the operator
    Eigen::MatrixXd sector_weight;  // (i, k) = squared norm of eigenvector i inside sector k

    int dim() const { return static_cast<int>(values.size()); }
    int sectors() const { return static_cast<int>(offsets.size()) - 1; }

    // Largest |eigenvalue - alpha|: the spectral radius of the unshifted operator.
    double spectral_radius() const {
        double r = 0.0;
        for (Eigen::Index i = 0; i < values.size(); ++i) r = std::max(r, std::abs(values[i] - alpha));
        return r;
    }

    double zero_tolerance() const {
        double scale = 1.0;
        for (Eigen::Index i = 0; i < values.size(); ++i) scale = std::max(scale, std::abs(values[i]));
        return 1e-9 * scale;
    }

    // Smallest |eigenvalue - alpha| over the non-kernel spectrum; 0 if the
    // spectrum is entirely kernel.
    double min_nonzero_gap() const {
        const double tol = zero_tolerance();
        double g = 0.0;
        for (Eigen::Index i = 0; i < values.size(); ++i) {
            const double a = std::abs(values[i] - alpha);
            if (a > tol && (g == 0.0 || a < g)) g = a;
        }
        return g;
    }
};

inline EigenDecomposition eigendecompose(const Eigen::MatrixXd& matrix, double alpha,
                                         const std::vector<int>& offsets) {
    if (matrix.rows() != matrix.cols()) throw input_error("eigendecompose: matrix is not square");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw input_error("eigendecompose: matrix is not symmetric");

    Eigen::MatrixXd shifted = matrix;
    shifted.diagonal().array() += alpha;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(shifted);
    if (solver.info() != Eigen::Success) throw internal_error("eigendecompose: solver failed");

    EigenDecomposition eig;
    eig.alpha = alpha;
    eig.values = solver.eigenvalues();
    eig.vectors = solver.eigenvectors();
    eig.offsets = offsets;
    const int sectors = eig.sectors();
    eig.sector_weight = Eigen::MatrixXd::Zero(eig.dim(), std::max(sectors, 1));
    for (int i = 0; i < eig.dim(); ++i)
        for (int k = 0; k < sectors; ++k) {
            const int off = offsets[static_cast<std::size_t>(k)];
            const int len = offsets[static_cast<std::size_t>(k) + 1] - off;
            if (len > 0) eig.sector_weight(i, k) = eig.vectors.col(i).segment(off, len).squaredNorm();
        }
    return eig;
}

inline EigenDecomposition eigendecompose(const DiracOperator& op, double alpha) {
    return eigendecompose(op.dense(), alpha, op.offsets);
}

// Reproducible defaults: gamma maps the shifted spectrum into a unit-order
// readout range, s is sized so the kernel peak is separated from the nearest
// nonzero peak by 30 component widths, and the grid covers every peak with
// at least 10 points per 1/(gamma sqrt(s)).
inline PhaseEstimationParams auto_params(const EigenDecomposition& eig,
                                         double s_override = 0.0, double gamma_override = 0.0) {
    PhaseEstimationParams p;
    p.alpha = eig.alpha;
    const double radius = eig.spectral_radius();
    const double denom = eig.alpha + radius;
    p.gamma = gamma_override > 0.0 ? gamma_override : (denom > 0.0 ? 1.0 / denom : 1.0);
    double gap = eig.min_nonzero_gap();
    if (gap == 0.0) gap = 1.0;
    const double sqrt_s = 30.0 / (p.gamma * gap);
    p.s = s_override > 0.0 ? s_override : sqrt_s * sqrt_s;

    const double sigma = 1.0 / std::sqrt(2.0 * p.s);
    const double lo = p.gamma * (eig.alpha - radius) - 8.0 * sigma;
    const double hi = p.gamma * (eig.alpha + radius) + 8.0 * sigma;
    const double width = 1.0 / (p.gamma * std::sqrt(p.s));
    double step = width / 10.0;
    const double span = hi - lo;
    if (span / step > 2000000.0)
        throw input_error("auto_params: spectrum too dense for the readout grid");
    if (span / step < 200.0) step = span / 200.0;
    p.q_min = lo;
    p.q_max = hi;
    p.q_step = step;
    return p;
}

// Homodyne outcome density: a mixture of Gaussians of weight w_i centered at
// gamma * lambda_i, evaluated on the readout grid and carrying the exact
// mixture data for analytic mass integrals and sampling.
struct SpectralDistribution {
    std::vector<double> grid;
    std::vector<double> density;
    std::vector<double> weights;  // sum to 1
    std::vector<double> centers;  // gamma * lambda_i
    double s = 1.0;
    double gamma = 1.0;
    double alpha = 0.0;
};

inline SpectralDistribution mixture_distribution(std::vector<double> weights, std::vector<double> centers,
                                                 const PhaseEstimationParams& params) {
    if (weights.size() != centers.size())
        throw input_error("mixture_distribution: weights/centers size mismatch");
    SpectralDistribution dist;
    dist.s = params.s;
    dist.gamma = params.gamma;
    dist.alpha = params.alpha;
    dist.weights = std::move(weights);
    dist.centers = std::move(centers);

    const double width = 1.0 / (params.gamma * std::sqrt(params.s));
    if (params.q_step > width / 10.0 * (1.0 + 1e-12))
        throw input_error("mixture_distribution: grid step exceeds a tenth of the peak width");
    for (std::size_t i = 0; i < dist.centers.size(); ++i) {
        if (dist.weights[i] < 1e-15) continue;
        if (dist.centers[i] < params.q_min || dist.centers[i] > params.q_max)
            throw input_error("mixture_distribution: grid does not cover peak at q=" +
                              std::to_string(dist.centers[i]));
    }

    const long size = params.grid_size();
    dist.grid.resize(static_cast<std::size_t>(size));
    dist.density.assign(static_cast<std::size_t>(size), 0.0);
    const double norm = std::sqrt(params.s / std::numbers::pi);
    for (long g = 0; g < size; ++g) {
        const double q = params.q_min + static_cast<double>(g) * params.q_step;
        dist.grid[static_cast<std::size_t>(g)] = q;
        double p = 0.0;
        for (std::size_t i = 0; i < dist.centers.size(); ++i) {
            const double x = q - dist.centers[i];
            p += dist.weights[i] * norm * std::exp(-params.s * x * x);
        }
        dist.density[static_cast<std::size_t>(g)] = p;
    }
    return dist;
}

// Density for a pure state given as coefficients over the operator
// eigenbasis' underlying basis (the canonical sector ordering).
inline SpectralDistribution spectral_distribution(const EigenDecomposition& eig,
                                                  const Eigen::VectorXcd& coeffs,
                                                  const PhaseEstimationParams& params) {
    if (coeffs.size() != eig.dim())
        throw input_error("spectral_distribution: state dimension " + std::to_string(coeffs.size()) +
                          " does not match operator dimension " + std::to_string(eig.dim()) +
                          " (state must follow the canonical sector ordering)");
    const double n2 = coeffs.squaredNorm();
    if (std::abs(n2 - 1.0) > 1e-8)
        throw input_error("spectral_distribution: state is not normalized");
    std::vector<double> weights(static_cast<std::size_t>(eig.dim()));
    std::vector<double> centers(static_cast<std::size_t>(eig.dim()));
    for (int i = 0; i < eig.dim(); ++i) {
        const std::complex<double> a = eig.vectors.col(i).cast<std::complex<double>>().dot(coeffs);
        weights[static_cast<std::size_t>(i)] = std::norm(a);
        centers[static_cast<std::size_t>(i)] = params.gamma * eig.values[i];
    }
    return mixture_distribution(std::move(weights), std::move(centers), params);
}

// State restricted to the complex and reordered canonically (sector k
// ascending, word ascending inside a sector).
struct RestrictedState {
    Eigen::VectorXcd coeffs;  // normalized
    double kept_mass = 0.0;   // squared norm retained by the restriction
};

inline RestrictedState restrict_to_complex(const TaggedState& state, const VietorisRipsComplex& vr,
                                           const std::vector<int>& offsets) {
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(offsets.back());
    for (int k = 0; k <= vr.kmax(); ++k) {
        const auto& level = vr.sets[static_cast<std::size_t>(k)];
        for (std::size_t idx = 0; idx < level.size(); ++idx) {
            const std::uint32_t y = level[idx].word;
            if (state.reg[y] == k)
                coeffs[offsets[static_cast<std::size_t>(k)] + static_cast<long>(idx)] = state.amp[y];
        }
    }
    const double kept = coeffs.squaredNorm();
    if (kept <= 0.0) throw input_error("restrict_to_complex: state has no support on the complex");
    coeffs /= std::sqrt(kept);
    return RestrictedState{std::move(coeffs), kept};
}

// Ideal uniform state over S_k, embedded at the sector's canonical offsets.
inline Eigen::VectorXcd sector_uniform_coeffs(const VietorisRipsComplex& vr, int k,
                                              const std::vector<int>& offsets) {
    const int count = vr.count(k);
    if (count == 0) throw input_error("sector_uniform_coeffs: sector " + std::to_string(k) + " is empty");
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(offsets.back());
    const double a = 1.0 / std::sqrt(static_cast<double>(count));
    for (int idx = 0; idx < count; ++idx)
        coeffs[offsets[static_cast<std::size_t>(k)] + idx] = std::complex<double>(a, 0.0);
    return coeffs;
}

enum class EstimationMode { pure, mixed };

inline std::string to_string(EstimationMode mode) { return mode == EstimationMode::pure ? "pure" : "mixed"; }

// Conditional outcome density given that the sector register read k.
// - pure: the sector state is the uniform superposition over S_k, so the
//   component weights are |<e_i|Psi_k>|^2.
// - mixed: the sector state is maximally mixed over S_k, so the weights are
//   ||P_k e_i||^2 / |S_k|; the kernel window mass is then exactly
//   beta_k / |S_k|.
inline SpectralDistribution conditional_distribution(const EigenDecomposition& eig,
                                                     const VietorisRipsComplex& vr, int k,
                                                     const PhaseEstimationParams& params,
                                                     EstimationMode mode) {
    const int count = vr.count(k);
    if (count == 0) throw input_error("conditional_distribution: sector " + std::to_string(k) + " is empty");
    if (mode == EstimationMode::pure)
        return spectral_distribution(eig, sector_uniform_coeffs(vr, k, eig.offsets), params);
    std::vector<double> weights(static_cast<std::size_t>(eig.dim()));
    std::vector<double> centers(static_cast<std::size_t>(eig.dim()));
    for (int i = 0; i < eig.dim(); ++i) {
        weights[static_cast<std::size_t>(i)] = eig.sector_weight(i, k) / static_cast<double>(count);
        centers[static_cast<std::size_t>(i)] = params.gamma * eig.values[i];
    }
    return mixture_distribution(std::move(weights), std::move(centers), params);
}

// Exact mixture mass inside [center - halfwidth, center + halfwidth].
inline double window_mass(const SpectralDistribution& dist, double center, double halfwidth) {
    const double r = std::sqrt(dist.s);
    double mass = 0.0;
    for (std::size_t i = 0; i < dist.centers.size(); ++i) {
        const double hi = std::erf(r * (center + halfwidth - dist.centers[i]));
        const double lo = std::erf(r * (center - halfwidth - dist.centers[i]));
        mass += dist.weights[i] * 0.5 * (hi - lo);
    }
    return mass;
}

// I.i.d. homodyne samples from the mixture: component i with probability
// w_i, then a Gaussian of standard deviation 1/sqrt(2s) around its center.
// Box-Muller on a seeded mt19937_64 keeps the stream platform-independent.
inline std::vector<double> sample_homodyne(const SpectralDistribution& dist, int count, std::uint64_t seed) {
    if (count < 1) throw input_error("sample_homodyne: sample count must be >= 1");
    std::vector<double> cumulative(dist.weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.weights.size(); ++i) {
        acc += dist.weights[i];
        cumulative[i] = acc;
    }
    std::mt19937_64 rng(seed);
    const auto uniform01 = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    };
    const double sigma = 1.0 / std::sqrt(2.0 * dist.s);
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double u = uniform01() * acc;
        const std::size_t comp = static_cast<std::size_t>(
            std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        const std::size_t c = std::min(comp, cumulative.size() - 1);
        const double z = std::sqrt(-2.0 * std::log(uniform01())) * std::cos(2.0 * std::numbers::pi * uniform01());
        samples.push_back(dist.centers[c] + sigma * z);
    }
    return samples;
}

struct BettiEstimate {
    int k = 0;
    double epsilon = 0.0;
    EstimationMode mode = EstimationMode::mixed;
    double mass = 0.0;      // probability mass inside the kernel window
    double estimate = 0.0;  // mass * |S_k|
    double window = 0.0;    // halfwidth used, in readout units
    long set_size = 0;
    bool resolution_warning = false;
};

// Betti estimate from the kernel-window mass of the conditional density.
// window <= 0 selects the default quarter of the smallest nonzero gap. In
// mixed mode the estimate converges to beta_k; in pure mode it estimates
// <Psi_k|P_ker|Psi_k> * |S_k|, which is reported for comparison and need not
// match beta_k.
inline BettiEstimate estimate_betti(const EigenDecomposition& eig, const VietorisRipsComplex& vr, int k,
                                    const PhaseEstimationParams& params, EstimationMode mode,
                                    double window = 0.0) {
    BettiEstimate out;
    out.k = k;
    out.epsilon = vr.epsilon;
    out.mode = mode;
    out.set_size = vr.count(k);
    double gap = eig.min_nonzero_gap();
    if (gap == 0.0) gap = 1.0;
    out.window = window > 0.0 ? window : 0.25 * params.gamma * gap;
    if (out.set_size == 0) return out;

    const SpectralDistribution dist = conditional_distribution(eig, vr, k, params, mode);
    const double center = params.gamma * params.alpha;
    out.mass = window_mass(dist, center, out.window);
    out.estimate = out.mass * static_cast<double>(out.set_size);

    const double tol = eig.zero_tolerance();
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double a = std::abs(eig.values[i] - eig.alpha);
        if (a > tol && params.gamma * a <= out.window) {
            out.resolution_warning = true;
            break;
        }
    }
    return out;
}

// Window-count estimator over homodyne samples.
inline double estimate_from_samples(const std::vector<double>& samples, double center, double halfwidth,
                                    long set_size) {
    if (samples.empty()) throw input_error("estimate_from_samples: no samples");
    long hits = 0;
    for (const double q : samples)
        if (q >= center - halfwidth && q <= center + halfwidth) ++hits;
    return static_cast<double>(hits) / static_cast<double>(samples.size()) * static_cast<double>(set_size);
}

namespace detail {

inline void check_density_matrix(const Eigen::MatrixXcd& rho, const char* who) {
    if (rho.rows() != rho.cols()) throw input_error(std::string(who) + ": density matrix is not square");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw input_error(std::string(who) + ": density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
        throw input_error(std::string(who) + ": density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10)
        throw input_error(std::string(who) + ": density matrix is not positive semidefinite");
}

}  // namespace detail

// One operator-exponentiation step: conjugates rho (x) rho_aux by the exact
// swap exponential exp(i delta_t p_r S) and traces out the auxiliary factor.
// S^2 = I, so the exponential is cos(theta) I + i sin(theta) S exactly.
inline Eigen::MatrixXcd exp_swap_step(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& rho_aux,
                                      double p_r, double delta_t) {
    detail::check_density_matrix(rho, "exp_swap_step(rho)");
    detail::check_density_matrix(rho_aux, "exp_swap_step(rho_aux)");
    if (rho.rows() != rho_aux.rows()) throw input_error("exp_swap_step: dimension mismatch");

    const long d = rho.rows();
    const long dd = d * d;
    const std::complex<double> c(std::cos(p_r * delta_t), 0.0);
    const std::complex<double> is(0.0, std::sin(p_r * delta_t));

    Eigen::MatrixXcd joint(dd, dd);
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
            for (long a2 = 0; a2 < d; ++a2)
                for (long b2 = 0; b2 < d; ++b2)
                    joint(a * d + b, a2 * d + b2) = rho(a, a2) * rho_aux(b, b2);

    const auto swapped = [d](long x) { return (x % d) * d + (x / d); };
    Eigen::MatrixXcd left(dd, dd);
    for (long x = 0; x < dd; ++x) left.row(x) = c * joint.row(x) + is * joint.row(swapped(x));
    Eigen::MatrixXcd conj(dd, dd);
    for (long y = 0; y < dd; ++y) conj.col(y) = std::conj(c) * left.col(y) - is * left.col(swapped(y));

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
            for (long t = 0; t < d; ++t) out(a, b) += conj(a * d + t, b * d + t);
    return out;
}

// Repeated exponential-swap steps against rho_aux = A / tr(A), run
// t / (delta_t tr(A)) times. The per-step swap angle carries a tr(A)^2
// factor so that the step count above integrates to the conjugation by
// exp(i t p_r A); the leading error is O(delta_t).
inline Eigen::MatrixXcd trotterized_evolution(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& gen,
                                              double p_r, double total_t, double delta_t) {
    if (delta_t <= 0.0) throw input_error("trotterized_evolution: delta_t must be positive");
    if (gen.rows() != gen.cols() || gen.rows() != rho.rows())
        throw input_error("trotterized_evolution: generator dimension mismatch");
    if ((gen - gen.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw input_error("trotterized_evolution: generator is not Hermitian");
    const double tr = gen.trace().real();
    if (std::abs(tr) < 1e-12)
        throw input_error("trotterized_evolution: generator is traceless; regularize by adding alpha*I first");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gen, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10)
        throw input_error("trotterized_evolution: generator must be positive semidefinite");

    const Eigen::MatrixXcd rho_aux = gen / tr;
    const long steps = std::max<long>(1, std::llround(total_t / (delta_t * tr)));
    const double step_dt = delta_t * tr * tr;
    Eigen::MatrixXcd state = rho;
    for (long i = 0; i < steps; ++i) state = exp_swap_step(state, rho_aux, p_r, step_dt);
    return state;
}

inline void write_distribution_tsv(std::ostream& out, const SpectralDistribution& dist) {
    out << "q\tP\n";
    for (std::size_t i = 0; i < dist.grid.size(); ++i)
        out << dist.grid[i] << "\t" << dist.density[i] << "\n";
}

}  // namespace cvtda
