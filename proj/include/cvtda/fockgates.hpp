#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cvtda/errors.hpp"

namespace cvtda {

// Truncated multimode Fock space: each mode holds 0..n_max photons. Mode 0
// is the most significant digit of the basis index.
struct FockSpace {
    int mode_count = 0;
    int n_max = 1;

    FockSpace(int modes, int nmax) : mode_count(modes), n_max(nmax) {
        if (modes < 1 || nmax < 1) throw input_error("FockSpace: need modes >= 1 and n_max >= 1");
        long d = 1;
        for (int m = 0; m < modes; ++m) {
            d *= nmax + 1;
            if (d > (1L << 22)) throw input_error("FockSpace: dimension too large");
        }
        dim_ = d;
    }

    long dim() const { return dim_; }

    long stride(int mode) const {
        long s = 1;
        for (int m = mode + 1; m < mode_count; ++m) s *= n_max + 1;
        return s;
    }

    int occupation(long index, int mode) const {
        return static_cast<int>((index / stride(mode)) % (n_max + 1));
    }

private:
    long dim_ = 0;
};

// Dual-rail qubit: logical |0> = one photon in mode a, |1> = one photon in
// mode b. Qubit q uses modes (2q, 2q+1); the ancilla pair comes last.
struct DualRailQubit {
    int a = 0;
    int b = 1;
};

inline DualRailQubit dual_rail_qubit(int q) { return DualRailQubit{2 * q, 2 * q + 1}; }

namespace fock_detail {

inline Eigen::MatrixXcd annihilation(int n_max) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline Eigen::MatrixXcd creation(int n_max) { return annihilation(n_max).adjoint(); }

inline Eigen::MatrixXcd number(int n_max) {
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int i = 0; i <= n_max; ++i) n(i, i) = static_cast<double>(i);
    return n;
}

inline Eigen::MatrixXcd kron_all(const std::vector<Eigen::MatrixXcd>& factors) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (const auto& f : factors) {
        Eigen::MatrixXcd next(out.rows() * f.rows(), out.cols() * f.cols());
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            for (Eigen::Index j = 0; j < out.cols(); ++j)
                next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = out(i, j) * f;
        out = std::move(next);
    }
    return out;
}

inline void require_distinct_modes(const std::vector<int>& modes, const FockSpace& space, const char* who) {
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (modes[i] < 0 || modes[i] >= space.mode_count)
            throw input_error(std::string(who) + ": mode index out of range");
        for (std::size_t j = i + 1; j < modes.size(); ++j)
            if (modes[i] == modes[j]) throw input_error(std::string(who) + ": aliasing, modes overlap");
    }
}

}  // namespace fock_detail

// A unitary supported on a subset of modes; modes[0] is the most significant
// digit of the subset index.
struct SubsetGate {
    std::vector<int> modes;
    Eigen::MatrixXcd u;
    std::string label;
};

inline long subset_dim(const FockSpace& space, const SubsetGate& gate) {
    long d = 1;
    for (std::size_t i = 0; i < gate.modes.size(); ++i) d *= space.n_max + 1;
    return d;
}

inline void apply_in_place(const FockSpace& space, const SubsetGate& gate, Eigen::VectorXcd& state) {
    fock_detail::require_distinct_modes(gate.modes, space, "apply_in_place");
    const long sdim = subset_dim(space, gate);
    if (gate.u.rows() != sdim || gate.u.cols() != sdim)
        throw input_error("apply_in_place: gate matrix does not match its mode subset");

    std::vector<long> offsets(static_cast<std::size_t>(sdim), 0);
    for (long t = 0; t < sdim; ++t) {
        long rem = t;
        long off = 0;
        for (std::size_t j = gate.modes.size(); j-- > 0;) {
            off += (rem % (space.n_max + 1)) * space.stride(gate.modes[j]);
            rem /= space.n_max + 1;
        }
        offsets[static_cast<std::size_t>(t)] = off;
    }

    // row-sparse product: most assembled gates are identity plus a small block
    std::vector<std::vector<std::pair<long, std::complex<double>>>> rows(static_cast<std::size_t>(sdim));
    for (long r = 0; r < sdim; ++r)
        for (long c = 0; c < sdim; ++c)
            if (gate.u(r, c) != std::complex<double>(0.0, 0.0)) rows[static_cast<std::size_t>(r)].emplace_back(c, gate.u(r, c));

    // fiber bases = every configuration of the complement modes
    std::vector<long> rest_strides;
    for (int m = 0; m < space.mode_count; ++m) {
        bool in_subset = false;
        for (const int g : gate.modes)
            if (g == m) { in_subset = true; break; }
        if (!in_subset) rest_strides.push_back(space.stride(m));
    }
    long rest_dim = 1;
    for (std::size_t i = 0; i < rest_strides.size(); ++i) rest_dim *= space.n_max + 1;

    Eigen::VectorXcd fiber(sdim);
    for (long rest = 0; rest < rest_dim; ++rest) {
        long base = 0;
        long rem = rest;
        for (std::size_t j = rest_strides.size(); j-- > 0;) {
            base += (rem % (space.n_max + 1)) * rest_strides[j];
            rem /= space.n_max + 1;
        }
        for (long t = 0; t < sdim; ++t) fiber[t] = state[base + offsets[static_cast<std::size_t>(t)]];
        for (long r = 0; r < sdim; ++r) {
            std::complex<double> acc(0.0, 0.0);
            for (const auto& [c, v] : rows[static_cast<std::size_t>(r)]) acc += v * fiber[c];
            state[base + offsets[static_cast<std::size_t>(r)]] = acc;
        }
    }
}

// Full-space unitary with a label and the parameter it was built from.
struct GateMatrix {
    std::string label;
    double parameter = 0.0;
    Eigen::MatrixXcd u;
};

inline GateMatrix embed(const FockSpace& space, const SubsetGate& gate, double parameter = 0.0) {
    const long sdim = subset_dim(space, gate);
    std::vector<long> offsets(static_cast<std::size_t>(sdim), 0);
    for (long t = 0; t < sdim; ++t) {
        long rem = t;
        long off = 0;
        for (std::size_t j = gate.modes.size(); j-- > 0;) {
            off += (rem % (space.n_max + 1)) * space.stride(gate.modes[j]);
            rem /= space.n_max + 1;
        }
        offsets[static_cast<std::size_t>(t)] = off;
    }
    if (space.dim() > 4096) throw input_error("embed: full matrix too large; use apply_in_place");
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(space.dim(), space.dim());
    for (long base = 0; base < space.dim(); ++base) {
        bool is_base = true;
        for (const int m : gate.modes)
            if (space.occupation(base, m) != 0) { is_base = false; break; }
        if (!is_base) continue;
        for (long r = 0; r < sdim; ++r)
            for (long c = 0; c < sdim; ++c)
                full(base + offsets[static_cast<std::size_t>(r)], base + offsets[static_cast<std::size_t>(c)]) =
                    gate.u(r, c);
    }
    return GateMatrix{gate.label, parameter, std::move(full)};
}

enum class PauliAxis { X, Y, Z };

// Controlled rotation on dual-rail qubits, built from its mode generator:
//   X: exp(i theta n_{b_c} (a_t^+ b_t + a_t b_t^+))
//   Y: exp(  theta n_{b_c} (a_t^+ b_t - a_t b_t^+))   (anti-Hermitian as printed)
//   Z: exp(i theta n_{b_c} (n_{a_t} - n_{b_t}))
// Restricted to the computational subspace these are (I+Z)/2 on the control-0
// block and exp(i theta sigma) on the control-1 block.
inline SubsetGate cr_subset(PauliAxis axis, double theta, DualRailQubit control, DualRailQubit target,
                            const FockSpace& space) {
    fock_detail::require_distinct_modes({control.a, control.b, target.a, target.b}, space, "cr_gate");
    const int nm = space.n_max;
    const auto n = fock_detail::number(nm);
    const auto cr = fock_detail::creation(nm);
    const auto an = fock_detail::annihilation(nm);
    const auto id = Eigen::MatrixXcd::Identity(nm + 1, nm + 1);
    const std::complex<double> i1(0.0, 1.0);

    Eigen::MatrixXcd exponent;
    switch (axis) {
        case PauliAxis::X:
            exponent = i1 * theta *
                       (fock_detail::kron_all({n, cr, an}) + fock_detail::kron_all({n, an, cr}));
            break;
        case PauliAxis::Y:
            exponent = theta * (fock_detail::kron_all({n, cr, an}) - fock_detail::kron_all({n, an, cr}));
            break;
        case PauliAxis::Z:
            exponent = i1 * theta *
                       (fock_detail::kron_all({n, n, id}) - fock_detail::kron_all({n, id, n}));
            break;
    }
    SubsetGate gate;
    gate.modes = {control.b, target.a, target.b};
    gate.u = exponent.exp();
    gate.label = axis == PauliAxis::X ? "CR_X" : (axis == PauliAxis::Y ? "CR_Y" : "CR_Z");
    return gate;
}

inline GateMatrix cr_gate(PauliAxis axis, double theta, DualRailQubit control, DualRailQubit target,
                          const FockSpace& space) {
    return embed(space, cr_subset(axis, theta, control, target, space), theta);
}

namespace fock_detail {

inline long subset_index(const FockSpace& space, const std::vector<int>& occ) {
    long idx = 0;
    for (const int o : occ) idx = idx * (space.n_max + 1) + o;
    return idx;
}

// Identity except for an exact permutation (or sign) on the listed
// computational occupation patterns of the gate's own modes.
inline SubsetGate permutation_gate(const FockSpace& space, std::vector<int> modes,
                                   const std::vector<std::pair<std::vector<int>, std::vector<int>>>& swaps,
                                   std::string label) {
    require_distinct_modes(modes, space, label.c_str());
    long sdim = 1;
    for (std::size_t i = 0; i < modes.size(); ++i) sdim *= space.n_max + 1;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(sdim, sdim);
    for (const auto& [from, to] : swaps) {
        const long f = subset_index(space, from);
        const long t = subset_index(space, to);
        u(f, f) = 0.0;
        u(t, t) = 0.0;
        u(t, f) = 1.0;
        u(f, t) = 1.0;
    }
    return SubsetGate{std::move(modes), std::move(u), std::move(label)};
}

}  // namespace fock_detail

// Exact CNOT on the dual-rail subspace, extended by the identity elsewhere.
// (The CR_X(pi/2) rotation reproduces it only up to a conditional phase i,
// which would break the swap composition below.)
inline SubsetGate cnot_subset(DualRailQubit control, DualRailQubit target, const FockSpace& space) {
    return fock_detail::permutation_gate(space, {control.a, control.b, target.a, target.b},
                                         {{{0, 1, 1, 0}, {0, 1, 0, 1}}}, "CNOT");
}

inline GateMatrix cnot_gate(DualRailQubit control, DualRailQubit target, const FockSpace& space) {
    return embed(space, cnot_subset(control, target, space));
}

// Exact CZ on the dual-rail subspace.
inline SubsetGate cz_subset(DualRailQubit i, DualRailQubit j, const FockSpace& space) {
    std::vector<int> modes{i.a, i.b, j.a, j.b};
    fock_detail::require_distinct_modes(modes, space, "cz_gate");
    long sdim = 1;
    for (std::size_t m = 0; m < modes.size(); ++m) sdim *= space.n_max + 1;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(sdim, sdim);
    const long both_one = fock_detail::subset_index(space, {0, 1, 0, 1});
    u(both_one, both_one) = -1.0;
    return SubsetGate{std::move(modes), std::move(u), "CZ"};
}

inline GateMatrix cz_gate(DualRailQubit i, DualRailQubit j, const FockSpace& space) {
    return embed(space, cz_subset(i, j, space));
}

// Exact Toffoli on the dual-rail subspace, extended by the identity.
inline SubsetGate ccnot_subset(DualRailQubit c1, DualRailQubit c2, DualRailQubit target,
                               const FockSpace& space) {
    return fock_detail::permutation_gate(space, {c1.a, c1.b, c2.a, c2.b, target.a, target.b},
                                         {{{0, 1, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}}}, "CCNOT");
}

inline GateMatrix ccnot_gate(DualRailQubit c1, DualRailQubit c2, DualRailQubit target,
                             const FockSpace& space) {
    return embed(space, ccnot_subset(c1, c2, target, space));
}

// Dual-rail Z as the mode-b parity (-1)^{n_b}.
inline SubsetGate pauli_z_subset(DualRailQubit q, const FockSpace& space) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(space.n_max + 1, space.n_max + 1);
    for (int n = 1; n <= space.n_max; n += 2) u(n, n) = -1.0;
    return SubsetGate{{q.b}, std::move(u), "Z"};
}

inline GateMatrix pauli_z_gate(DualRailQubit q, const FockSpace& space) {
    return embed(space, pauli_z_subset(q, space));
}

// Resource-conditioned rotation exp(i t (n_a - n_b)) on one mode pair,
// diagonal in the Fock basis.
inline SubsetGate quadrature_phase_subset(double t, DualRailQubit q, const FockSpace& space) {
    const int nm = space.n_max;
    const long sdim = static_cast<long>(nm + 1) * (nm + 1);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(sdim, sdim);
    for (int na = 0; na <= nm; ++na)
        for (int nb = 0; nb <= nm; ++nb) {
            const long idx = static_cast<long>(na) * (nm + 1) + nb;
            u(idx, idx) = std::exp(std::complex<double>(0.0, t * (na - nb)));
        }
    return SubsetGate{{q.a, q.b}, std::move(u), "exp(i t (n_a - n_b))"};
}

inline GateMatrix quadrature_phase_gate(double t, DualRailQubit q, const FockSpace& space) {
    return embed(space, quadrature_phase_subset(t, q, space), t);
}

// SWAP from CZ by conjugation: U = CNOT_{ji} CR_Y(-pi/4); the rotation sign
// follows the circuit ordering and makes the composition the exact SWAP on
// the computational subspace.
inline GateMatrix swap_via_cz(DualRailQubit i, DualRailQubit j, const FockSpace& space) {
    const GateMatrix cn = cnot_gate(j, i, space);
    const GateMatrix ry = cr_gate(PauliAxis::Y, -std::numbers::pi / 4.0, i, j, space);
    const Eigen::MatrixXcd u = cn.u * ry.u;
    const GateMatrix cz = cz_gate(i, j, space);
    return GateMatrix{"SWAP", 0.0, u * cz.u * u.adjoint()};
}

// CZ via an ancilla qubit: CCNOT . Z_A . CCNOT acts as CZ_{ij} (x) I_A on
// computational states with the ancilla prepared in |0>_A, and returns the
// ancilla to |0>_A exactly.
inline GateMatrix cz_via_ancilla(DualRailQubit i, DualRailQubit j, DualRailQubit ancilla,
                                 const FockSpace& space) {
    const GateMatrix toffoli = ccnot_gate(i, j, ancilla, space);
    const GateMatrix z = pauli_z_gate(ancilla, space);
    return GateMatrix{"CZ_via_ancilla", 0.0, toffoli.u * z.u * toffoli.u};
}

// Gate sequence applied front to back; materialization is limited to small
// spaces, larger ones go through apply().
struct FockCircuit {
    FockSpace space;
    std::vector<SubsetGate> gates;

    Eigen::VectorXcd apply(Eigen::VectorXcd state) const {
        for (const auto& g : gates) apply_in_place(space, g, state);
        return state;
    }

    Eigen::MatrixXcd to_matrix() const {
        if (space.dim() > 4096) throw input_error("FockCircuit::to_matrix: space too large");
        Eigen::MatrixXcd full(space.dim(), space.dim());
        for (long c = 0; c < space.dim(); ++c) {
            Eigen::VectorXcd e = Eigen::VectorXcd::Zero(space.dim());
            e[c] = 1.0;
            full.col(c) = apply(std::move(e));
        }
        return full;
    }
};

// Exponential conditional swap circuit: for each pair, CNOT and CR_Y(pi/4)
// rotate SWAP into CZ form, Toffolis accumulate the pair condition on the
// ancilla, the ancilla picks up exp(i t p_r (n_a - n_b)), and everything is
// uncomputed. Acting on computational states (x) |0>_A this equals
// cos(t p_r) I + i sin(t p_r) S with S the product of pair swaps.
inline FockCircuit exp_cond_swap(double t_pr, const std::vector<std::pair<DualRailQubit, DualRailQubit>>& pairs,
                                 DualRailQubit ancilla, const FockSpace& space) {
    std::vector<int> all_modes{ancilla.a, ancilla.b};
    for (const auto& [qi, qj] : pairs) {
        all_modes.push_back(qi.a);
        all_modes.push_back(qi.b);
        all_modes.push_back(qj.a);
        all_modes.push_back(qj.b);
    }
    fock_detail::require_distinct_modes(all_modes, space, "exp_cond_swap");

    const double quarter = std::numbers::pi / 4.0;
    FockCircuit circuit{space, {}};
    for (const auto& [qi, qj] : pairs) {
        circuit.gates.push_back(cnot_subset(qj, qi, space));
        circuit.gates.push_back(cr_subset(PauliAxis::Y, quarter, qi, qj, space));
    }
    for (const auto& [qi, qj] : pairs) circuit.gates.push_back(ccnot_subset(qi, qj, ancilla, space));
    circuit.gates.push_back(quadrature_phase_subset(t_pr, ancilla, space));
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
        circuit.gates.push_back(ccnot_subset(it->first, it->second, ancilla, space));
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        circuit.gates.push_back(cr_subset(PauliAxis::Y, -quarter, it->first, it->second, space));
        circuit.gates.push_back(cnot_subset(it->second, it->first, space));
    }
    return circuit;
}

// Fock index of a logical computational state: bit 0 of `bits` is the LAST
// qubit in `qubits` (qubits[0] is the most significant logical bit). All
// modes outside the listed qubits stay in vacuum.
inline long computational_index(const FockSpace& space, const std::vector<DualRailQubit>& qubits,
                                unsigned bits) {
    long idx = 0;
    for (std::size_t q = 0; q < qubits.size(); ++q) {
        const unsigned bit = (bits >> (qubits.size() - 1 - q)) & 1u;
        idx += (bit ? 0L : 1L) * space.stride(qubits[q].a);
        idx += (bit ? 1L : 0L) * space.stride(qubits[q].b);
    }
    return idx;
}

inline std::vector<long> computational_indices(const FockSpace& space,
                                               const std::vector<DualRailQubit>& qubits) {
    std::vector<long> out;
    out.reserve(1uL << qubits.size());
    for (unsigned bits = 0; bits < (1u << qubits.size()); ++bits)
        out.push_back(computational_index(space, qubits, bits));
    return out;
}

// Operator norm of the block that maps the computational subspace (every
// adjacent mode pair holding exactly one photon) outside itself.
inline double leakage_check(const GateMatrix& gate, const FockSpace& space) {
    if (space.mode_count % 2 != 0) throw input_error("leakage_check: odd mode count");
    std::vector<DualRailQubit> qubits;
    for (int q = 0; q < space.mode_count / 2; ++q) qubits.push_back(dual_rail_qubit(q));
    const std::vector<long> comp = computational_indices(space, qubits);

    Eigen::MatrixXcd block(space.dim(), static_cast<long>(comp.size()));
    for (std::size_t c = 0; c < comp.size(); ++c) block.col(static_cast<long>(c)) = gate.u.col(comp[c]);
    for (const long r : comp) block.row(r).setZero();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block);
    return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()[0];
}

// One sweep case of the conditional-swap identity check.
struct AppendixCase {
    double t_pr = 0.0;
    int pair_count = 1;
    double max_deviation = 0.0;       // entrywise, against cos I + i sin S on the block
    double min_ancilla_fidelity = 1.0;  // <0_A| rho_A |0_A> over all inputs
};

struct AppendixReport {
    std::vector<AppendixCase> cases;
    double max_deviation = 0.0;
    double min_ancilla_fidelity = 1.0;

    bool passed(double tol) const {
        return max_deviation <= tol && min_ancilla_fidelity >= 1.0 - tol;
    }
};

// Runs the conditional-swap circuit over computational inputs (x) |0>_A and
// compares against the spectral form of exp(i t p_r S).
inline AppendixCase run_appendix_case(double t_pr, int pair_count, int n_max) {
    const int qubit_count = 2 * pair_count;
    const FockSpace space(2 * (qubit_count + 1), n_max);
    std::vector<DualRailQubit> qubits;
    for (int q = 0; q < qubit_count; ++q) qubits.push_back(dual_rail_qubit(q));
    const DualRailQubit ancilla = dual_rail_qubit(qubit_count);

    std::vector<std::pair<DualRailQubit, DualRailQubit>> pairs;
    for (int p = 0; p < pair_count; ++p)
        pairs.emplace_back(qubits[static_cast<std::size_t>(2 * p)], qubits[static_cast<std::size_t>(2 * p + 1)]);
    const FockCircuit circuit = exp_cond_swap(t_pr, pairs, ancilla, space);

    // S swaps the two logical bits of every pair.
    const auto swap_bits = [&](unsigned bits) {
        unsigned out = 0;
        for (int p = 0; p < pair_count; ++p) {
            const unsigned hi = (bits >> (qubit_count - 1 - 2 * p)) & 1u;
            const unsigned lo = (bits >> (qubit_count - 2 - 2 * p)) & 1u;
            out |= lo << (qubit_count - 1 - 2 * p);
            out |= hi << (qubit_count - 2 - 2 * p);
        }
        return out;
    };

    std::vector<DualRailQubit> all_qubits = qubits;
    all_qubits.push_back(ancilla);
    const unsigned logical_dim = 1u << qubit_count;
    const std::complex<double> c(std::cos(t_pr), 0.0);
    const std::complex<double> is(0.0, std::sin(t_pr));

    AppendixCase result{t_pr, pair_count, 0.0, 1.0};
    for (unsigned bits = 0; bits < logical_dim; ++bits) {
        Eigen::VectorXcd input = Eigen::VectorXcd::Zero(space.dim());
        input[computational_index(space, all_qubits, bits << 1)] = 1.0;  // ancilla bit 0 = |0>_A
        const Eigen::VectorXcd out = circuit.apply(std::move(input));

        Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(space.dim());
        expected[computational_index(space, all_qubits, bits << 1)] += c;
        expected[computational_index(space, all_qubits, swap_bits(bits) << 1)] += is;
        result.max_deviation = std::max(result.max_deviation, (out - expected).cwiseAbs().maxCoeff());

        // probability of finding the ancilla pair back in |0>_A = |10>
        double fid = 0.0;
        for (long idx = 0; idx < space.dim(); ++idx)
            if (space.occupation(idx, ancilla.a) == 1 && space.occupation(idx, ancilla.b) == 0)
                fid += std::norm(out[idx]);
        result.min_ancilla_fidelity = std::min(result.min_ancilla_fidelity, fid);
    }
    return result;
}

inline AppendixReport run_appendix_sweep(const std::vector<double>& t_values,
                                         const std::vector<int>& pair_counts, int n_max) {
    AppendixReport report;
    for (const int pairs : pair_counts)
        for (const double t : t_values) {
            report.cases.push_back(run_appendix_case(t, pairs, n_max));
            report.max_deviation = std::max(report.max_deviation, report.cases.back().max_deviation);
            report.min_ancilla_fidelity =
                std::min(report.min_ancilla_fidelity, report.cases.back().min_ancilla_fidelity);
        }
    return report;
}

}  // namespace cvtda
