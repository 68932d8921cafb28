#pragma once

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvtda/complex.hpp"
#include "cvtda/errors.hpp"
#include "cvtda/geometry.hpp"

namespace cvtda {

// Full n-qubit state: 2^n amplitudes indexed by bitstring.
struct QuantumState {
    int n = 0;
    Eigen::VectorXcd amp;

    long dim() const { return static_cast<long>(amp.size()); }
    double norm() const { return amp.norm(); }
};

inline QuantumState uniform_state(int n) {
    if (n < 1 || n > max_vertices)
        throw input_error("uniform_state: qubit count " + std::to_string(n) + " out of range [1, " +
                          std::to_string(max_vertices) + "]");
    const long dim = 1L << n;
    QuantumState state{n, Eigen::VectorXcd::Constant(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0))};
    return state;
}

// Phase oracle: negates the amplitude of every marked bitstring.
inline QuantumState oracle_phase_flip(QuantumState state, const std::vector<SimplexBits>& marked) {
    for (const SimplexBits s : marked) {
        if (s.word >= static_cast<std::uint32_t>(state.dim()))
            throw input_error("oracle_phase_flip: marked word out of range");
        state.amp[static_cast<long>(s.word)] = -state.amp[static_cast<long>(s.word)];
    }
    return state;
}

inline QuantumState oracle_phase_flip(QuantumState state, const VietorisRipsComplex& vr, int k) {
    if (k < 0 || k > vr.kmax()) throw input_error("oracle_phase_flip: sector k out of range");
    return oracle_phase_flip(std::move(state), vr.sets[static_cast<std::size_t>(k)]);
}

inline double marked_mass(const QuantumState& state, const std::vector<SimplexBits>& marked) {
    double mass = 0.0;
    for (const SimplexBits s : marked) mass += std::norm(state.amp[static_cast<long>(s.word)]);
    return mass;
}

inline int grover_auto_iterations(int n, long marked_count) {
    const double ratio = static_cast<double>(1L << n) / static_cast<double>(marked_count);
    return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

// Amplitude amplification from the uniform state: each round applies the
// phase oracle followed by inversion about the mean. With the automatic
// round count r = floor(pi/4 sqrt(N/M)) the marked mass reaches
// sin^2((2r+1) asin(sqrt(M/N))).
inline QuantumState grover_amplify(QuantumState state, const std::vector<SimplexBits>& marked,
                                   std::optional<int> iterations = std::nullopt) {
    if (marked.empty()) throw input_error("grover_amplify: empty target set");
    const int rounds = iterations.value_or(grover_auto_iterations(state.n, static_cast<long>(marked.size())));
    if (rounds < 0) throw input_error("grover_amplify: negative iteration count");
    for (int r = 0; r < rounds; ++r) {
        state = oracle_phase_flip(std::move(state), marked);
        const std::complex<double> mean = state.amp.mean();
        state.amp = ((2.0 * mean) - state.amp.array()).matrix();
    }
    state.amp /= state.amp.norm();
    return state;
}

inline QuantumState grover_amplify(QuantumState state, const VietorisRipsComplex& vr, int k,
                                   std::optional<int> iterations = std::nullopt) {
    if (k < 0 || k > vr.kmax()) throw input_error("grover_amplify: sector k out of range");
    return grover_amplify(std::move(state), vr.sets[static_cast<std::size_t>(k)], iterations);
}

// n-qubit state with the sector register attached. After tagging, the
// register value is a function of the bitstring, so the joint state is
// stored as one register value per bitstring.
struct TaggedState {
    int n = 0;
    int register_width = 0;
    std::vector<int> reg;  // register value per bitstring y
    Eigen::VectorXcd amp;  // amplitude per bitstring y

    double sector_weight(int k) const {
        double w = 0.0;
        for (long y = 0; y < amp.size(); ++y)
            if (reg[static_cast<std::size_t>(y)] == k) w += std::norm(amp[y]);
        return w;
    }
};

inline int register_width_for(int n) {
    int width = 0;
    while ((1 << width) < n) ++width;
    return width;
}

// Sector tagging via the register-increment circuit: starting from |0>, the
// cyclic permutation P (+1 mod n) is applied once per set data qubit, then
// inverted once unconditionally. A bitstring with k+1 set bits ends at
// register value k; the all-zeros string wraps to n-1.
inline TaggedState tag_sectors(const QuantumState& state) {
    const int n = state.n;
    TaggedState tagged{n, register_width_for(n), std::vector<int>(static_cast<std::size_t>(state.dim()), 0), state.amp};
    for (long y = 0; y < state.dim(); ++y) {
        int reg = 0;
        for (int bit = 0; bit < n; ++bit)
            if ((y >> bit) & 1L) reg = (reg + 1) % n;
        reg = (reg + n - 1) % n;
        tagged.reg[static_cast<std::size_t>(y)] = reg;
    }
    return tagged;
}

// Equal-weight superposition over sectors: weight 1/n on each register value
// k, uniform over the C(n, k+1) simplices inside the sector. Constructed by
// tagging the uniform state, postselecting away the non-simplex all-zeros
// string, and renormalizing each sector.
inline TaggedState build_initial_state(int n) {
    TaggedState tagged = tag_sectors(uniform_state(n));
    tagged.amp[0] = std::complex<double>(0.0, 0.0);  // y = 0 is not a simplex
    std::vector<double> weight(static_cast<std::size_t>(n), 0.0);
    for (long y = 1; y < tagged.amp.size(); ++y)
        weight[static_cast<std::size_t>(tagged.reg[static_cast<std::size_t>(y)])] += std::norm(tagged.amp[y]);
    const double target = 1.0 / static_cast<double>(n);
    for (long y = 1; y < tagged.amp.size(); ++y) {
        const double w = weight[static_cast<std::size_t>(tagged.reg[static_cast<std::size_t>(y)])];
        tagged.amp[y] *= std::sqrt(target / w);
    }
    return tagged;
}

// Result of the distance-operator preparation protocol: the reduced diagonal
// operator over the (i, j) register pair, entrywise |v_i - v_j|^2, plus the
// probability of the postselected X = -1 outcome on the control qubit.
struct DistanceProtocolResult {
    Eigen::MatrixXd sq;
    double postselect_probability = 0.0;
};

// Simulates the preparation chain for the distance operator: two index
// registers, a lookup of |v_i>, a controlled swap of the lookups, and an X
// measurement on the control postselected on -1, leaving the unnormalized
// data (v_i - v_j)/(2n) per (i, j). Label-copy ancillae make the reduced
// (i, j) operator diagonal; rescaling by the protocol prefactor 4n^2
// restores squared distances.
inline DistanceProtocolResult derive_distance_operator(const PointCloud& pc) {
    const int n = pc.n();
    const int d = pc.d();
    const double pref = 1.0 / (std::sqrt(2.0) * static_cast<double>(n));
    double minus_mass = 0.0;
    double total_mass = 0.0;
    Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double block = 0.0;
            for (int t = 0; t < d; ++t) {
                // control-0 branch carries v_i, control-1 branch carries v_j
                const double a0 = pref * pc.coords(i, t);
                const double a1 = pref * pc.coords(j, t);
                const double minus = (a0 - a1) / std::sqrt(2.0);
                block += minus * minus;
                total_mass += a0 * a0 + a1 * a1;
            }
            minus_mass += block;
            sq(i, j) = block * 4.0 * static_cast<double>(n) * static_cast<double>(n);
        }
    // off the unit sphere the amplitude encoding is unnormalized; divide by
    // the state norm so the postselection mass stays a probability
    const double p_minus = total_mass > 0.0 ? minus_mass / total_mass : 0.0;
    return DistanceProtocolResult{std::move(sq), p_minus};
}

// Debug export: amplitudes as (re, im) pairs. Capped where the array is
// still practical to eyeball.
inline nlohmann::json state_to_json(const QuantumState& state) {
    if (state.n > 12) throw input_error("state_to_json: export capped at 12 qubits");
    nlohmann::json arr = nlohmann::json::array();
    for (long y = 0; y < state.dim(); ++y)
        arr.push_back({state.amp[y].real(), state.amp[y].imag()});
    return arr;
}

}  // namespace cvtda
