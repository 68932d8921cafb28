#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>

#include "cvtda/statevector.hpp"
#include "oracles.hpp"

using namespace cvtda;

TEST_CASE("uniform_state", "[statevector]") {
    const QuantumState one = uniform_state(1);
    REQUIRE_THAT(one.amp[0].real(), Catch::Matchers::WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    REQUIRE_THAT(one.amp[1].real(), Catch::Matchers::WithinAbs(1.0 / std::sqrt(2.0), 1e-15));

    const QuantumState two = uniform_state(2);
    for (long y = 0; y < 4; ++y) REQUIRE_THAT(two.amp[y].real(), Catch::Matchers::WithinAbs(0.5, 1e-15));

    REQUIRE_THAT(uniform_state(10).norm(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THROWS_AS(uniform_state(0), input_error);
    REQUIRE_THROWS_AS(uniform_state(21), input_error);
}

TEST_CASE("oracle_phase_flip", "[statevector]") {
    const PointCloud cloud = oracle::circle_cloud(3);
    const DistanceMatrix dist = pairwise_sq_distances(cloud);

    SECTION("empty target leaves the state untouched") {
        const VietorisRipsComplex vr = enumerate_vr(dist, 0.0, 2);  // no edges
        const QuantumState state = uniform_state(3);
        const QuantumState out = oracle_phase_flip(state, vr, 1);
        REQUIRE((out.amp - state.amp).norm() == 0.0);
    }
    SECTION("marking everything is a global phase") {
        const VietorisRipsComplex vr = enumerate_vr(dist, 2.0, 2);
        QuantumState state = uniform_state(3);
        state = oracle_phase_flip(std::move(state), vr.sets[0]);
        state = oracle_phase_flip(std::move(state), vr.sets[1]);
        state = oracle_phase_flip(std::move(state), vr.sets[2]);
        QuantumState flipped_zero = oracle_phase_flip(std::move(state), {SimplexBits{0}});
        const QuantumState reference = uniform_state(3);
        REQUIRE((flipped_zero.amp + reference.amp).norm() < 1e-14);
    }
    SECTION("single marked word flips only its amplitude") {
        std::vector<SimplexBits> marked{SimplexBits{0b011}};
        const QuantumState out = oracle_phase_flip(uniform_state(3), marked);
        for (long y = 0; y < 8; ++y) {
            const double expected = (y == 3) ? -1.0 : 1.0;
            REQUIRE_THAT(out.amp[y].real(), Catch::Matchers::WithinAbs(expected / std::sqrt(8.0), 1e-15));
        }
    }
    SECTION("involution") {
        std::mt19937_64 rng(149);
        const PointCloud cloud8 = oracle::random_cloud(rng, 8, 3, true);
        const VietorisRipsComplex vr = enumerate_vr(pairwise_sq_distances(cloud8), 1.1, 7);
        const QuantumState state = uniform_state(8);
        const QuantumState twice = oracle_phase_flip(oracle_phase_flip(state, vr, 1), vr, 1);
        REQUIRE((twice.amp - state.amp).norm() == 0.0);
    }
}

TEST_CASE("grover_amplify", "[statevector]") {
    SECTION("all marked: zero auto iterations, state unchanged") {
        std::vector<SimplexBits> marked;
        for (std::uint32_t w = 0; w < 8; ++w) marked.push_back(SimplexBits{w});
        REQUIRE(grover_auto_iterations(3, 8) == 0);
        const QuantumState out = grover_amplify(uniform_state(3), marked);
        REQUIRE_THAT(marked_mass(out, marked), Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
    SECTION("n=3, M=1, r=2 reaches 0.9453125") {
        // closed form sin^2(5 asin(sqrt(1/8))) = 0.9453125, reproduced by the
        // 8-amplitude iteration
        std::vector<SimplexBits> marked{SimplexBits{0b101}};
        const QuantumState out = grover_amplify(uniform_state(3), marked, 2);
        REQUIRE_THAT(marked_mass(out, marked), Catch::Matchers::WithinAbs(0.9453125, 1e-12));
        REQUIRE_THAT(oracle::grover_closed_form(3, 1, 2), Catch::Matchers::WithinAbs(0.9453125, 1e-12));
    }
    SECTION("n=4, M=1, r=3 reaches about 0.9613") {
        std::vector<SimplexBits> marked{SimplexBits{0b0100}};
        const QuantumState out = grover_amplify(uniform_state(4), marked, 3);
        REQUIRE_THAT(marked_mass(out, marked),
                     Catch::Matchers::WithinAbs(oracle::grover_closed_form(4, 1, 3), 1e-12));
        REQUIRE_THAT(marked_mass(out, marked), Catch::Matchers::WithinAbs(0.9613, 5e-4));
    }
    SECTION("closed form across n, M, r") {
        for (int n = 2; n <= 6; ++n)
            for (long m = 1; m <= (1L << n); m *= 2) {
                std::vector<SimplexBits> marked;
                for (long w = 0; w < m; ++w) marked.push_back(SimplexBits{static_cast<std::uint32_t>(w)});
                QuantumState state = uniform_state(n);
                for (int r = 0; r <= 12; ++r) {
                    if (r > 0) state = grover_amplify(std::move(state), marked, 1);
                    REQUIRE_THAT(marked_mass(state, marked),
                                 Catch::Matchers::WithinAbs(oracle::grover_closed_form(n, m, r), 1e-10));
                }
            }
    }
    SECTION("auto iterations reach at least 1 - M/N") {
        for (int n = 2; n <= 8; ++n)
            for (long m = 1; m <= (1L << n); m = m * 3 + 1) {
                std::vector<SimplexBits> marked;
                for (long w = 0; w < m; ++w) marked.push_back(SimplexBits{static_cast<std::uint32_t>(w)});
                const QuantumState out = grover_amplify(uniform_state(n), marked);
                const double mass = marked_mass(out, marked);
                const double floor_bound = 1.0 - static_cast<double>(m) / static_cast<double>(1L << n);
                REQUIRE(mass >= floor_bound - 1e-12);
            }
    }
    SECTION("norm preserved per iteration") {
        std::vector<SimplexBits> marked{SimplexBits{1}, SimplexBits{6}, SimplexBits{9}};
        QuantumState state = uniform_state(4);
        for (int r = 0; r < 25; ++r) {
            state = grover_amplify(std::move(state), marked, 1);
            REQUIRE_THAT(state.norm(), Catch::Matchers::WithinAbs(1.0, 1e-12));
        }
    }
    SECTION("empty target") {
        REQUIRE_THROWS_AS(grover_amplify(uniform_state(3), std::vector<SimplexBits>{}), input_error);
    }
}

TEST_CASE("tag_sectors", "[statevector]") {
    SECTION("single bit maps to register 0") {
        const TaggedState tagged = tag_sectors(uniform_state(4));
        REQUIRE(tagged.reg[0b0001] == 0);
        REQUIRE(tagged.reg[0b0111] == 2);
        REQUIRE(tagged.reg[0] == 3);  // wraps to n-1
    }
    SECTION("uniform 3-qubit register tally (3/8, 3/8, 2/8 with y=0 in the last)") {
        const TaggedState tagged = tag_sectors(uniform_state(3));
        double w0 = tagged.sector_weight(0), w1 = tagged.sector_weight(1), w2 = tagged.sector_weight(2);
        REQUIRE_THAT(w0, Catch::Matchers::WithinAbs(3.0 / 8.0, 1e-12));
        REQUIRE_THAT(w1, Catch::Matchers::WithinAbs(3.0 / 8.0, 1e-12));
        REQUIRE_THAT(w2, Catch::Matchers::WithinAbs(2.0 / 8.0, 1e-12));  // k=2 plus the y=0 wrap
        REQUIRE_THAT(std::norm(tagged.amp[0]), Catch::Matchers::WithinAbs(1.0 / 8.0, 1e-12));
    }
    SECTION("circuit tagging equals direct popcount for all basis states") {
        for (int n = 1; n <= 12; ++n) {
            const TaggedState tagged = tag_sectors(uniform_state(n));
            for (long y = 0; y < (1L << n); ++y) {
                const int expected = (std::popcount(static_cast<std::uint64_t>(y)) + n - 1) % n;
                REQUIRE(tagged.reg[static_cast<std::size_t>(y)] == expected);
            }
        }
    }
}

TEST_CASE("build_initial_state", "[statevector]") {
    SECTION("n=2 sector weights are 1/2") {
        const TaggedState init = build_initial_state(2);
        REQUIRE_THAT(init.sector_weight(0), Catch::Matchers::WithinAbs(0.5, 1e-12));
        REQUIRE_THAT(init.sector_weight(1), Catch::Matchers::WithinAbs(0.5, 1e-12));
        REQUIRE(std::norm(init.amp[0]) == 0.0);
    }
    SECTION("n=3 edge amplitudes are 1/3") {
        const TaggedState init = build_initial_state(3);
        for (const long y : {0b011L, 0b101L, 0b110L})
            REQUIRE_THAT(std::abs(init.amp[y]), Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-12));
    }
    SECTION("every sector weighs 1/n") {
        for (int n = 2; n <= 10; ++n) {
            const TaggedState init = build_initial_state(n);
            for (int k = 0; k < n; ++k)
                REQUIRE_THAT(init.sector_weight(k), Catch::Matchers::WithinAbs(1.0 / n, 1e-12));
        }
    }
}

TEST_CASE("derive_distance_operator", "[statevector]") {
    SECTION("antipodal pair") {
        Eigen::MatrixXd coords(2, 2);
        coords << 1, 0, -1, 0;
        const DistanceProtocolResult result = derive_distance_operator(PointCloud{coords});
        REQUIRE_THAT(result.sq(0, 1), Catch::Matchers::WithinAbs(4.0, 1e-12));
        REQUIRE_THAT(result.sq(1, 0), Catch::Matchers::WithinAbs(4.0, 1e-12));
        REQUIRE(result.sq(0, 0) == 0.0);
    }
    SECTION("identical points give the zero operator and zero postselection mass") {
        Eigen::MatrixXd coords(3, 2);
        coords << 1, 0, 1, 0, 1, 0;
        const DistanceProtocolResult result = derive_distance_operator(PointCloud{coords});
        REQUIRE(result.sq.cwiseAbs().maxCoeff() == 0.0);
        REQUIRE(result.postselect_probability == 0.0);
    }
    SECTION("matches the inner-product expansion on random clouds") {
        std::mt19937_64 rng(151);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 5);
            const int d = 2 + static_cast<int>(rng() % 4);
            const PointCloud cloud = oracle::random_cloud(rng, n, d, trial % 2 == 0);
            const DistanceProtocolResult result = derive_distance_operator(cloud);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    // independent route: |v_i|^2 + |v_j|^2 - 2 v_i . v_j
                    const double expected = cloud.coords.row(i).squaredNorm() +
                                            cloud.coords.row(j).squaredNorm() -
                                            2.0 * cloud.coords.row(i).dot(cloud.coords.row(j));
                    REQUIRE_THAT(result.sq(i, j), Catch::Matchers::WithinAbs(expected, 1e-10));
                }
            REQUIRE(result.postselect_probability >= 0.0);
            REQUIRE(result.postselect_probability <= 1.0);
        }
    }
}

TEST_CASE("state_to_json", "[statevector]") {
    const nlohmann::json j = state_to_json(uniform_state(2));
    REQUIRE(j.size() == 4);
    REQUIRE_THAT(j[0][0].get<double>(), Catch::Matchers::WithinAbs(0.5, 1e-15));
    QuantumState big;
    big.n = 13;
    big.amp = Eigen::VectorXcd::Zero(1L << 13);
    REQUIRE_THROWS_AS(state_to_json(big), input_error);
}
