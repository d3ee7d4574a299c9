#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace ccset;

namespace {

Code all_ones(int m, int n) {
    return Code(m, n, PhaseAlphabet{2}, std::vector<int>(static_cast<std::size_t>(m) * n, 0));
}

}  // namespace

TEST_CASE("pacf2d on the order-2 multiplication matrix") {
    const Code c = multiplication_matrix({2, 1, 0});
    const PacfGrid grid = pacf2d(c);
    REQUIRE(grid.at(0, 0) == std::complex<double>(4.0, 0.0));
    // frozen from the direct-sum oracle: the (1,1) shift cancels
    REQUIRE(testsup::near(testsup::pacf_oracle(c, 1, 1), {0.0, 0.0}, 1e-12));
    REQUIRE(std::abs(grid.at(1, 1)) < 1e-12);
    for (int t1 = 0; t1 < 2; ++t1)
        for (int t2 = 0; t2 < 2; ++t2)
            REQUIRE(testsup::near(grid.at(t1, t2), testsup::pacf_oracle(c, t1, t2), 1e-12));
}

TEST_CASE("pacf2d exposes the non-coprime multiplication matrix") {
    // raw phases x + 2*i*j mod 4; the constructor would reject s=2
    std::vector<int> phases(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) phases[static_cast<std::size_t>(i) * 4 + j] = (2 * i * j) % 4;
    const Code c(4, 4, PhaseAlphabet{4}, std::move(phases));
    const PacfGrid grid = pacf2d(c);
    REQUIRE(testsup::near(testsup::pacf_oracle(c, 0, 2), {16.0, 0.0}, 1e-9));
    REQUIRE(std::abs(grid.at(0, 2) - std::complex<double>(16.0, 0.0)) < 1e-9);
}

TEST_CASE("pacf grid invariants on random codes") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const int n = 1 + static_cast<int>(rng() % 8);
        const int q = 1 + static_cast<int>(rng() % 12);
        const Code c = testsup::random_code(rng, m, n, q);
        const PacfGrid grid = pacf2d(c);
        const double tol = 1e-12 * m * n;
        REQUIRE(grid.at(0, 0) == std::complex<double>(static_cast<double>(m) * n, 0.0));
        for (int t1 = 0; t1 < m; ++t1)
            for (int t2 = 0; t2 < n; ++t2) {
                REQUIRE(testsup::near(grid.at(-t1, -t2), std::conj(grid.at(t1, t2)), tol));
                // accessor wraps shifts modulo the dimensions
                REQUIRE(grid.at(t1 + m, t2 - n) == grid.at(t1, t2));
            }
        // spot-check against the oracle at a random unreduced shift
        const int t1 = static_cast<int>(rng() % (2 * m)) - m;
        const int t2 = static_cast<int>(rng() % (2 * n)) - n;
        REQUIRE(testsup::near(grid.at(t1, t2), testsup::pacf_oracle(c, t1, t2), 1e-9 * m * n));
    }
}

TEST_CASE("accf on the bundled seed codes") {
    const CodeSet seed = fixtures::example1_seed();
    REQUIRE(accf(seed[0], seed[0], 0) == std::complex<double>(12.0, 0.0));
    REQUIRE(std::abs(accf(seed[0], seed[1], 0)) < 1e-9 * 12);
    SECTION("full vector matches the direct-sum oracle") {
        const AccfVector v = aacf(seed[0]);
        for (int tau = -2; tau <= 2; ++tau)
            REQUIRE(testsup::near(v.at(tau), testsup::accf_oracle(seed[0], seed[0], tau), 1e-12));
    }
}

TEST_CASE("accf of overlapping all-ones blocks") {
    const Code a = all_ones(2, 3);
    REQUIRE(accf(a, a, 2) == std::complex<double>(2.0, 0.0));  // M*(N-|tau|)
    const AccfVector v = aacf(all_ones(1, 3));
    for (int tau = -2; tau <= 2; ++tau)
        REQUIRE(v.at(tau) == std::complex<double>(3.0 - std::abs(tau), 0.0));
}

TEST_CASE("accf argument validation") {
    const Code a = all_ones(2, 3);
    const Code b = all_ones(3, 2);
    REQUIRE_THROWS_AS(accf(a, b, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(accf(a, a, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(accf(a, a, -3), std::invalid_argument);
}

TEST_CASE("accf works across alphabets through the lcm") {
    const Code binary(1, 2, PhaseAlphabet{2}, {0, 1});
    const Code quaternary(1, 2, PhaseAlphabet{4}, {0, 1});
    // (1)(conj 1) + (-1)(conj i) = 1 + i
    REQUIRE(testsup::near(accf(binary, quaternary, 0), {1.0, 1.0}, 1e-12));
}

TEST_CASE("accf conjugate symmetry and overlap bound on random pairs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const int n = 1 + static_cast<int>(rng() % 8);
        const int q = 1 + static_cast<int>(rng() % 12);
        const Code a = testsup::random_code(rng, m, n, q);
        const Code b = testsup::random_code(rng, m, n, q);
        for (int tau = -(n - 1); tau <= n - 1; ++tau) {
            const auto fwd = accf(a, b, tau);
            REQUIRE(testsup::near(accf(a, b, -tau), std::conj(accf(b, a, tau)), 1e-12 * m * n));
            REQUIRE(std::abs(fwd) <= m * (n - std::abs(tau)) + 1e-9);
            REQUIRE(testsup::near(fwd, testsup::accf_oracle(a, b, tau), 1e-9 * m * n));
        }
        REQUIRE(accf(a, a, 0) == std::complex<double>(static_cast<double>(m) * n, 0.0));
    }
}

TEST_CASE("block decomposition identity on the bundled example") {
    const CodeSet seed = fixtures::example1_seed();
    const MosFamily mos = fixtures::example1_mos();
    REQUIRE(accf_decomposition_check({seed[0], seed[1]}, {seed[2], seed[3]}, mos.row(0), mos.row(1)));
}

TEST_CASE("block decomposition degenerates to a scalar weight at P=1") {
    const Code c = code_from_signs("+-\n-+");
    const Sequence plus(PhaseAlphabet{2}, {0});
    const Sequence minus(PhaseAlphabet{2}, {1});
    REQUIRE(accf_decomposition_check({c}, {c}, plus, minus));
}

TEST_CASE("block decomposition holds for random instances") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 4);
        const int p = 1 + static_cast<int>(rng() % 4);
        const int q = 1 + static_cast<int>(rng() % 8);
        std::vector<Code> codes_a, codes_b;
        for (int i = 0; i < p; ++i) {
            codes_a.push_back(testsup::random_code(rng, m, n, q));
            codes_b.push_back(testsup::random_code(rng, m, n, q));
        }
        const Sequence b1 = testsup::random_sequence(rng, p, 2);
        const Sequence b2 = testsup::random_sequence(rng, p, 2);
        REQUIRE(accf_decomposition_check(codes_a, codes_b, b1, b2));
    }
}

TEST_CASE("block decomposition validates its inputs") {
    const Code c = code_from_signs("++\n--");
    const Sequence b(PhaseAlphabet{2}, {0, 1});
    REQUIRE_THROWS_AS(accf_decomposition_check({c}, {c, c}, b, b), std::invalid_argument);
    REQUIRE_THROWS_AS(accf_decomposition_check({c}, {c}, b, b), std::invalid_argument);
}
