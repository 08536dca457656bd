#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "heomq/entangle.hpp"
#include "heomq/system.hpp"
#include "heomq/trajectory.hpp"
#include "oracles.hpp"

using namespace heomq;

namespace {

Matrix4 pure(cplx a, cplx b, cplx c, cplx d) {
    Eigen::Vector4cd v(a, b, c, d);
    return DensityMatrix::from_pure(v / v.norm()).matrix();
}

Matrix4 werner(double p) {
    return p * pure(0.0, -1.0, 1.0, 0.0) + (1.0 - p) * Matrix4::Identity() / 4.0;
}

} // namespace

TEST_CASE("concurrence of standard states") {
    CHECK(concurrence(pure(0.0, -1.0, 1.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(pure(1.0, 0.0, 0.0, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(pure(1.0, 0.0, 0.0, 0.0)) == 0.0);
    CHECK(concurrence(Matrix4::Identity() / 4.0) == 0.0);
    // |+>|0>
    CHECK(concurrence(pure(1.0, 0.0, 1.0, 0.0)) < 1e-8);
    // cos a |00> + sin a |11> has C = sin 2a
    CHECK(concurrence(pure(std::cos(0.3), 0.0, 0.0, std::sin(0.3))) == doctest::Approx(std::sin(0.6)).epsilon(1e-10));

    SUBCASE("Werner states: C = max(0, (3p - 1) / 2)") {
        CHECK(concurrence(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-10));
        CHECK(oracle::wootters_bruteforce(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-10));
        CHECK(concurrence(werner(1.0 / 3.0)) < 1e-8);
        CHECK(concurrence(werner(0.2)) == 0.0);
    }
}

TEST_CASE("concurrence against the brute-force oracle on random states") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        const Matrix4 rho = oracle::random_density(rng, 1 + rep % 4);
        const double c = concurrence(rho);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-12);
        CHECK(c == doctest::Approx(oracle::wootters_bruteforce(rho)).epsilon(1e-6));
    }
}

TEST_CASE("invariance under local unitaries") {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 100; ++rep) {
        const Matrix4 rho = oracle::random_density(rng, 1 + rep % 4);
        const ComplexMatrix u = kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
        const Matrix4 rotated = u * rho * u.adjoint();
        CHECK(std::abs(concurrence(rotated) - concurrence(rho)) <= 1e-10);
    }
}

TEST_CASE("input validation and clipping") {
    Matrix4 rho = werner(0.5);
    rho(0, 0) += 1e-3;
    CHECK_THROWS_AS(concurrence(rho), std::invalid_argument);

    Matrix4 nonherm = werner(0.5);
    nonherm(0, 1) += 1e-3;
    CHECK_THROWS_AS(concurrence(nonherm), std::invalid_argument);

    // a tiny negative eigenvalue is clipped and reported
    Matrix4 slightly = Matrix4::Zero();
    slightly(0, 0) = 1.0 + 1e-9;
    slightly(1, 1) = -1e-9;
    CHECK(concurrence(slightly) == 0.0);
    CHECK(last_clipped_magnitude() == doctest::Approx(1e-9).epsilon(1e-6));
    CHECK(concurrence(werner(0.5)) > 0.0);
    CHECK(last_clipped_magnitude() == 0.0);

    Matrix4 negative = Matrix4::Zero();
    negative(0, 0) = 1.1;
    negative(1, 1) = -0.1;
    CHECK_THROWS_AS(concurrence(negative), std::invalid_argument);
    CHECK_NOTHROW(concurrence(negative, {.pos_tol = 0.2, .tol = 1e-8}));
}

TEST_CASE("entanglement of formation") {
    CHECK(entanglement_of_formation(0.0) == 0.0);
    CHECK(entanglement_of_formation(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // x = (1 + 0.8) / 2 = 0.9, h(0.9) = 0.468995593589281
    CHECK(entanglement_of_formation(0.6) == doctest::Approx(0.468995593589281).epsilon(1e-12));
    double prev = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double e = entanglement_of_formation(0.01 * i);
        CHECK(e > prev);
        prev = e;
    }
    CHECK_THROWS_AS(entanglement_of_formation(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(entanglement_of_formation(1.1), std::invalid_argument);
}

TEST_CASE("equilibrium concurrence of the exchange Hamiltonian") {
    // (sinh(2.5) - 1) / (cosh(3.75) + cosh(2.5))
    CHECK(gibbs_concurrence_closed_form(1.5, 1.0, 2.5) == doctest::Approx(0.184293).epsilon(1e-5));

    SUBCASE("closed form against Gibbs state plus Wootters") {
        for (double eps : {0.5, 1.5, 3.0})
            for (double J : {0.2, 1.0, 2.0})
                for (double beta : {0.3, 1.0, 2.5, 8.0}) {
                    const Matrix4 rho = oracle::gibbs_by_eigen(exchange_hamiltonian(eps, J), beta);
                    CHECK(gibbs_concurrence_closed_form(eps, J, beta) ==
                          doctest::Approx(oracle::wootters_bruteforce(rho)).epsilon(1e-8));
                }
    }

    SUBCASE("entangled only above beta J = asinh 1") {
        const double threshold = std::asinh(1.0);
        CHECK(gibbs_concurrence_closed_form(1.0, 1.0, 0.99 * threshold) == 0.0);
        CHECK(gibbs_concurrence_closed_form(1.0, 1.0, 1.01 * threshold) > 0.0);
        CHECK(gibbs_concurrence_closed_form(2.0, 0.5, 0.99 * threshold / 0.5) == 0.0);
        CHECK(gibbs_concurrence_closed_form(2.0, 0.5, 1.01 * threshold / 0.5) > 0.0);
    }
    CHECK_THROWS_AS(gibbs_concurrence_closed_form(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("death and revival detection") {
    const std::vector<double> t{0, 1, 2, 3, 4, 5, 6, 7, 8};

    SUBCASE("one death and one revival") {
        const std::vector<double> c{0.9, 0.4, 0.0, 0.0, 0.0, 0.1, 0.2, 0.2, 0.3};
        const auto r = detect_death_revival(t, c);
        REQUIRE(r.death_intervals.size() == 1);
        CHECK(r.death_intervals[0] == std::pair{2.0, 4.0});
        REQUIRE(r.revival_times.size() == 1);
        CHECK(r.revival_times[0] == 4.0);
    }
    SUBCASE("death without revival") {
        const std::vector<double> c{0.9, 0.4, 0.1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
        const auto r = detect_death_revival(t, c);
        REQUIRE(r.death_intervals.size() == 1);
        CHECK(r.death_intervals[0] == std::pair{3.0, 8.0});
        CHECK(r.revival_times.empty());
    }
    SUBCASE("several intervals and the tolerance") {
        const std::vector<double> c{0.0, 0.2, 5e-7, 0.1, 0.0, 2e-6, 0.3, 0.0, 0.1};
        const auto r = detect_death_revival(t, c);
        REQUIRE(r.death_intervals.size() == 4);
        CHECK(r.death_intervals[0] == std::pair{0.0, 0.0});
        CHECK(r.death_intervals[1] == std::pair{2.0, 2.0});
        CHECK(r.death_intervals[2] == std::pair{4.0, 4.0});
        CHECK(r.death_intervals[3] == std::pair{7.0, 7.0});
        CHECK(r.revival_times == std::vector<double>{0.0, 2.0, 4.0, 7.0});
    }
    SUBCASE("always entangled") {
        const std::vector<double> c(9, 0.5);
        const auto r = detect_death_revival(t, c);
        CHECK(r.death_intervals.empty());
        CHECK(r.revival_times.empty());
    }
    SUBCASE("empty and mismatched input") {
        CHECK(detect_death_revival({}, {}).death_intervals.empty());
        const std::vector<double> c{0.1, 0.2};
        CHECK_THROWS_AS(detect_death_revival(t, c), std::invalid_argument);
    }
}

TEST_CASE("trajectory samples") {
    const auto s = make_sample(0.5, werner(0.5));
    CHECK(s.t == 0.5);
    CHECK(s.C == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(s.eof == doctest::Approx(entanglement_of_formation(0.25)).epsilon(1e-12));
    CHECK(s.trace_error < 1e-15);
    CHECK(s.herm_defect == 0.0);
    CHECK(s.min_eig == doctest::Approx(0.125).epsilon(1e-12));

    Trajectory a, b;
    a.samples = {make_sample(0.0, werner(0.5)), make_sample(1.0, werner(0.8))};
    b.samples = {make_sample(0.0, werner(0.6)), make_sample(1.0, werner(0.8))};
    CHECK(concurrence_sup_diff(a, b) == doctest::Approx(0.15).epsilon(1e-9));
    b.samples[1].t = 1.5;
    CHECK_THROWS_AS(concurrence_sup_diff(a, b), std::invalid_argument);
}
