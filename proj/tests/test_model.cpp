#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cptlab/model.hpp"
#include "test_support.hpp"

using namespace cptlab;

TEST_CASE("dark state at equal Rabi frequencies is (|1> - |2>)/sqrt(2)") {
    const PureState d = dark_state(46.0, 46.0, 0.0);
    const double isq2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(d(0)) == 0.0);
    CHECK(std::abs(d(1) - Complex{isq2, 0.0}) < 1e-15);
    CHECK(std::abs(d(2) - Complex{-isq2, 0.0}) < 1e-15);
}

TEST_CASE("dark state limits") {
    SUBCASE("omega1 = 0 gives |1>") {
        const PureState d = dark_state(0.0, 10.0, 0.0);
        CHECK(std::abs(d(0)) == 0.0);
        CHECK(std::abs(d(1) - Complex{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(d(2)) < 1e-15);
    }
    SUBCASE("omega2 = 0 gives -e^{i phi}|2>") {
        const double phi = 0.7;
        const PureState d = dark_state(10.0, 0.0, phi);
        CHECK(std::abs(d(1)) < 1e-15);
        CHECK(std::abs(d(2) + std::exp(kImag * phi)) < 1e-15);
    }
    SUBCASE("degenerate drive throws") {
        CHECK_THROWS_AS(dark_state(0.0, 0.0, 0.0), std::invalid_argument);
    }
}

TEST_CASE("dark state properties over random draws") {
    auto rng = testing::make_rng(11);
    for (int k = 0; k < 200; ++k) {
        const double w1 = testing::uniform(rng, 0.0, 100.0);
        const double w2 = testing::log_uniform(rng, 1e-3, 100.0);
        const double phi = testing::uniform(rng, -3.0, 3.0);
        const PureState d = dark_state(w1, w2, phi);
        CHECK(std::abs(d(0)) == 0.0);                 // orthogonal to |0> exactly
        CHECK(std::abs(d.norm() - 1.0) < 1e-12);      // unit norm
        // depends only on the Rabi ratio
        const double c = testing::log_uniform(rng, 1e-2, 1e2);
        const PureState scaled = dark_state(c * w1, c * w2, phi);
        CHECK((d - scaled).norm() < 1e-12);
    }
}

TEST_CASE("vectorize round-trips and places components row-major") {
    SUBCASE("identity/3") {
        const DensityMatrix rho = DensityMatrix::Identity() / 3.0;
        const VectorizedState v = vectorize(rho);
        for (int k = 0; k < 9; ++k) {
            const double expected = (k == 0 || k == 4 || k == 8) ? 1.0 / 3.0 : 0.0;
            CHECK(std::abs(v(k) - expected) == 0.0);
        }
    }
    SUBCASE("|1><1| lands on the fifth component") {
        DensityMatrix rho = DensityMatrix::Zero();
        rho(1, 1) = 1.0;
        const VectorizedState v = vectorize(rho);
        for (int k = 0; k < 9; ++k) CHECK(std::abs(v(k) - (k == 4 ? 1.0 : 0.0)) == 0.0);
    }
    SUBCASE("round trip is bit-exact on random matrices") {
        auto rng = testing::make_rng(12);
        for (int k = 0; k < 100; ++k) {
            const DensityMatrix rho = testing::random_hermitian(rng);
            const DensityMatrix back = devectorize(vectorize(rho));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) CHECK(back(i, j) == rho(i, j));
        }
    }
}

TEST_CASE("validate_density reports defects") {
    SUBCASE("dark-state projector passes") {
        const DensityMatrix rho = projector(dark_state(3.0, 4.0, 0.5));
        const DensityReport report = validate_density(rho, 1e-10);
        CHECK(report.passed);
    }
    SUBCASE("trace 0.9 fails with defect 0.1") {
        DensityMatrix rho = DensityMatrix::Zero();
        rho(0, 0) = 0.3;
        rho(1, 1) = 0.3;
        rho(2, 2) = 0.3;
        const DensityReport report = validate_density(rho, 1e-10);
        CHECK_FALSE(report.passed);
        CHECK(report.trace_defect == doctest::Approx(0.1).epsilon(1e-12));
    }
    SUBCASE("negative population fails positivity") {
        DensityMatrix rho = DensityMatrix::Zero();
        rho(0, 0) = 0.5;
        rho(1, 1) = 0.6;
        rho(2, 2) = -0.1;
        const DensityReport report = validate_density(rho, 1e-10);
        CHECK_FALSE(report.passed);
        CHECK(report.min_eigenvalue == doctest::Approx(-0.1).epsilon(1e-12));
    }
}

TEST_CASE("trace distance between orthogonal pure states is 1") {
    const DensityMatrix a = projector(PureState{0.0, 1.0, 0.0});
    const DensityMatrix b = projector(PureState{0.0, 0.0, 1.0});
    CHECK(trace_distance(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trace_distance(a, a) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("grid helpers hit their endpoints exactly") {
    const auto lin = linspace(-2.0, 3.0, 11);
    CHECK(lin.front() == -2.0);
    CHECK(lin.back() == 3.0);
    CHECK(lin.size() == 11);
    const auto log = logspace(0.1, 1000.0, 9);
    CHECK(log.front() == 0.1);
    CHECK(log.back() == 1000.0);
    for (std::size_t k = 1; k < log.size(); ++k) CHECK(log[k] > log[k - 1]);
}
