#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cptlab/noise.hpp"
#include "cptlab/quadrature.hpp"
#include "test_support.hpp"

using namespace cptlab;

namespace {

CorrelationModel exp_model(double c0, double tau_c) {
    CorrelationModel m;
    m.c0 = c0;
    m.tau_c = tau_c;
    return m;
}

} // namespace

TEST_CASE("correlation closed forms") {
    const CorrelationModel m = exp_model(1.0, 5.0);
    CHECK(correlation(m, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(correlation(m, 5.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(correlation(m, -5.0) == correlation(m, 5.0));  // stationarity
}

TEST_CASE("spectral density closed forms") {
    const CorrelationModel m = exp_model(1.0, 1.0);
    CHECK(spectral_density(m, 0.0) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
    CHECK(spectral_density(m, 1.0) ==
          doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("spectral density matches quadrature of the Fourier integral") {
    // Oracle: adaptive quadrature of (1/pi) * int_0^{50 tau_c} C(tau) cos(w tau) dtau
    // (the integrand is even, so the two-sided transform folds onto [0, inf)).
    auto rng = testing::make_rng(21);
    for (int k = 0; k < 25; ++k) {
        const double c0 = testing::log_uniform(rng, 0.1, 3.0);
        const double tau_c = testing::log_uniform(rng, 0.05, 10.0);
        const double omega = testing::uniform(rng, -4.0 / tau_c, 4.0 / tau_c);
        const CorrelationModel m = exp_model(c0, tau_c);
        const double numeric = adaptive_simpson(
            [&](double tau) { return correlation(m, tau) * std::cos(omega * tau); }, 0.0,
            50.0 * tau_c, 1e-12 * c0 * c0 * tau_c) / std::numbers::pi;
        CHECK(spectral_density(m, omega) == doctest::Approx(numeric).epsilon(1e-8));
    }
}

TEST_CASE("spectral density is a valid even power spectrum with pi*S(0) = alpha") {
    auto rng = testing::make_rng(22);
    for (int k = 0; k < 50; ++k) {
        const double c0 = testing::log_uniform(rng, 0.1, 3.0);
        const double tau_c = testing::log_uniform(rng, 0.05, 10.0);
        const double omega = testing::uniform(rng, -100.0, 100.0);
        const CorrelationModel m = exp_model(c0, tau_c);
        CHECK(spectral_density(m, omega) >= 0.0);
        CHECK(spectral_density(m, -omega) == spectral_density(m, omega));
        const double alpha = markov_strength(m, 1.0).alpha();
        CHECK(std::numbers::pi * spectral_density(m, 0.0) ==
              doctest::Approx(alpha).epsilon(1e-10));
    }
}

TEST_CASE("alpha_t closed form") {
    const CorrelationModel m = exp_model(1.0, 5.0);
    CHECK(alpha_t(m, 0.0) == 0.0);
    CHECK(alpha_t(m, 5.0) == doctest::Approx(5.0 * (1.0 - std::exp(-1.0))).epsilon(1e-12));
    CHECK(alpha_t(m, 100.0) == doctest::Approx(5.0).epsilon(1e-8));
    CHECK_THROWS_AS(alpha_t(m, -1.0), std::invalid_argument);
}

TEST_CASE("alpha_t agrees with trapezoidal quadrature of C") {
    auto rng = testing::make_rng(23);
    for (int k = 0; k < 10; ++k) {
        const double c0 = testing::log_uniform(rng, 0.2, 2.0);
        const double tau_c = testing::log_uniform(rng, 0.1, 5.0);
        const double t = testing::log_uniform(rng, 0.01, 10.0) * tau_c;
        const CorrelationModel m = exp_model(c0, tau_c);
        const int n = 100000;
        const double h = t / n;
        double acc = 0.5 * (correlation(m, 0.0) + correlation(m, t));
        for (int j = 1; j < n; ++j) acc += correlation(m, j * h);
        acc *= h;
        CHECK(alpha_t(m, t) == doctest::Approx(acc).epsilon(1e-8));
    }
}

TEST_CASE("alpha_t is bounded by the Markovian strength") {
    auto rng = testing::make_rng(24);
    const CorrelationModel m = exp_model(0.7, 2.5);
    const double alpha = markov_strength(m, 1.0).alpha();
    for (int k = 0; k < 100; ++k) {
        const double t = testing::log_uniform(rng, 1e-4, 1e3);
        CHECK(alpha_t(m, t) < alpha);
        if (k > 0) {
            const double earlier = alpha_t(m, t * 0.5);
            CHECK(alpha_t(m, t) >= earlier);  // monotone nondecreasing
        }
    }
}

TEST_CASE("markov strength reproduces the fast/slow bath timescales") {
    // gamma_e * c0 = 1 MHz in both regimes.
    const NoiseStrength fast = markov_strength(exp_model(1.0, 0.01), 1.0);
    CHECK(fast.tau2() == doctest::Approx(100.0).epsilon(1e-12));
    const NoiseStrength slow = markov_strength(exp_model(1.0, 5.0), 1.0);
    CHECK(slow.tau2() == doctest::Approx(0.2).epsilon(1e-12));

    SUBCASE("c0 = 0 yields the explicit noiseless variant") {
        const NoiseStrength none = markov_strength(exp_model(0.0, 1.0), 1.0);
        CHECK(none.is_noiseless());
        CHECK(none.alpha() == 0.0);
        CHECK_THROWS_AS(none.tau2(), std::logic_error);
    }
}

TEST_CASE("NoiseStrength invariant alpha * gamma_e^2 * tau2 = 1") {
    auto rng = testing::make_rng(25);
    for (int k = 0; k < 100; ++k) {
        const double gamma_e = testing::log_uniform(rng, 0.1, 10.0);
        const double tau2 = testing::log_uniform(rng, 0.1, 1e4);
        const NoiseStrength s = NoiseStrength::from_tau2(tau2, gamma_e);
        CHECK(s.alpha() * gamma_e * gamma_e * s.tau2() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("model_from_tau2 inverts markov_strength") {
    SUBCASE("Fig.-2-style inverse: tau2 = 100 us, tau_c = 0.01 us gives gamma_e*c0 = 1 MHz") {
        const CorrelationModel m = model_from_tau2(100.0, 0.01, 1.0);
        CHECK(m.c0 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(markov_strength(m, 1.0).tau2() == doctest::Approx(100.0).epsilon(1e-12));
    }
    SUBCASE("c0 = 1/sqrt(3) at tau2 = 300 us, tau_c = 0.01 us, gamma_e = 1") {
        // Verified by the markov_strength round trip below.
        const CorrelationModel m = model_from_tau2(300.0, 0.01, 1.0);
        CHECK(m.c0 * std::sqrt(3.0 * 0.01) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(markov_strength(m, 1.0).tau2() == doctest::Approx(300.0).epsilon(1e-12));
    }
    SUBCASE("round trip over random draws") {
        auto rng = testing::make_rng(26);
        for (int k = 0; k < 50; ++k) {
            const double tau2 = testing::log_uniform(rng, 0.1, 1e4);
            const double tau_c = testing::log_uniform(rng, 1e-3, 10.0);
            const double gamma_e = testing::log_uniform(rng, 0.1, 10.0);
            const CorrelationModel m = model_from_tau2(tau2, tau_c, gamma_e);
            CHECK(markov_strength(m, gamma_e).tau2() ==
                  doctest::Approx(tau2).epsilon(1e-12));
        }
    }
    SUBCASE("nonpositive inputs throw") {
        CHECK_THROWS_AS(model_from_tau2(0.0, 1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(model_from_tau2(1.0, -1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(model_from_tau2(1.0, 1.0, 0.0), std::invalid_argument);
    }
}
