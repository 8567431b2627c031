#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "secant/secant_bound.hpp"

using namespace secant;

namespace {

double g_midpoint(double x) {
    const int n = 1'000'000;
    const double a = -12.0, b = 12.0, h = (b - a) / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = a + (i + 0.5) * h;
        acc += std::sqrt(x + t * t) * t * t * std::exp(-t * t);
    }
    return acc * h;
}

}  // namespace

TEST_CASE("g(0) = 1", "[bound]") {
    CHECK(eval_g(0.0) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("g(1) against the midpoint oracle", "[bound]") {
    const double oracle = g_midpoint(1.0);
    CHECK(eval_g(1.0) == Catch::Approx(oracle).margin(1e-9));
    CHECK(eval_g(1.0) == Catch::Approx(1.3655048541058929).margin(1e-9));
}

TEST_CASE("g(x) ~ sqrt(pi x)/2 for large x", "[bound]") {
    const double x = 1e4;
    CHECK(eval_g(x) / std::sqrt(x) ==
          Catch::Approx(std::sqrt(std::acos(-1.0)) / 2.0).epsilon(1e-3));
}

TEST_CASE("solve_gamma at m = 1 and m = 10", "[bound]") {
    // oracle: gamma = (m^4 beta / (4c))^{1/4} at the published slopes
    const double g1 = solve_gamma(1.0, 1.0);
    CHECK(g1 == Catch::Approx(std::pow(0.2506 / 4.0, 0.25)).margin(5e-4));
    CHECK(g1 == Catch::Approx(0.50032238).margin(1e-6));

    const double g10 = solve_gamma(10.0, 1.0);
    CHECK(g10 == Catch::Approx(std::pow(1e4 * 0.0475 / 4.0, 0.25)).margin(5e-3));
    CHECK(g10 == Catch::Approx(3.30116062).margin(1e-5));
}

TEST_CASE("solve_gamma reproduces the defining equation", "[bound]") {
    for (double m : {0.4, 1.0, 6.5}) {
        const double c = 1.3;
        const double gamma = solve_gamma(m, c);
        const double root_pi = std::sqrt(std::acos(-1.0));
        const double denom = (2.0 / (gamma * root_pi)) * eval_g(gamma * gamma) - 1.0;
        CHECK(6.0 * c * gamma * gamma / denom ==
              Catch::Approx(m * m * m).epsilon(1e-8));
    }
}

TEST_CASE("oscillator_bound reproduces published slopes and bounds", "[bound]") {
    BoundOptions fast;
    fast.certify = false;
    struct Row {
        double m, beta, E_s;
    } rows[] = {{1.0, 0.2506, 2.5019}, {0.1, 0.4034, 2.0055}, {5.0, 0.0879, 5.8897}};
    for (const auto& row : rows) {
        auto rep = oscillator_bound(row.m, 1.0, fast);
        CHECK(rep.beta == Catch::Approx(row.beta).margin(5e-4));
        CHECK(rep.E_lower == Catch::Approx(row.E_s).margin(5e-4));
        CHECK(rep.beta > 0.0);
        CHECK(rep.beta < 0.5 / row.m);
        CHECK(rep.alpha == row.m);
        REQUIRE(rep.gamma.has_value());
        CHECK(rep.beta ==
              Catch::Approx(4.0 * std::pow(*rep.gamma, 4.0) / std::pow(row.m, 4.0))
                  .epsilon(1e-12));
    }
}

TEST_CASE("oscillator_bound certification at m = 1", "[bound]") {
    auto rep = oscillator_bound(1.0, 1.0);
    CHECK(rep.certification.comparison.nodeless);
    CHECK(rep.certification.comparison.phi_over_k_monotone);
    REQUIRE(rep.certification.semirelativistic.has_value());
    CHECK(rep.certification.semirelativistic->nodeless);
    CHECK(rep.certification.semirelativistic->phi_over_k_monotone);
    CHECK(rep.certification.w.nonnegative);
    CHECK(rep.certification.w.unimodal);
    CHECK(rep.certification.w.w_infinity_zero);
}

TEST_CASE("general_power_bound solves the linear potential", "[bound]") {
    const double m = 2.0 * std::sqrt(2.0);
    auto rep = general_power_bound(m, 1.0, 1.0);
    CHECK(rep.beta > 0.0);
    CHECK(rep.beta < 0.5 / m);
    // regression value, cross-validated against an independent quadrature of
    // the exact Airy comparison state
    CHECK(rep.beta == Catch::Approx(0.120767).margin(1e-4));
    CHECK(rep.E_lower == Catch::Approx(3.98413).margin(3e-4));
    CHECK(rep.E_lower <= 4.080);
    CHECK(rep.certification.comparison.nodeless);
    CHECK(rep.certification.w.nonnegative);
    CHECK(rep.certification.w.unimodal);
    CHECK(rep.certification.w.w_infinity_zero);
    CHECK_FALSE(rep.certification.semirelativistic.has_value());
}

TEST_CASE("general path agrees with the closed recipe at P = 2", "[bound]") {
    BoundOptions fast;
    fast.certify = false;
    for (double m : {1.0, 10.0}) {
        auto closed = oscillator_bound(m, 1.0, fast);
        auto general = general_power_bound(m, 1.0, 2.0, fast);
        CHECK(std::abs(general.beta - closed.beta) <= 5e-4);
    }
}

TEST_CASE("scaling covariance of the P = 2 bound in the coupling", "[bound]") {
    BoundOptions fast;
    fast.certify = false;
    const double m = 1.3;
    for (double c : {0.5, 2.0}) {
        auto direct = general_power_bound(m, c, 2.0, fast);
        auto unit = general_power_bound(m * std::pow(c, -1.0 / 3.0), 1.0, 2.0, fast);
        CHECK(direct.E_lower ==
              Catch::Approx(std::pow(c, 1.0 / 3.0) * unit.E_lower).epsilon(1e-6));
    }
}

TEST_CASE("crossing_point formula vs bisection oracle", "[bound]") {
    struct Case {
        double m, beta, expect;
    } cases[] = {{1.0, 0.2506, 2.818}, {10.0, 0.0475, 4.7075}};
    for (const auto& cs : cases) {
        const double k = crossing_point(cs.m, cs.beta);
        CHECK(k == Catch::Approx(cs.expect).margin(5e-3));
        // bisection on m + beta k^2 - sqrt(m^2 + k^2) over (0+, large)
        double lo = 1e-6, hi = 1.0 / cs.beta + cs.m;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double f = cs.m + cs.beta * mid * mid - std::sqrt(cs.m * cs.m + mid * mid);
            (f < 0.0 ? lo : hi) = mid;
        }
        CHECK(k == Catch::Approx(0.5 * (lo + hi)).margin(1e-8));
    }
}

TEST_CASE("crossing point collapses at the tangent slope", "[bound]") {
    CHECK(crossing_point(1.0, 0.5 - 1e-9) < 1e-3);
    CHECK_THROWS_AS(crossing_point(1.0, 0.5), InvalidBeta);
    CHECK_THROWS_AS(crossing_point(1.0, -0.1), InvalidBeta);
    CHECK_THROWS_AS(crossing_point(2.0, 0.3), InvalidBeta);
}

TEST_CASE("quartic-region powers compute but fail certification", "[bound]") {
    // for P >= 3 the transform of the comparison state has a negative
    // algebraic far tail, so the node-free hypothesis genuinely fails and the
    // candidate bound must be reported as uncertified
    auto rep = general_power_bound(1.0, 1.0, 3.0);
    CHECK(rep.beta > 0.0);
    CHECK(rep.beta < 0.5);
    CHECK_FALSE(rep.certification.comparison.nodeless);
    CHECK_FALSE(rep.certification.w.nonnegative);
}

TEST_CASE("masses below 1e-3 are rejected on both paths", "[bound]") {
    CHECK_THROWS_AS(oscillator_bound(5e-4, 1.0), MassTooSmall);
    CHECK_THROWS_AS(general_power_bound(5e-4, 1.0, 2.0), MassTooSmall);
    CHECK_THROWS_AS(oscillator_bound(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(general_power_bound(1.0, 1.0, -1.0), std::invalid_argument);
}
