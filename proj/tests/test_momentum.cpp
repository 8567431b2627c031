#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "secant/momentum.hpp"
#include "secant/radial_solver.hpp"

using namespace secant;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Synthetic oscillator ground state u(r) = (4/pi)^(1/4) r exp(-r^2/2).
RadialSolution synthetic_gaussian(double r_max, int n) {
    RadialSolution s;
    s.r_max = r_max;
    s.step = r_max / n;
    s.u.resize(n + 1);
    const double c = std::pow(16.0 / kPi, 0.25);
    for (int i = 0; i <= n; ++i) {
        const double r = i * s.step;
        s.u[i] = c * r * std::exp(-0.5 * r * r);
    }
    s.eigenvalue = 3.0;
    return s;
}

double exact_gaussian_phi(double k) {
    return std::pow(16.0 / kPi, 0.25) * k * std::exp(-0.5 * k * k);
}

// Independent check: 10^6-point trapezoid of sin(kr) against the linear
// interpolant of the same samples.
double trapezoid_oracle(const RadialSolution& s, double k, int n_oracle) {
    const double H = s.r_max / n_oracle;
    auto u_interp = [&](double r) {
        const double x = r / s.step;
        const std::size_t i = std::min(static_cast<std::size_t>(x), s.u.size() - 2);
        const double t = x - static_cast<double>(i);
        return (1.0 - t) * s.u[i] + t * s.u[i + 1];
    };
    double acc = 0.0;
    for (int j = 0; j <= n_oracle; ++j) {
        const double r = j * H;
        const double w = (j == 0 || j == n_oracle) ? 0.5 : 1.0;
        acc += w * std::sin(k * r) * u_interp(r);
    }
    return std::sqrt(2.0 / kPi) * acc * H;
}

MomentumWavefunction airy_phi(double tail_threshold = 1e-13) {
    DomainOptions opts;
    opts.tail_threshold = tail_threshold;
    opts.points_per_unit = 1200.0;
    auto u1 = ground_state_auto(1.0, [](double r) { return r; }, opts);
    return sine_transform(u1, make_k_grid(u1.r_max));
}

}  // namespace

TEST_CASE("sine transform reproduces the self-reciprocal Gaussian", "[momentum]") {
    auto src = synthetic_gaussian(12.0, 120000);
    for (double k : {0.3, 0.7, 1.0, 1.7, 2.5, 3.0, 4.0}) {
        CHECK(sine_transform_at(src, k) ==
              Catch::Approx(exact_gaussian_phi(k)).margin(1e-8));
    }
}

TEST_CASE("sine transform matches a trapezoid oracle on the Airy state", "[momentum]") {
    auto u1 = ground_state_auto(1.0, [](double r) { return r; });
    const double mine = sine_transform_at(u1, 1.0);
    const double oracle = trapezoid_oracle(u1, 1.0, 1'000'000);
    CHECK(mine == Catch::Approx(oracle).margin(1e-8));
}

TEST_CASE("Parseval norm is 1 for normalized inputs", "[momentum]") {
    auto phi1 = airy_phi();
    CHECK(parseval_norm(phi1) == Catch::Approx(1.0).margin(1e-6));

    auto src = synthetic_gaussian(12.0, 20000);
    auto phig = sine_transform(src, make_k_grid(12.0));
    CHECK(parseval_norm(phig) == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("transform round trip recovers the source", "[momentum]") {
    const int n = 8000;
    auto src = synthetic_gaussian(14.0, n);
    std::vector<double> kg(n + 1);
    for (int i = 0; i <= n; ++i) kg[i] = 14.0 * i / n;
    auto phi = sine_transform(src, kg);

    RadialSolution phi_as_radial;
    phi_as_radial.r_max = 14.0;
    phi_as_radial.step = 14.0 / n;
    phi_as_radial.u = phi.phi;
    double dev = 0.0;
    for (int i = 0; i <= n; i += 40) {
        const double back = sine_transform_at(phi_as_radial, src.r(i));
        dev = std::max(dev, std::abs(back - src.u[i]));
    }
    CHECK(dev < 1e-5);
}

TEST_CASE("aliased wavenumbers are rejected", "[momentum]") {
    auto src = synthetic_gaussian(10.0, 400);  // h = 0.025
    CHECK_THROWS_AS(sine_transform_at(src, 60.0), AliasedTransform);
}

TEST_CASE("tail fit identifies the Airy transform power law", "[momentum]") {
    auto phi1 = airy_phi();
    CHECK(phi1.tail.exponent == Catch::Approx(5.0).margin(0.15));
}

TEST_CASE("eval_W at k = 0 is exactly zero", "[momentum]") {
    auto phi_s = gaussian_wavefunction(0.5, make_k_grid(10.0));
    CHECK(eval_W(0.0, 1.0, 0.25, phi_s) == 0.0);
}

TEST_CASE("W(inf) vanishes at the published oscillator slope", "[momentum]") {
    const double beta = 0.25064539;  // solved slope for m = 1, c = 1
    auto phi_s = gaussian_wavefunction(std::sqrt(beta), make_k_grid(20.0));
    auto prof = w_profile(1.0, beta, phi_s);
    double wmax = 0.0;
    for (double w : prof.W) wmax = std::max(wmax, w);
    CHECK(std::abs(prof.W_infinity) <= 5e-4 * wmax);
    // the 4-digit rounded slope 0.2506 shifts W(inf) to 7.24e-4 exactly
    auto phi_s4 = gaussian_wavefunction(std::sqrt(0.2506), make_k_grid(20.0));
    CHECK(eval_W(infinity, 1.0, 0.2506, phi_s4) ==
          Catch::Approx(7.2428034e-4).epsilon(1e-4));

    auto checks = check_w_profile(prof);
    CHECK(checks.nonnegative);
    CHECK(checks.unimodal);
}

TEST_CASE("W(inf) at the tangent slope is strictly negative", "[momentum]") {
    // closed form via Gaussian moments: W = N (2/s)^{3/2} [ sqrt(2/s) g(m^2 s/2)/2
    //   - m sqrt(pi)/4 - (3 sqrt(pi)/8) beta (2/s) ],  s = sqrt(beta/c)
    const double m = 1.0, beta = 0.5;
    const double s = std::sqrt(beta);
    auto g_midpoint = [](double x) {
        const int n = 1'000'000;
        const double a = -12.0, b = 12.0, h = (b - a) / n;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = a + (i + 0.5) * h;
            acc += std::sqrt(x + t * t) * t * t * std::exp(-t * t);
        }
        return acc * h;
    };
    const double N = 2.0 * std::pow(s, 0.75) / std::pow(kPi, 0.25);
    const double A = 2.0 / s;
    const double oracle =
        N * std::pow(A, 1.5) *
        (std::sqrt(A) * g_midpoint(m * m * s / 2.0) / 2.0 -
         m * std::sqrt(kPi) / 4.0 - 3.0 * std::sqrt(kPi) / 8.0 * beta * A);

    auto phi_s = gaussian_wavefunction(s, make_k_grid(20.0));
    const double w = eval_W(infinity, m, beta, phi_s);
    CHECK(w < 0.0);
    CHECK(w == Catch::Approx(oracle).epsilon(1e-6));
    CHECK(w == Catch::Approx(-2.29570133118649).epsilon(1e-6));
}

TEST_CASE("finite-k W agrees with adaptive quadrature of the analytic integrand",
          "[momentum]") {
    const double m = 0.7, beta = 0.3, sigma = std::sqrt(beta);
    auto phi_s = gaussian_wavefunction(sigma, make_k_grid(15.0));
    const double N = 2.0 * std::pow(sigma, 0.75) / std::pow(kPi, 0.25);
    auto integrand = [&](double t) {
        return (std::sqrt(m * m + t * t) - m - beta * t * t) * N * t *
               std::exp(-0.5 * sigma * t * t) * t;
    };
    for (double k : {0.8, 2.7, 9.0}) {
        const double oracle = integrate(integrand, 0.0, k).value;
        CHECK(eval_W(k, m, beta, phi_s) == Catch::Approx(oracle).margin(1e-9));
    }
}

TEST_CASE("w_profile samples agree with eval_W at grid nodes", "[momentum]") {
    const double m = 1.0, beta = 0.25;
    auto phi_s = gaussian_wavefunction(std::sqrt(beta), make_k_grid(12.0));
    auto prof = w_profile(m, beta, phi_s);
    for (std::size_t i = 1; i < prof.k_grid.size(); i += 41)
        CHECK(prof.W[i] ==
              Catch::Approx(eval_W(prof.k_grid[i], m, beta, phi_s)).margin(1e-12));
}

TEST_CASE("divergent Coulomb-like tails are rejected", "[momentum]") {
    // phi(k) = sqrt(32/pi) k (1+k^2)^{-2}: tail exponent 3
    auto kg = make_k_grid(10.0);
    std::vector<double> phi(kg.size());
    const double A = std::sqrt(32.0 / kPi);
    for (std::size_t i = 0; i < kg.size(); ++i) {
        const double k = kg[i];
        phi[i] = A * k / ((1.0 + k * k) * (1.0 + k * k));
    }
    auto w = from_samples(kg, phi);
    CHECK(w.tail.exponent == Catch::Approx(3.0).margin(0.1));
    CHECK(parseval_norm(w) == Catch::Approx(1.0).margin(1e-4));
    CHECK_THROWS_AS(eval_W(infinity, 1.0, 0.2, w), DivergentTail);
    CHECK(eval_W(2.0, 1.0, 0.2, w) > 0.0);  // finite upper limits stay valid
}

TEST_CASE("certify_hypotheses on the exact Gaussian", "[momentum]") {
    auto phi = gaussian_wavefunction(1.0, make_k_grid(12.0));
    auto rep = certify_hypotheses(phi);
    CHECK(rep.nodeless);
    CHECK(rep.phi_over_k_monotone);
}

TEST_CASE("certify_hypotheses flags a constructed sign change", "[momentum]") {
    std::vector<double> kg;
    for (int i = 0; i <= 300; ++i) kg.push_back(3.0 * i / 300.0);
    std::vector<double> phi(kg.size());
    for (std::size_t i = 0; i < kg.size(); ++i) {
        const double k = kg[i];
        phi[i] = k * (1.0 - k) * std::exp(-k * k);
    }
    auto rep = certify_hypotheses(from_samples(kg, phi));
    CHECK_FALSE(rep.nodeless);
}

TEST_CASE("momentum oscillator equation certifies and satisfies the identity", "[momentum]") {
    // -phi'' + sqrt(1+k^2) phi = E phi: semirelativistic oscillator, m = c = 1
    const double m = 1.0;
    auto conv = eigenvalue_converged_auto(
        1.0, [m](double k) { return std::sqrt(m * m + k * k); });
    const double E = conv.report.extrapolated;
    CHECK(E == Catch::Approx(2.6640).margin(1e-3));

    auto phi = momentum_from_radial(conv.solution);
    auto rep = certify_hypotheses(phi);
    CHECK(rep.nodeless);
    CHECK(rep.phi_over_k_monotone);

    const double beta = 0.25064539;  // oscillator secant slope at m = 1
    std::vector<double> kg = phi.k_grid;
    auto phi_s = gaussian_wavefunction(std::sqrt(beta), kg);
    auto id = eval_I(phi, phi_s, m, beta);

    CHECK(id.I_direct == Catch::Approx(id.I_by_parts).epsilon(1e-6));
    CHECK(id.I_direct >= 0.0);
    const double E_s = m + 3.0 * std::sqrt(beta);
    CHECK(id.I_direct / id.overlap == Catch::Approx(E - E_s).margin(2e-3));
}

TEST_CASE("rescale is the exact scaling image", "[momentum]") {
    auto phi = gaussian_wavefunction(1.0, make_k_grid(12.0));
    const double s = 0.6;
    auto scaled = rescale(phi, s);
    CHECK(parseval_norm(scaled) == Catch::Approx(1.0).margin(1e-6));
    for (std::size_t i = 0; i < phi.k_grid.size(); i += 37) {
        CHECK(scaled.phi[i] == Catch::Approx(std::sqrt(s) * phi.phi[i]).margin(1e-15));
        CHECK(scaled.k_grid[i] == Catch::Approx(phi.k_grid[i] / s).margin(1e-15));
    }
}

TEST_CASE("rescale transforms the tail model consistently", "[momentum]") {
    // algebraic tail with known law: refitting the scaled samples must agree
    // with the propagated tail parameters
    auto kg = make_k_grid(10.0);
    std::vector<double> phi(kg.size());
    const double A = std::sqrt(32.0 / kPi);
    for (std::size_t i = 0; i < kg.size(); ++i)
        phi[i] = A * kg[i] / std::pow(1.0 + kg[i] * kg[i], 2.0);
    auto base = from_samples(kg, phi);
    for (double s : {0.4, 2.5}) {
        auto scaled = rescale(base, s);
        auto refit = from_samples(scaled.k_grid, scaled.phi);
        CHECK(refit.tail.exponent == Catch::Approx(scaled.tail.exponent).margin(1e-6));
        CHECK(refit.tail.log_amplitude ==
              Catch::Approx(scaled.tail.log_amplitude).margin(1e-4));
    }
}
