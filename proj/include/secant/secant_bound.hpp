#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "secant/errors.hpp"
#include "secant/momentum.hpp"
#include "secant/numerics.hpp"
#include "secant/radial_solver.hpp"

namespace secant {

enum class PotentialFamily { oscillator, linear, power };

inline const char* family_name(PotentialFamily f) {
    switch (f) {
        case PotentialFamily::oscillator: return "oscillator";
        case PotentialFamily::linear: return "linear";
        case PotentialFamily::power: return "power";
    }
    return "?";
}

// H = sqrt(m^2 + p^2) + c r^P with P > 0 (P = 2 oscillator, P = 1 linear).
struct ProblemSpec {
    double mass = 1.0;
    double coupling = 1.0;
    PotentialFamily family = PotentialFamily::oscillator;
    double power = 2.0;

    double exponent() const {
        switch (family) {
            case PotentialFamily::oscillator: return 2.0;
            case PotentialFamily::linear: return 1.0;
            case PotentialFamily::power: return power;
        }
        return power;
    }

    void validate() const {
        if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0");
        if (!(coupling > 0.0)) throw std::invalid_argument("coupling must be > 0");
        if (mass < 1e-3)
            throw MassTooSmall("the secant recipe degenerates for masses below 1e-3");
        if (family == PotentialFamily::power && !(power > 0.0))
            throw std::invalid_argument(
                "potential exponent must be > 0 (Coulomb-like potentials unsupported)");
    }
};

struct BoundCertification {
    CertificationReport comparison;                         // phi^(s) side
    std::optional<CertificationReport> semirelativistic;    // phi side, oscillator only
    WChecks w;
};

struct BoundReport {
    double m = 0.0;
    double c = 0.0;
    PotentialFamily family = PotentialFamily::oscillator;
    double power = 2.0;
    double alpha = 0.0;  // intercept of the secant, fixed to m
    double beta = 0.0;
    std::optional<double> gamma;
    double E_lower = 0.0;
    std::optional<double> E_reference;
    double k_cross = 0.0;
    BoundCertification certification;
};

// g(x) = Int_{-inf}^{inf} (x + t^2)^{1/2} e^{-t^2} t^2 dt
inline double eval_g(double x, const QuadratureSpec& spec = {}) {
    if (!(x >= 0.0)) throw std::invalid_argument("eval_g: x must be >= 0");
    auto f = [x](double t) { return std::sqrt(x + t * t) * t * t * std::exp(-t * t); };
    return integrate(f, -infinity, infinity, spec).value;
}

namespace detail {

inline double recipe_residual(double gamma, double m, double c, const QuadratureSpec& spec) {
    const double root_pi = std::sqrt(std::acos(-1.0));
    const double denom = (2.0 / (gamma * root_pi)) * eval_g(gamma * gamma, spec) - 1.0;
    return 6.0 * c * gamma * gamma / denom - m * m * m;
}

}  // namespace detail

// Solve m^3 = 6 c gamma^2 / ((2/(gamma sqrt(pi))) g(gamma^2) - 1) for gamma > 0.
// The bracket grows geometrically from [1e-3, 1]; the bracket is then scanned
// and any second sign change is reported as MultipleRoots rather than picked.
inline double solve_gamma(double m, double c, const QuadratureSpec& qspec = {},
                          const RootSpec& rspec = {}) {
    if (!(m > 0.0) || !(c > 0.0)) throw std::invalid_argument("solve_gamma: m, c must be > 0");
    if (m < 1e-3) throw MassTooSmall("solve_gamma: mass below 1e-3");
    auto F = [&](double g) { return detail::recipe_residual(g, m, c, qspec); };

    double lo = 1e-3, hi = 1.0;
    int grow = 0;
    while (F(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e6 || ++grow > 60)
            throw NonConvergence("solve_gamma: no sign change up to gamma = 1e6");
    }
    grow = 0;
    while (F(lo) > 0.0) {
        lo *= 0.25;
        if (lo < 1e-12 || ++grow > 60)
            throw NonConvergence("solve_gamma: no sign change down to gamma = 1e-12");
    }

    const int ladder = 64;
    const double ratio = std::pow(hi / lo, 1.0 / ladder);
    double seg_lo = lo, seg_hi = 0.0;
    double f_prev = F(lo);
    int changes = 0;
    double g = lo;
    for (int i = 1; i <= ladder; ++i) {
        const double g_next = (i == ladder) ? hi : lo * std::pow(ratio, i);
        const double f_next = F(g_next);
        if ((f_prev < 0.0 && f_next >= 0.0) || (f_prev > 0.0 && f_next <= 0.0)) {
            if (++changes == 1) {
                seg_lo = g;
                seg_hi = g_next;
            }
        }
        g = g_next;
        f_prev = f_next;
    }
    if (changes > 1)
        throw MultipleRoots("solve_gamma: the recipe shows " + std::to_string(changes) +
                            " sign changes; gamma is not uniquely determined");
    if (changes == 0)
        throw NonConvergence("solve_gamma: bracket scan lost the sign change");

    RootSpec rs = rspec;
    rs.f_tol = std::min(rs.f_tol, 1e-9 * m * m * m);
    return find_root(F, seg_lo, seg_hi, rs);
}

// Second crossing of sqrt(m^2+k^2) and m + beta k^2: k* = sqrt(1-2m beta)/beta.
inline double crossing_point(double m, double beta) {
    if (!(m > 0.0)) throw std::invalid_argument("crossing_point: m must be > 0");
    if (!(beta > 0.0) || !(beta < 0.5 / m))
        throw InvalidBeta("crossing_point: beta must lie in (0, 1/(2m))");
    return std::sqrt(1.0 - 2.0 * m * beta) / beta;
}

struct BoundOptions {
    int n_points = 4000;     // baseline radial grid
    double tol_scale = 1.0;  // multiplies the default tolerances
    bool certify = true;
};

namespace detail {

inline QuadratureSpec scaled_quadrature(const BoundOptions& opts) {
    QuadratureSpec q;
    q.abs_tol *= opts.tol_scale;
    q.rel_tol *= opts.tol_scale;
    return q;
}

inline RootSpec scaled_root(const BoundOptions& opts) {
    RootSpec r;
    r.x_tol *= opts.tol_scale;
    r.f_tol *= opts.tol_scale;
    return r;
}

// Solve the momentum-space eigenequation -c phi'' + sqrt(m^2+k^2) phi = E phi
// (the oscillator problem as seen from momentum space).
inline ConvergedSolution momentum_oscillator_equation(double m, double c,
                                                      const BoundOptions& opts) {
    DomainOptions dom;
    dom.n_points = opts.n_points;
    return eigenvalue_converged_auto(
        c, [m](double k) { return std::sqrt(m * m + k * k); }, dom, scaled_root(opts));
}

inline WChecks certified_w(double m, double beta, const MomentumWavefunction& phi_s) {
    return check_w_profile(w_profile(m, beta, phi_s));
}

}  // namespace detail

// Closed oscillator recipe: gamma from the g-equation, beta = 4 c gamma^4 / m^4,
// E_lower = m + 3 sqrt(beta c). Certification compares the exact Gaussian
// comparison wavefunction with the momentum-space oscillator eigenfunction.
inline BoundReport oscillator_bound(double m, double c, const BoundOptions& opts = {}) {
    ProblemSpec ps{m, c, PotentialFamily::oscillator, 2.0};
    ps.validate();

    const QuadratureSpec qspec = detail::scaled_quadrature(opts);
    const double gamma = solve_gamma(m, c, qspec, detail::scaled_root(opts));
    const double beta = 4.0 * c * gamma * gamma * gamma * gamma / (m * m * m * m);

    BoundReport rep;
    rep.m = m;
    rep.c = c;
    rep.family = PotentialFamily::oscillator;
    rep.power = 2.0;
    rep.alpha = m;
    rep.beta = beta;
    rep.gamma = gamma;
    rep.E_lower = m + 3.0 * std::sqrt(beta * c);
    rep.k_cross = crossing_point(m, beta);

    if (opts.certify) {
        auto conv = detail::momentum_oscillator_equation(m, c, opts);
        auto phi = momentum_from_radial(conv.solution);
        rep.certification.semirelativistic = certify_hypotheses(phi);

        auto phi_s = gaussian_wavefunction(std::sqrt(beta / c),
                                           make_k_grid(conv.solution.r_max));
        rep.certification.comparison = certify_hypotheses(phi_s);
        rep.certification.w = detail::certified_w(m, beta, phi_s);
    }
    return rep;
}

// General confining power path: one unit-problem solve, exact scaling of its
// transform per trial slope, and a bracketed root find on W(inf) over
// (0, 1/(2m)).
inline BoundReport general_power_bound(double m, double c, double P,
                                       const BoundOptions& opts = {}) {
    ProblemSpec ps{m, c, PotentialFamily::power, P};
    ps.validate();

    DomainOptions dom;
    dom.n_points = opts.n_points;
    dom.tail_threshold = 1e-13;   // transforms need a clean exponential tail
    dom.points_per_unit = 1200.0; // keeps k_max * h below the aliasing limit
    auto conv = eigenvalue_converged_auto(
        1.0, [P](double r) { return std::pow(r, P); }, dom, detail::scaled_root(opts));
    const double e1 = conv.report.extrapolated;
    auto phi1 = sine_transform(conv.solution, make_k_grid(conv.solution.r_max));

    auto scale_of = [&](double beta) { return std::pow(beta / c, 1.0 / (P + 2.0)); };
    auto w_inf = [&](double beta) {
        return eval_W(infinity, m, beta, rescale(phi1, scale_of(beta)));
    };

    const double eps = 1e-6;
    const double lo = eps / (2.0 * m);
    const double hi = (1.0 - eps) / (2.0 * m);
    RootSpec rs = detail::scaled_root(opts);
    rs.f_tol = 1e-300;  // drive the bracket all the way down
    const double beta = find_root(w_inf, lo, hi, rs);

    BoundReport rep;
    rep.m = m;
    rep.c = c;
    rep.family = (P == 1.0) ? PotentialFamily::linear
               : (P == 2.0) ? PotentialFamily::oscillator
                            : PotentialFamily::power;
    rep.power = P;
    rep.alpha = m;
    rep.beta = beta;
    rep.E_lower = m + std::pow(beta, P / (P + 2.0)) * std::pow(c, 2.0 / (P + 2.0)) * e1;
    rep.k_cross = crossing_point(m, beta);

    if (opts.certify) {
        auto phi_s = rescale(phi1, scale_of(beta));
        rep.certification.comparison = certify_hypotheses(phi_s);
        rep.certification.w = detail::certified_w(m, beta, phi_s);
        if (P == 2.0) {
            auto conv_phi = detail::momentum_oscillator_equation(m, c, opts);
            rep.certification.semirelativistic =
                certify_hypotheses(momentum_from_radial(conv_phi.solution));
        }
    }
    return rep;
}

}  // namespace secant
