#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "secant/errors.hpp"
#include "secant/radial_solver.hpp"

namespace secant {

enum class ReferenceMethod { duality_solve, cited_value, asymptote };

inline const char* reference_method_name(ReferenceMethod m) {
    switch (m) {
        case ReferenceMethod::duality_solve: return "duality_solve";
        case ReferenceMethod::cited_value: return "cited_value";
        case ReferenceMethod::asymptote: return "asymptote";
    }
    return "?";
}

struct ReferenceResult {
    double E = 0.0;
    ReferenceMethod method = ReferenceMethod::duality_solve;
    std::optional<double> epsilon2;
    std::optional<GridReport> grid;
};

// The single cited accurate eigenvalue for sqrt(m^2+p^2) + r, at m = 2 sqrt 2.
inline constexpr double linear_reference_mass = 2.8284271247461903;
inline constexpr double linear_reference_energy = 4.080;

// Semirelativistic oscillator reference via the Fourier duality
// sqrt(m^2+p^2) + c r^2 == c p^2 + sqrt(m^2+r^2), scaled so only the unit-
// coupling function eps2(mu) is ever solved: E = c^{1/3} eps2(m c^{-1/3}).
inline ReferenceResult oscillator_reference(double m, double c, int n_points = 4000) {
    if (!(m > 0.0) || !(c > 0.0))
        throw std::invalid_argument("oscillator_reference: m, c must be > 0");
    const double mu = m * std::pow(c, -1.0 / 3.0);
    DomainOptions dom;
    dom.n_points = n_points;
    auto conv = eigenvalue_converged_auto(
        1.0, [mu](double r) { return std::sqrt(mu * mu + r * r); }, dom);
    ReferenceResult out;
    out.method = ReferenceMethod::duality_solve;
    out.epsilon2 = conv.report.extrapolated;
    out.grid = conv.report;
    out.E = std::pow(c, 1.0 / 3.0) * conv.report.extrapolated;
    return out;
}

inline ReferenceResult linear_reference(double m) {
    if (std::abs(m - linear_reference_mass) > 1e-6 * linear_reference_mass)
        throw UnsupportedMass("linear_reference: only m = 2*sqrt(2) has a cited value");
    ReferenceResult out;
    out.method = ReferenceMethod::cited_value;
    out.E = linear_reference_energy;
    return out;
}

// Large-m limit of both bounds: E -> m + 3 sqrt(c / (2m)).
inline double asymptotic_energy(double m, double c) {
    if (!(m > 0.0) || !(c > 0.0))
        throw std::invalid_argument("asymptotic_energy: m, c must be > 0");
    return m + 3.0 * std::sqrt(c / (2.0 * m));
}

}  // namespace secant
