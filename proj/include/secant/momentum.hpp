#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "secant/errors.hpp"
#include "secant/numerics.hpp"
#include "secant/radial_solver.hpp"

namespace secant {

// Power-law model |phi(k)| ~ exp(log_amplitude) * k^(-exponent) fitted to the
// tail of the sampled wavefunction. residual is the RMS of the log-log fit.
struct TailFit {
    double exponent = 0.0;
    double log_amplitude = 0.0;
    double residual = 0.0;
    double k_window_lo = 0.0;
    double k_window_hi = 0.0;
};

struct MomentumWavefunction {
    std::vector<double> k_grid;  // ascending, k_grid[0] == 0
    std::vector<double> phi;     // phi[0] == 0
    TailFit tail;
    std::function<double(double)> analytic;  // optional closed-form evaluator
};

struct WProfile {
    std::vector<double> k_grid;
    std::vector<double> W;  // cumulative, W[0] == 0
    double W_infinity = 0.0;
};

struct IntegralIdentity {
    double I_direct = 0.0;
    double I_by_parts = 0.0;
    double overlap = 0.0;
};

struct CertificationReport {
    bool nodeless = false;
    bool phi_over_k_monotone = false;
    double min_phi_rel = 0.0;   // most negative sample / max|phi|
    double max_slope_rel = 0.0; // largest slope of phi/k / max|phi/k|
};

struct WChecks {
    bool nonnegative = false;
    bool unimodal = false;
    bool w_infinity_zero = false;
    double w_infinity_residual = 0.0;  // |W(inf)| / max W
};

// Hybrid momentum grid: linear spacing pi/(2 r_max) up to k_linear_max, then
// geometric growth up to k_max.
inline std::vector<double> make_k_grid(double r_max, double k_linear_max = 20.0,
                                       double ratio = 1.05, double k_max = 1000.0) {
    if (!(r_max > 0.0) || !(ratio > 1.0) || !(k_max > k_linear_max))
        throw std::invalid_argument("make_k_grid: bad parameters");
    std::vector<double> ks{0.0};
    const double dk = std::acos(-1.0) / (2.0 * r_max);
    double k = 0.0;
    while (k + dk <= k_linear_max) {
        k += dk;
        ks.push_back(k);
    }
    while (k < k_max) {
        k = std::min(k * ratio, k_max);
        ks.push_back(k);
    }
    return ks;
}

namespace detail {

// Least-squares power-law fit over the last decade of clean tail samples.
// "Clean" means above the positivity floor with a locally constant sign, so
// the window ends before sign-flipping discretization noise takes over.
inline TailFit fit_tail(const std::vector<double>& kg, const std::vector<double>& phi) {
    const std::size_t n = kg.size();
    double amax = 0.0;
    for (double v : phi) amax = std::max(amax, std::abs(v));
    if (amax == 0.0) throw std::invalid_argument("fit_tail: wavefunction is identically zero");
    const double floor = amax * 1e-250;

    std::size_t ihi = n - 1;
    while (ihi > 2 && !(std::abs(phi[ihi]) > floor)) --ihi;
    auto clean = [&](std::size_t i) {
        const std::size_t lo = i >= 7 ? i - 7 : 1;
        bool pos = true, neg = true;
        for (std::size_t j = lo; j <= i; ++j) {
            pos = pos && phi[j] > 0.0;
            neg = neg && phi[j] < 0.0;
        }
        return pos || neg;
    };
    while (ihi > 10 && !clean(ihi)) --ihi;

    const double khi = kg[ihi];
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i <= ihi; ++i)
        if (kg[i] >= khi / 10.0 && std::abs(phi[i]) > floor) idx.push_back(i);
    if (idx.size() < 6) {
        idx.clear();
        for (std::size_t i = ihi; i >= 1 && idx.size() < 12; --i)
            if (std::abs(phi[i]) > floor) idx.push_back(i);
        std::reverse(idx.begin(), idx.end());
    }
    if (idx.size() < 3) throw std::invalid_argument("fit_tail: too few usable tail samples");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i : idx) {
        const double x = std::log(kg[i]);
        const double y = std::log(std::abs(phi[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double nn = static_cast<double>(idx.size());
    const double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / nn;
    double ss = 0.0;
    for (std::size_t i : idx) {
        const double d = std::log(std::abs(phi[i])) - (intercept + slope * std::log(kg[i]));
        ss += d * d;
    }
    TailFit fit;
    fit.exponent = -slope;
    fit.log_amplitude = intercept;
    fit.residual = std::sqrt(ss / nn);
    fit.k_window_lo = kg[idx.front()];
    fit.k_window_hi = kg[idx.back()];
    return fit;
}

// Cubic Lagrange interpolation through the four samples around k, done in
// log-log coordinates when the stencil is single-signed (exact for power-law
// tails on the geometric part of the grid).
inline double interp_phi(const MomentumWavefunction& w, double k) {
    const auto& kg = w.k_grid;
    const auto& ph = w.phi;
    const std::size_t n = kg.size();
    auto it = std::upper_bound(kg.begin(), kg.end(), k);
    std::size_t j = it == kg.begin() ? 0 : static_cast<std::size_t>(it - kg.begin()) - 1;
    if (j >= n - 1) j = n - 2;
    std::size_t i0 = j == 0 ? 0 : j - 1;
    if (i0 + 3 >= n) i0 = n - 4;

    bool pos = true, neg = true;
    for (std::size_t i = i0; i < i0 + 4; ++i) {
        pos = pos && ph[i] > 0.0;
        neg = neg && ph[i] < 0.0;
    }
    double xs[4], ys[4];
    const bool loglog = (pos || neg) && kg[i0] > 0.0 && k > 0.0;
    for (int t = 0; t < 4; ++t) {
        if (loglog) {
            xs[t] = std::log(kg[i0 + t]);
            ys[t] = std::log(std::abs(ph[i0 + t]));
        } else {
            xs[t] = kg[i0 + t];
            ys[t] = ph[i0 + t];
        }
    }
    const double x = loglog ? std::log(k) : k;
    double acc = 0.0;
    for (int t = 0; t < 4; ++t) {
        double l = 1.0;
        for (int s = 0; s < 4; ++s)
            if (s != t) l *= (x - xs[s]) / (xs[t] - xs[s]);
        acc += l * ys[t];
    }
    if (!loglog) return acc;
    return (neg ? -1.0 : 1.0) * std::exp(acc);
}

inline double phi_at(const MomentumWavefunction& w, double k) {
    if (w.analytic) return w.analytic(k);
    return interp_phi(w, k);
}

// 5-point Gauss-Legendre quadrature of f over [a, b].
template <class F>
inline double gauss5(F&& f, double a, double b) {
    static constexpr double x1 = 0.5384693101056831, x2 = 0.9061798459386640;
    static constexpr double w0 = 0.5688888888888889, w1 = 0.4786286704993665,
                            w2 = 0.2369268850561891;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    return h * (w0 * f(c) + w1 * (f(c - x1 * h) + f(c + x1 * h)) +
                w2 * (f(c - x2 * h) + f(c + x2 * h)));
}

// sum of c_q * Int_K^inf k^(q-p) dk for the kinetic-difference weight against
// the fitted power-law tail, evaluated in log space.
inline double power_tail_integral(double m, double beta, const TailFit& tail, double K) {
    struct Term {
        double coef;
        double q;
    };
    const Term terms[] = {{-beta, 3.0},          {1.0, 2.0},
                          {-m, 1.0},             {0.5 * m * m, 0.0},
                          {-0.125 * m * m * m * m, -2.0},
                          {0.0625 * m * m * m * m * m * m, -4.0}};
    const double p = tail.exponent;
    double sum = 0.0;
    for (const Term& t : terms) {
        if (t.coef == 0.0) continue;
        const double denom = p - t.q - 1.0;
        const double ex = tail.log_amplitude + (t.q - p + 1.0) * std::log(K) +
                          std::log(std::abs(t.coef)) - std::log(denom);
        if (ex < -700.0) continue;
        sum += (t.coef > 0.0 ? 1.0 : -1.0) * std::exp(ex);
    }
    if (!std::isfinite(sum))
        throw Error("power_tail_integral: non-finite tail estimate");
    return sum;
}

// Integral of f0 samples on a uniform grid, one cell at a time, each cell
// integrated with the cubic through its four surrounding nodes (O(h^4)).
inline std::vector<double> cumulative_cubic(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> F(n, 0.0);
    if (n < 4) throw std::invalid_argument("cumulative_cubic: need at least 4 samples");
    F[1] = F[0] + h * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]) / 24.0;
    for (std::size_t i = 1; i + 2 < n; ++i)
        F[i + 1] = F[i] + h * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]) / 24.0;
    F[n - 1] = F[n - 2] + h * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]) / 24.0;
    return F;
}

// d/dk on a uniform grid with one-sided/centered 5-point stencils (O(h^4)).
inline std::vector<double> derivative_5pt(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 5) throw std::invalid_argument("derivative_5pt: need at least 5 samples");
    std::vector<double> d(n);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] -
                f[n - 5]) / (12.0 * h);
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                3.0 * f[n - 5]) / (12.0 * h);
    return d;
}

inline void require_momentum_grid(const std::vector<double>& kg) {
    if (kg.size() < 8) throw std::invalid_argument("momentum grid: too few samples");
    if (kg.front() != 0.0) throw std::invalid_argument("momentum grid must start at k = 0");
    for (std::size_t i = 0; i + 1 < kg.size(); ++i)
        if (!(kg[i + 1] > kg[i]))
            throw std::invalid_argument("momentum grid must be strictly increasing");
}

}  // namespace detail

// phi(k) = sqrt(2/pi) Int_0^rmax sin(kr) u(r) dr with u piecewise linear on
// its uniform grid, integrated exactly per cell (Filon). Evaluable at any k
// with k * h <= 1.
inline double sine_transform_at(const RadialSolution& src, double k) {
    const double h = src.step;
    if (k < 0.0) throw std::invalid_argument("sine_transform_at: k must be >= 0");
    if (k == 0.0) return 0.0;
    if (k * h > 1.0)
        throw AliasedTransform("sine_transform: k exceeds the grid resolution 1/h");

    const std::size_t n = src.u.size() - 1;
    const double theta = k * h;
    const double weight = theta < 1e-4
                              ? 1.0 - theta * theta / 12.0 + theta * theta * theta * theta / 360.0
                              : 2.0 * (1.0 - std::cos(theta)) / (theta * theta);

    const double ch = std::cos(theta), sh = std::sin(theta);
    double core = 0.0;
    double s = 0.0, c = 1.0;  // sin/cos of k * r_i, advanced by rotation
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 512 == 0) {
            s = std::sin(k * h * static_cast<double>(i));
            c = std::cos(k * h * static_cast<double>(i));
        } else {
            const double sn = s * ch + c * sh;
            c = c * ch - s * sh;
            s = sn;
        }
        core += src.u[i] * s;
    }
    core *= h * weight;

    const double R = src.r_max;
    const double edge = src.u[n] *
                        (-h * std::cos(k * R) / k + (std::sin(k * R) - std::sin(k * (R - h))) / (k * k)) / h;
    return std::sqrt(2.0 / std::acos(-1.0)) * (core + edge);
}

inline MomentumWavefunction sine_transform(const RadialSolution& src,
                                           const std::vector<double>& k_grid) {
    detail::require_momentum_grid(k_grid);
    const double nrm = detail::trapezoid_norm(src.u, src.step);
    if (std::abs(nrm - 1.0) > 1e-6)
        throw std::invalid_argument("sine_transform: source wavefunction is not normalized");
    MomentumWavefunction out;
    out.k_grid = k_grid;
    out.phi.resize(k_grid.size());
    for (std::size_t i = 0; i < k_grid.size(); ++i)
        out.phi[i] = sine_transform_at(src, k_grid[i]);
    out.tail = detail::fit_tail(out.k_grid, out.phi);
    return out;
}

// Normalized Gaussian comparison wavefunction N k exp(-sigma k^2 / 2).
inline MomentumWavefunction gaussian_wavefunction(double sigma,
                                                  const std::vector<double>& k_grid) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_wavefunction: sigma must be > 0");
    detail::require_momentum_grid(k_grid);
    const double N = 2.0 * std::pow(sigma, 0.75) / std::pow(std::acos(-1.0), 0.25);
    MomentumWavefunction out;
    out.k_grid = k_grid;
    out.phi.resize(k_grid.size());
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        const double k = k_grid[i];
        out.phi[i] = N * k * std::exp(-0.5 * sigma * k * k);
    }
    out.analytic = [N, sigma](double k) { return N * k * std::exp(-0.5 * sigma * k * k); };
    out.tail = detail::fit_tail(out.k_grid, out.phi);
    return out;
}

// Wraps a momentum-space radial solution (e.g. the oscillator eigenequation
// solved in k) as a momentum wavefunction on its own uniform grid.
inline MomentumWavefunction momentum_from_radial(const RadialSolution& src) {
    MomentumWavefunction out;
    out.k_grid.resize(src.u.size());
    for (std::size_t i = 0; i < src.u.size(); ++i) out.k_grid[i] = src.r(i);
    out.phi = src.u;
    out.tail = detail::fit_tail(out.k_grid, out.phi);
    return out;
}

inline MomentumWavefunction from_samples(std::vector<double> k_grid, std::vector<double> phi) {
    detail::require_momentum_grid(k_grid);
    if (k_grid.size() != phi.size())
        throw std::invalid_argument("from_samples: size mismatch");
    if (phi.front() != 0.0)
        throw std::invalid_argument("from_samples: phi(0) must be 0");
    MomentumWavefunction out;
    out.k_grid = std::move(k_grid);
    out.phi = std::move(phi);
    out.tail = detail::fit_tail(out.k_grid, out.phi);
    return out;
}

// Exact scaling image phi'(k) = sqrt(s) phi(s k): grid stretches by 1/s.
inline MomentumWavefunction rescale(const MomentumWavefunction& w, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("rescale: scale must be > 0");
    MomentumWavefunction out;
    out.k_grid.resize(w.k_grid.size());
    out.phi.resize(w.phi.size());
    const double rs = std::sqrt(s);
    for (std::size_t i = 0; i < w.k_grid.size(); ++i) {
        out.k_grid[i] = w.k_grid[i] / s;
        out.phi[i] = rs * w.phi[i];
    }
    out.tail = w.tail;
    out.tail.log_amplitude += (0.5 - w.tail.exponent) * std::log(s);
    out.tail.k_window_lo /= s;
    out.tail.k_window_hi /= s;
    if (w.analytic) {
        auto base = w.analytic;
        out.analytic = [base, s, rs](double k) { return rs * base(s * k); };
    }
    return out;
}

// Int phi^2 dk over the grid plus the fitted-tail remainder.
inline double parseval_norm(const MomentumWavefunction& w) {
    double grid = 0.0;
    for (std::size_t i = 0; i + 1 < w.k_grid.size(); ++i)
        grid += 0.5 * (w.phi[i] * w.phi[i] + w.phi[i + 1] * w.phi[i + 1]) *
                (w.k_grid[i + 1] - w.k_grid[i]);
    const double p = w.tail.exponent;
    double tail = 0.0;
    if (2.0 * p - 1.0 > 0.5) {
        const double ex = 2.0 * w.tail.log_amplitude +
                          (1.0 - 2.0 * p) * std::log(w.k_grid.back()) -
                          std::log(2.0 * p - 1.0);
        tail = ex < -700.0 ? 0.0 : std::exp(ex);
    }
    return grid + tail;
}

namespace detail {

inline double w_integrand(double t, double m, double beta, const MomentumWavefunction& phi_s) {
    const double kin = std::sqrt(m * m + t * t) - m - beta * t * t;
    return kin * phi_at(phi_s, t) * t;
}

}  // namespace detail

// W(k) = Int_0^k (sqrt(m^2+t^2) - m - beta t^2) phi_s(t) t dt. Pass
// k = secant::infinity for W(inf); the slowly decaying part beyond the grid is
// handled by the fitted-tail estimate, and tails shallower than k^-4.2 are
// rejected as divergent.
inline double eval_W(double k, double m, double beta, const MomentumWavefunction& phi_s) {
    if (!(m > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("eval_W: m and beta must be > 0");
    detail::require_momentum_grid(phi_s.k_grid);
    if (k == 0.0) return 0.0;
    const bool to_infinity = std::isinf(k);
    if (!to_infinity && (k < 0.0 || k > phi_s.k_grid.back()))
        throw std::invalid_argument("eval_W: k outside the wavefunction grid");
    if (to_infinity && phi_s.tail.exponent <= 4.2)
        throw DivergentTail("eval_W: tail exponent " + std::to_string(phi_s.tail.exponent) +
                            " <= 4.2, W(inf) integrand not integrable");

    auto f = [&](double t) { return detail::w_integrand(t, m, beta, phi_s); };
    double acc = 0.0;
    const auto& kg = phi_s.k_grid;
    for (std::size_t i = 0; i + 1 < kg.size(); ++i) {
        if (!to_infinity && kg[i + 1] >= k) {
            acc += detail::gauss5(f, kg[i], k);
            return acc;
        }
        acc += detail::gauss5(f, kg[i], kg[i + 1]);
    }
    return acc + detail::power_tail_integral(m, beta, phi_s.tail, kg.back());
}

inline WProfile w_profile(double m, double beta, const MomentumWavefunction& phi_s) {
    if (!(m > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("w_profile: m and beta must be > 0");
    detail::require_momentum_grid(phi_s.k_grid);
    if (phi_s.tail.exponent <= 4.2)
        throw DivergentTail("w_profile: tail exponent <= 4.2");
    auto f = [&](double t) { return detail::w_integrand(t, m, beta, phi_s); };
    WProfile out;
    out.k_grid = phi_s.k_grid;
    out.W.assign(phi_s.k_grid.size(), 0.0);
    for (std::size_t i = 0; i + 1 < out.k_grid.size(); ++i)
        out.W[i + 1] = out.W[i] + detail::gauss5(f, out.k_grid[i], out.k_grid[i + 1]);
    out.W_infinity = out.W.back() +
                     detail::power_tail_integral(m, beta, phi_s.tail, out.k_grid.back());
    return out;
}

inline WChecks check_w_profile(const WProfile& profile) {
    WChecks out;
    double wmax = 0.0, wmin = 0.0;
    std::size_t imax = 0;
    for (std::size_t i = 0; i < profile.W.size(); ++i) {
        if (profile.W[i] > wmax) {
            wmax = profile.W[i];
            imax = i;
        }
        wmin = std::min(wmin, profile.W[i]);
    }
    if (wmax <= 0.0) return out;
    out.nonnegative = wmin >= -1e-8 * wmax;
    const double slack = 1e-9 * wmax;
    bool unimodal = true;
    for (std::size_t i = 0; i + 1 < profile.W.size(); ++i) {
        if (i < imax)
            unimodal = unimodal && profile.W[i + 1] >= profile.W[i] - slack;
        else
            unimodal = unimodal && profile.W[i + 1] <= profile.W[i] + slack;
    }
    out.unimodal = unimodal;
    out.w_infinity_residual = std::abs(profile.W_infinity) / wmax;
    out.w_infinity_zero = out.w_infinity_residual <= 1e-8;
    return out;
}

// Both quadrature routes for the comparison integral on a shared uniform grid:
//   I_direct   = Int (sqrt(m^2+k^2) - m - beta k^2) phi phi_s dk
//   I_by_parts = -Int W(k) (phi(k)/k)' dk   (integration by parts through W)
inline IntegralIdentity eval_I(const MomentumWavefunction& phi,
                               const MomentumWavefunction& phi_s, double m, double beta) {
    const auto& kg = phi.k_grid;
    detail::require_momentum_grid(kg);
    if (kg.size() != phi_s.k_grid.size())
        throw std::invalid_argument("eval_I: wavefunctions live on different grids");
    const double h = kg[1] - kg[0];
    for (std::size_t i = 0; i + 1 < kg.size(); ++i) {
        if (std::abs(kg[i + 1] - kg[i] - h) > 1e-9 * h ||
            std::abs(phi_s.k_grid[i] - kg[i]) > 1e-9 * (1.0 + kg[i]))
            throw std::invalid_argument("eval_I: grids must be identical and uniform");
    }
    if (phi.tail.exponent + phi_s.tail.exponent <= 3.4)
        throw DivergentTail("eval_I: combined tail exponent too small");

    const std::size_t n = kg.size();
    std::vector<double> fd(n), g(n), prod(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double k = kg[i];
        const double kin = std::sqrt(m * m + k * k) - m - beta * k * k;
        fd[i] = kin * phi.phi[i] * phi_s.phi[i];
        g[i] = kin * phi_s.phi[i] * k;
        prod[i] = phi.phi[i] * phi_s.phi[i];
        q[i] = i == 0 ? 0.0 : phi.phi[i] / k;
    }
    q[0] = 3.0 * q[1] - 3.0 * q[2] + q[3];

    IntegralIdentity out;
    out.I_direct = detail::cumulative_cubic(fd, h).back();
    out.overlap = detail::cumulative_cubic(prod, h).back();

    const std::vector<double> W = detail::cumulative_cubic(g, h);
    const std::vector<double> dq = detail::derivative_5pt(q, h);
    std::vector<double> wq(n);
    for (std::size_t i = 0; i < n; ++i) wq[i] = W[i] * dq[i];
    out.I_by_parts = -detail::cumulative_cubic(wq, h).back();

    // tail of the direct integral from the fitted power laws
    const double K = kg.back();
    const double p12 = phi.tail.exponent + phi_s.tail.exponent;
    const double lnA = phi.tail.log_amplitude + phi_s.tail.log_amplitude;
    double tail = 0.0;
    {
        struct Term {
            double coef;
            double q;
        } const terms[] = {{-beta, 2.0}, {1.0, 1.0}, {-m, 0.0}, {0.5 * m * m, -1.0}};
        for (const auto& t : terms) {
            const double denom = p12 - t.q - 1.0;
            if (denom <= 0.0) continue;
            const double ex = lnA + (t.q - p12 + 1.0) * std::log(K) +
                              std::log(std::abs(t.coef)) - std::log(denom);
            if (ex < -700.0) continue;
            tail += (t.coef > 0.0 ? 1.0 : -1.0) * std::exp(ex);
        }
    }
    out.I_direct += tail;
    return out;
}

// Nodelessness of phi and monotonicity of phi/k, with small relative slack
// for discretization noise.
inline CertificationReport certify_hypotheses(const MomentumWavefunction& phi) {
    detail::require_momentum_grid(phi.k_grid);
    const std::size_t n = phi.k_grid.size();

    double amax = 0.0;
    std::size_t imax = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(phi.phi[i]) > amax) {
            amax = std::abs(phi.phi[i]);
            imax = i;
        }
    const double sign = phi.phi[imax] >= 0.0 ? 1.0 : -1.0;

    CertificationReport rep;
    double vmin = 0.0;
    for (std::size_t i = 0; i < n; ++i) vmin = std::min(vmin, sign * phi.phi[i]);
    rep.min_phi_rel = vmin / amax;
    rep.nodeless = vmin >= -1e-10 * amax;

    std::vector<double> q(n, 0.0);
    double qmax = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        q[i] = sign * phi.phi[i] / phi.k_grid[i];
        qmax = std::max(qmax, std::abs(q[i]));
    }
    double smax = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 2; i + 1 < n; ++i)
        smax = std::max(smax, (q[i + 1] - q[i - 1]) / (phi.k_grid[i + 1] - phi.k_grid[i - 1]));
    rep.max_slope_rel = smax / qmax;
    rep.phi_over_k_monotone = smax <= 1e-8 * qmax;
    return rep;
}

}  // namespace secant
