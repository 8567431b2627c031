#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "secant/errors.hpp"

namespace secant {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    }
};

struct RootSpec {
    double x_tol = 1e-12;  // relative to max(1, |x|)
    double f_tol = 1e-12;
    int max_iters = 200;

    void validate() const {
        if (!(x_tol > 0.0) || !(f_tol > 0.0))
            throw std::invalid_argument("RootSpec: tolerances must be > 0");
        if (max_iters < 1)
            throw std::invalid_argument("RootSpec: max_iters must be >= 1");
    }
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gauss_kronrod_15(F& f, double a, double b, double& value, double& error) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double resk = kKronrodWeights[7] * f(center);
    double resg = kGaussWeights[3] * f(center);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double sum = f(center - dx) + f(center + dx);
        resk += kKronrodWeights[j] * sum;
        if (j % 2 == 1) resg += kGaussWeights[j / 2] * sum;
    }
    value = resk * half;
    error = std::abs((resk - resg) * half);
}

struct Segment {
    double a, b, value, error;
    std::size_t seq;  // insertion order, breaks priority ties deterministically
};

struct SegmentOrder {
    bool operator()(const Segment& x, const Segment& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

// Globally adaptive quadrature over a finite interval: repeatedly split the
// segment with the largest error estimate.
template <class F>
inline IntegralResult adaptive_finite(F& f, double a, double b, const QuadratureSpec& spec) {
    std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> queue;
    std::size_t seq = 0;
    double total = 0.0, total_err = 0.0;

    auto push = [&](double lo, double hi) {
        Segment s{lo, hi, 0.0, 0.0, seq++};
        gauss_kronrod_15(f, lo, hi, s.value, s.error);
        total += s.value;
        total_err += s.error;
        queue.push(s);
    };

    push(a, b);
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (static_cast<int>(queue.size()) >= spec.max_subdivisions)
            throw NonConvergence("integrate: subdivision limit reached, error estimate " +
                                 std::to_string(total_err));
        Segment worst = queue.top();
        queue.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw NonConvergence("integrate: interval too narrow to split further");
        push(worst.a, mid);
        push(mid, worst.b);
    }

    // Re-sum in spatial order so the result does not depend on heap layout.
    std::vector<Segment> segs;
    segs.reserve(queue.size());
    while (!queue.empty()) {
        segs.push_back(queue.top());
        queue.pop();
    }
    std::sort(segs.begin(), segs.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    IntegralResult out;
    for (const Segment& s : segs) {
        out.value += s.value;
        out.error_estimate += s.error;
    }
    if (!std::isfinite(out.value))
        throw NonConvergence("integrate: integrand produced a non-finite value");
    return out;
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over (a, b). Either endpoint may be
// infinite; semi-infinite ranges are mapped to [0, 1) with t = a + u/(1-u) and
// the doubly infinite range to (-1, 1) with t = u/(1-u^2).
template <class F>
inline IntegralResult integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    spec.validate();
    const bool lo_inf = std::isinf(a);
    const bool hi_inf = std::isinf(b);
    if (!lo_inf && !hi_inf) {
        auto g = [&f](double x) { return f(x); };
        return detail::adaptive_finite(g, a, b, spec);
    }
    if (lo_inf && hi_inf) {
        auto g = [&f](double u) {
            const double d = 1.0 - u * u;
            return f(u / d) * (1.0 + u * u) / (d * d);
        };
        return detail::adaptive_finite(g, -1.0, 1.0, spec);
    }
    if (hi_inf) {
        auto g = [&f, a](double u) {
            const double d = 1.0 - u;
            return f(a + u / d) / (d * d);
        };
        return detail::adaptive_finite(g, 0.0, 1.0, spec);
    }
    auto g = [&f, b](double u) {
        const double d = 1.0 - u;
        return f(b - u / d) / (d * d);
    };
    return detail::adaptive_finite(g, 0.0, 1.0, spec);
}

// Brent-style bracketed root finding: inverse quadratic / secant steps with a
// bisection safeguard, so convergence is guaranteed for any continuous f with
// f(lo) * f(hi) < 0. The result always lies inside the initial bracket.
template <class F>
inline double find_root(F&& f, double lo, double hi, const RootSpec& spec = {}) {
    spec.validate();
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw InvalidBracket("find_root: f(lo) and f(hi) have the same sign");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < spec.max_iters; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 0.5 * spec.x_tol * std::max(1.0, std::abs(b)) +
                           2.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
        const double mid = 0.5 * (c - b);
        if (std::abs(fb) <= spec.f_tol || std::abs(mid) <= tol) return b;

        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            // interpolation step: secant, or inverse quadratic when possible
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * mid * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc, r = fb / fc;
                p = s * (2.0 * mid * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * mid * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = mid;
                e = d;
            }
        } else {
            d = mid;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (mid > 0.0 ? tol : -tol);
        fb = f(b);
        if (fb == 0.0) return b;
    }
    throw NonConvergence("find_root: max_iters reached without meeting tolerance");
}

}  // namespace secant
