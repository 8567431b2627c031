#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "secant/errors.hpp"
#include "secant/numerics.hpp"

namespace secant {

// One-dimensional radial eigenproblem -a u'' + U(r) u = E u on [0, r_max]
// with u(0) = 0 and a box boundary u(r_max) = 0. n_points counts grid
// intervals, so the grid has n_points + 1 nodes.
struct RadialProblem {
    double kinetic_coefficient = 1.0;
    std::function<double(double)> potential;
    double r_max = 10.0;
    int n_points = 4000;
    double tail_threshold = 1e-8;  // a-posteriori decay test, relative to max|u|

    void validate() const {
        if (!(kinetic_coefficient > 0.0))
            throw std::invalid_argument("RadialProblem: kinetic coefficient must be > 0");
        if (!(r_max > 0.0))
            throw std::invalid_argument("RadialProblem: r_max must be > 0");
        if (n_points < 100)
            throw std::invalid_argument("RadialProblem: n_points must be >= 100");
        if (!potential)
            throw std::invalid_argument("RadialProblem: potential not set");
    }
};

struct RadialSolution {
    double eigenvalue = 0.0;
    double r_max = 0.0;
    double step = 0.0;
    std::vector<double> u;  // u[0] = 0; reduced radial wavefunction, L2-normalized
    int node_count = 0;

    double r(std::size_t i) const { return static_cast<double>(i) * step; }
    std::size_t size() const { return u.size(); }
};

struct GridLevel {
    int n_points;
    double eigenvalue;
};

struct GridReport {
    std::vector<GridLevel> levels;
    double extrapolated = 0.0;
};

struct ConvergedSolution {
    RadialSolution solution;  // finest grid computed
    GridReport report;
};

namespace detail {

class NumerovSolver {
public:
    NumerovSolver(const RadialProblem& p)
        : a_(p.kinetic_coefficient), n_(p.n_points), h_(p.r_max / p.n_points) {
        U_.resize(n_ + 1);
        for (int i = 1; i <= n_; ++i) U_[i] = p.potential(i * h_);
        U_[0] = U_[1];  // value at r=0 multiplies u(0)=0; guard singular U
        Umin_ = *std::min_element(U_.begin() + 1, U_.end());
        if (!std::isfinite(Umin_))
            throw std::invalid_argument("RadialProblem: potential not finite on grid");
    }

    double potential_minimum() const { return Umin_; }
    int grid_points() const { return n_; }
    double step() const { return h_; }

    // Full outward sweep; returns the interior sign-change count.
    int forward_nodes(double E) const {
        const double hh = h_ * h_ / 12.0;
        double fm1 = 1.0 - hh * (U_[0] - E) / a_;
        double f0 = 1.0 - hh * (U_[1] - E) / a_;
        double um1 = 0.0, u0 = h_;
        int nodes = 0;
        for (int i = 1; i < n_; ++i) {
            const double f1 = 1.0 - hh * (U_[i + 1] - E) / a_;
            const double u1 = ((12.0 - 10.0 * f0) * u0 - fm1 * um1) / f1;
            if (u1 * u0 < 0.0) ++nodes;
            um1 = u0;
            u0 = u1;
            fm1 = f0;
            f0 = f1;
            if (std::abs(u0) > 1e250) {
                um1 *= 1e-250;
                u0 *= 1e-250;
            }
        }
        return nodes;
    }

    // Matching index: two cells past the outermost classical turning point.
    int match_index(double E) const {
        int t = n_;
        while (t > 1 && U_[t] > E) --t;
        return std::clamp(t + 2, 3, n_ - 3);
    }

    // Log-derivative mismatch at the matching point between the outward and
    // inward Numerov solutions; decreases monotonically through the eigenvalue.
    double match_delta(double E) const {
        const int m = match_index(E);
        std::vector<double> uo, ui;
        sweep_out(E, m, uo);
        sweep_in(E, m, ui);
        const double dout = (uo[m + 1] - uo[m - 1]) / (2.0 * h_ * uo[m]);
        const double din = (ui[m + 1] - ui[m - 1]) / (2.0 * h_ * ui[m]);
        return dout - din;
    }

    // Spliced eigenfunction at energy E (not yet normalized).
    std::vector<double> build(double E) const {
        const int m = match_index(E);
        std::vector<double> uo, ui;
        sweep_out(E, m, uo);
        sweep_in(E, m, ui);
        std::vector<double> u(n_ + 1);
        const double scale = uo[m] / ui[m];
        for (int i = 0; i <= m; ++i) u[i] = uo[i];
        for (int i = m; i <= n_; ++i) u[i] = ui[i] * scale;
        return u;
    }

private:
    void sweep_out(double E, int m, std::vector<double>& u) const {
        const double hh = h_ * h_ / 12.0;
        u.assign(m + 2, 0.0);
        u[1] = h_;
        for (int i = 1; i <= m; ++i) {
            const double fm1 = 1.0 - hh * (U_[i - 1] - E) / a_;
            const double f0 = 1.0 - hh * (U_[i] - E) / a_;
            const double f1 = 1.0 - hh * (U_[i + 1] - E) / a_;
            u[i + 1] = ((12.0 - 10.0 * f0) * u[i] - fm1 * u[i - 1]) / f1;
            if (std::abs(u[i + 1]) > 1e250)
                for (int j = 0; j <= i + 1; ++j) u[j] *= 1e-250;
        }
    }

    void sweep_in(double E, int m, std::vector<double>& u) const {
        const double hh = h_ * h_ / 12.0;
        u.assign(n_ + 1, 0.0);
        u[n_] = 0.0;
        u[n_ - 1] = h_;
        for (int i = n_ - 1; i >= m; --i) {
            const double fp1 = 1.0 - hh * (U_[i + 1] - E) / a_;
            const double f0 = 1.0 - hh * (U_[i] - E) / a_;
            const double fm1 = 1.0 - hh * (U_[i - 1] - E) / a_;
            u[i - 1] = ((12.0 - 10.0 * f0) * u[i] - fp1 * u[i + 1]) / fm1;
            if (std::abs(u[i - 1]) > 1e250)
                for (int j = n_; j >= i - 1; --j) u[j] *= 1e-250;
        }
    }

    double a_;
    int n_;
    double h_;
    double Umin_;
    std::vector<double> U_;
};

inline double trapezoid_norm(const std::vector<double>& u, double h) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
        s += 0.5 * (u[i] * u[i] + u[i + 1] * u[i + 1]);
    return s * h;
}

}  // namespace detail

// Lowest eigenvalue and nodeless eigenfunction of the radial problem.
// Shooting with node counting brackets the eigenvalue; a guarded Brent solve
// on the two-sided log-derivative matching residual refines it.
inline RadialSolution ground_state(const RadialProblem& problem, const RootSpec& spec = {}) {
    problem.validate();
    spec.validate();
    detail::NumerovSolver solver(problem);

    const double E_bottom = solver.potential_minimum();
    double width = std::max(1.0, std::abs(E_bottom));
    double E_hi = E_bottom + width;
    int grow = 0;
    while (solver.forward_nodes(E_hi) < 1) {
        E_hi += width;
        width *= 2.0;
        if (++grow > 60)
            throw NonConvergence("ground_state: could not bracket the first node");
    }

    double lo = E_bottom, hi = E_hi;
    double dlo = solver.match_delta(lo), dhi = solver.match_delta(hi);
    int iters = 0;
    while (!(dlo > 0.0 && dhi < 0.0) ||
           hi - lo > 1e-2 * std::max(1.0, std::abs(hi))) {
        if (++iters > 200)
            throw NonConvergence("ground_state: node bisection failed to isolate the eigenvalue");
        const double mid = 0.5 * (lo + hi);
        if (solver.forward_nodes(mid) >= 1) {
            hi = mid;
            dhi = solver.match_delta(hi);
        } else {
            lo = mid;
            dlo = solver.match_delta(lo);
        }
    }

    const double E = find_root([&solver](double e) { return solver.match_delta(e); },
                               lo, hi, spec);

    RadialSolution sol;
    sol.eigenvalue = E;
    sol.r_max = problem.r_max;
    sol.step = solver.step();
    sol.u = solver.build(E);

    const double nrm = std::sqrt(detail::trapezoid_norm(sol.u, sol.step));
    double sign = sol.u[1] >= 0.0 ? 1.0 : -1.0;
    for (double& v : sol.u) v *= sign / nrm;

    double umax = 0.0;
    for (double v : sol.u) umax = std::max(umax, std::abs(v));
    sol.node_count = 0;
    for (std::size_t i = 1; i + 1 < sol.u.size(); ++i)
        if (sol.u[i] * sol.u[i + 1] < 0.0 &&
            std::min(std::abs(sol.u[i]), std::abs(sol.u[i + 1])) > 1e-12 * umax)
            ++sol.node_count;
    if (sol.node_count != 0)
        throw NonConvergence("ground_state: matching converged onto an excited state");

    const int n = problem.n_points;
    if (std::abs(sol.u[n - 1]) > problem.tail_threshold * umax)
        throw DomainTooSmall("ground_state: wavefunction has not decayed at r_max");
    return sol;
}

// Repeats ground_state on doubled grids until the eigenvalue moves by less
// than 1e-8 relative, then Richardson-extrapolates the O(h^4) scheme.
inline ConvergedSolution eigenvalue_converged(const RadialProblem& problem,
                                              const RootSpec& spec = {}) {
    ConvergedSolution out;
    RadialProblem p = problem;
    RadialSolution prev = ground_state(p, spec);
    out.report.levels.push_back({p.n_points, prev.eigenvalue});
    for (int doubling = 1; doubling <= 4; ++doubling) {
        p.n_points *= 2;
        RadialSolution cur = ground_state(p, spec);
        out.report.levels.push_back({p.n_points, cur.eigenvalue});
        const double change = std::abs(cur.eigenvalue - prev.eigenvalue);
        if (change < 1e-8 * std::max(1.0, std::abs(cur.eigenvalue))) {
            out.report.extrapolated =
                cur.eigenvalue + (cur.eigenvalue - prev.eigenvalue) / 15.0;
            out.solution = std::move(cur);
            return out;
        }
        prev = std::move(cur);
    }
    throw NonConvergence("eigenvalue_converged: eigenvalue still moving after 4 doublings");
}

// Domain construction for confining potentials: a coarse pre-solve estimates
// the energy, the domain extends to 2.5x the classical turning point (floored
// at 10 length units), and ground_state's decay test drives doublings.
struct DomainOptions {
    int n_points = 4000;
    double tail_threshold = 1e-8;
    double r_floor = 10.0;
    int max_doublings = 6;
    double points_per_unit = 0.0;  // if > 0, enforce n_points >= points_per_unit * r_max
};

inline RadialProblem suggest_domain(double a, std::function<double(double)> U,
                                    const DomainOptions& opts = {}) {
    RadialProblem coarse;
    coarse.kinetic_coefficient = a;
    coarse.potential = U;
    coarse.r_max = opts.r_floor;
    coarse.n_points = 800;
    coarse.tail_threshold = 2.0;  // decay test disabled for the pre-solve
    double E0 = ground_state(coarse).eigenvalue;

    double r_turn = 0.0;
    if (U(coarse.r_max) <= E0) {
        // box-limited pre-solve; push the wall out until it clears the energy
        double r_hi = coarse.r_max;
        int grow = 0;
        while (U(r_hi) <= E0 && ++grow <= 60) r_hi *= 2.0;
        r_turn = r_hi;
    } else if (U(1e-12) < E0) {
        r_turn = find_root([&](double r) { return U(r) - E0; }, 1e-12, coarse.r_max);
    }

    RadialProblem p;
    p.kinetic_coefficient = a;
    p.potential = std::move(U);
    p.r_max = std::max(opts.r_floor, 2.5 * r_turn);
    p.tail_threshold = opts.tail_threshold;
    p.n_points = opts.n_points;
    if (opts.points_per_unit > 0.0)
        p.n_points = std::max(p.n_points,
                              static_cast<int>(std::ceil(opts.points_per_unit * p.r_max)));
    return p;
}

inline RadialProblem widen(RadialProblem p, const DomainOptions& opts) {
    const double per_unit = p.n_points / p.r_max;
    p.r_max *= 2.0;
    p.n_points = static_cast<int>(std::ceil(per_unit * p.r_max));
    if (opts.points_per_unit > 0.0)
        p.n_points = std::max(p.n_points,
                              static_cast<int>(std::ceil(opts.points_per_unit * p.r_max)));
    return p;
}

inline RadialSolution ground_state_auto(double a, std::function<double(double)> U,
                                        const DomainOptions& opts = {},
                                        const RootSpec& spec = {}) {
    RadialProblem p = suggest_domain(a, U, opts);
    for (int attempt = 0;; ++attempt) {
        try {
            return ground_state(p, spec);
        } catch (const DomainTooSmall&) {
            if (attempt >= opts.max_doublings) throw;
            p = widen(std::move(p), opts);
        }
    }
}

inline ConvergedSolution eigenvalue_converged_auto(double a, std::function<double(double)> U,
                                                   const DomainOptions& opts = {},
                                                   const RootSpec& spec = {}) {
    RadialProblem p = suggest_domain(a, U, opts);
    for (int attempt = 0;; ++attempt) {
        try {
            return eigenvalue_converged(p, spec);
        } catch (const DomainTooSmall&) {
            if (attempt >= opts.max_doublings) throw;
            p = widen(std::move(p), opts);
        }
    }
}

}  // namespace secant
