#include "vacuumfront/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vacuumfront/errors.hpp"

namespace vacuumfront::num {

void OdeTrajectory::push(double t, std::span<const double> y, std::span<const double> dy) {
    t_.push_back(t);
    y_.insert(y_.end(), y.begin(), y.end());
    dy_.insert(dy_.end(), dy.begin(), dy.end());
}

std::size_t OdeTrajectory::locate(double t) const {
    const double slack = 1e-9 * (1.0 + std::abs(t_.back()));
    if (t < t_.front() - slack || t > t_.back() + slack)
        throw NumericalError("trajectory evaluation outside sampled range: t=" + std::to_string(t));
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - t_.begin());
    if (hi == 0) hi = 1;
    if (hi >= t_.size()) hi = t_.size() - 1;
    return hi - 1;
}

double OdeTrajectory::value(std::size_t comp, double t) const {
    const std::size_t i = locate(t);
    const double t0 = t_[i], t1 = t_[i + 1];
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double y0 = state(i, comp), y1 = state(i + 1, comp);
    const double d0 = deriv(i, comp), d1 = deriv(i + 1, comp);
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Difference between the 5th and the embedded 4th order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace

OdeTrajectory integrate_ode(const OdeProblem& problem, double t_end, double rel_tol,
                            double abs_tol) {
    if (problem.dimension < 1 || problem.y0.size() != problem.dimension)
        throw ConfigError("integrate_ode: inconsistent problem dimension");
    if (!(t_end > problem.t0)) throw ConfigError("integrate_ode: t_end must exceed t0");
    if (!(rel_tol > 0) || !(abs_tol > 0)) throw ConfigError("integrate_ode: tolerances must be positive");

    const std::size_t n = problem.dimension;
    std::vector<double> y = problem.y0;
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), err(n);

    double t = problem.t0;
    problem.rhs(t, y, k1);
    if (!all_finite(k1)) throw NumericalError("integrate_ode: non-finite rhs at t0");

    OdeTrajectory traj(n);
    traj.push(t, y, k1);

    // Initial step size from the usual first-derivative heuristic.
    double sc0 = 0, sc1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sc = abs_tol + rel_tol * std::abs(y[i]);
        sc0 += (y[i] / sc) * (y[i] / sc);
        sc1 += (k1[i] / sc) * (k1[i] / sc);
    }
    double dt = 0.01 * std::sqrt((sc0 + 1e-30) / (sc1 + 1e-30));
    dt = std::min(dt, (t_end - problem.t0) / 10.0);
    dt = std::max(dt, 1e-10);

    const double uround = std::numeric_limits<double>::epsilon();
    long steps = 0;
    const long max_steps = 200000000L;

    while (t < t_end) {
        if (++steps > max_steps) throw NumericalError("integrate_ode: step limit exceeded");
        if (dt < 64 * uround * std::max(1.0, std::abs(t)))
            throw NumericalError("integrate_ode: step-size underflow at t=" + std::to_string(t));
        if (t + dt > t_end) dt = t_end - t;

        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + dt * a21 * k1[i];
        problem.rhs(t + c2 * dt, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + dt * (a31 * k1[i] + a32 * k2[i]);
        problem.rhs(t + c3 * dt, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + dt * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        problem.rhs(t + c4 * dt, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + dt * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        problem.rhs(t + c5 * dt, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + dt * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                   a65 * k5[i]);
        problem.rhs(t + dt, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + dt * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        problem.rhs(t + dt, ynew, k7); // FSAL stage

        if (!all_finite(k7) || !all_finite(ynew))
            throw NumericalError("integrate_ode: non-finite state at t=" + std::to_string(t + dt));

        // Error per unit step against the mixed tolerance.
        double sumsq = 0;
        for (std::size_t i = 0; i < n; ++i) {
            err[i] = dt * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                           e7 * k7[i]);
            const double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            sumsq += (err[i] / sc) * (err[i] / sc);
        }
        const double q = std::sqrt(sumsq / static_cast<double>(n)) / dt;

        if (q <= 1.0) {
            t += dt;
            y.swap(ynew);
            k1.swap(k7);
            traj.push(t, y, k1);
        }
        const double fac = (q > 0) ? 0.9 * std::pow(q, -0.25) : 5.0;
        dt *= std::clamp(fac, 0.2, 5.0);
    }
    return traj;
}

} // namespace vacuumfront::num
