#include "vacuumfront/affine.hpp"

#include <cmath>
#include <string>

#include "vacuumfront/errors.hpp"

namespace vacuumfront {

double flow_index(double gamma, int dim) {
    if (dim != 1 && dim != 3) throw ConfigError("flow_index: dim must be 1 or 3");
    return dim * gamma - dim + 2;
}

std::array<double, 3> affine_rhs(const AffineState& s, double gamma, int dim) {
    const double m = dim * (gamma - 1.0);
    return {-s.a * s.a - s.a + 2.0 * s.b / (gamma - 1.0), -(m + 2.0) * s.a * s.b,
            -m * s.a * s.e};
}

double affine_conserved(const AffineState& s, double gamma, int dim) {
    const double m = dim * (gamma - 1.0);
    return std::pow(s.e, m + 2.0) / std::pow(s.b, m);
}

AffineState AffineTrajectory::at(double t) const {
    return {traj_.value(0, t), traj_.value(1, t), traj_.value(2, t), t};
}

AffineTrajectory integrate_affine(const AffineState& init, double gamma, int dim, double t_end,
                                  double tol) {
    if (!(init.e > 0) || !(init.b > 0))
        throw ConfigError("integrate_affine: requires positive b and e");
    num::OdeProblem prob;
    prob.dimension = 3;
    prob.t0 = init.t;
    prob.y0 = {init.a, init.b, init.e};
    prob.rhs = [gamma, dim](double, std::span<const double> y, std::span<double> dy) {
        const AffineState s{y[0], y[1], y[2], 0.0};
        const auto d = affine_rhs(s, gamma, dim);
        dy[0] = d[0];
        dy[1] = d[1];
        dy[2] = d[2];
    };
    auto traj = num::integrate_ode(prob, t_end, tol, tol);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (!(traj.state(i, 1) > 0) || !(traj.state(i, 2) > 0))
            throw NumericalError("integrate_affine: positivity of (b,e) lost at t=" +
                                 std::to_string(traj.times()[i]));
    }
    return {std::move(traj), gamma, dim};
}

AffineState barenblatt_affine(const BarenblattProfile& p, double t) {
    const double m = p.dim * (p.gamma - 1.0);
    AffineState s;
    s.t = t;
    s.a = 1.0 / (p.k * (1.0 + t));
    s.b = p.gamma * p.B / (1.0 + t);
    s.e = p.gamma * p.A * std::pow(1.0 + t, -m / p.k);
    return s;
}

CorrectionTrajectory::CorrectionTrajectory(num::OdeTrajectory traj, double gamma, int dim)
    : traj_(std::move(traj)), gamma_(gamma), dim_(dim), k_(flow_index(gamma, dim)) {}

double CorrectionTrajectory::h(double t) const { return traj_.value(0, t); }
double CorrectionTrajectory::h_t(double t) const { return traj_.value(1, t); }
double CorrectionTrajectory::eta_bar_x(double t) const { return std::pow(1.0 + t, 1.0 / k_); }
double CorrectionTrajectory::eta_bar_xt(double t) const {
    return std::pow(1.0 + t, 1.0 / k_ - 1.0) / k_;
}
double CorrectionTrajectory::tilde_eta_x(double t) const { return eta_bar_x(t) + h(t); }
double CorrectionTrajectory::tilde_eta_xt(double t) const { return eta_bar_xt(t) + h_t(t); }

CorrectionTrajectory integrate_correction(double gamma, int dim, double t_end, double tol) {
    if (!(gamma > 1)) throw ConfigError("integrate_correction: gamma must exceed 1");
    const double k = flow_index(gamma, dim);
    num::OdeProblem prob;
    prob.dimension = 2;
    prob.t0 = 0.0;
    prob.y0 = {0.0, 0.0}; // h(0) = h_t(0) = 0
    prob.rhs = [k](double t, std::span<const double> y, std::span<double> dy) {
        const double g = std::pow(1.0 + t, 1.0 / k);
        const double gp = g / (k * (1.0 + t));
        const double gpp = gp * (1.0 / k - 1.0) / (1.0 + t);
        dy[0] = y[1];
        dy[1] = -y[1] + std::pow(g + y[0], 1.0 - k) / k - gpp - gp;
    };
    return {num::integrate_ode(prob, t_end, tol, tol), gamma, dim};
}

AffineFlowTrajectory exact_affine_flow(double gamma, int dim, double a0, double t_end,
                                       double tol) {
    const double k = flow_index(gamma, dim);
    num::OdeProblem prob;
    prob.dimension = 2;
    prob.t0 = 0.0;
    prob.y0 = {1.0, a0};
    prob.rhs = [k](double, std::span<const double> y, std::span<double> dy) {
        dy[0] = y[1];
        dy[1] = -y[1] + std::pow(y[0], 1.0 - k) / k;
    };
    return {num::integrate_ode(prob, t_end, tol, tol), gamma, dim, k};
}

} // namespace vacuumfront
