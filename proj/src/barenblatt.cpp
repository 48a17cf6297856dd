#include "vacuumfront/barenblatt.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vacuumfront/errors.hpp"
#include "vacuumfront/quadrature.hpp"
#include "vacuumfront/root_find.hpp"

namespace vacuumfront {

double BarenblattProfile::rho0(double x) const {
    const double s = A - B * x * x;
    return s > 0 ? std::pow(s, alpha) : 0.0;
}

double BarenblattProfile::rho0_gamma(double x) const {
    const double s = A - B * x * x;
    return s > 0 ? std::pow(s, gamma * alpha) : 0.0;
}

double BarenblattProfile::density(double x, double t) const {
    const double s = A - B * std::pow(1.0 + t, -2.0 / k) * x * x;
    if (s <= 0) return 0.0;
    return std::pow(1.0 + t, -dim / k) * std::pow(s, alpha);
}

double BarenblattProfile::velocity(double x, double t) const { return x / (k * (1.0 + t)); }

double BarenblattProfile::boundary_radius(double t) const {
    return std::sqrt(A / B) * std::pow(1.0 + t, 1.0 / k);
}

double BarenblattProfile::lagrangian_flow(double x, double t) const {
    return x * std::pow(1.0 + t, 1.0 / k);
}

namespace {

// n-dimensional mass of (A - B|x|^2)^{1/(gamma-1)} over its support.
double mass_of_amplitude(double A, double B, double alpha, int dim, double tol) {
    const double R = std::sqrt(A / B);
    if (dim == 1) {
        auto f = [&](double x) { return std::pow(A - B * x * x, alpha); };
        return 2.0 * num::quad_weighted(f, 0.0, R, tol);
    }
    auto f = [&](double r) { return 4.0 * std::numbers::pi * r * r * std::pow(A - B * r * r, alpha); };
    return num::quad_weighted(f, 0.0, R, tol);
}

} // namespace

BarenblattProfile solve_profile_constants(double gamma, double mass, int dim) {
    if (!(gamma > 1)) throw ConfigError("solve_profile_constants: gamma must exceed 1");
    if (!(mass > 0)) throw ConfigError("solve_profile_constants: mass must be positive");
    if (dim != 1 && dim != 3) throw ConfigError("solve_profile_constants: dim must be 1 or 3");

    BarenblattProfile p;
    p.gamma = gamma;
    p.mass = mass;
    p.dim = dim;
    p.k = dim * gamma - dim + 2;
    p.alpha = 1.0 / (gamma - 1.0);
    // Forced by requiring the profile to solve the porous media equation with
    // velocity x / (k(1+t)).
    p.B = (gamma - 1.0) / (2.0 * gamma * p.k);

    const double qtol = 1e-13 * mass;
    auto g = [&](double A) { return mass_of_amplitude(A, p.B, p.alpha, dim, qtol) - mass; };

    // The mass grows monotonically in A; bracket by doubling.
    double lo = 1e-8, hi = 1.0;
    while (g(hi) < 0) {
        hi *= 2.0;
        if (hi > 1e12) throw NumericalError("solve_profile_constants: amplitude bracket failure");
    }
    while (g(lo) > 0) {
        lo *= 0.5;
        if (lo < 1e-300) throw NumericalError("solve_profile_constants: amplitude bracket failure");
    }
    p.A = num::find_root(g, lo, hi, 1e-13 * hi);
    return p;
}

double profile_mass(const BarenblattProfile& p, double t, double tol) {
    const double R = p.boundary_radius(t);
    if (p.dim == 1) {
        auto f = [&](double x) { return p.density(x, t); };
        return 2.0 * num::quad_weighted(f, 0.0, R, 0.5 * tol);
    }
    auto f = [&](double r) { return 4.0 * std::numbers::pi * r * r * p.density(r, t); };
    return num::quad_weighted(f, 0.0, R, 0.5 * tol);
}

namespace {

void check_stencil(const BarenblattProfile& p, double x, double t, double step) {
    if (!(t > step)) throw NumericalError("residual stencil needs t > step");
    const double rmin = p.boundary_radius(t - step);
    if (std::abs(x) + step >= rmin)
        throw NumericalError("residual stencil exits the support at x=" + std::to_string(x));
}

} // namespace

double pme_residual(const BarenblattProfile& p, double x, double t, double step) {
    check_stencil(p, x, t, step);
    const double s = step;
    const double rho_t = (p.density(x, t + s) - p.density(x, t - s)) / (2 * s);
    auto pg = [&](double xx) { return std::pow(p.density(xx, t), p.gamma); };
    const double d2 = (pg(x + s) - 2 * pg(x) + pg(x - s)) / (s * s);
    double lap = d2;
    if (p.dim == 3) {
        const double d1 = (pg(x + s) - pg(x - s)) / (2 * s);
        lap += 2.0 / x * d1;
    }
    return rho_t - lap;
}

double conservation_residual(const BarenblattProfile& p, double x, double t, double step) {
    check_stencil(p, x, t, step);
    const double s = step;
    const double rho_t = (p.density(x, t + s) - p.density(x, t - s)) / (2 * s);
    auto flux = [&](double xx) { return p.density(xx, t) * p.velocity(xx, t); };
    double div = (flux(x + s) - flux(x - s)) / (2 * s);
    if (p.dim == 3) div += 2.0 / x * flux(x);
    return rho_t + div;
}

} // namespace vacuumfront
