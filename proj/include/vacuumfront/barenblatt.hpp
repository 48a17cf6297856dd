#pragma once

namespace vacuumfront {

// Compactly supported self-similar solution of rho_t = Laplace(rho^gamma)
// with Darcy velocity u = x / (k (1+t)), where k = n(gamma-1)+2. The profile
// constants are solved from (gamma, M): B by coefficient matching, A from
// the total-mass closure.
struct BarenblattProfile {
    double gamma = 2.0;  // adiabatic exponent, > 1
    double mass = 1.0;   // total mass M, > 0
    int dim = 1;         // n in {1, 3}
    double A = 0;        // profile amplitude
    double B = 0;        // profile curvature
    double k = 0;        // similarity index n*gamma - n + 2
    double alpha = 1.0;  // 1/(gamma-1)

    // rho(x,t) = (1+t)^{-n/k} (A - B (1+t)^{-2/k} x^2)^{1/(gamma-1)} inside
    // the support, 0 outside (total function).
    double density(double x, double t) const;
    double velocity(double x, double t) const; // x / (k (1+t))
    double boundary_radius(double t) const;    // sqrt(A/B) (1+t)^{1/k}
    double lagrangian_flow(double x, double t) const; // x (1+t)^{1/k}

    double rho0(double x) const;       // (A - B x^2)^{1/(gamma-1)}, 0 outside
    double rho0_gamma(double x) const; // rho0^gamma, 0 outside
};

BarenblattProfile solve_profile_constants(double gamma, double mass, int dim);

// Total mass of density(.,t) over the moving support, by adaptive quadrature.
double profile_mass(const BarenblattProfile& p, double t, double tol);

// Centered finite-difference residual of rho_t - Laplace(rho^gamma) at an
// interior point; vanishes like step^2 for the exact profile. Throws
// NumericalError when the stencil exits the support or t <= step.
double pme_residual(const BarenblattProfile& p, double x, double t, double step);

// Same stencil applied to the conservation form rho_t + div(rho u); the
// Darcy identity makes both residuals equivalent for the exact profile.
double conservation_residual(const BarenblattProfile& p, double x, double t, double step);

} // namespace vacuumfront
