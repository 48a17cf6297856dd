#pragma once

#include <array>

#include "vacuumfront/barenblatt.hpp"
#include "vacuumfront/ode.hpp"

namespace vacuumfront {

// Coefficients of the exact affine solution family: sound speed squared
// c^2 = e(t) - b(t)|x|^2 and linear velocity u = a(t) x.
struct AffineState {
    double a = 0; // strain rate
    double b = 0; // sound-speed curvature, > 0
    double e = 0; // central sound-speed squared, > 0
    double t = 0;
};

// Time derivatives (a', b', e') of the affine coefficients:
//   a' = -a^2 - a + 2b/(gamma-1)
//   b' = -(n(gamma-1)+2) a b
//   e' = -n(gamma-1) a e
std::array<double, 3> affine_rhs(const AffineState& s, double gamma, int dim);

// First integral of the (b,e) subsystem, constant along trajectories.
double affine_conserved(const AffineState& s, double gamma, int dim);

class AffineTrajectory {
  public:
    AffineTrajectory(num::OdeTrajectory traj, double gamma, int dim)
        : traj_(std::move(traj)), gamma_(gamma), dim_(dim) {}

    AffineState at(double t) const;
    const num::OdeTrajectory& samples() const { return traj_; }
    double gamma() const { return gamma_; }
    int dim() const { return dim_; }

  private:
    num::OdeTrajectory traj_;
    double gamma_;
    int dim_;
};

// Integrates the affine system; aborts if positivity of (b, e) is lost.
AffineTrajectory integrate_affine(const AffineState& init, double gamma, int dim, double t_end,
                                  double tol);

// Affine coefficients of the Barenblatt solution itself:
//   a = 1/(k(1+t)),  b = gamma B (1+t)^{-1},  e = gamma A (1+t)^{-n(gamma-1)/k}.
AffineState barenblatt_affine(const BarenblattProfile& p, double t);

// Boundary correction h(t) solving
//   h'' + h' - k^{-1} (g + h)^{1-k} + g'' + g' = 0,   g(t) = (1+t)^{1/k},
//   h(0) = h'(0) = 0,
// with k = gamma+1 in 1D and k = 3 gamma - 1 in 3D. The corrected coefficient
// g + h is the exact Lagrangian stretch of the ansatz flow.
class CorrectionTrajectory {
  public:
    CorrectionTrajectory(num::OdeTrajectory traj, double gamma, int dim);

    double h(double t) const;
    double h_t(double t) const;
    double eta_bar_x(double t) const;  // (1+t)^{1/k}
    double eta_bar_xt(double t) const; // (1/k)(1+t)^{1/k-1}
    double tilde_eta_x(double t) const;
    double tilde_eta_xt(double t) const;

    double gamma() const { return gamma_; }
    int dim() const { return dim_; }
    double k() const { return k_; }
    double t_end() const { return traj_.t_end(); }
    const num::OdeTrajectory& samples() const { return traj_; }

  private:
    num::OdeTrajectory traj_; // components (h, h_t)
    double gamma_;
    int dim_;
    double k_;
};

CorrectionTrajectory integrate_correction(double gamma, int dim, double t_end, double tol);

// Scalar flow coefficient lambda solving lambda'' + lambda' = k^{-1} lambda^{1-k}
// with lambda(0) = 1, lambda'(0) = a0; eta = lambda(t) x is then an exact
// solution of the fixed-domain problem with Barenblatt initial density. For
// a0 = 1/k it coincides with eta_bar_x + h by uniqueness.
class AffineFlowTrajectory {
  public:
    AffineFlowTrajectory(num::OdeTrajectory traj, double gamma, int dim, double k)
        : traj_(std::move(traj)), gamma_(gamma), dim_(dim), k_(k) {}

    double lambda(double t) const { return traj_.value(0, t); }
    double lambda_t(double t) const { return traj_.value(1, t); }
    double k() const { return k_; }
    double t_end() const { return traj_.t_end(); }
    const num::OdeTrajectory& samples() const { return traj_; }

  private:
    num::OdeTrajectory traj_;
    double gamma_;
    int dim_;
    double k_;
};

AffineFlowTrajectory exact_affine_flow(double gamma, int dim, double a0, double t_end, double tol);

// Similarity index of the Lagrangian flow: gamma+1 in 1D, 3 gamma - 1 in 3D.
double flow_index(double gamma, int dim);

} // namespace vacuumfront
