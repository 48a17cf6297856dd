#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vacuumfront/affine.hpp"
#include "vacuumfront/grid.hpp"
#include "vacuumfront/rate_fit.hpp"
#include "vacuumfront/solver1d.hpp"
#include "vacuumfront/solver3d.hpp"

namespace vacuumfront {

// Truncated perturbation energies (time orders j <= 2, mixed orders with
// j+i <= 2). Time derivatives of the perturbation are evaluated from the
// discrete equation (residual form), not by differencing stored levels.
struct EnergyReport {
    double t = 0;
    double e0 = 0, e1 = 0, e2 = 0;    // E_j
    double e01 = 0, e02 = 0, e11 = 0; // E_{j,i}
    double total = 0;
    double tilde_total = 0; // total minus the zeroth weighted L2 of w
};

EnergyReport energies(const Snapshot1D& snap, const Grid1D& grid,
                      const CorrectionTrajectory& corr);
EnergyReport energies3(const Snapshot3D& snap, const Grid3D& grid,
                       const CorrectionTrajectory& corr);

// Deviation of the discrete center of mass from theta(0) + (1-e^{-t}) theta'(0)
// at every snapshot time.
std::vector<std::pair<double, double>> center_of_mass_law(const RunOutput1D& out,
                                                          const Grid1D& grid);

// Weighted sup-norm distances to the Barenblatt fields (the bounds of the
// density/velocity convergence estimates divided out).
struct FieldErrors {
    double density = 0;
    double velocity = 0;
};

FieldErrors field_errors(const Snapshot1D& snap, const Grid1D& grid,
                         const CorrectionTrajectory& corr);
FieldErrors field_errors3(const Snapshot3D& snap, const Grid3D& grid,
                          const CorrectionTrajectory& corr);

struct AsymptoticsReport {
    double theta0 = 0;

    // Boundary residual series at every accepted step.
    std::vector<double> t;
    std::vector<double> residual_hi; // x+ - xbar+ - theta0   (3D: R - Rbar)
    std::vector<double> residual_lo; // x- - xbar- - theta0   (1D only)
    std::vector<double> oracle;      // sqrt(A/B) h(t), the zero-data closed form

    std::optional<num::RateFit> fit_residual;         // |residual_hi| vs (1+t)
    std::optional<num::RateFit> fit_residual_logcomp; // |residual_hi|/ln(2+t)

    // Field errors and energies at snapshot times.
    std::vector<double> snap_t;
    std::vector<double> density_err, velocity_err;
    std::vector<EnergyReport> energy;
    std::optional<num::RateFit> fit_density, fit_density_logcomp;
    std::optional<num::RateFit> fit_velocity, fit_velocity_logcomp;
    std::optional<num::RateFit> fit_energy;
    double energy_max_ratio = 0; // max E_total / E_total(0), 0 when E(0) = 0
};

AsymptoticsReport boundary_asymptotics(const RunOutput1D& out, const Grid1D& grid,
                                       const CorrectionTrajectory& corr);
AsymptoticsReport boundary_asymptotics3(const RunOutput3D& out, const Grid3D& grid,
                                        const CorrectionTrajectory& corr);

} // namespace vacuumfront
