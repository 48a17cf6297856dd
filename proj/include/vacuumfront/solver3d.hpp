#pragma once

#include <deque>
#include <vector>

#include "vacuumfront/affine.hpp"
#include "vacuumfront/grid.hpp"
#include "vacuumfront/perturbation.hpp"
#include "vacuumfront/solver1d.hpp" // HistoryLevel, BoundarySample, RunParams

namespace vacuumfront {

// Spherically symmetric Lagrangian state for
//   rho0 eta_tt + rho0 eta_t + (eta/r)^2 [ (r^2/eta^2 rho0/eta_r)^gamma ]_r = 0,
// with eta(0,t) = 0 pinned at the origin.
struct FlowState3D {
    std::vector<double> eta;
    std::vector<double> eta_t;
    double t = 0;
    std::deque<HistoryLevel> history;
};

struct Snapshot3D {
    double t = 0;
    std::vector<double> eta;
    std::vector<double> eta_t;
    std::deque<HistoryLevel> history;
};

struct RunOutput3D {
    std::vector<Snapshot3D> snapshots;
    std::vector<BoundarySample> boundary; // hi = R(t), lo unused (0)
};

FlowState3D init_state3(const Grid3D& grid, const CorrectionTrajectory& corr,
                        const PerturbationSpec& pert);

double cfl_dt3(const FlowState3D& state, const Grid3D& grid, double cfl = 0.4);

void step3(FlowState3D& state, const Grid3D& grid, double dt);

RunOutput3D run3(const Grid3D& grid, const CorrectionTrajectory& corr,
                 const PerturbationSpec& pert, const RunParams& params);

} // namespace vacuumfront
