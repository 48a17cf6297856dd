#pragma once

#include <deque>
#include <vector>

#include "vacuumfront/affine.hpp"
#include "vacuumfront/grid.hpp"
#include "vacuumfront/perturbation.hpp"

namespace vacuumfront {

struct HistoryLevel {
    double t = 0;
    std::vector<double> eta;
    std::vector<double> eta_t;
};

// Lagrangian state for the fixed-domain problem
//   rho0 eta_tt + rho0 eta_t + (rho0^gamma eta_x^{-gamma})_x = 0 on I.
struct FlowState1D {
    std::vector<double> eta;
    std::vector<double> eta_t;
    double t = 0;
    std::deque<HistoryLevel> history; // last 3 accepted levels (most recent first)
};

struct Snapshot1D {
    double t = 0;
    std::vector<double> eta;
    std::vector<double> eta_t;
    std::deque<HistoryLevel> history;
};

struct BoundarySample {
    double t;
    double lo; // eta at the left endpoint (1D) — unused in 3D
    double hi; // eta at the right endpoint / radius
};

enum class SnapshotLadder { geometric, linear };

struct RunParams {
    double t_end = 10.0;
    double cfl = 0.4;
    double dt_max = 0.0; // 0 = no cap
    SnapshotLadder ladder = SnapshotLadder::geometric;
    double stride = 0.25; // first geometric rung / linear spacing
};

struct RunOutput1D {
    std::vector<Snapshot1D> snapshots;
    std::vector<BoundarySample> boundary;
    double theta0 = 0;
};

// eta(x,0) = x + w0(x), eta_t(x,0) = x * tilde_eta_xt(0) + w1(x).
// Rejects initial data that break discrete monotonicity.
FlowState1D init_state(const Grid1D& grid, const CorrectionTrajectory& corr,
                       const PerturbationSpec& pert);

// Largest stable step scaled by the CFL number.
double cfl_dt(const FlowState1D& state, const Grid1D& grid, double cfl = 0.4);

// One step of the splitting: conservative half kick, exact damped drift,
// exact velocity decay, conservative half kick. Damping (and with it the
// center-of-mass law and velocity-offset modes) is integrated exactly.
// Aborts on lost monotonicity or non-finite values.
void step(FlowState1D& state, const Grid1D& grid, double dt);

RunOutput1D run(const Grid1D& grid, const CorrectionTrajectory& corr,
                const PerturbationSpec& pert, const RunParams& params);

// Discrete shift theta0 = (1/M) sum m_i (w0_i + w1_i) of an initial state.
double shift_theta0(const FlowState1D& state0, const Grid1D& grid,
                    const CorrectionTrajectory& corr);

} // namespace vacuumfront
