#include "vacuumfront/solver1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vacuumfront/errors.hpp"
#include "vacuumfront/kernels.hpp"

namespace vacuumfront {

namespace {

void push_history(FlowState1D& s) {
    s.history.push_front({s.t, s.eta, s.eta_t});
    while (s.history.size() > 3) s.history.pop_back();
}

std::vector<double> snapshot_targets(const RunParams& p) {
    std::vector<double> targets;
    if (p.t_end <= 0) return targets;
    if (p.ladder == SnapshotLadder::linear) {
        for (double t = p.stride; t < p.t_end; t += p.stride) targets.push_back(t);
    } else {
        for (double t = p.stride; t < p.t_end; t *= 2.0) targets.push_back(t);
    }
    targets.push_back(p.t_end);
    return targets;
}

} // namespace

FlowState1D init_state(const Grid1D& grid, const CorrectionTrajectory& corr,
                       const PerturbationSpec& pert) {
    const std::size_t n = grid.nodes();
    FlowState1D s;
    s.t = 0;
    s.eta.resize(n);
    s.eta_t.resize(n);
    const double slope0 = corr.tilde_eta_xt(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        s.eta[i] = grid.x[i] + pert.w0(grid.x[i]);
        s.eta_t[i] = grid.x[i] * slope0 + pert.w1(grid.x[i]);
    }
    if (kernels::min_increment(s.eta) <= 0)
        throw ConfigError("init_state: perturbation breaks monotonicity of eta0");
    push_history(s);
    return s;
}

double cfl_dt(const FlowState1D& state, const Grid1D& grid, double cfl) {
    return cfl * kernels::stable_dt_1d(state.eta, grid);
}

void step(FlowState1D& state, const Grid1D& grid, double dt) {
    if (!(dt > 0)) throw NumericalError("step: non-positive dt");
    const std::size_t n = grid.nodes();
    std::vector<double> sigma(n - 1), accel(n);

    kernels::accel_cons_1d(state.eta, grid, sigma, accel);
    for (std::size_t i = 0; i < n; ++i) state.eta_t[i] += 0.5 * dt * accel[i];

    const double decay = std::exp(-dt);
    const double drift = -std::expm1(-dt); // 1 - e^{-dt}
    for (std::size_t i = 0; i < n; ++i) {
        state.eta[i] += drift * state.eta_t[i];
        state.eta_t[i] *= decay;
    }

    kernels::accel_cons_1d(state.eta, grid, sigma, accel);
    for (std::size_t i = 0; i < n; ++i) state.eta_t[i] += 0.5 * dt * accel[i];

    state.t += dt;
    if (kernels::min_increment(state.eta) <= 0)
        throw NumericalError("step: vacuum interpenetration at t=" + std::to_string(state.t));
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(state.eta[i]) || !std::isfinite(state.eta_t[i]))
            throw NumericalError("step: non-finite state at t=" + std::to_string(state.t));
    push_history(state);
}

RunOutput1D run(const Grid1D& grid, const CorrectionTrajectory& corr,
                const PerturbationSpec& pert, const RunParams& params) {
    if (params.t_end < 0) throw ConfigError("run: t_end must be nonnegative");
    if (!(params.cfl > 0) || params.cfl > 0.9) throw ConfigError("run: cfl must lie in (0, 0.9]");

    FlowState1D s = init_state(grid, corr, pert);
    RunOutput1D out;
    out.theta0 = shift_theta0(s, grid, corr);
    out.boundary.push_back({s.t, s.eta.front(), s.eta.back()});
    out.snapshots.push_back({s.t, s.eta, s.eta_t, s.history});

    const auto targets = snapshot_targets(params);
    for (std::size_t next = 0; next < targets.size();) {
        const double t_target = targets[next];
        if (s.t >= t_target - 1e-12 * (1.0 + t_target)) {
            out.snapshots.push_back({s.t, s.eta, s.eta_t, s.history});
            ++next;
            continue;
        }
        double dt = cfl_dt(s, grid, params.cfl);
        if (params.dt_max > 0) dt = std::min(dt, params.dt_max);
        dt = std::min(dt, t_target - s.t);
        step(s, grid, dt);
        out.boundary.push_back({s.t, s.eta.front(), s.eta.back()});
    }
    return out;
}

double shift_theta0(const FlowState1D& state0, const Grid1D& grid,
                    const CorrectionTrajectory& corr) {
    const double slope0 = corr.tilde_eta_xt(0.0);
    double sum = 0;
    for (std::size_t i = 0; i < grid.nodes(); ++i) {
        const double w0 = state0.eta[i] - grid.x[i];
        const double w1 = state0.eta_t[i] - grid.x[i] * slope0;
        sum += grid.mass[i] * (w0 + w1);
    }
    return sum / grid.total_mass;
}

} // namespace vacuumfront
