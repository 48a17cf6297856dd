#include "vacuumfront/solver3d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vacuumfront/errors.hpp"
#include "vacuumfront/kernels.hpp"

namespace vacuumfront {

namespace {

void push_history(FlowState3D& s) {
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

FlowState3D init_state3(const Grid3D& grid, const CorrectionTrajectory& corr,
                        const PerturbationSpec& pert) {
    if (pert.kind == PerturbationSpec::Kind::translation)
        throw ConfigError("init_state3: translation breaks spherical symmetry");
    const std::size_t n = grid.nodes();
    FlowState3D s;
    s.t = 0;
    s.eta.resize(n);
    s.eta_t.resize(n);
    const double slope0 = corr.tilde_eta_xt(0.0);
    s.eta[0] = 0.0;
    s.eta_t[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        s.eta[i] = grid.r[i] * (1.0 + pert.zeta0(grid.r[i]));
        s.eta_t[i] = grid.r[i] * (slope0 + pert.zeta1(grid.r[i]));
    }
    if (kernels::min_increment(s.eta) <= 0)
        throw ConfigError("init_state3: perturbation breaks monotonicity of eta0");
    push_history(s);
    return s;
}

double cfl_dt3(const FlowState3D& state, const Grid3D& grid, double cfl) {
    return cfl * kernels::stable_dt_3d(state.eta, grid);
}

void step3(FlowState3D& state, const Grid3D& grid, double dt) {
    if (!(dt > 0)) throw NumericalError("step3: non-positive dt");
    const std::size_t n = grid.nodes();
    std::vector<double> pres(n - 1), accel(n);

    kernels::accel_cons_3d(state.eta, grid, pres, accel);
    for (std::size_t i = 1; i < n; ++i) state.eta_t[i] += 0.5 * dt * accel[i];

    const double decay = std::exp(-dt);
    const double drift = -std::expm1(-dt);
    for (std::size_t i = 1; i < n; ++i) {
        state.eta[i] += drift * state.eta_t[i];
        state.eta_t[i] *= decay;
    }

    kernels::accel_cons_3d(state.eta, grid, pres, accel);
    for (std::size_t i = 1; i < n; ++i) state.eta_t[i] += 0.5 * dt * accel[i];

    state.t += dt;
    if (kernels::min_increment(state.eta) <= 0)
        throw NumericalError("step3: vacuum interpenetration at t=" + std::to_string(state.t));
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(state.eta[i]) || !std::isfinite(state.eta_t[i]))
            throw NumericalError("step3: non-finite state at t=" + std::to_string(state.t));
    push_history(state);
}

RunOutput3D run3(const Grid3D& grid, const CorrectionTrajectory& corr,
                 const PerturbationSpec& pert, const RunParams& params) {
    if (params.t_end < 0) throw ConfigError("run3: t_end must be nonnegative");
    if (!(params.cfl > 0) || params.cfl > 0.9) throw ConfigError("run3: cfl must lie in (0, 0.9]");

    FlowState3D s = init_state3(grid, corr, pert);
    RunOutput3D out;
    out.boundary.push_back({s.t, 0.0, s.eta.back()});
    out.snapshots.push_back({s.t, s.eta, s.eta_t, s.history});

    const auto targets = snapshot_targets(params);
    for (std::size_t next = 0; next < targets.size();) {
        const double t_target = targets[next];
        if (s.t >= t_target - 1e-12 * (1.0 + t_target)) {
            out.snapshots.push_back({s.t, s.eta, s.eta_t, s.history});
            ++next;
            continue;
        }
        double dt = cfl_dt3(s, grid, params.cfl);
        if (params.dt_max > 0) dt = std::min(dt, params.dt_max);
        dt = std::min(dt, t_target - s.t);
        step3(s, grid, dt);
        out.boundary.push_back({s.t, 0.0, s.eta.back()});
    }
    return out;
}

} // namespace vacuumfront
