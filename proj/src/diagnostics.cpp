#include "vacuumfront/diagnostics.hpp"

#include <cmath>

#include "vacuumfront/errors.hpp"
#include "vacuumfront/kernels.hpp"

namespace vacuumfront {

namespace {

// Three-point first derivative on a possibly nonuniform grid; one-sided
// second-order stencils at the two ends.
std::vector<double> ddx(const std::vector<double>& xs, const std::vector<double>& v) {
    const std::size_t n = xs.size();
    std::vector<double> d(n);
    auto three_point = [&](std::size_t i, std::size_t j0, std::size_t j1, std::size_t j2) {
        const double x0 = xs[j0], x1 = xs[j1], x2 = xs[j2], x = xs[i];
        const double c0 = (2 * x - x1 - x2) / ((x0 - x1) * (x0 - x2));
        const double c1 = (2 * x - x0 - x2) / ((x1 - x0) * (x1 - x2));
        const double c2 = (2 * x - x0 - x1) / ((x2 - x0) * (x2 - x1));
        return c0 * v[j0] + c1 * v[j1] + c2 * v[j2];
    };
    d[0] = three_point(0, 0, 1, 2);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = three_point(i, i - 1, i, i + 1);
    d[n - 1] = three_point(n - 1, n - 3, n - 2, n - 1);
    return d;
}

double weighted_sq(const std::vector<double>& dual, const std::vector<double>& w,
                   const std::vector<double>& v) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += dual[i] * w[i] * v[i] * v[i];
    return s;
}

// Even extrapolation of a field q(r) (finite at the origin) to r = 0 from the
// first two interior nodes: q ~ c0 + c2 r^2.
double even_at_origin(const Grid3D& g, double q1, double q2) {
    const double r1 = g.r[1], r2 = g.r[2];
    return (q1 * r2 * r2 - q2 * r1 * r1) / (r2 * r2 - r1 * r1);
}

// Full accelerations eta_tt of the 1D discrete system for given fields.
std::vector<double> eta_tt_1d(const Grid1D& g, const std::vector<double>& eta,
                              const std::vector<double>& eta_t) {
    const std::size_t n = g.nodes();
    std::vector<double> sigma(n - 1), acc(n);
    kernels::accel_cons_1d(eta, g, sigma, acc);
    for (std::size_t i = 0; i < n; ++i) acc[i] -= eta_t[i];
    return acc;
}

// Time derivative of the 1D acceleration field (differentiated stress faces).
std::vector<double> eta_ttt_1d(const Grid1D& g, const std::vector<double>& eta,
                               const std::vector<double>& eta_t,
                               const std::vector<double>& eta_tt) {
    const std::size_t n = g.nodes();
    const double gamma = g.profile.gamma;
    std::vector<double> tau(n - 1);
    for (std::size_t f = 0; f + 1 < n; ++f) {
        const double dx = g.x[f + 1] - g.x[f];
        const double gx = (eta[f + 1] - eta[f]) / dx;
        const double gxt = (eta_t[f + 1] - eta_t[f]) / dx;
        tau[f] = -gamma * g.face_w[f] * std::pow(gx, -gamma - 1.0) * gxt;
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double tl = (i == 0) ? 0.0 : tau[i - 1];
        const double tr = (i == n - 1) ? 0.0 : tau[i];
        out[i] = -eta_tt[i] - (tr - tl) / g.mass[i];
    }
    return out;
}

// eta_tt and its time derivative for the spherical system.
std::vector<double> eta_tt_3d(const Grid3D& g, const std::vector<double>& eta,
                              const std::vector<double>& eta_t) {
    const std::size_t n = g.nodes();
    std::vector<double> pres(n - 1), acc(n);
    kernels::accel_cons_3d(eta, g, pres, acc);
    acc[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) acc[i] -= eta_t[i];
    return acc;
}

std::vector<double> eta_ttt_3d(const Grid3D& g, const std::vector<double>& eta,
                               const std::vector<double>& eta_t,
                               const std::vector<double>& eta_tt) {
    const std::size_t n = g.nodes();
    const double gamma = g.profile.gamma;
    std::vector<double> pres(n - 1), pdot(n - 1);
    for (std::size_t f = 0; f + 1 < n; ++f) {
        const double dr = g.r[f + 1] - g.r[f];
        const double etaf = 0.5 * (eta[f] + eta[f + 1]);
        const double etaf_t = 0.5 * (eta_t[f] + eta_t[f + 1]);
        const double gr = (eta[f + 1] - eta[f]) / dr;
        const double grt = (eta_t[f + 1] - eta_t[f]) / dr;
        pres[f] = g.face_w[f] * std::pow(etaf * etaf * gr, -gamma);
        pdot[f] = pres[f] * (-gamma) * (2.0 * etaf_t / etaf + grt / gr);
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double pl = pres[i - 1];
        const double pr = (i == n - 1) ? 0.0 : pres[i];
        const double ql = pdot[i - 1];
        const double qr = (i == n - 1) ? 0.0 : pdot[i];
        const double q = eta[i] / g.r[i];
        const double qt = eta_t[i] / g.r[i];
        const double dcons = -(2.0 * q * qt * (pr - pl) + q * q * (qr - ql)) / g.mass[i];
        out[i] = dcons - eta_tt[i];
    }
    return out;
}

} // namespace

EnergyReport energies(const Snapshot1D& snap, const Grid1D& grid,
                      const CorrectionTrajectory& corr) {
    const std::size_t n = grid.nodes();
    const double t = snap.t;
    const double lam = corr.tilde_eta_x(t);
    const double lamt = corr.tilde_eta_xt(t);

    std::vector<double> ref(n), ref_t(n), w(n), wt(n);
    for (std::size_t i = 0; i < n; ++i) {
        ref[i] = grid.x[i] * lam;
        ref_t[i] = grid.x[i] * lamt;
        w[i] = snap.eta[i] - ref[i];
        wt[i] = snap.eta_t[i] - ref_t[i];
    }
    // Second and third time derivatives from the equation, applied to both
    // the solution and the ansatz with the same discrete operator.
    const auto att = eta_tt_1d(grid, snap.eta, snap.eta_t);
    const auto rtt = eta_tt_1d(grid, ref, ref_t);
    const auto attt = eta_ttt_1d(grid, snap.eta, snap.eta_t, att);
    const auto rttt = eta_ttt_1d(grid, ref, ref_t, rtt);
    std::vector<double> wtt(n), wttt(n);
    for (std::size_t i = 0; i < n; ++i) {
        wtt[i] = att[i] - rtt[i];
        wttt[i] = attt[i] - rttt[i];
    }

    const auto wx = ddx(grid.x, w);
    const auto wxx = ddx(grid.x, wx);
    const auto wxxx = ddx(grid.x, wxx);
    const auto wtx = ddx(grid.x, wt);
    const auto wtxx = ddx(grid.x, wtx);
    const auto wttx = ddx(grid.x, wtt);

    const double gamma = grid.profile.gamma;
    std::vector<double> rho_g(n), rho_2g1(n), rho_3g2(n);
    for (std::size_t i = 0; i < n; ++i) {
        rho_g[i] = std::pow(grid.rho0[i], gamma);
        rho_2g1[i] = std::pow(grid.rho0[i], 2 * gamma - 1);
        rho_3g2[i] = std::pow(grid.rho0[i], 3 * gamma - 2);
    }

    const double u = 1.0 + t;
    EnergyReport rep;
    rep.t = t;
    const double l2w = weighted_sq(grid.dual, grid.rho0, w);
    rep.e0 = l2w + weighted_sq(grid.dual, rho_g, wx) + u * weighted_sq(grid.dual, grid.rho0, wt);
    rep.e1 = u * u *
             (weighted_sq(grid.dual, grid.rho0, wt) + weighted_sq(grid.dual, rho_g, wtx) +
              u * weighted_sq(grid.dual, grid.rho0, wtt));
    rep.e2 = u * u * u * u *
             (weighted_sq(grid.dual, grid.rho0, wtt) + weighted_sq(grid.dual, rho_g, wttx) +
              u * weighted_sq(grid.dual, grid.rho0, wttt));
    rep.e01 = weighted_sq(grid.dual, grid.rho0, wx) + weighted_sq(grid.dual, rho_2g1, wxx);
    rep.e02 = weighted_sq(grid.dual, rho_g, wxx) + weighted_sq(grid.dual, rho_3g2, wxxx);
    rep.e11 = u * u * (weighted_sq(grid.dual, grid.rho0, wtx) + weighted_sq(grid.dual, rho_2g1, wtxx));
    rep.total = rep.e0 + rep.e1 + rep.e2 + rep.e01 + rep.e02 + rep.e11;
    rep.tilde_total = rep.total - l2w;
    return rep;
}

EnergyReport energies3(const Snapshot3D& snap, const Grid3D& grid,
                       const CorrectionTrajectory& corr) {
    const std::size_t n = grid.nodes();
    const double t = snap.t;
    const double lam = corr.tilde_eta_x(t);
    const double lamt = corr.tilde_eta_xt(t);

    std::vector<double> ref(n), ref_t(n);
    for (std::size_t i = 0; i < n; ++i) {
        ref[i] = grid.r[i] * lam;
        ref_t[i] = grid.r[i] * lamt;
    }

    auto to_zeta = [&](const std::vector<double>& num) {
        std::vector<double> z(n);
        for (std::size_t i = 1; i < n; ++i) z[i] = num[i] / grid.r[i];
        z[0] = even_at_origin(grid, z[1], z[2]);
        return z;
    };

    std::vector<double> dw(n), dwt(n);
    for (std::size_t i = 0; i < n; ++i) {
        dw[i] = snap.eta[i] - ref[i];
        dwt[i] = snap.eta_t[i] - ref_t[i];
    }
    const auto zeta = to_zeta(dw);
    const auto zt = to_zeta(dwt);

    const auto att = eta_tt_3d(grid, snap.eta, snap.eta_t);
    const auto rtt = eta_tt_3d(grid, ref, ref_t);
    const auto attt = eta_ttt_3d(grid, snap.eta, snap.eta_t, att);
    const auto rttt = eta_ttt_3d(grid, ref, ref_t, rtt);
    std::vector<double> dtt(n), dttt(n);
    for (std::size_t i = 0; i < n; ++i) {
        dtt[i] = att[i] - rtt[i];
        dttt[i] = attt[i] - rttt[i];
    }
    const auto ztt = to_zeta(dtt);
    const auto zttt = to_zeta(dttt);

    const auto zr = ddx(grid.r, zeta);
    const auto zrr = ddx(grid.r, zr);
    const auto zrrr = ddx(grid.r, zrr);
    const auto ztr = ddx(grid.r, zt);
    const auto ztrr = ddx(grid.r, ztr);
    const auto zttr = ddx(grid.r, ztt);

    auto rtimes = [&](const std::vector<double>& v) {
        std::vector<double> o(n);
        for (std::size_t i = 0; i < n; ++i) o[i] = grid.r[i] * v[i];
        return o;
    };
    const auto rzr = rtimes(zr);
    const auto rztr = rtimes(ztr);
    const auto rzttr = rtimes(zttr);

    const double gamma = grid.profile.gamma;
    std::vector<double> w_r4rho(n), w_r2rhog(n), w_r2rho(n), w_r4rho2g1(n), w_r4rho3g2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r2 = grid.r[i] * grid.r[i];
        const double r4 = r2 * r2;
        const double rho = grid.rho0[i];
        w_r4rho[i] = r4 * rho;
        w_r2rhog[i] = r2 * std::pow(rho, gamma);
        w_r2rho[i] = r2 * rho;                             // E_{j,1} first weight
        w_r4rho2g1[i] = r4 * std::pow(rho, 2 * gamma - 1); // E_{j,1} second weight
        w_r4rho3g2[i] = r4 * std::pow(rho, 3 * gamma - 2);
    }

    const double u = 1.0 + t;
    EnergyReport rep;
    rep.t = t;
    const double l2 = weighted_sq(grid.dual, w_r4rho, zeta);
    auto ej = [&](const std::vector<double>& z, const std::vector<double>& rzr_,
                  const std::vector<double>& znext) {
        return weighted_sq(grid.dual, w_r4rho, z) + weighted_sq(grid.dual, w_r2rhog, z) +
               weighted_sq(grid.dual, w_r2rhog, rzr_) + u * weighted_sq(grid.dual, w_r4rho, znext);
    };
    rep.e0 = ej(zeta, rzr, zt);
    rep.e1 = u * u * ej(zt, rztr, ztt);
    rep.e2 = u * u * u * u * ej(ztt, rzttr, zttt);
    rep.e01 = weighted_sq(grid.dual, w_r2rho, zr) + weighted_sq(grid.dual, w_r4rho2g1, zrr);
    rep.e02 = weighted_sq(grid.dual, w_r2rhog, zrr) + weighted_sq(grid.dual, w_r4rho3g2, zrrr);
    rep.e11 =
        u * u * (weighted_sq(grid.dual, w_r2rho, ztr) + weighted_sq(grid.dual, w_r4rho2g1, ztrr));
    rep.total = rep.e0 + rep.e1 + rep.e2 + rep.e01 + rep.e02 + rep.e11;
    rep.tilde_total = rep.total - l2;
    return rep;
}

std::vector<std::pair<double, double>> center_of_mass_law(const RunOutput1D& out,
                                                          const Grid1D& grid) {
    if (out.snapshots.empty()) return {};
    auto theta = [&](const std::vector<double>& eta) {
        double s = 0;
        for (std::size_t i = 0; i < grid.nodes(); ++i) s += grid.mass[i] * eta[i];
        return s / grid.total_mass;
    };
    const double th0 = theta(out.snapshots.front().eta);
    const double thv0 = theta(out.snapshots.front().eta_t);
    std::vector<std::pair<double, double>> dev;
    dev.reserve(out.snapshots.size());
    for (const auto& s : out.snapshots) {
        const double expected = th0 - std::expm1(-s.t) * thv0;
        dev.emplace_back(s.t, theta(s.eta) - expected);
    }
    return dev;
}

FieldErrors field_errors(const Snapshot1D& snap, const Grid1D& grid,
                         const CorrectionTrajectory&) {
    const double t = snap.t;
    const double k = grid.profile.k;
    const double ebar = std::pow(1.0 + t, 1.0 / k);
    const double ebart = ebar / (k * (1.0 + t));
    const auto etax = ddx(grid.x, snap.eta);
    FieldErrors fe;
    for (std::size_t i = 0; i < grid.nodes(); ++i) {
        const double de = std::abs(1.0 / etax[i] - 1.0 / ebar) * std::pow(1.0 + t, 2.0 / k);
        const double dv = std::abs(snap.eta_t[i] - grid.x[i] * ebart) * (1.0 + t);
        fe.density = std::max(fe.density, de);
        fe.velocity = std::max(fe.velocity, dv);
    }
    return fe;
}

FieldErrors field_errors3(const Snapshot3D& snap, const Grid3D& grid,
                          const CorrectionTrajectory&) {
    const double t = snap.t;
    const double k = grid.profile.k;
    const double ebar = std::pow(1.0 + t, 1.0 / k);
    const double ebart = ebar / (k * (1.0 + t));
    const auto etar = ddx(grid.r, snap.eta);
    const double scale_rho = std::pow(1.0 + t, 4.0 / k);
    const double flat = std::pow(1.0 + t, -3.0 / k);
    FieldErrors fe;
    for (std::size_t i = 1; i < grid.nodes(); ++i) {
        const double q = snap.eta[i] / grid.r[i];
        const double de = std::abs(1.0 / (q * q * etar[i]) - flat) * scale_rho;
        const double dv = std::abs(snap.eta_t[i] / grid.r[i] - ebart) * (1.0 + t);
        fe.density = std::max(fe.density, de);
        fe.velocity = std::max(fe.velocity, dv);
    }
    return fe;
}

namespace {

std::optional<num::RateFit> try_fit(const std::vector<double>& t, const std::vector<double>& v,
                                    double lo, double hi) {
    try {
        return num::fit_rate(t, v, lo, hi);
    } catch (const NumericalError&) {
        return std::nullopt;
    }
}

template <class Out, class Grid, class ErrFn, class EnergyFn>
AsymptoticsReport analyze(const Out& out, const Grid& grid, const CorrectionTrajectory& corr,
                          double theta0, bool both_sides, ErrFn errfn, EnergyFn energyfn) {
    AsymptoticsReport rep;
    rep.theta0 = theta0;
    const double L = std::sqrt(grid.profile.A / grid.profile.B);
    const double k = grid.profile.k;
    for (const auto& b : out.boundary) {
        const double xbar = L * std::pow(1.0 + b.t, 1.0 / k);
        rep.t.push_back(b.t);
        rep.residual_hi.push_back(b.hi - xbar - theta0);
        if (both_sides) rep.residual_lo.push_back(b.lo + xbar - theta0);
        rep.oracle.push_back(L * corr.h(b.t));
    }
    for (const auto& s : out.snapshots) {
        rep.snap_t.push_back(s.t);
        const auto fe = errfn(s);
        rep.density_err.push_back(fe.density);
        rep.velocity_err.push_back(fe.velocity);
        rep.energy.push_back(energyfn(s));
    }
    const double t_end = out.boundary.back().t;
    if (t_end >= 100.0) {
        const double lo = std::max(100.0, t_end / 100.0), hi = t_end;
        std::vector<double> absr(rep.residual_hi.size()), logc(rep.residual_hi.size());
        for (std::size_t i = 0; i < absr.size(); ++i) {
            absr[i] = std::abs(rep.residual_hi[i]);
            logc[i] = absr[i] / std::log(2.0 + rep.t[i]);
        }
        rep.fit_residual = try_fit(rep.t, absr, lo, hi);
        rep.fit_residual_logcomp = try_fit(rep.t, logc, lo, hi);

        auto logcomp = [](const std::vector<double>& ts, const std::vector<double>& vs) {
            std::vector<double> o(vs.size());
            for (std::size_t i = 0; i < vs.size(); ++i) o[i] = vs[i] / std::log(2.0 + ts[i]);
            return o;
        };
        rep.fit_density = try_fit(rep.snap_t, rep.density_err, lo, hi);
        rep.fit_density_logcomp = try_fit(rep.snap_t, logcomp(rep.snap_t, rep.density_err), lo, hi);
        rep.fit_velocity = try_fit(rep.snap_t, rep.velocity_err, lo, hi);
        rep.fit_velocity_logcomp =
            try_fit(rep.snap_t, logcomp(rep.snap_t, rep.velocity_err), lo, hi);
        std::vector<double> etot(rep.energy.size());
        for (std::size_t i = 0; i < etot.size(); ++i) etot[i] = rep.energy[i].total;
        rep.fit_energy = try_fit(rep.snap_t, etot, lo, hi);
    }
    if (!rep.energy.empty() && rep.energy.front().total > 1e-300) {
        for (const auto& e : rep.energy)
            rep.energy_max_ratio = std::max(rep.energy_max_ratio, e.total / rep.energy.front().total);
    }
    return rep;
}

} // namespace

AsymptoticsReport boundary_asymptotics(const RunOutput1D& out, const Grid1D& grid,
                                       const CorrectionTrajectory& corr) {
    return analyze(
        out, grid, corr, out.theta0, true,
        [&](const Snapshot1D& s) { return field_errors(s, grid, corr); },
        [&](const Snapshot1D& s) { return energies(s, grid, corr); });
}

AsymptoticsReport boundary_asymptotics3(const RunOutput3D& out, const Grid3D& grid,
                                        const CorrectionTrajectory& corr) {
    return analyze(
        out, grid, corr, 0.0, false,
        [&](const Snapshot3D& s) { return field_errors3(s, grid, corr); },
        [&](const Snapshot3D& s) { return energies3(s, grid, corr); });
}

} // namespace vacuumfront
