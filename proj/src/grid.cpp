#include "vacuumfront/grid.hpp"

#include <cmath>
#include <numbers>

#include "vacuumfront/errors.hpp"
#include "vacuumfront/quadrature.hpp"

namespace vacuumfront {

Grid1D make_grid_1d(const BarenblattProfile& p, std::size_t n_cells, bool graded) {
    if (p.dim != 1) throw ConfigError("make_grid_1d: profile must be one-dimensional");
    if (n_cells < 4) throw ConfigError("make_grid_1d: too few cells");
    const std::size_t n = n_cells;
    const double L = std::sqrt(p.A / p.B);

    Grid1D g;
    g.profile = p;
    g.graded = graded;
    g.x.resize(n + 1);
    for (std::size_t i = 0; i <= n / 2; ++i) {
        const double xi = graded ? -L * std::cos(std::numbers::pi * double(i) / double(n))
                                 : L * (2.0 * double(i) - double(n)) / double(n);
        g.x[i] = xi;
        g.x[n - i] = -xi; // exact mirror
    }
    if (n % 2 == 0) g.x[n / 2] = 0.0;

    g.face.resize(n);
    g.face_w.resize(n);
    for (std::size_t f = 0; f < n; ++f) {
        g.face[f] = 0.5 * (g.x[f] + g.x[f + 1]);
        g.face_w[f] = p.rho0_gamma(g.face[f]);
    }

    g.mass.resize(n + 1);
    g.rho0.resize(n + 1);
    g.dual.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        g.rho0[i] = p.rho0(g.x[i]);
        const double wl = (i == 0) ? 0.0 : g.face_w[i - 1];
        const double wr = (i == n) ? 0.0 : g.face_w[i];
        if (g.x[i] != 0.0) {
            g.mass[i] = -p.k * (wr - wl) / g.x[i];
        } else {
            // Dual-cell mass at the center node, where the balanced formula
            // degenerates to 0/0.
            auto f = [&](double x) { return p.rho0(x); };
            g.mass[i] = num::quad_weighted(f, g.face[i - 1], g.face[i], 1e-14);
        }
        const double xl = (i == 0) ? g.x[0] : g.face[i - 1];
        const double xr = (i == n) ? g.x[n] : g.face[i];
        g.dual[i] = xr - xl;
        g.total_mass += g.mass[i];
    }
    return g;
}

Grid3D make_grid_3d(const BarenblattProfile& p, std::size_t n_cells, bool graded) {
    if (p.dim != 3) throw ConfigError("make_grid_3d: profile must be three-dimensional");
    if (n_cells < 4) throw ConfigError("make_grid_3d: too few cells");
    const std::size_t n = n_cells;
    const double L = std::sqrt(p.A / p.B);

    Grid3D g;
    g.profile = p;
    g.graded = graded;
    g.r.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        g.r[i] = graded ? L * std::sin(0.5 * std::numbers::pi * double(i) / double(n))
                        : L * double(i) / double(n);
    g.r[0] = 0.0;

    g.face.resize(n);
    g.face_w.resize(n);
    for (std::size_t f = 0; f < n; ++f) {
        g.face[f] = 0.5 * (g.r[f] + g.r[f + 1]);
        const double rr = g.face[f];
        g.face_w[f] = std::pow(rr * rr * p.rho0(rr), p.gamma);
    }

    g.mass.resize(n + 1, 0.0);
    g.rho0.resize(n + 1);
    g.dual.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        g.rho0[i] = p.rho0(g.r[i]);
        if (i >= 1) {
            const double wl = p.rho0_gamma(g.face[i - 1]);
            const double wr = (i == n) ? 0.0 : p.rho0_gamma(g.face[i]);
            g.mass[i] = -p.k * (wr - wl) / g.r[i];
        }
        const double rl = (i == 0) ? g.r[0] : g.face[i - 1];
        const double rr = (i == n) ? g.r[n] : g.face[i];
        g.dual[i] = rr - rl;
    }
    return g;
}

} // namespace vacuumfront
