#pragma once

#include <cstddef>
#include <vector>

#include "vacuumfront/barenblatt.hpp"

namespace vacuumfront {

// Fixed Lagrangian reference grid on [-sqrt(A/B), sqrt(A/B)] with N cells
// (N+1 nodes). Nodes are mirrored exactly about 0 so that the discrete
// center of mass of the reference density vanishes to roundoff.
//
// Nodal masses are chosen well-balanced:
//   m_i = -k (W(x_{i+1/2}) - W(x_{i-1/2})) / x_i,   W = rho0^gamma,
// with W = 0 at the two ghost faces. Combined with the two-point face
// stress this makes eta = lambda(t) x an exact solution of the
// semi-discrete system (the identity W' = -(x/k) rho0 holds discretely),
// and it gives the boundary node the finite mass of its degenerate cell.
// Interior masses agree with rho0(x_i) dx_i to O(dx^2).
struct Grid1D {
    BarenblattProfile profile;
    std::vector<double> x;      // N+1 nodes
    std::vector<double> face;   // N interior faces x_{i+1/2}
    std::vector<double> face_w; // rho0^gamma at the interior faces
    std::vector<double> mass;   // nodal masses m_i > 0
    std::vector<double> rho0;   // rho0 at nodes (diagnostics weights)
    std::vector<double> dual;   // trapezoid weights for nodal quadrature
    double total_mass = 0;      // sum of nodal masses
    bool graded = false;

    std::size_t nodes() const { return x.size(); }
};

Grid1D make_grid_1d(const BarenblattProfile& p, std::size_t n_cells, bool graded = false);

// Radial grid on [0, sqrt(A/B)], node 0 at the origin (pinned in the
// solver). Masses follow the same well-balanced construction for i >= 1;
// mass[0] is unused. face_w stores the face pressure weight (r^2 rho0)^gamma.
struct Grid3D {
    BarenblattProfile profile;
    std::vector<double> r;
    std::vector<double> face;
    std::vector<double> face_w; // (r^2 rho0)^gamma at interior faces
    std::vector<double> mass;
    std::vector<double> rho0;
    std::vector<double> dual;
    bool graded = false;

    std::size_t nodes() const { return r.size(); }
};

Grid3D make_grid_3d(const BarenblattProfile& p, std::size_t n_cells, bool graded = false);

} // namespace vacuumfront
