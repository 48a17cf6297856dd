#pragma once

#include <span>

#include "vacuumfront/grid.hpp"

namespace vacuumfront::kernels {

// Data-parallel inner loops of the Lagrangian solvers. Each kernel exists
// twice: a plain serial reference (_ref) kept for testing, and an OpenMP
// version that parallelizes above a size threshold. Both produce bitwise
// identical results (per-node independent writes; min reductions are exact),
// so runs are reproducible regardless of thread count.

inline constexpr std::size_t parallel_threshold = 8192;

// Conservative part of the 1D acceleration:
//   sigma_f = W_f * ((eta_{i+1}-eta_i)/(x_{i+1}-x_i))^{-gamma}
//   accel_i = -(sigma_{i+1/2} - sigma_{i-1/2}) / m_i     (ghost stresses 0)
void accel_cons_1d_ref(std::span<const double> eta, const Grid1D& g, std::span<double> sigma,
                       std::span<double> accel);
void accel_cons_1d(std::span<const double> eta, const Grid1D& g, std::span<double> sigma,
                   std::span<double> accel);

// Largest stable explicit step for the linearized stress chain, from the
// per-node spring-mass bound dt_i = sqrt(2 m_i / (kappa_L + kappa_R)) with
// face stiffness kappa_f = gamma W_f g_f^{-gamma-1} / dx_f. In the interior
// this reduces to dx / c_eff with c_eff^2 = gamma rho0^{gamma-1} g^{-gamma-1}.
double stable_dt_1d_ref(std::span<const double> eta, const Grid1D& g);
double stable_dt_1d(std::span<const double> eta, const Grid1D& g);

// Smallest nodal increment of eta (monotonicity check).
double min_increment_ref(std::span<const double> eta);
double min_increment(std::span<const double> eta);

// Conservative part of the spherically symmetric acceleration (node 0 is
// pinned, accel[0] = 0):
//   P_f = W_f * (etaf^2 * g_f)^{-gamma},  etaf = (eta_i+eta_{i+1})/2,
//   accel_i = -(eta_i/r_i)^2 (P_{i+1/2} - P_{i-1/2}) / m_i
void accel_cons_3d_ref(std::span<const double> eta, const Grid3D& g, std::span<double> pres,
                       std::span<double> accel);
void accel_cons_3d(std::span<const double> eta, const Grid3D& g, std::span<double> pres,
                   std::span<double> accel);

double stable_dt_3d_ref(std::span<const double> eta, const Grid3D& g);
double stable_dt_3d(std::span<const double> eta, const Grid3D& g);

} // namespace vacuumfront::kernels
