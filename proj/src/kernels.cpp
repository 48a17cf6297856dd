#include "vacuumfront/kernels.hpp"

#include <cmath>
#include <limits>

namespace vacuumfront::kernels {

namespace {

inline double face_sigma(const Grid1D& g, std::span<const double> eta, std::size_t f) {
    const double gx = (eta[f + 1] - eta[f]) / (g.x[f + 1] - g.x[f]);
    return g.face_w[f] * std::pow(gx, -g.profile.gamma);
}

inline double node_accel_1d(const Grid1D& g, std::span<const double> sigma, std::size_t i) {
    const std::size_t n = g.x.size() - 1;
    const double sl = (i == 0) ? 0.0 : sigma[i - 1];
    const double sr = (i == n) ? 0.0 : sigma[i];
    return -(sr - sl) / g.mass[i];
}

inline double face_kappa_1d(const Grid1D& g, std::span<const double> eta, std::size_t f) {
    const double dx = g.x[f + 1] - g.x[f];
    const double gx = (eta[f + 1] - eta[f]) / dx;
    return g.profile.gamma * g.face_w[f] * std::pow(gx, -g.profile.gamma - 1.0) / dx;
}

inline double node_dt_1d(const Grid1D& g, std::span<const double> eta, std::size_t i) {
    const std::size_t n = g.x.size() - 1;
    const double kl = (i == 0) ? 0.0 : face_kappa_1d(g, eta, i - 1);
    const double kr = (i == n) ? 0.0 : face_kappa_1d(g, eta, i);
    const double ks = kl + kr;
    return ks > 0 ? std::sqrt(2.0 * g.mass[i] / ks) : std::numeric_limits<double>::infinity();
}

inline double face_pressure(const Grid3D& g, std::span<const double> eta, std::size_t f) {
    const double etaf = 0.5 * (eta[f] + eta[f + 1]);
    const double gr = (eta[f + 1] - eta[f]) / (g.r[f + 1] - g.r[f]);
    return g.face_w[f] * std::pow(etaf * etaf * gr, -g.profile.gamma);
}

inline double node_accel_3d(const Grid3D& g, std::span<const double> eta,
                            std::span<const double> pres, std::size_t i) {
    const std::size_t n = g.r.size() - 1;
    const double pl = pres[i - 1];
    const double pr = (i == n) ? 0.0 : pres[i];
    const double q = eta[i] / g.r[i];
    return -q * q * (pr - pl) / g.mass[i];
}

inline double node_dt_3d(const Grid3D& g, std::span<const double> eta,
                         std::span<const double> pres, std::size_t i) {
    const std::size_t n = g.r.size() - 1;
    const double q2 = (eta[i] / g.r[i]) * (eta[i] / g.r[i]);
    double ks = 0;
    for (int side = 0; side < 2; ++side) {
        const std::size_t f = (side == 0) ? i - 1 : i;
        if (side == 1 && i == n) continue;
        const double dr = g.r[f + 1] - g.r[f];
        const double etaf = 0.5 * (eta[f] + eta[f + 1]);
        const double gr = (eta[f + 1] - eta[f]) / dr;
        ks += q2 * g.profile.gamma * pres[f] * (1.0 / (gr * dr) + 1.0 / etaf);
    }
    return ks > 0 ? std::sqrt(2.0 * g.mass[i] / ks) : std::numeric_limits<double>::infinity();
}

} // namespace

void accel_cons_1d_ref(std::span<const double> eta, const Grid1D& g, std::span<double> sigma,
                       std::span<double> accel) {
    const std::size_t n = g.x.size() - 1;
    for (std::size_t f = 0; f < n; ++f) sigma[f] = face_sigma(g, eta, f);
    for (std::size_t i = 0; i <= n; ++i) accel[i] = node_accel_1d(g, sigma, i);
}

void accel_cons_1d(std::span<const double> eta, const Grid1D& g, std::span<double> sigma,
                   std::span<double> accel) {
    const std::size_t n = g.x.size() - 1;
    const bool par = n >= parallel_threshold;
#pragma omp parallel for if (par) schedule(static)
    for (std::size_t f = 0; f < n; ++f) sigma[f] = face_sigma(g, eta, f);
#pragma omp parallel for if (par) schedule(static)
    for (std::size_t i = 0; i <= n; ++i) accel[i] = node_accel_1d(g, sigma, i);
}

double stable_dt_1d_ref(std::span<const double> eta, const Grid1D& g) {
    const std::size_t n = g.x.size() - 1;
    double dt = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= n; ++i) dt = std::min(dt, node_dt_1d(g, eta, i));
    return dt;
}

double stable_dt_1d(std::span<const double> eta, const Grid1D& g) {
    const std::size_t n = g.x.size() - 1;
    const bool par = n >= parallel_threshold;
    double dt = std::numeric_limits<double>::infinity();
#pragma omp parallel for if (par) schedule(static) reduction(min : dt)
    for (std::size_t i = 0; i <= n; ++i) dt = std::min(dt, node_dt_1d(g, eta, i));
    return dt;
}

double min_increment_ref(std::span<const double> eta) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < eta.size(); ++i) m = std::min(m, eta[i + 1] - eta[i]);
    return m;
}

double min_increment(std::span<const double> eta) {
    const std::size_t n = eta.size() - 1;
    const bool par = n >= parallel_threshold;
    double m = std::numeric_limits<double>::infinity();
#pragma omp parallel for if (par) schedule(static) reduction(min : m)
    for (std::size_t i = 0; i < n; ++i) m = std::min(m, eta[i + 1] - eta[i]);
    return m;
}

void accel_cons_3d_ref(std::span<const double> eta, const Grid3D& g, std::span<double> pres,
                       std::span<double> accel) {
    const std::size_t n = g.r.size() - 1;
    for (std::size_t f = 0; f < n; ++f) pres[f] = face_pressure(g, eta, f);
    accel[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) accel[i] = node_accel_3d(g, eta, pres, i);
}

void accel_cons_3d(std::span<const double> eta, const Grid3D& g, std::span<double> pres,
                   std::span<double> accel) {
    const std::size_t n = g.r.size() - 1;
    const bool par = n >= parallel_threshold;
#pragma omp parallel for if (par) schedule(static)
    for (std::size_t f = 0; f < n; ++f) pres[f] = face_pressure(g, eta, f);
    accel[0] = 0.0;
#pragma omp parallel for if (par) schedule(static)
    for (std::size_t i = 1; i <= n; ++i) accel[i] = node_accel_3d(g, eta, pres, i);
}

double stable_dt_3d_ref(std::span<const double> eta, const Grid3D& g) {
    const std::size_t n = g.r.size() - 1;
    std::vector<double> pres(n);
    for (std::size_t f = 0; f < n; ++f) pres[f] = face_pressure(g, eta, f);
    double dt = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= n; ++i) dt = std::min(dt, node_dt_3d(g, eta, pres, i));
    return dt;
}

double stable_dt_3d(std::span<const double> eta, const Grid3D& g) {
    const std::size_t n = g.r.size() - 1;
    const bool par = n >= parallel_threshold;
    std::vector<double> pres(n);
#pragma omp parallel for if (par) schedule(static)
    for (std::size_t f = 0; f < n; ++f) pres[f] = face_pressure(g, eta, f);
    double dt = std::numeric_limits<double>::infinity();
#pragma omp parallel for if (par) schedule(static) reduction(min : dt)
    for (std::size_t i = 1; i <= n; ++i) dt = std::min(dt, node_dt_3d(g, eta, pres, i));
    return dt;
}

} // namespace vacuumfront::kernels
