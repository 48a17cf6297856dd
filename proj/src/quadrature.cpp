#include "vacuumfront/quadrature.hpp"

#include <cmath>
#include <string>

#include "vacuumfront/errors.hpp"

namespace vacuumfront::num {

namespace {

// 15-point Kronrod nodes on [-1,1] (positive half) and weights, with the
// embedded 7-point Gauss weights on the shared nodes.
constexpr double xk[8] = {0.0,
                          0.2077849550078985,
                          0.4058451513773972,
                          0.5860872354676911,
                          0.7415311855993944,
                          0.8648644233597691,
                          0.9491079123427585,
                          0.9914553711208126};
constexpr double wk[8] = {0.2094821410847278,
                          0.2044329400752989,
                          0.1903505780647854,
                          0.1690047266392679,
                          0.1406532597155259,
                          0.1047900103222502,
                          0.0630920926299786,
                          0.0229353220105292};
// Gauss weights attach to the even-indexed Kronrod nodes.
constexpr double wg[4] = {0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
                          0.1294849661688697};

struct Panel {
    double integral;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double ik = wk[0] * fc;
    double ig = wg[0] * fc;
    for (int j = 1; j < 8; ++j) {
        const double f1 = f(c - h * xk[j]);
        const double f2 = f(c + h * xk[j]);
        ik += wk[j] * (f1 + f2);
        if (j % 2 == 0) ig += wg[j / 2] * (f1 + f2);
    }
    ik *= h;
    ig *= h;
    return {ik, std::abs(ik - ig)};
}

double refine(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
    const Panel p = gk15(f, a, b);
    if (p.error <= tol || p.error <= 1e-300) return p.integral;
    if (depth >= 60)
        throw NumericalError("quad_weighted: no convergence after max refinement depth on [" +
                             std::to_string(a) + "," + std::to_string(b) + "]");
    const double m = 0.5 * (a + b);
    return refine(f, a, m, 0.5 * tol, depth + 1) + refine(f, m, b, 0.5 * tol, depth + 1);
}

} // namespace

double quad_weighted(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw ConfigError("quad_weighted: requires lo < hi");
    if (!(tol > 0)) throw ConfigError("quad_weighted: tolerance must be positive");
    return refine(f, lo, hi, tol, 0);
}

} // namespace vacuumfront::num
