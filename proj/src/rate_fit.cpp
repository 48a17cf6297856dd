#include "vacuumfront/rate_fit.hpp"

#include <cmath>
#include <vector>

#include "vacuumfront/errors.hpp"

namespace vacuumfront::num {

RateFit fit_rate(std::span<const double> t, std::span<const double> v, double window_lo,
                 double window_hi) {
    if (t.size() != v.size()) throw ConfigError("fit_rate: mismatched series lengths");
    if (!(window_lo < window_hi)) throw ConfigError("fit_rate: requires window_lo < window_hi");

    std::vector<double> u, w;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < window_lo || t[i] > window_hi) continue;
        if (!(v[i] > 0)) continue;
        u.push_back(std::log1p(t[i]));
        w.push_back(std::log(v[i]));
    }
    if (u.size() < 8)
        throw NumericalError("fit_rate: fewer than 8 positive samples inside the window");

    const double n = static_cast<double>(u.size());
    double su = 0, sw = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        su += u[i];
        sw += w[i];
    }
    const double mu = su / n, mw = sw / n;
    double suu = 0, suw = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        suu += (u[i] - mu) * (u[i] - mu);
        suw += (u[i] - mu) * (w[i] - mw);
    }
    if (suu == 0) throw NumericalError("fit_rate: degenerate window (all samples at one time)");

    RateFit fit;
    fit.exponent = suw / suu;
    fit.amplitude = std::exp(mw - fit.exponent * mu);
    fit.window_lo = window_lo;
    fit.window_hi = window_hi;
    double ss = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = w[i] - (mw + fit.exponent * (u[i] - mu));
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    return fit;
}

} // namespace vacuumfront::num
