#pragma once

#include <span>

namespace vacuumfront::num {

// Result of a least-squares power-law fit v ~ amplitude * (1+t)^exponent.
struct RateFit {
    double exponent = 0;
    double amplitude = 0;
    double window_lo = 0;
    double window_hi = 0;
    double residual_rms = 0;
};

// Least-squares fit of ln(v) against ln(1+t) over window_lo <= t <= window_hi.
// Only strictly positive samples inside the window participate; at least 8
// are required (throws NumericalError otherwise).
RateFit fit_rate(std::span<const double> t, std::span<const double> v, double window_lo,
                 double window_hi);

} // namespace vacuumfront::num
