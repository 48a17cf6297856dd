#pragma once

#include <functional>

namespace vacuumfront::num {

// Bracketing root finder (bisection with secant acceleration). Requires a
// sign change on [lo, hi]; the returned root lies in the bracket with
// |bracket| <= tol. Throws NumericalError if g(lo) and g(hi) have the same
// sign.
double find_root(const std::function<double(double)>& g, double lo, double hi, double tol);

} // namespace vacuumfront::num
