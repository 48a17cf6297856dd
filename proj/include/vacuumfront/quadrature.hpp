#pragma once

#include <functional>

namespace vacuumfront::num {

// Adaptive Gauss-Kronrod (G7,K15) quadrature with recursive bisection.
// Bisection grades the panels toward algebraic endpoint zeros of the
// integrand (density weights behave like dist^{1/(gamma-1)} there), so no
// explicit singularity handling is needed. `tol` is an absolute tolerance
// on the whole interval, distributed over panels by length.
//
// Throws NumericalError if the refinement depth limit is reached before
// convergence.
double quad_weighted(const std::function<double(double)>& f, double lo, double hi, double tol);

} // namespace vacuumfront::num
