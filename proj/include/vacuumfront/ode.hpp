#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace vacuumfront::num {

// First-order system y' = rhs(t, y). The right-hand side must be a total
// function of its arguments (no hidden state).
struct OdeProblem {
    std::size_t dimension = 0;
    std::function<void(double t, std::span<const double> y, std::span<double> dydt)> rhs;
    double t0 = 0.0;
    std::vector<double> y0;
};

// Accepted-step samples of an integration, with the state derivative stored
// at every sample so trajectories can be evaluated between samples by cubic
// Hermite interpolation.
class OdeTrajectory {
  public:
    OdeTrajectory() = default;
    OdeTrajectory(std::size_t dim) : dim_(dim) {}

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return t_.size(); }
    const std::vector<double>& times() const { return t_; }
    double t_begin() const { return t_.front(); }
    double t_end() const { return t_.back(); }

    double state(std::size_t sample, std::size_t comp) const { return y_[sample * dim_ + comp]; }
    double deriv(std::size_t sample, std::size_t comp) const { return dy_[sample * dim_ + comp]; }

    // Cubic Hermite evaluation of component `comp` at time t.
    // Throws NumericalError if t lies outside the sampled range.
    double value(std::size_t comp, double t) const;

    void push(double t, std::span<const double> y, std::span<const double> dy);

  private:
    std::size_t locate(double t) const;

    std::size_t dim_ = 0;
    std::vector<double> t_;
    std::vector<double> y_;  // row-major, size() * dim_
    std::vector<double> dy_;
};

// Adaptive Dormand-Prince 5(4) embedded pair with error-per-unit-step
// control, so that long integrations (t up to 1e6) keep the accumulated
// error proportional to the tolerance. Samples every accepted step; the
// returned trajectory includes t0 and t_end exactly.
//
// Throws NumericalError on step-size underflow or non-finite right-hand
// side values.
OdeTrajectory integrate_ode(const OdeProblem& problem, double t_end, double rel_tol,
                            double abs_tol);

} // namespace vacuumfront::num
