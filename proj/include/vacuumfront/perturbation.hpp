#pragma once

#include <cmath>
#include <functional>

namespace vacuumfront {

// Initial-data perturbation on top of the Barenblatt start. In 1D the fields
// are the Lagrangian displacement and velocity offsets (w0, w1):
//   eta(x,0) = x + w0(x),  eta_t(x,0) = x/k + w1(x).
// In 3D they act on the relative radial stretch (zeta0, zeta1):
//   eta(r,0) = r (1 + zeta0(r)),  eta_t(r,0) = r (1/k + zeta1(r)).
struct PerturbationSpec {
    enum class Kind { zero, translation, kick, bump, dilation, custom };

    Kind kind = Kind::zero;
    double epsilon = 0.0; // translation / bump / dilation amplitude
    double v0 = 0.0;      // kick velocity
    double x_c = 0.0;     // bump center
    double sigma = 1.0;   // bump width
    std::function<double(double)> custom_w0; // custom displacement (1D) / zeta0 (3D)
    std::function<double(double)> custom_w1; // custom velocity (1D) / zeta1 (3D)

    double w0(double x) const {
        switch (kind) {
            case Kind::zero: return 0.0;
            case Kind::translation: return epsilon;
            case Kind::kick: return 0.0;
            case Kind::bump: return epsilon * gauss(x);
            case Kind::dilation: return epsilon * x;
            case Kind::custom: return custom_w0 ? custom_w0(x) : 0.0;
        }
        return 0.0;
    }
    double w1(double x) const {
        if (kind == Kind::kick) return v0;
        if (kind == Kind::custom && custom_w1) return custom_w1(x);
        return 0.0;
    }
    double zeta0(double r) const {
        switch (kind) {
            case Kind::zero: return 0.0;
            case Kind::dilation: return epsilon;
            case Kind::bump: return epsilon * gauss(r);
            case Kind::kick: return 0.0;
            case Kind::custom: return custom_w0 ? custom_w0(r) : 0.0;
            default: return 0.0;
        }
    }
    double zeta1(double r) const {
        if (kind == Kind::kick) return v0;
        if (kind == Kind::custom && custom_w1) return custom_w1(r);
        return 0.0;
    }

    static PerturbationSpec zero_spec() { return {}; }
    static PerturbationSpec translation(double eps) {
        PerturbationSpec p;
        p.kind = Kind::translation;
        p.epsilon = eps;
        return p;
    }
    static PerturbationSpec kick(double v) {
        PerturbationSpec p;
        p.kind = Kind::kick;
        p.v0 = v;
        return p;
    }
    static PerturbationSpec bump(double eps, double center, double width) {
        PerturbationSpec p;
        p.kind = Kind::bump;
        p.epsilon = eps;
        p.x_c = center;
        p.sigma = width;
        return p;
    }
    static PerturbationSpec dilation(double eps) {
        PerturbationSpec p;
        p.kind = Kind::dilation;
        p.epsilon = eps;
        return p;
    }

  private:
    double gauss(double x) const {
        const double z = (x - x_c) / sigma;
        return std::exp(-z * z);
    }
};

} // namespace vacuumfront
