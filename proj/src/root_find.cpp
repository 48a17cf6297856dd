#include "vacuumfront/root_find.hpp"

#include <cmath>

#include "vacuumfront/errors.hpp"

namespace vacuumfront::num {

double find_root(const std::function<double(double)>& g, double lo, double hi, double tol) {
    if (!(lo < hi)) throw ConfigError("find_root: requires lo < hi");
    double flo = g(lo);
    double fhi = g(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) throw NumericalError("find_root: no sign change on the bracket");

    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        // Secant candidate, kept only if it lands safely inside the bracket.
        double mid = 0.5 * (lo + hi);
        const double denom = fhi - flo;
        if (denom != 0) {
            const double sec = lo - flo * (hi - lo) / denom;
            const double margin = 0.01 * (hi - lo);
            if (sec > lo + margin && sec < hi - margin) mid = sec;
        }
        const double fm = g(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace vacuumfront::num
