#include "mdiqss/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace mdiqss {

std::optional<std::pair<double, double>>
scan_first_sign_change(const std::function<double(double)>& f, double lo,
                       double hi, double step) {
    if (!(step > 0.0) || !(hi > lo))
        throw std::invalid_argument("scan_first_sign_change: bad interval or step");
    double x0 = lo;
    double f0 = f(x0);
    if (f0 == 0.0) return std::make_pair(x0, x0);
    while (x0 < hi) {
        const double x1 = std::min(x0 + step, hi);
        const double f1 = f(x1);
        if (f1 == 0.0 || (f0 > 0.0) != (f1 > 0.0)) return std::make_pair(x0, x1);
        x0 = x1;
        f0 = f1;
    }
    return std::nullopt;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect: no sign change in bracket");
    while (hi - lo > x_tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace mdiqss
