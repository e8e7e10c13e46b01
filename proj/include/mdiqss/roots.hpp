#pragma once

#include <functional>
#include <optional>
#include <utility>

namespace mdiqss {

// First sign change of f on a forward scan of [lo, hi] with the given step;
// returns the bracketing interval, or nullopt when f never changes sign.
std::optional<std::pair<double, double>>
scan_first_sign_change(const std::function<double(double)>& f, double lo,
                       double hi, double step);

// Plain bisection on a bracketing interval down to absolute resolution x_tol.
// The bracket must change sign; returns the midpoint of the final interval.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol);

} // namespace mdiqss
