#pragma once

#include <functional>

namespace chernoff {

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to absolute
// tolerance `abs_tol`. Throws QuadratureFailure if the tolerance cannot be
// met within the subdivision budget. Split points let callers isolate cusps
// (e.g. |x|^theta at theta = 1).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_intervals = 4000);

}  // namespace chernoff
