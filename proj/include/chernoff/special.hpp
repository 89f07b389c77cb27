#pragma once

namespace chernoff {

// ln Gamma(x) for x > 0, Lanczos approximation (g = 607/128, 15 terms),
// accurate to better than 1e-13 over the arguments used here.
double log_gamma(double x);
double gamma_fn(double x);

// Natural-log binary entropy h(p) = -p ln p - (1-p) ln(1-p).
double binary_entropy(double p);

}  // namespace chernoff
