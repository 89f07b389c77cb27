#include "chernoff/special.hpp"

#include <cmath>
#include <limits>

namespace chernoff {

namespace {

// Lanczos coefficients for g = 607/128, N = 15 (Boost/GSL's classic set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  double z = x - 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (z + i);
  double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t +
         std::log(sum);
}

double gamma_fn(double x) { return std::exp(log_gamma(x)); }

double binary_entropy(double p) {
  double out = 0.0;
  if (p > 0.0) out -= p * std::log(p);
  if (p < 1.0) out -= (1.0 - p) * std::log(1.0 - p);
  return out;
}

}  // namespace chernoff
