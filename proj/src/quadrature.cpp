#include "chernoff/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "chernoff/errors.hpp"

namespace chernoff {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule,
// on [-1, 1] (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct RuleResult {
  double integral;
  double error;
};

RuleResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double res_k = kWgk[7] * fv[7];
  double res_g = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) res_k += kWgk[i] * (fv[i] + fv[14 - i]);
  for (int i = 0; i < 3; ++i)
    res_g += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  RuleResult out;
  out.integral = res_k * h;
  out.error = std::fabs((res_k - res_g) * h);
  return out;
}

struct Interval {
  double a, b, integral, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_intervals) {
  if (a == b) return 0.0;
  std::priority_queue<Interval> heap;
  RuleResult r = gk15(f, a, b);
  heap.push({a, b, r.integral, r.error});
  double total = r.integral, total_err = r.error;
  int used = 1;
  while (total_err > abs_tol && used < max_intervals) {
    Interval worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    RuleResult left = gk15(f, worst.a, mid);
    RuleResult right = gk15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.integral, left.error});
    heap.push({mid, worst.b, right.integral, right.error});
    ++used;
  }
  if (total_err > abs_tol)
    throw QuadratureFailure("integration tolerance not met");
  return total;
}

}  // namespace chernoff
