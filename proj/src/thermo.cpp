#include "chernoff/thermo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace chernoff {
namespace thermo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBetaCapUnits = 1e6;  // cap is 1e6 / eps0
constexpr int kMaxIterations = 200;

struct TiltStats {
  double log_z;
  double mean_f;    // mean of f under the tilt
  double var_e;     // variance of eps0*f under the tilt
};

TiltStats tilt_stats(const WeightedModel& model, std::size_t v, double beta) {
  const auto& q = model.q_row(v);
  const auto& f = model.f_row(v);
  const double be = beta * model.epsilon0();
  double m = -kInf;
  for (std::size_t u = 0; u < q.size(); ++u) {
    if (q[u] <= 0.0) continue;
    m = std::max(m, std::log(q[u]) - be * f[u]);
  }
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (std::size_t u = 0; u < q.size(); ++u) {
    if (q[u] <= 0.0) continue;
    double w = std::exp(std::log(q[u]) - be * f[u] - m);
    s0 += w;
    s1 += w * f[u];
    s2 += w * f[u] * f[u];
  }
  TiltStats out;
  out.log_z = m + std::log(s0);
  out.mean_f = s1 / s0;
  double var_f = std::max(0.0, s2 / s0 - out.mean_f * out.mean_f);
  out.var_e = var_f * model.epsilon0() * model.epsilon0();
  return out;
}

// Aggregate over a weighted subset of subsystems; ps sum to 1 for the full
// model and equal {1} for the single-subsystem solve.
struct Aggregate {
  const WeightedModel* model;
  std::vector<std::size_t> vs;
  std::vector<double> ps;

  double mean(double beta) const {
    double out = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      out += ps[i] * tilt_stats(*model, vs[i], beta).mean_f;
    return out;
  }
  double log_z(double beta) const {
    double out = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      out += ps[i] * tilt_stats(*model, vs[i], beta).log_z;
    return out;
  }
};

// q-mass sitting on the f-minimizers; the degenerate E = e_min entropy is
// the weighted log of these masses.
double argmin_mass(const WeightedModel& model, std::size_t v) {
  const auto& q = model.q_row(v);
  const auto& f = model.f_row(v);
  double lo = *std::min_element(f.begin(), f.end());
  double tol = 1e-12 * (1.0 + std::fabs(lo));
  double mass = 0.0;
  for (std::size_t u = 0; u < f.size(); ++u)
    if (f[u] <= lo + tol) mass += q[u];
  return mass;
}

ThermoSolution solve_aggregate(const Aggregate& agg, double E) {
  const WeightedModel& model = *agg.model;
  const double cap = kBetaCapUnits / model.epsilon0();
  double e_lo = 0.0, e_hi = 0.0;
  for (std::size_t i = 0; i < agg.vs.size(); ++i) {
    const auto& f = model.f_row(agg.vs[i]);
    e_lo += agg.ps[i] * *std::min_element(f.begin(), f.end());
    e_hi += agg.ps[i] * tilt_stats(model, agg.vs[i], 0.0).mean_f;
  }
  const double tol_e = 1e-12 * (1.0 + std::max(std::fabs(e_lo), std::fabs(e_hi)));

  ThermoSolution out;
  if (E > e_hi + tol_e || E < e_lo - tol_e) {
    std::ostringstream os;
    os << "E=" << E << " outside [" << e_lo << ", " << e_hi << "]";
    throw OutOfRange(os.str());
  }
  if (E >= e_hi - tol_e) {
    out.beta_star = 0.0;
    out.value = 0.0;
    out.residual = std::max(0.0, e_hi - E);
    return out;
  }
  if (E <= e_lo + tol_e) {
    double value = 0.0;
    for (std::size_t i = 0; i < agg.vs.size(); ++i) {
      double mass = argmin_mass(model, agg.vs[i]);
      value += mass > 0.0 ? agg.ps[i] * std::log(mass) : -kInf;
    }
    out.beta_star = cap;
    out.value = value;
    out.degenerate = true;
    return out;
  }

  double lo = 0.0, hi = 1.0 / model.epsilon0();
  int iters = 0;
  while (agg.mean(hi) > E && hi < cap) {
    lo = hi;
    hi = std::min(cap, hi * 2.0);
    ++iters;
  }
  for (; iters < kMaxIterations && hi - lo > 1e-12 * std::max(1.0, hi); ++iters) {
    double mid = 0.5 * (lo + hi);
    (agg.mean(mid) > E ? lo : hi) = mid;
  }
  out.beta_star = 0.5 * (lo + hi);
  out.iterations = iters;
  out.residual = std::fabs(agg.mean(out.beta_star) - E);
  out.value = out.beta_star * model.epsilon0() * E + agg.log_z(out.beta_star);
  double f_scale = 1.0;
  for (std::size_t i = 0; i < agg.vs.size(); ++i)
    for (double x : model.f_row(agg.vs[i])) f_scale = std::max(f_scale, std::fabs(x));
  if (out.residual > 1e-8 * f_scale) {
    std::ostringstream os;
    os << "beta solve residual " << out.residual << " at E=" << E;
    throw NonConvergence(os.str());
  }
  return out;
}

Aggregate whole_model(const WeightedModel& model) {
  Aggregate agg{&model, {}, {}};
  for (std::size_t v = 0; v < model.num_v(); ++v) {
    agg.vs.push_back(v);
    agg.ps.push_back(model.p(v));
  }
  return agg;
}

// Fast single-subsystem solve: safeguarded Newton inside a maintained
// bracket, used heavily by the allocation search.
struct SvSolver {
  const WeightedModel* model;
  std::size_t v;
  double lo_e, hi_e, cap;

  explicit SvSolver(const WeightedModel& m, std::size_t vv)
      : model(&m), v(vv), cap(kBetaCapUnits / m.epsilon0()) {
    const auto& f = m.f_row(vv);
    lo_e = *std::min_element(f.begin(), f.end());
    hi_e = tilt_stats(m, vv, 0.0).mean_f;
  }

  // S_v(E) with a warm start for beta; E is clamped to the valid range.
  double entropy(double E, double beta_hint = 1.0) const {
    const double tol_e = 1e-12 * (1.0 + std::max(std::fabs(lo_e), std::fabs(hi_e)));
    if (E >= hi_e - tol_e) return 0.0;
    if (E <= lo_e + tol_e) {
      double mass = argmin_mass(*model, v);
      return mass > 0.0 ? std::log(mass) : -kInf;
    }
    double beta = solve_beta_for(E, beta_hint);
    return beta * model->epsilon0() * E + tilt_stats(*model, v, beta).log_z;
  }

  double solve_beta_for(double E, double beta_hint) const {
    double lo = 0.0, hi = cap;
    double beta = std::clamp(beta_hint, 0.0, cap);
    for (int it = 0; it < 80; ++it) {
      TiltStats st = tilt_stats(*model, v, beta);
      double g = st.mean_f - E;
      if (std::fabs(g) <= 1e-14 * (1.0 + std::fabs(E))) return beta;
      (g > 0.0 ? lo : hi) = beta;
      double next = beta;
      if (st.var_e > 0.0)
        next = beta + g * model->epsilon0() * model->epsilon0() / st.var_e;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (hi - lo <= 1e-13 * std::max(1.0, hi)) return 0.5 * (lo + hi);
      beta = next;
    }
    return beta;
  }
};

}  // namespace

double log_partition(const WeightedModel& model, std::size_t v, double beta) {
  return tilt_stats(model, v, beta).log_z;
}

double mean_energy(const WeightedModel& model, std::size_t v, double beta) {
  return tilt_stats(model, v, beta).mean_f;
}

double energy_variance(const WeightedModel& model, std::size_t v, double beta) {
  return tilt_stats(model, v, beta).var_e;
}

ThermoSolution solve_beta(const WeightedModel& model, double E) {
  return solve_aggregate(whole_model(model), E);
}

ThermoSolution entropy_sv(const WeightedModel& model, std::size_t v, double e_v) {
  return solve_aggregate(Aggregate{&model, {v}, {1.0}}, e_v);
}

ThermoSolution equilibrium_allocation(const WeightedModel& model, double E) {
  ThermoSolution sol = solve_beta(model, E);
  std::vector<double> alloc(model.num_v());
  for (std::size_t v = 0; v < model.num_v(); ++v) {
    if (sol.degenerate) {
      const auto& f = model.f_row(v);
      alloc[v] = *std::min_element(f.begin(), f.end());
    } else {
      alloc[v] = mean_energy(model, v, sol.beta_star);
    }
  }
  sol.allocation = std::move(alloc);
  return sol;
}

double lhs_entropy(const WeightedModel& model, double E,
                   const SearchControl& control) {
  const std::size_t k = model.num_v();
  std::vector<SvSolver> solvers;
  solvers.reserve(k);
  for (std::size_t v = 0; v < k; ++v) solvers.emplace_back(model, v);
  if (k == 1) return solvers[0].entropy(E);

  double e_lo = 0.0, e_hi = 0.0;
  for (std::size_t v = 0; v < k; ++v) {
    e_lo += model.p(v) * solvers[v].lo_e;
    e_hi += model.p(v) * solvers[v].hi_e;
  }
  const double tol_e = 1e-12 * (1.0 + std::max(std::fabs(e_lo), std::fabs(e_hi)));
  if (E > e_hi + tol_e || E < e_lo - tol_e) {
    std::ostringstream os;
    os << "E=" << E << " outside [" << e_lo << ", " << e_hi << "]";
    throw OutOfRange(os.str());
  }
  E = std::clamp(E, e_lo, e_hi);

  // S_v is non-decreasing, so the maximum saturates the budget and the last
  // coordinate is determined by the rest; |V|-1 coordinates are free.
  const std::size_t dep = k - 1;
  const std::size_t m = k - 1;
  const int g = control.grid_points;
  long long total = 1;
  for (std::size_t j = 0; j < m; ++j) {
    total *= g;
    if (total > control.max_grid_points)
      throw SearchBudgetExceeded("allocation grid exceeds max_grid_points");
  }

  // Exact per-coordinate entropy tables on each free grid, plus a dense
  // interpolation table for the dependent coordinate. Built by beta
  // continuation; the tensor stage only locates the best cell, the value
  // reported below always comes from exact refinement.
  std::vector<std::vector<double>> table(m);
  std::vector<double> grid_lo(m), grid_step(m);
  for (std::size_t j = 0; j < m; ++j) {
    table[j].resize(g);
    grid_lo[j] = solvers[j].lo_e;
    grid_step[j] = (solvers[j].hi_e - solvers[j].lo_e) / (g - 1);
    double beta = 1.0;
    for (int i = g - 1; i >= 0; --i) {
      double e = grid_lo[j] + i * grid_step[j];
      if (i > 0 && i < g - 1) beta = solvers[j].solve_beta_for(e, beta);
      table[j][i] = solvers[j].entropy(e, beta);
    }
  }
  const int dense = 4096;
  std::vector<double> dep_table(dense);
  const double dep_lo = solvers[dep].lo_e;
  const double dep_step = (solvers[dep].hi_e - dep_lo) / (dense - 1);
  {
    double beta = 1.0;
    for (int i = dense - 1; i >= 0; --i) {
      double e = dep_lo + i * dep_step;
      if (i > 0 && i < dense - 1) beta = solvers[dep].solve_beta_for(e, beta);
      dep_table[i] = solvers[dep].entropy(e, beta);
    }
  }
  const double p_dep = model.p(dep);
  auto dep_interp = [&](double e) {
    double t = (e - dep_lo) / dep_step;
    int i = std::clamp(static_cast<int>(t), 0, dense - 2);
    double frac = t - i;
    return dep_table[i] + frac * (dep_table[i + 1] - dep_table[i]);
  };

  // Locator: tensor grid over the free coordinates, dependent coordinate
  // from the budget, objective via table lookups. Deterministic argmax:
  // ties broken toward the smallest flat index.
  const std::size_t inner = m - 1;
  long long outer_total = total / g;
  double best_val = -kInf;
  long long best_idx = -1;
#pragma omp parallel if (control.parallel)
  {
    double loc_val = -kInf;
    long long loc_idx = -1;
    std::vector<std::size_t> digits(m, 0);
#pragma omp for schedule(static)
    for (long long outer = 0; outer < outer_total; ++outer) {
      long long rem = outer;
      double base = 0.0;
      double partial = E;
      for (std::size_t j = 0; j < inner; ++j) {
        digits[j] = static_cast<std::size_t>(rem % g);
        rem /= g;
        double e = grid_lo[j] + digits[j] * grid_step[j];
        base += model.p(j) * table[j][digits[j]];
        partial -= model.p(j) * e;
      }
      // dependent energy is affine in the innermost grid index
      const double c0 = (partial - model.p(inner) * grid_lo[inner]) / p_dep;
      const double c1 = model.p(inner) * grid_step[inner] / p_dep;
      for (int i = 0; i < g; ++i) {
        double e_dep = c0 - c1 * i;
        if (e_dep < dep_lo || e_dep > solvers[dep].hi_e) continue;
        double val = base + model.p(inner) * table[inner][i] + p_dep * dep_interp(e_dep);
        long long idx = outer * g + i;
        if (val > loc_val || (val == loc_val && idx < loc_idx)) {
          loc_val = val;
          loc_idx = idx;
        }
      }
    }
#pragma omp critical
    {
      if (loc_val > best_val || (loc_val == best_val && loc_idx < best_idx)) {
        best_val = loc_val;
        best_idx = loc_idx;
      }
    }
  }

  // Starting allocation; fall back to the proportional midpoint if no grid
  // cell was feasible (can happen for very skewed p near the range edges).
  std::vector<double> alloc(k);
  if (best_idx >= 0) {
    long long rem = best_idx;
    std::size_t gi = static_cast<std::size_t>(rem % g);
    rem /= g;
    alloc[inner] = grid_lo[inner] + gi * grid_step[inner];
    for (std::size_t j = 0; j < inner; ++j) {
      alloc[j] = grid_lo[j] + static_cast<double>(rem % g) * grid_step[j];
      rem /= g;
    }
  } else {
    double t = (e_hi - e_lo) > 0 ? (E - e_lo) / (e_hi - e_lo) : 0.0;
    for (std::size_t j = 0; j < m; ++j)
      alloc[j] = solvers[j].lo_e + t * (solvers[j].hi_e - solvers[j].lo_e);
  }
  auto set_dep = [&](std::vector<double>& a) {
    double c = E;
    for (std::size_t j = 0; j < m; ++j) c -= model.p(j) * a[j];
    a[dep] = std::clamp(c / p_dep, solvers[dep].lo_e, solvers[dep].hi_e);
  };
  set_dep(alloc);

  auto objective = [&](const std::vector<double>& a) {
    double out = 0.0;
    for (std::size_t v = 0; v < k; ++v) out += model.p(v) * solvers[v].entropy(a[v]);
    return out;
  };

  // Golden-section line search per free coordinate, dependent coordinate
  // compensating; the objective restriction is concave.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int round = 0; round < control.refine_rounds; ++round) {
    for (std::size_t j = 0; j < m; ++j) {
      double c = E;
      for (std::size_t jj = 0; jj < m; ++jj)
        if (jj != j) c -= model.p(jj) * alloc[jj];
      // feasible interval for alloc[j] keeping both coordinates in range
      double a = solvers[j].lo_e, b = solvers[j].hi_e;
      if (model.p(j) > 0) {
        double from_dep_lo = (c - p_dep * solvers[dep].hi_e) / model.p(j);
        double from_dep_hi = (c - p_dep * solvers[dep].lo_e) / model.p(j);
        a = std::max(a, from_dep_lo);
        b = std::min(b, from_dep_hi);
      }
      if (!(b > a)) continue;
      auto phi = [&](double e_j) {
        double e_dep = std::clamp((c - model.p(j) * e_j) / p_dep,
                                  solvers[dep].lo_e, solvers[dep].hi_e);
        return model.p(j) * solvers[j].entropy(e_j) +
               p_dep * solvers[dep].entropy(e_dep);
      };
      double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
      double f1 = phi(x1), f2 = phi(x2);
      for (int it = 0; it < 80 && b - a > 1e-11 * (1.0 + std::fabs(b)); ++it) {
        if (f1 < f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + gr * (b - a);
          f2 = phi(x2);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - gr * (b - a);
          f1 = phi(x1);
        }
      }
      alloc[j] = 0.5 * (a + b);
      set_dep(alloc);
    }
  }
  return objective(alloc);
}

IdentityCheck verify_identity(const WeightedModel& model, double E,
                              double tolerance, const SearchControl& control) {
  IdentityCheck out;
  out.lhs = lhs_entropy(model, E, control);
  out.rhs = solve_beta(model, E).value;
  out.gap = std::fabs(out.lhs - out.rhs);
  out.pass = out.gap <= tolerance && out.lhs <= out.rhs + 1e-12;
  return out;
}

SigmaBar sigma_bar(const WeightedModel& model, double E) {
  const WeightCounts& counts = model.counts();  // throws MissingCounts
  SigmaBar out;
  out.log_m = std::log(static_cast<double>(counts.m_total));
  double s_bar = solve_beta(model, E).value;
  out.sigma_bar = s_bar + out.log_m;
  out.rate = -s_bar;
  if (out.rate < -1e-12)
    throw NonConvergence("rate function came out negative");
  return out;
}

double heat_capacity(const WeightedModel& model, std::size_t v, double T) {
  double k = model.k_boltzmann();
  return energy_variance(model, v, 1.0 / (k * T)) / (k * T * T);
}

double avg_heat_capacity(const WeightedModel& model, double T) {
  double out = 0.0;
  for (std::size_t v = 0; v < model.num_v(); ++v)
    out += model.p(v) * heat_capacity(model, v, T);
  return out;
}

double fisher_information(const WeightedModel& model, double beta) {
  double j = 0.0;
  for (std::size_t v = 0; v < model.num_v(); ++v)
    j += model.p(v) * energy_variance(model, v, beta);
  if (beta > 0.0) {
    double k = model.k_boltzmann();
    double T = 1.0 / (k * beta);
    double via_c = k * T * T * avg_heat_capacity(model, T);
    if (std::fabs(via_c - j) > 1e-10 * (1.0 + std::fabs(j)))
      throw NonConvergence("Fisher information / heat-capacity mismatch");
  }
  return j;
}

}  // namespace thermo
}  // namespace chernoff
