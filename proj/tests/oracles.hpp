// Independent oracles for the test suite. Everything here is deliberately
// written from scratch against the raw model tables (no thermo/ldp calls),
// so agreement with the library is a genuine cross-check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "chernoff/model.hpp"

namespace oracle {

// ln sum_u q(u|v) e^{-beta eps0 f}, direct max-shifted summation.
inline double log_z(const chernoff::WeightedModel& m, std::size_t v,
                    double beta) {
  double mx = -std::numeric_limits<double>::infinity();
  for (std::size_t u = 0; u < m.num_u(); ++u) {
    if (m.q(v, u) <= 0.0) continue;
    mx = std::max(mx, std::log(m.q(v, u)) - beta * m.epsilon0() * m.f(v, u));
  }
  if (std::isinf(mx)) return mx;
  double s = 0.0;
  for (std::size_t u = 0; u < m.num_u(); ++u) {
    if (m.q(v, u) <= 0.0) continue;
    s += std::exp(std::log(m.q(v, u)) - beta * m.epsilon0() * m.f(v, u) - mx);
  }
  return mx + std::log(s);
}

inline double objective(const chernoff::WeightedModel& m, double E,
                        double beta) {
  double s = beta * m.epsilon0() * E;
  for (std::size_t v = 0; v < m.num_v(); ++v) s += m.p(v) * log_z(m, v, beta);
  return s;
}

// min_{beta >= 0} of the convex objective by a dense grid plus golden-section
// polish around the best grid point.
inline double beta_grid_min(const chernoff::WeightedModel& m, double E,
                            double beta_max = 50.0, double spacing = 1e-4,
                            double* beta_out = nullptr) {
  double best = objective(m, E, 0.0), best_beta = 0.0;
  long long steps = static_cast<long long>(beta_max / spacing);
  for (long long i = 1; i <= steps; ++i) {
    double b = i * spacing;
    double val = objective(m, E, b);
    if (val < best) {
      best = val;
      best_beta = b;
    }
  }
  double lo = std::max(0.0, best_beta - spacing), hi = best_beta + spacing;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = objective(m, E, x1), f2 = objective(m, E, x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = objective(m, E, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = objective(m, E, x2);
    }
  }
  double mid = 0.5 * (lo + hi);
  double val = std::min(best, objective(m, E, mid));
  if (beta_out) *beta_out = val < best ? mid : best_beta;
  return val;
}

// Exhaustive enumeration of Pr{sum_i f(U_i, v_i) <= n E} for the fixed
// composition n_v = n p(v). Exponential in n; keep n small.
inline double brute_force_prob(const chernoff::WeightedModel& m, int n,
                               double E) {
  std::vector<std::size_t> v_seq;
  for (std::size_t v = 0; v < m.num_v(); ++v) {
    double nv = n * m.p(v);
    long long r = std::llround(nv);
    for (long long i = 0; i < r; ++i) v_seq.push_back(v);
  }
  double total = 0.0;
  const double cut = n * E + 1e-9;
  std::function<void(std::size_t, double, double)> rec =
      [&](std::size_t i, double prob, double sum) {
        if (i == v_seq.size()) {
          if (sum <= cut) total += prob;
          return;
        }
        std::size_t v = v_seq[i];
        for (std::size_t u = 0; u < m.num_u(); ++u) {
          if (m.q(v, u) <= 0.0) continue;
          rec(i + 1, prob * m.q(v, u), sum + m.f(v, u));
        }
      };
  rec(0, 1.0, 0.0);
  return total;
}

// Seeded random model for property tests; |V| in [1, max_v], |U| in
// [2, max_u], f in [0, 3].
inline chernoff::WeightedModel random_model(std::uint64_t seed, int max_v = 4,
                                            int max_u = 5) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int nv = 1 + static_cast<int>(gen() % max_v);
  int nu = 2 + static_cast<int>(gen() % (max_u - 1));
  std::vector<std::string> vl, ul;
  for (int v = 0; v < nv; ++v) vl.push_back("v" + std::to_string(v));
  for (int u = 0; u < nu; ++u) ul.push_back("u" + std::to_string(u));
  std::vector<double> p(nv);
  double ps = 0.0;
  for (auto& x : p) ps += x = 0.1 + unit(gen);
  for (auto& x : p) x /= ps;
  std::vector<std::vector<double>> q(nv, std::vector<double>(nu));
  std::vector<std::vector<double>> f(nv, std::vector<double>(nu));
  for (int v = 0; v < nv; ++v) {
    double qs = 0.0;
    for (int u = 0; u < nu; ++u) qs += q[v][u] = 0.05 + unit(gen);
    for (int u = 0; u < nu; ++u) q[v][u] /= qs;
    for (int u = 0; u < nu; ++u) f[v][u] = 3.0 * unit(gen);
  }
  return chernoff::WeightedModel(vl, ul, p, q, f);
}

// The thermo-module examples share this two-subsystem model:
// p = (1/2, 1/2), subsystem a: f in {0,1} uniform, subsystem b: f in {0,2}
// uniform. beta*(E=0.5) solves 2t^3 + t^2 = 1 with t = e^{-beta}.
inline chernoff::WeightedModel two_subsystem() {
  return chernoff::WeightedModel(
      {"a", "b"}, {"u0", "u1", "u2"}, {0.5, 0.5},
      {{0.5, 0.5, 0.0}, {0.5, 0.0, 0.5}},
      {{0.0, 1.0, 0.0}, {0.0, 1.0, 2.0}});
}

inline chernoff::WeightedModel fair_coin() {
  return chernoff::WeightedModel({"v0"}, {"u0", "u1"}, {1.0}, {{0.5, 0.5}},
                                 {{0.0, 1.0}});
}

inline double binary_h(double p) {
  double out = 0.0;
  if (p > 0.0) out -= p * std::log(p);
  if (p < 1.0) out -= (1.0 - p) * std::log(1.0 - p);
  return out;
}

}  // namespace oracle
