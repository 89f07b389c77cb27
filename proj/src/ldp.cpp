#include "chernoff/ldp.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "chernoff/counter_rng.hpp"

namespace chernoff {
namespace ldp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long long kBinBudget = 100'000'000;

std::string to_msg(const char* head, double x) {
  std::ostringstream os;
  os << head << x;
  return os.str();
}

// Distribution on a delta-grid: mass logp[i] at value (offset + i) * delta.
struct LogDist {
  std::int64_t offset = 0;
  std::vector<double> logp;
};

LogDist convolve(const LogDist& a, const LogDist& b) {
  LogDist c;
  c.offset = a.offset + b.offset;
  c.logp.assign(a.logp.size() + b.logp.size() - 1, -kInf);
  for (std::size_t k = 0; k < c.logp.size(); ++k) {
    std::size_t i_lo = k >= b.logp.size() - 1 ? k - (b.logp.size() - 1) : 0;
    std::size_t i_hi = std::min(k, a.logp.size() - 1);
    double m = -kInf;
    for (std::size_t i = i_lo; i <= i_hi; ++i)
      m = std::max(m, a.logp[i] + b.logp[k - i]);
    if (m == -kInf) continue;
    double s = 0.0;
    for (std::size_t i = i_lo; i <= i_hi; ++i)
      s += std::exp(a.logp[i] + b.logp[k - i] - m);
    c.logp[k] = m + std::log(s);
  }
  return c;
}

// n-fold self-convolution by repeated doubling.
LogDist power(LogDist base, int n) {
  LogDist acc;
  acc.offset = 0;
  acc.logp = {0.0};
  while (n > 0) {
    if (n & 1) acc = convolve(acc, base);
    n >>= 1;
    if (n > 0) base = convolve(base, base);
  }
  return acc;
}

LogDist single_symbol(const WeightedModel& model, std::size_t v, double delta,
                      bool round_up) {
  const auto& q = model.q_row(v);
  const auto& f = model.f_row(v);
  std::int64_t j_min = 0, j_max = 0;
  std::vector<std::int64_t> j(q.size());
  bool first = true;
  for (std::size_t u = 0; u < q.size(); ++u) {
    double t = f[u] / delta;
    j[u] = round_up ? static_cast<std::int64_t>(std::ceil(t - 1e-9))
                    : static_cast<std::int64_t>(std::floor(t + 1e-9));
    if (q[u] <= 0.0) continue;
    if (first || j[u] < j_min) j_min = j[u];
    if (first || j[u] > j_max) j_max = j[u];
    first = false;
  }
  LogDist d;
  d.offset = j_min;
  d.logp.assign(static_cast<std::size_t>(j_max - j_min + 1), -kInf);
  for (std::size_t u = 0; u < q.size(); ++u) {
    if (q[u] <= 0.0) continue;
    std::size_t i = static_cast<std::size_t>(j[u] - j_min);
    double add = std::log(q[u]);
    if (d.logp[i] == -kInf)
      d.logp[i] = add;
    else {
      double m = std::max(d.logp[i], add);
      d.logp[i] = m + std::log(std::exp(d.logp[i] - m) + std::exp(add - m));
    }
  }
  return d;
}

double log_tail(const LogDist& d, std::int64_t j_cut) {
  if (j_cut >= d.offset + static_cast<std::int64_t>(d.logp.size()) - 1)
    return 0.0;  // sure event
  if (j_cut < d.offset) return -kInf;
  std::size_t hi = static_cast<std::size_t>(j_cut - d.offset);
  double m = -kInf;
  for (std::size_t i = 0; i <= hi; ++i) m = std::max(m, d.logp[i]);
  if (m == -kInf) return -kInf;
  double s = 0.0;
  for (std::size_t i = 0; i <= hi; ++i) s += std::exp(d.logp[i] - m);
  return std::min(0.0, m + std::log(s));
}

std::vector<int> composition(const WeightedModel& model, int n) {
  std::vector<int> n_v(model.num_v());
  int total = 0;
  for (std::size_t v = 0; v < model.num_v(); ++v) {
    double exact = static_cast<double>(n) * model.p(v);
    n_v[v] = static_cast<int>(std::llround(exact));
    if (std::fabs(exact - n_v[v]) > 1e-9)
      throw RoundingError(to_msg("n*p(v) is not integral for v index ",
                                 static_cast<double>(v)));
    total += n_v[v];
  }
  if (total != n) throw RoundingError("composition does not sum to n");
  return n_v;
}

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kZero: return "zero";
    case Regime::kInterior: return "interior";
    case Regime::kBoundary: return "boundary";
    case Regime::kInfeasible: return "infeasible";
  }
  return "?";
}

RateResult rate_function(const WeightedModel& model, double E) {
  EnergyRange range = energy_range(model);
  const double tol =
      1e-12 * (1.0 + std::max(std::fabs(range.e_min), std::fabs(range.e_mean)));
  RateResult out;
  out.energy = E;
  if (E >= range.e_mean - tol) {
    out.rate = 0.0;
    out.regime = Regime::kZero;
    return out;
  }
  if (E < range.e_min - tol) {
    out.rate = kInf;
    out.regime = Regime::kInfeasible;
    return out;
  }
  thermo::ThermoSolution sol = thermo::solve_beta(model, E);
  out.rate = -sol.value;
  out.beta_star = sol.beta_star;
  out.regime = sol.degenerate ? Regime::kBoundary : Regime::kInterior;
  return out;
}

ProbabilityEstimate exact_probability(const WeightedModel& model, int n,
                                      double E, double delta) {
  if (n < 1) throw RoundingError("n must be >= 1");
  if (!(delta > 0.0)) throw RoundingError("bin width must be positive");
  std::vector<int> n_v = composition(model, n);

  double f_lo = kInf, f_hi = -kInf;
  for (std::size_t v = 0; v < model.num_v(); ++v)
    for (double x : model.f_row(v)) {
      f_lo = std::min(f_lo, x);
      f_hi = std::max(f_hi, x);
    }
  double span = std::max(f_hi - f_lo, delta);
  if (static_cast<double>(n) * span / delta > static_cast<double>(kBinBudget))
    throw BinBudgetExceeded(to_msg("bin count exceeds budget: ",
                                   static_cast<double>(n) * span / delta));

  const double cut = static_cast<double>(n) * E;
  std::int64_t j_cut = static_cast<std::int64_t>(
      std::floor(cut / delta + 1e-9 * std::max(1.0, std::fabs(cut / delta))));
  double bounds[2];
  for (int mode = 0; mode < 2; ++mode) {
    bool round_up = (mode == 0);  // values rounded up -> lower bound on P
    LogDist total;
    total.offset = 0;
    total.logp = {0.0};
    for (std::size_t v = 0; v < model.num_v(); ++v) {
      if (n_v[v] == 0) continue;
      LogDist one = single_symbol(model, v, delta, round_up);
      total = convolve(total, power(std::move(one), n_v[v]));
    }
    bounds[mode] = log_tail(total, j_cut);
  }

  ProbabilityEstimate out;
  out.n = n;
  out.method = "exact-dp";
  out.bin_width = delta;
  out.log_prob = std::min(bounds[0], bounds[1]);
  out.log_prob_upper = std::max(bounds[0], bounds[1]);
  return out;
}

ProbabilityEstimate monte_carlo_probability(const WeightedModel& model, int n,
                                            double E, long long trials,
                                            std::uint64_t seed, bool parallel) {
  if (trials < 1) throw RoundingError("trials must be >= 1");
  std::vector<int> n_v = composition(model, n);

  std::vector<std::size_t> v_seq;
  v_seq.reserve(n);
  for (std::size_t v = 0; v < model.num_v(); ++v)
    for (int i = 0; i < n_v[v]; ++i) v_seq.push_back(v);

  std::vector<std::vector<double>> cdf(model.num_v());
  for (std::size_t v = 0; v < model.num_v(); ++v) {
    double acc = 0.0;
    for (std::size_t u = 0; u < model.num_u(); ++u) {
      acc += model.q(v, u);
      cdf[v].push_back(acc);
    }
    cdf[v].back() = 1.0;
  }

  const double cut =
      static_cast<double>(n) * E +
      1e-9 * std::max(1.0, std::fabs(static_cast<double>(n) * E));
  CounterRng rng(seed);
  long long hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static) if (parallel)
  for (long long t = 0; t < trials; ++t) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = rng.uniform(static_cast<std::uint64_t>(t),
                             static_cast<std::uint64_t>(i));
      std::size_t v = v_seq[i];
      std::size_t u = 0;
      while (u + 1 < cdf[v].size() && x >= cdf[v][u]) ++u;
      sum += model.f(v, u);
    }
    if (sum <= cut) ++hits;
  }

  ProbabilityEstimate out;
  out.n = n;
  out.method = "monte-carlo";
  out.trials = trials;
  out.seed = seed;
  out.hits = hits;
  if (hits == 0) {
    out.log_prob = -kInf;
    out.ci95_log = {-kInf, std::log(3.0 / static_cast<double>(trials))};
  } else {
    double p = static_cast<double>(hits) / static_cast<double>(trials);
    out.log_prob = std::log(p);
    double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    double lo = std::max(p - 1.96 * se, 1e-300);
    double hi = std::min(p + 1.96 * se, 1.0);
    out.ci95_log = {std::log(lo), std::log(hi)};
  }
  out.log_prob_upper = out.log_prob;
  return out;
}

DualRateCheck dual_rate_check(const WeightedModel& model, double E,
                              const thermo::SearchControl& control) {
  DualRateCheck out;
  out.per_symbol_rate = -thermo::lhs_entropy(model, E, control);
  out.block_rate = -thermo::solve_beta(model, E).value;
  out.gap = std::fabs(out.per_symbol_rate - out.block_rate);
  return out;
}

std::optional<int> suggest_block_length(const WeightedModel& model, int cap) {
  for (int n = 1; n <= cap; ++n) {
    bool ok = true;
    for (std::size_t v = 0; v < model.num_v() && ok; ++v) {
      double exact = static_cast<double>(n) * model.p(v);
      ok = std::fabs(exact - std::llround(exact)) <= 1e-9;
    }
    if (ok) return n;
  }
  return std::nullopt;
}

}  // namespace ldp
}  // namespace chernoff
