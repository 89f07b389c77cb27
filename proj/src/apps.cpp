#include "chernoff/apps.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "chernoff/ldp.hpp"
#include "chernoff/quadrature.hpp"
#include "chernoff/special.hpp"

namespace chernoff {
namespace apps {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string to_msg(const char* head, double x) {
  std::ostringstream os;
  os << head << x;
  return os.str();
}

std::vector<std::string> default_labels(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rate-distortion

WeightedModel rd_model(const RdProblem& problem) {
  std::size_t nx = problem.source_p.size();
  std::size_t nh = problem.coding_q.size();
  std::vector<std::vector<double>> q(nx, problem.coding_q);
  if (problem.distortion.size() != nx)
    throw InvalidModel("distortion must have one row per source symbol");
  for (const auto& row : problem.distortion) {
    if (row.size() != nh)
      throw InvalidModel("distortion row length mismatch");
    for (double d : row)
      if (!(d >= 0.0) || !std::isfinite(d))
        throw InvalidModel("distortion entries must be finite and >= 0");
  }
  auto xl = problem.x_labels.empty() ? default_labels("x", nx) : problem.x_labels;
  auto hl = problem.xhat_labels.empty() ? default_labels("xh", nh)
                                        : problem.xhat_labels;
  return WeightedModel(xl, hl, problem.source_p, q, problem.distortion,
                       problem.epsilon0, problem.k_boltzmann);
}

RdResult rate_distortion(const RdProblem& problem) {
  WeightedModel model = rd_model(problem);
  thermo::ThermoSolution sol = thermo::solve_beta(model, problem.level_d);
  RdResult out;
  out.rate = -sol.value;
  out.beta_star = sol.beta_star;
  out.temperature = sol.beta_star > 0.0
                        ? 1.0 / (problem.k_boltzmann * sol.beta_star)
                        : kInf;
  return out;
}

BinaryRdResult binary_hamming_rd(double D, double epsilon0, double k_boltzmann) {
  if (!(D > 0.0 && D < 0.5))
    throw OutOfRange(to_msg("binary Hamming distortion must be in (0, 1/2): ", D));
  BinaryRdResult out;
  double slope = std::log((1.0 - D) / D);
  out.beta = slope / epsilon0;
  out.temperature = epsilon0 / (k_boltzmann * slope);
  out.rate = std::log(2.0) - binary_entropy(D);

  RdProblem generic;
  generic.source_p = {0.5, 0.5};
  generic.coding_q = {0.5, 0.5};
  generic.distortion = {{0.0, 1.0}, {1.0, 0.0}};
  generic.level_d = D;
  generic.epsilon0 = epsilon0;
  generic.k_boltzmann = k_boltzmann;
  RdResult check = rate_distortion(generic);
  if (std::fabs(check.rate - out.rate) > 1e-10)
    throw NonConvergence("closed-form / generic rate-distortion mismatch");
  return out;
}

// ---------------------------------------------------------------------------
// High resolution

namespace {

// Per-source-point distortion from the finite-interval expression
// (boundary terms included), without the validity probe.
double highres_point(double theta, double A, double x, double eps0,
                     double beta) {
  const double s = std::pow(beta, 1.0 / theta);
  const double lo = -s * (A + x), hi = s * (A - x);
  auto integrand = [&](double z) {
    return std::exp(-eps0 * std::pow(std::fabs(z), theta));
  };
  // split at the cusp
  double integral = integrate(integrand, lo, 0.0, 1e-12) +
                    integrate(integrand, 0.0, hi, 1e-12);
  double num = (A - x) * std::exp(-beta * eps0 * std::pow(A - x, theta)) +
               (A + x) * std::exp(-beta * eps0 * std::pow(A + x, theta));
  return (1.0 - s * num / integral) / (beta * theta * eps0);
}

double highres_avg(const HighResProblem& p, double beta) {
  double d = 0.0;
  for (const auto& [x, w] : p.source_points)
    d += w * highres_point(p.theta, p.half_width, x, p.epsilon0, beta);
  return d;
}

void validate_highres(const HighResProblem& p) {
  if (!(p.theta > 0.0)) throw InvalidModel("theta must be positive");
  if (!(p.half_width > 0.0)) throw InvalidModel("half_width must be positive");
  if (p.source_points.empty()) throw InvalidModel("no source points");
  double wsum = 0.0;
  for (const auto& [x, w] : p.source_points) {
    if (std::fabs(x) >= p.half_width)
      throw InvalidModel("source points must lie strictly inside (-A, A)");
    if (!(w >= 0.0)) throw InvalidModel("source weights must be >= 0");
    wsum += w;
  }
  if (std::fabs(wsum - 1.0) > 1e-12)
    throw InvalidModel("source weights must sum to 1");
}

}  // namespace

HighResDistortion highres_distortion(const HighResProblem& problem,
                                     double beta) {
  validate_highres(problem);
  if (!(beta > 0.0)) throw OutOfRange("beta must be positive");
  HighResDistortion out;
  out.distortion = highres_avg(problem, beta);

  // Closed form exists at theta = 1, x = 0; use it to certify the
  // quadrature path.
  for (const auto& [x, w] : problem.source_points) {
    if (problem.theta == 1.0 && x == 0.0 && w > 0.0) {
      double be = beta * problem.epsilon0;
      double closed = 1.0 / be - problem.half_width /
                                     std::expm1(be * problem.half_width);
      double quad =
          highres_point(1.0, problem.half_width, 0.0, problem.epsilon0, beta);
      if (std::fabs(closed - quad) > 1e-8)
        throw QuadratureFailure("theta=1 closed form disagrees with quadrature");
    }
  }

  out.equipartition_ratio =
      out.distortion * beta * problem.epsilon0 * problem.theta;
  // Monotone-in-T validity probe: D must decrease in beta.
  double d_hi = highres_avg(problem, beta * (1.0 + 1e-4));
  double d_lo = highres_avg(problem, beta * (1.0 - 1e-4));
  out.validity_warning = !(d_hi < d_lo);
  return out;
}

HighResRate highres_rate(const HighResProblem& problem, double D) {
  validate_highres(problem);
  if (!(D > 0.0)) throw OutOfRange("distortion level must be positive");
  HighResRate out;
  out.beta_star = 1.0 / (problem.theta * problem.epsilon0 * D);
  HighResDistortion probe = highres_distortion(problem, out.beta_star);
  out.validity_warning =
      probe.validity_warning || std::fabs(probe.equipartition_ratio - 1.0) > 0.02;
  const double theta = problem.theta;
  out.rate = std::log(problem.half_width * theta / gamma_fn(1.0 / theta)) -
             std::log(theta * M_E * D) / theta;
  return out;
}

// ---------------------------------------------------------------------------
// Channel exponents

ChannelResult channel_exponent(const ChannelProblem& problem) {
  const std::size_t nx = problem.input_q.size();
  if (problem.channel_w.size() != nx)
    throw InvalidModel("channel matrix must have one row per input");
  const std::size_t ny = problem.channel_w.front().size();
  const bool matched = !problem.metric.has_value();

  std::vector<double> p_y(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    if (problem.channel_w[x].size() != ny)
      throw InvalidModel("channel row length mismatch");
    for (std::size_t y = 0; y < ny; ++y)
      p_y[y] += problem.input_q[x] * problem.channel_w[x][y];
  }

  // f(x, y): -ln W(y|x) when matched, the decoding metric otherwise.
  auto metric_at = [&](std::size_t x, std::size_t y) -> double {
    if (!matched) return (*problem.metric)[x][y];
    if (problem.channel_w[x][y] <= 0.0) {
      if (problem.input_q[x] > 0.0 && p_y[y] > 0.0)
        throw InvalidModel("matched case needs W(y|x) > 0 on the support");
      return 0.0;
    }
    return -std::log(problem.channel_w[x][y]);
  };

  double energy = 0.0, mutual = 0.0, h_y = 0.0;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      double joint = problem.input_q[x] * problem.channel_w[x][y];
      if (joint > 0.0) energy += joint * metric_at(x, y);
    }
  for (std::size_t y = 0; y < ny; ++y)
    if (p_y[y] > 0.0) h_y -= p_y[y] * std::log(p_y[y]);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      double joint = problem.input_q[x] * problem.channel_w[x][y];
      if (joint > 0.0)
        mutual += joint * std::log(problem.channel_w[x][y] / p_y[y]);
    }

  // Model over the output alphabet; outputs of zero probability are dropped.
  std::vector<std::string> vl;
  std::vector<double> pv;
  std::vector<std::vector<double>> q, f;
  auto yl = problem.y_labels.empty() ? default_labels("y", ny) : problem.y_labels;
  for (std::size_t y = 0; y < ny; ++y) {
    if (p_y[y] <= 0.0) continue;
    vl.push_back(yl[y]);
    pv.push_back(p_y[y]);
    q.push_back(problem.input_q);
    std::vector<double> row(nx);
    for (std::size_t x = 0; x < nx; ++x)
      row[x] = problem.input_q[x] > 0.0 ? metric_at(x, y) : 0.0;
    f.push_back(std::move(row));
  }
  auto xl = problem.x_labels.empty() ? default_labels("x", nx) : problem.x_labels;
  WeightedModel model(vl, xl, pv, q, f, problem.epsilon0, 1.0);

  thermo::ThermoSolution sol = thermo::solve_beta(model, energy);
  ChannelResult out;
  out.value = -sol.value;
  out.beta_star = sol.beta_star;
  out.is_matched = matched;
  out.energy = energy;
  out.mutual_information = mutual;
  if (matched) {
    if (std::fabs(sol.beta_star * problem.epsilon0 - 1.0) > 1e-8)
      throw NonConvergence(
          to_msg("matched equilibrium beta*eps0 != 1: ", sol.beta_star));
    if (std::fabs(out.value - mutual) > 1e-9)
      throw NonConvergence("matched exponent differs from mutual information");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Detection

DetectionResult detection_exponents(const DetectionProblem& problem) {
  const std::size_t nx = problem.signal_composition.size();
  const std::size_t ny = problem.noise_q.size();
  if (problem.signal_q.size() != nx)
    throw InvalidModel("signal_q must have one row per signal symbol");

  // mutual absolute continuity of the two hypotheses
  for (std::size_t x = 0; x < nx; ++x) {
    if (problem.signal_q[x].size() != ny)
      throw InvalidModel("signal_q row length mismatch");
    for (std::size_t y = 0; y < ny; ++y) {
      bool noise_pos = problem.noise_q[y] > 0.0;
      bool signal_pos = problem.signal_q[x][y] > 0.0;
      if (noise_pos != signal_pos)
        throw InvalidModel("hypothesis supports differ (y index " +
                           std::to_string(y) + ")");
    }
  }

  auto llr = [&](std::size_t x, std::size_t y) {
    if (problem.noise_q[y] <= 0.0) return 0.0;
    return std::log(problem.noise_q[y] / problem.signal_q[x][y]);
  };

  double fa_mean = 0.0, md_mean = 0.0;
  std::vector<std::vector<double>> f_fa(nx, std::vector<double>(ny, 0.0));
  std::vector<std::vector<double>> f_md(nx, std::vector<double>(ny, 0.0));
  std::vector<std::vector<double>> q_fa(nx, problem.noise_q);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      f_fa[x][y] = llr(x, y);
      f_md[x][y] = -f_fa[x][y];
      fa_mean += problem.signal_composition[x] * problem.noise_q[y] * f_fa[x][y];
      md_mean +=
          problem.signal_composition[x] * problem.signal_q[x][y] * f_fa[x][y];
    }
  const double tol = 1e-12 * (1.0 + std::max(std::fabs(fa_mean), std::fabs(md_mean)));
  if (problem.threshold_e0 < md_mean - tol || problem.threshold_e0 > fa_mean + tol)
    throw OutOfRange(to_msg("threshold outside the feasible band: ",
                            problem.threshold_e0));

  auto xl = problem.x_labels.empty() ? default_labels("x", nx) : problem.x_labels;
  auto yl = problem.y_labels.empty() ? default_labels("y", ny) : problem.y_labels;
  WeightedModel fa_model(xl, yl, problem.signal_composition, q_fa, f_fa);
  WeightedModel md_model(xl, yl, problem.signal_composition, problem.signal_q,
                         f_md);

  ldp::RateResult fa = ldp::rate_function(fa_model, problem.threshold_e0);
  ldp::RateResult md = ldp::rate_function(md_model, -problem.threshold_e0);
  DetectionResult out;
  out.false_alarm_exp = fa.rate;
  out.missed_detection_exp = md.rate;
  out.false_alarm_beta = fa.beta_star;
  out.missed_detection_beta = md.beta_star;
  return out;
}

// ---------------------------------------------------------------------------
// Temperature hypothesis test

WeightedModel temp_test_model(const TempTestProblem& problem) {
  const std::size_t nx = problem.state_p.size();
  if (problem.hamiltonian.size() != nx)
    throw InvalidModel("hamiltonian must have one row per state symbol");
  const std::size_t ny = problem.hamiltonian.front().size();
  std::vector<std::vector<double>> q(nx, std::vector<double>(ny, 1.0 / ny));
  auto xl = problem.x_labels.empty() ? default_labels("x", nx) : problem.x_labels;
  auto yl = problem.y_labels.empty() ? default_labels("y", ny) : problem.y_labels;
  return WeightedModel(xl, yl, problem.state_p, q, problem.hamiltonian, 1.0,
                       problem.k_boltzmann);
}

double ordinary_sigma_bar(const TempTestProblem& problem, double E) {
  WeightedModel model = temp_test_model(problem);
  return thermo::solve_beta(model, E).value +
         std::log(static_cast<double>(model.num_u()));
}

TempTestResult temperature_test_exponents(const TempTestProblem& problem) {
  if (!(problem.beta1 >= problem.beta2) || !(problem.beta2 >= 0.0))
    throw InvalidModel("need beta1 >= beta2 >= 0");
  WeightedModel model = temp_test_model(problem);
  const double log_ny = std::log(static_cast<double>(model.num_u()));
  auto sigma = [&](double E) {
    return thermo::solve_beta(model, E).value + log_ny;
  };
  auto mean_at = [&](double beta) {
    double e = 0.0;
    for (std::size_t x = 0; x < model.num_v(); ++x)
      e += model.p(x) * thermo::mean_energy(model, x, beta);
    return e;
  };

  TempTestResult out;
  out.e1 = mean_at(problem.beta1);
  out.e2 = mean_at(problem.beta2);
  out.e0 = problem.threshold_e0;
  const double tol = 1e-12 * (1.0 + std::max(std::fabs(out.e1), std::fabs(out.e2)));
  if (out.e0 < out.e1 - tol || out.e0 > out.e2 + tol)
    throw OutOfRange(to_msg("threshold E0 outside (E1, E2): ", out.e0));
  out.e0 = std::clamp(out.e0, out.e1, out.e2);

  thermo::ThermoSolution at_e0 = thermo::solve_beta(model, out.e0);
  out.beta0 = at_e0.beta_star;
  double sigma0 = at_e0.value + log_ny;
  double sigma1 = sigma(out.e1);
  double sigma2 = sigma(out.e2);
  out.i2 = sigma2 - sigma0 - problem.beta2 * (out.e2 - out.e0);
  out.i1 = sigma1 - sigma0 - problem.beta1 * (out.e1 - out.e0);
  if (out.i1 < -1e-12 || out.i2 < -1e-12)
    throw NonConvergence("negative error exponent");

  const double k = problem.k_boltzmann;
  out.t1 = 1.0 / (k * problem.beta1);
  out.t2 = problem.beta2 > 0.0 ? 1.0 / (k * problem.beta2) : kInf;
  out.t0 = out.beta0 > 0.0 ? 1.0 / (k * out.beta0) : kInf;
  return out;
}

double heat_capacity_integral(const TempTestProblem& problem,
                              ExponentKind which) {
  TempTestResult ex = temperature_test_exponents(problem);
  WeightedModel model = temp_test_model(problem);
  // Same integral as (1/k) int (1/T - 1/T_i) C_bar(T) dT, substituted to
  // inverse temperature so the beta2 = 0 (T2 = inf) endpoint stays finite;
  // J(beta) = k T^2 C_bar(T).
  auto var_bar = [&](double beta) {
    return thermo::fisher_information(model, beta);
  };
  if (which == ExponentKind::kI2) {
    if (ex.beta0 <= problem.beta2) return 0.0;
    return integrate(
        [&](double beta) { return (beta - problem.beta2) * var_bar(beta); },
        problem.beta2, ex.beta0, 1e-9);
  }
  if (problem.beta1 <= ex.beta0) return 0.0;
  return integrate(
      [&](double beta) { return (problem.beta1 - beta) * var_bar(beta); },
      ex.beta0, problem.beta1, 1e-9);
}

// ---------------------------------------------------------------------------
// Quantizer time sharing

namespace {

struct PhiResult {
  double value = 0.0;  // min_beta [beta E + sum_s p(s) ln Z_s(beta)]
  double beta = 0.0;
};

// Objective for a fixed sharing distribution, with the natural extensions:
// 0 at or above the tilted-mean range, -inf below the reachable minimum.
PhiResult eval_sharing(const QuantizerProblem& problem,
                       const std::vector<double>& sharing, double energy,
                       double sign) {
  const std::size_t ns = problem.quantizers.size();
  const std::size_t nx = problem.source_q.size();
  std::vector<std::vector<double>> q(ns, problem.source_q);
  std::vector<std::vector<double>> f(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    f[s].resize(nx);
    for (std::size_t x = 0; x < nx; ++x)
      f[s][x] = sign * problem.quantizers[s].distortion[x];
  }
  WeightedModel model(default_labels("s", ns), default_labels("x", nx), sharing,
                      q, f);
  EnergyRange range = energy_range(model);
  PhiResult out;
  const double tol =
      1e-12 * (1.0 + std::max(std::fabs(range.e_min), std::fabs(range.e_mean)));
  if (energy >= range.e_mean - tol) {
    out.value = 0.0;
    out.beta = 0.0;
    return out;
  }
  if (energy < range.e_min - tol) {
    out.value = -kInf;
    out.beta = kInf;
    return out;
  }
  thermo::ThermoSolution sol = thermo::solve_beta(model, energy);
  out.value = sol.value;
  out.beta = sol.beta_star;
  return out;
}

struct Candidate {
  double score = -kInf;  // maximized in both directions
  std::vector<double> sharing;
  PhiResult phi;
};

bool support_less(const std::vector<double>& a, const std::vector<double>& b) {
  // lexicographic comparison of support index sets
  std::vector<std::size_t> sa, sb;
  for (std::size_t i = 0; i < a.size(); ++i) if (a[i] > 1e-9) sa.push_back(i);
  for (std::size_t i = 0; i < b.size(); ++i) if (b[i] > 1e-9) sb.push_back(i);
  return sa < sb;
}

}  // namespace

QuantizerPlan quantizer_exponent(const QuantizerProblem& problem) {
  const std::size_t ns = problem.quantizers.size();
  const std::size_t nx = problem.source_q.size();
  if (ns == 0) throw InvalidModel("no quantizers");
  for (const auto& qz : problem.quantizers) {
    if (qz.distortion.size() != nx)
      throw InvalidModel("quantizer distortion column length mismatch");
    if (!(qz.rate >= 0.0)) throw InvalidModel("quantizer rates must be >= 0");
  }
  bool feasible = false;
  for (const auto& qz : problem.quantizers)
    feasible = feasible || qz.rate <= problem.budget_r + 1e-12;
  if (!feasible)
    throw InfeasibleBudget("no quantizer fits the rate budget");

  const bool small = problem.direction == Direction::kSmallDistortion;
  const double sign = small ? 1.0 : -1.0;
  const double energy = sign * problem.level_d;
  auto score_of = [&](const PhiResult& phi) {
    return small ? phi.value : -phi.value;
  };

  Candidate best;
  auto consider = [&](std::vector<double> sharing) {
    PhiResult phi = eval_sharing(problem, sharing, energy, sign);
    double score = score_of(phi);
    bool take = false;
    if (score > best.score + 1e-10) {
      take = true;
    } else if (score >= best.score - 1e-10 && !best.sharing.empty()) {
      take = support_less(sharing, best.sharing);
    } else if (best.sharing.empty() && score >= best.score) {
      take = true;
    }
    if (take) best = Candidate{score, std::move(sharing), phi};
  };

  // Singleton supports within budget.
  for (std::size_t s = 0; s < ns; ++s) {
    if (problem.quantizers[s].rate > problem.budget_r + 1e-12) continue;
    std::vector<double> sharing(ns, 0.0);
    sharing[s] = 1.0;
    consider(std::move(sharing));
  }

  // Pair supports: the budget constraint carves an alpha-interval out of
  // [0, 1]; the concave objective is maximized by golden section (small
  // direction) or sits at an endpoint (excess direction).
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t s = 0; s + 1 < ns; ++s) {
    for (std::size_t t = s + 1; t < ns; ++t) {
      double rs = problem.quantizers[s].rate;
      double rt = problem.quantizers[t].rate;
      // alpha * rs + (1 - alpha) * rt <= R, alpha in [0, 1]
      double a = 0.0, b = 1.0;
      if (std::fabs(rs - rt) > 0.0) {
        double cut = (problem.budget_r - rt) / (rs - rt);
        if (rs > rt)
          b = std::min(b, cut);
        else
          a = std::max(a, cut);
      } else if (rs > problem.budget_r + 1e-12) {
        continue;
      }
      if (a > b + 1e-15) continue;
      a = std::clamp(a, 0.0, 1.0);
      b = std::clamp(b, 0.0, 1.0);
      auto sharing_at = [&](double alpha) {
        std::vector<double> sharing(ns, 0.0);
        sharing[s] = alpha;
        sharing[t] = 1.0 - alpha;
        return sharing;
      };
      auto g = [&](double alpha) {
        return score_of(eval_sharing(problem, sharing_at(alpha), energy, sign));
      };
      consider(sharing_at(a));
      consider(sharing_at(b));
      if (small && b - a > 1e-12) {
        double lo = a, hi = b;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = g(x1), f2 = g(x2);
        for (int it = 0; it < 80 && hi - lo > 1e-10; ++it) {
          if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = g(x2);
          } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = g(x1);
          }
        }
        consider(sharing_at(0.5 * (lo + hi)));
      }
    }
  }

  if (best.sharing.empty() || best.score == -kInf) {
    if (best.sharing.empty())
      throw InfeasibleBudget("no feasible sharing distribution");
    throw OutOfRange("distortion level unreachable for every feasible support");
  }

  QuantizerPlan plan;
  plan.exponent = best.score;
  plan.sharing_p = best.sharing;
  for (std::size_t i = 0; i < best.sharing.size(); ++i)
    if (best.sharing[i] > 1e-9) plan.support.push_back(i);
  plan.rate_used = 0.0;
  for (std::size_t i = 0; i < ns; ++i)
    plan.rate_used += best.sharing[i] * problem.quantizers[i].rate;
  plan.beta_star = best.phi.beta;
  return plan;
}

std::vector<PhaseScanRow> phase_transition_scan(const QuantizerProblem& problem,
                                                const std::vector<double>& d_grid,
                                                bool parallel) {
  std::vector<PhaseScanRow> rows(d_grid.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long long i = 0; i < static_cast<long long>(d_grid.size()); ++i) {
    QuantizerProblem local = problem;
    local.level_d = d_grid[i];
    rows[i].level_d = d_grid[i];
    try {
      rows[i].plan = quantizer_exponent(local);
    } catch (const Error& e) {
      rows[i].error = std::string(e.code()) + ": " + e.what();
    }
  }
  const std::vector<std::size_t>* prev = nullptr;
  for (auto& row : rows) {
    if (!row.error.empty()) continue;
    row.transition = prev != nullptr && *prev != row.plan.support;
    prev = &row.plan.support;
  }
  return rows;
}

}  // namespace apps
}  // namespace chernoff
