#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chernoff/errors.hpp"

namespace chernoff {

// Exact integer view of the conditional weights, q(u|v) = m[v][u] / m_total.
// Needed only for the ordinary-partition quantities (sigma-bar, ln M).
struct WeightCounts {
  std::vector<std::vector<std::int64_t>> m;  // row per v, column per u
  std::int64_t m_total = 0;
};

// Problem data shared by every other module: alphabets, symbol frequencies
// p(v), conditionals q(u|v), and the energy table f(u,v) in units of epsilon0.
// Immutable after construction; safe to share across threads.
class WeightedModel {
 public:
  WeightedModel(std::vector<std::string> v_alphabet,
                std::vector<std::string> u_alphabet,
                std::vector<double> p,
                std::vector<std::vector<double>> q,
                std::vector<std::vector<double>> f,
                double epsilon0 = 1.0, double k_boltzmann = 1.0);

  std::size_t num_v() const { return v_alphabet_.size(); }
  std::size_t num_u() const { return u_alphabet_.size(); }
  const std::vector<std::string>& v_alphabet() const { return v_alphabet_; }
  const std::vector<std::string>& u_alphabet() const { return u_alphabet_; }
  double p(std::size_t v) const { return p_[v]; }
  double q(std::size_t v, std::size_t u) const { return q_[v][u]; }
  double f(std::size_t v, std::size_t u) const { return f_[v][u]; }
  const std::vector<double>& q_row(std::size_t v) const { return q_[v]; }
  const std::vector<double>& f_row(std::size_t v) const { return f_[v]; }
  double epsilon0() const { return epsilon0_; }
  double k_boltzmann() const { return k_; }

  bool has_counts() const { return counts_.has_value(); }
  const WeightCounts& counts() const;

  // Returns a copy carrying the counts; throws InconsistentCounts if any
  // ratio m[v][u]/m_total differs from q(u|v) by more than 1e-9.
  WeightedModel with_counts(WeightCounts counts) const;

  std::string serialize() const;

 private:
  std::vector<std::string> v_alphabet_, u_alphabet_;
  std::vector<double> p_;
  std::vector<std::vector<double>> q_, f_;
  double epsilon0_ = 1.0;
  double k_ = 1.0;
  std::optional<WeightCounts> counts_;
};

// Feasible band of the energy constraint: per-v [min_u f, sum_u q f] and the
// aggregate [e_min, e_mean].
struct EnergyRange {
  double e_min = 0.0;
  double e_mean = 0.0;
  std::vector<std::pair<double, double>> per_v;
};

WeightedModel load_model(const std::string& text);
EnergyRange energy_range(const WeightedModel& model);

}  // namespace chernoff
