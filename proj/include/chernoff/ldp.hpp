#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chernoff/model.hpp"
#include "chernoff/thermo.hpp"

namespace chernoff {
namespace ldp {

enum class Regime { kZero, kInterior, kBoundary, kInfeasible };

std::string regime_name(Regime r);

// I(E) = -S_bar(E) inside the range, 0 at or above the mean, +infinity
// below the minimum.
struct RateResult {
  double energy = 0.0;
  double rate = 0.0;  // may be +infinity
  Regime regime = Regime::kInterior;
  double beta_star = 0.0;
};

struct ProbabilityEstimate {
  int n = 0;
  double log_prob = 0.0;           // exact-dp: certified lower bound
  double log_prob_upper = 0.0;     // exact-dp: certified upper bound
  std::string method;              // "exact-dp" or "monte-carlo"
  std::optional<long long> trials;
  std::optional<std::pair<double, double>> ci95_log;
  std::optional<std::uint64_t> seed;
  std::optional<double> bin_width;
  long long hits = 0;              // monte-carlo only
};

RateResult rate_function(const WeightedModel& model, double E);

// ln Pr{sum_i f(U_i, v_i) <= nE} by per-symbol quantization onto a
// delta-grid and log-domain convolution. Rounding the grid both ways gives
// certified lower/upper bounds; log_prob is the lower bound.
ProbabilityEstimate exact_probability(const WeightedModel& model, int n,
                                      double E, double delta);

// Empirical frequency of the event over `trials` seeded draws; bit-identical
// for a fixed seed regardless of how trials are chunked across threads.
ProbabilityEstimate monte_carlo_probability(const WeightedModel& model, int n,
                                            double E, long long trials,
                                            std::uint64_t seed,
                                            bool parallel = true);

// The two evaluation routes of the rate function: the per-symbol allocation
// search and the single beta solve.
struct DualRateCheck {
  double per_symbol_rate = 0.0;
  double block_rate = 0.0;
  double gap = 0.0;
};
DualRateCheck dual_rate_check(const WeightedModel& model, double E,
                              const thermo::SearchControl& control = {});

// Smallest n >= 1 making every n*p(v) integral within 1e-9, if one exists
// below the cap.
std::optional<int> suggest_block_length(const WeightedModel& model,
                                        int cap = 1'000'000);

}  // namespace ldp
}  // namespace chernoff
