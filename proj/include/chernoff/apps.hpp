#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chernoff/model.hpp"
#include "chernoff/thermo.hpp"

namespace chernoff {
namespace apps {

// ---------------------------------------------------------------------------
// Rate-distortion

struct RdProblem {
  std::vector<std::string> x_labels;
  std::vector<std::string> xhat_labels;
  std::vector<double> source_p;                 // p(x)
  std::vector<double> coding_q;                 // q*(xhat), input-independent
  std::vector<std::vector<double>> distortion;  // d[x][xhat] >= 0
  double level_d = 0.0;
  double epsilon0 = 1.0;
  double k_boltzmann = 1.0;
};

struct RdResult {
  double rate = 0.0;  // nats
  double beta_star = 0.0;
  double temperature = 0.0;  // 1/(k beta*), +inf at beta* = 0
};

WeightedModel rd_model(const RdProblem& problem);
RdResult rate_distortion(const RdProblem& problem);

// Binary symmetric source, Hamming distortion: closed forms
// T = eps0/(k ln((1-D)/D)), R = ln 2 - h(D), cross-checked against the
// generic pipeline.
struct BinaryRdResult {
  double rate = 0.0;
  double temperature = 0.0;
  double beta = 0.0;
};
BinaryRdResult binary_hamming_rd(double D, double epsilon0 = 1.0,
                                 double k_boltzmann = 1.0);

// ---------------------------------------------------------------------------
// High-resolution (continuous reproduction on [-A, A], |xhat-x|^theta)

struct HighResProblem {
  double theta = 2.0;
  double half_width = 1.0;                             // A
  std::vector<std::pair<double, double>> source_points;  // (x, weight)
  double epsilon0 = 1.0;
};

struct HighResDistortion {
  double distortion = 0.0;
  double equipartition_ratio = 0.0;  // D * beta * eps0 * theta
  bool validity_warning = false;     // outside the monotone-in-T range
};
HighResDistortion highres_distortion(const HighResProblem& problem,
                                     double beta);

struct HighResRate {
  double rate = 0.0;
  double beta_star = 0.0;  // 1/(theta eps0 D)
  bool validity_warning = false;
};
HighResRate highres_rate(const HighResProblem& problem, double D);

// ---------------------------------------------------------------------------
// Channel exponents

struct ChannelProblem {
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  std::vector<double> input_q;                    // q*(x)
  std::vector<std::vector<double>> channel_w;     // W[x][y]
  std::optional<std::vector<std::vector<double>>> metric;  // m[x][y]
  double epsilon0 = 1.0;
};

struct ChannelResult {
  double value = 0.0;  // -S_bar(E); capacity in the matched case
  double beta_star = 0.0;
  bool is_matched = true;
  double energy = 0.0;  // E: H(Y|X) or the mean metric
  double mutual_information = 0.0;
};
ChannelResult channel_exponent(const ChannelProblem& problem);

// ---------------------------------------------------------------------------
// Detection and temperature hypothesis testing

struct DetectionProblem {
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  std::vector<double> signal_composition;       // p(x)
  std::vector<double> noise_q;                  // q(y)
  std::vector<std::vector<double>> signal_q;    // q[x][y]
  double threshold_e0 = 0.0;
};

struct DetectionResult {
  double false_alarm_exp = 0.0;
  double missed_detection_exp = 0.0;
  double false_alarm_beta = 0.0;
  double missed_detection_beta = 0.0;
};
DetectionResult detection_exponents(const DetectionProblem& problem);

struct TempTestProblem {
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  std::vector<double> state_p;                    // p(x)
  std::vector<std::vector<double>> hamiltonian;   // E_x(y)
  double beta1 = 0.0;  // > beta2
  double beta2 = 0.0;  // >= 0
  double threshold_e0 = 0.0;
  double k_boltzmann = 1.0;
};

// The uniform-conditional model whose weighted entropy differs from the
// ordinary Sigma_bar only by ln|Y|.
WeightedModel temp_test_model(const TempTestProblem& problem);
double ordinary_sigma_bar(const TempTestProblem& problem, double E);

struct TempTestResult {
  double i1 = 0.0, i2 = 0.0;
  double e0 = 0.0, e1 = 0.0, e2 = 0.0;
  double t0 = 0.0, t1 = 0.0, t2 = 0.0;  // t2 = +inf when beta2 = 0
  double beta0 = 0.0;
};
TempTestResult temperature_test_exponents(const TempTestProblem& problem);

enum class ExponentKind { kI1, kI2 };
// Heat-capacity integral form of I1/I2, evaluated by adaptive quadrature
// over inverse temperature (the same integral, substitution beta = 1/(kT),
// which keeps the beta2 = 0 / T2 = inf case finite).
double heat_capacity_integral(const TempTestProblem& problem,
                              ExponentKind which);

// ---------------------------------------------------------------------------
// Time-varying scalar quantizers

enum class Direction { kSmallDistortion, kExcessDistortion };

struct Quantizer {
  std::string label;
  double rate = 0.0;                  // R_s >= 0
  std::vector<double> distortion;     // d(x, F_s(x)) per source symbol
};

struct QuantizerProblem {
  std::vector<std::string> x_labels;
  std::vector<double> source_q;  // q(x)
  std::vector<Quantizer> quantizers;
  double budget_r = 0.0;
  double level_d = 0.0;
  Direction direction = Direction::kSmallDistortion;
};

// Optimal time-sharing distribution. For small-distortion, `exponent` is
// F(R,D) = max_p min_beta [beta D + sum_s p(s) ln Z_s(beta)] (<= 0; the
// event's rate function is -exponent). For excess-distortion, `exponent`
// is the maximized rate function of the excess event (>= 0).
struct QuantizerPlan {
  double exponent = 0.0;
  std::vector<double> sharing_p;
  std::vector<std::size_t> support;  // indices with p(s) > 0, at most two
  double rate_used = 0.0;
  double beta_star = 0.0;
};
QuantizerPlan quantizer_exponent(const QuantizerProblem& problem);

struct PhaseScanRow {
  double level_d = 0.0;
  QuantizerPlan plan;
  bool transition = false;  // support changed vs previous feasible row
  std::string error;        // nonempty if this grid point failed
};
std::vector<PhaseScanRow> phase_transition_scan(const QuantizerProblem& problem,
                                                const std::vector<double>& d_grid,
                                                bool parallel = true);

}  // namespace apps
}  // namespace chernoff
