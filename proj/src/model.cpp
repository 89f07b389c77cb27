#include "chernoff/model.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

namespace chernoff {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kCountsTol = 1e-9;

void check_distribution(const std::vector<double>& w, const std::string& what) {
  double sum = 0.0;
  for (double x : w) {
    if (!std::isfinite(x) || x < 0.0)
      throw InvalidModel(what + " has a negative or non-finite entry");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > kNormTol) {
    std::ostringstream os;
    os << what << " sums to " << sum;
    throw InvalidModel(os.str());
  }
}

void check_alphabet(const std::vector<std::string>& a, const std::string& what) {
  if (a.empty()) throw InvalidModel(what + " is empty");
  std::set<std::string> seen(a.begin(), a.end());
  if (seen.size() != a.size())
    throw InvalidModel(what + " contains duplicate labels");
}

}  // namespace

WeightedModel::WeightedModel(std::vector<std::string> v_alphabet,
                             std::vector<std::string> u_alphabet,
                             std::vector<double> p,
                             std::vector<std::vector<double>> q,
                             std::vector<std::vector<double>> f,
                             double epsilon0, double k_boltzmann)
    : v_alphabet_(std::move(v_alphabet)),
      u_alphabet_(std::move(u_alphabet)),
      p_(std::move(p)),
      q_(std::move(q)),
      f_(std::move(f)),
      epsilon0_(epsilon0),
      k_(k_boltzmann) {
  check_alphabet(v_alphabet_, "v_alphabet");
  check_alphabet(u_alphabet_, "u_alphabet");
  const std::size_t nv = v_alphabet_.size();
  const std::size_t nu = u_alphabet_.size();
  if (p_.size() != nv) throw InvalidModel("p length does not match v_alphabet");
  check_distribution(p_, "p");
  if (q_.size() != nv) throw InvalidModel("q must have one row per v");
  if (f_.size() != nv) throw InvalidModel("f must have one row per v");
  for (std::size_t v = 0; v < nv; ++v) {
    if (q_[v].size() != nu)
      throw InvalidModel("q row for v=" + v_alphabet_[v] + " has wrong length");
    check_distribution(q_[v], "q row for v=" + v_alphabet_[v]);
    if (f_[v].size() != nu)
      throw InvalidModel("f row for v=" + v_alphabet_[v] + " has wrong length");
    for (double x : f_[v])
      if (!std::isfinite(x))
        throw InvalidModel("f entry for v=" + v_alphabet_[v] + " is not finite");
  }
  if (!(epsilon0_ > 0.0) || !std::isfinite(epsilon0_))
    throw InvalidModel("epsilon0 must be positive");
  if (!(k_ > 0.0) || !std::isfinite(k_))
    throw InvalidModel("k must be positive");
}

const WeightCounts& WeightedModel::counts() const {
  if (!counts_) throw MissingCounts("model has no weight counts attached");
  return *counts_;
}

WeightedModel WeightedModel::with_counts(WeightCounts counts) const {
  if (counts.m_total <= 0)
    throw InconsistentCounts("m_total must be a positive integer");
  if (counts.m.size() != num_v())
    throw InconsistentCounts("weight counts need one row per v");
  for (std::size_t v = 0; v < num_v(); ++v) {
    if (counts.m[v].size() != num_u())
      throw InconsistentCounts("weight count row for v=" + v_alphabet_[v] +
                               " has wrong length");
    std::int64_t row_sum = 0;
    for (std::size_t u = 0; u < num_u(); ++u) {
      if (counts.m[v][u] <= 0)
        throw InconsistentCounts("weight counts must be positive integers");
      row_sum += counts.m[v][u];
      double ratio = static_cast<double>(counts.m[v][u]) /
                     static_cast<double>(counts.m_total);
      if (std::fabs(ratio - q_[v][u]) > kCountsTol) {
        std::ostringstream os;
        os << "count ratio " << counts.m[v][u] << "/" << counts.m_total
           << " does not match q(u=" << u_alphabet_[u]
           << "|v=" << v_alphabet_[v] << ")=" << q_[v][u];
        throw InconsistentCounts(os.str());
      }
    }
    if (row_sum != counts.m_total)
      throw InconsistentCounts("weight count row for v=" + v_alphabet_[v] +
                               " does not sum to m_total");
  }
  WeightedModel out = *this;
  out.counts_ = std::move(counts);
  return out;
}

EnergyRange energy_range(const WeightedModel& model) {
  EnergyRange r;
  for (std::size_t v = 0; v < model.num_v(); ++v) {
    double lo = model.f(v, 0);
    double mean = 0.0;
    for (std::size_t u = 0; u < model.num_u(); ++u) {
      lo = std::min(lo, model.f(v, u));
      mean += model.q(v, u) * model.f(v, u);
    }
    r.per_v.emplace_back(lo, mean);
    r.e_min += model.p(v) * lo;
    r.e_mean += model.p(v) * mean;
  }
  return r;
}

WeightedModel load_model(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    WeightedModel model(
        doc.at("v_alphabet").get<std::vector<std::string>>(),
        doc.at("u_alphabet").get<std::vector<std::string>>(),
        doc.at("p").get<std::vector<double>>(),
        doc.at("q").get<std::vector<std::vector<double>>>(),
        doc.at("f").get<std::vector<std::vector<double>>>(),
        doc.value("epsilon0", 1.0), doc.value("k", 1.0));
    if (doc.contains("weight_counts")) {
      WeightCounts counts;
      counts.m = doc["weight_counts"]
                     .at("m")
                     .get<std::vector<std::vector<std::int64_t>>>();
      counts.m_total = doc["weight_counts"].at("m_total").get<std::int64_t>();
      model = model.with_counts(std::move(counts));
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string WeightedModel::serialize() const {
  nlohmann::ordered_json doc;
  doc["v_alphabet"] = v_alphabet_;
  doc["u_alphabet"] = u_alphabet_;
  doc["p"] = p_;
  doc["q"] = q_;
  doc["f"] = f_;
  doc["epsilon0"] = epsilon0_;
  doc["k"] = k_;
  if (counts_) {
    doc["weight_counts"]["m"] = counts_->m;
    doc["weight_counts"]["m_total"] = counts_->m_total;
  }
  return doc.dump(2);
}

}  // namespace chernoff
