// chernoff: command-line frontend for the weighted-partition-function
// toolkit. One subcommand per calculator; json/csv/table output.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "chernoff/apps.hpp"
#include "chernoff/ldp.hpp"
#include "chernoff/model.hpp"
#include "chernoff/thermo.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace chernoff;

namespace {

// ---------------------------------------------------------------------------
// Output plumbing. Every number goes through %.12g so that json, csv and
// table renderings are byte-identical across runs.

struct Field {
  enum Kind { kNum, kInt, kBool, kStr } kind = kNum;
  double num = 0.0;
  long long integer = 0;
  bool flag = false;
  std::string str;

  static Field number(double x) { return {kNum, x, 0, false, {}}; }
  static Field integer_of(long long x) { return {kInt, 0.0, x, false, {}}; }
  static Field boolean(bool b) { return {kBool, 0.0, 0, b, {}}; }
  static Field text(std::string s) { return {kStr, 0.0, 0, false, std::move(s)}; }
};

std::string fmt_num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string field_json(const Field& f) {
  switch (f.kind) {
    case Field::kNum: {
      if (std::isnan(f.num) || std::isinf(f.num)) return json_escape(fmt_num(f.num));
      return fmt_num(f.num);
    }
    case Field::kInt: return std::to_string(f.integer);
    case Field::kBool: return f.flag ? "true" : "false";
    case Field::kStr: return json_escape(f.str);
  }
  return "null";
}

std::string field_plain(const Field& f) {
  switch (f.kind) {
    case Field::kNum: return fmt_num(f.num);
    case Field::kInt: return std::to_string(f.integer);
    case Field::kBool: return f.flag ? "true" : "false";
    case Field::kStr: return f.str;
  }
  return "";
}

using Record = std::vector<std::pair<std::string, Field>>;

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<Field>> rows;
};

void emit_record(const Record& rec, const std::string& format) {
  if (format == "json") {
    std::string out = "{";
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i) out += ",";
      out += json_escape(rec[i].first) + ":" + field_json(rec[i].second);
    }
    std::cout << out << "}\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < rec.size(); ++i)
      std::cout << (i ? "," : "") << rec[i].first;
    std::cout << "\n";
    for (std::size_t i = 0; i < rec.size(); ++i)
      std::cout << (i ? "," : "") << field_plain(rec[i].second);
    std::cout << "\n";
  } else {
    std::size_t w = 0;
    for (const auto& [k, v] : rec) w = std::max(w, k.size());
    for (const auto& [k, v] : rec)
      std::cout << k << std::string(w - k.size() + 2, ' ') << field_plain(v)
                << "\n";
  }
}

void emit_table(const Table& t, const std::string& format) {
  if (format == "json") {
    std::string out = "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (r) out += ",";
      out += "{";
      for (std::size_t c = 0; c < t.headers.size(); ++c) {
        if (c) out += ",";
        out += json_escape(t.headers[c]) + ":" + field_json(t.rows[r][c]);
      }
      out += "}";
    }
    std::cout << out << "]\n";
  } else {  // csv and table share the csv layout; table pads columns
    std::vector<std::size_t> width(t.headers.size(), 0);
    if (format == "table") {
      for (std::size_t c = 0; c < t.headers.size(); ++c)
        width[c] = t.headers[c].size();
      for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
          width[c] = std::max(width[c], field_plain(row[c]).size());
    }
    auto cell = [&](const std::string& s, std::size_t c, bool last) {
      if (format == "csv") {
        std::cout << s << (last ? "\n" : ",");
      } else {
        std::cout << s;
        if (!last)
          std::cout << std::string(width[c] - s.size() + 2, ' ');
        else
          std::cout << "\n";
      }
    };
    for (std::size_t c = 0; c < t.headers.size(); ++c)
      cell(t.headers[c], c, c + 1 == t.headers.size());
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        cell(field_plain(row[c]), c, c + 1 == row.size());
  }
}

// ---------------------------------------------------------------------------
// Input plumbing

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_doc(const std::string& path) {
  std::string text = slurp(path);
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("not valid JSON: " + path);
  if (!doc.is_object()) throw ParseError("top-level JSON object expected");
  return doc;
}

double need_number(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number())
    throw ParseError(std::string("missing or non-numeric field: ") + key);
  return doc[key].get<double>();
}

std::vector<double> need_vector(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw ParseError(std::string("missing or non-array field: ") + key);
  std::vector<double> out;
  for (const auto& x : doc[key]) {
    if (!x.is_number()) throw ParseError(std::string("non-numeric entry in ") + key);
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> need_matrix(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw ParseError(std::string("missing or non-array field: ") + key);
  std::vector<std::vector<double>> out;
  for (const auto& row : doc[key]) {
    if (!row.is_array()) throw ParseError(std::string("non-array row in ") + key);
    out.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number())
        throw ParseError(std::string("non-numeric entry in ") + key);
      out.back().push_back(x.get<double>());
    }
  }
  return out;
}

std::vector<std::string> opt_labels(const json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  for (const auto& x : doc[key]) out.push_back(x.get<std::string>());
  return out;
}

apps::RdProblem load_rd(const json& doc) {
  apps::RdProblem p;
  p.x_labels = opt_labels(doc, "x_alphabet");
  p.xhat_labels = opt_labels(doc, "xhat_alphabet");
  p.source_p = need_vector(doc, "source_p");
  p.coding_q = need_vector(doc, "coding_q");
  p.distortion = need_matrix(doc, "distortion");
  p.level_d = need_number(doc, "level_D");
  if (doc.contains("epsilon0")) p.epsilon0 = need_number(doc, "epsilon0");
  if (doc.contains("k")) p.k_boltzmann = need_number(doc, "k");
  return p;
}

apps::HighResProblem load_highres(const json& doc) {
  apps::HighResProblem p;
  p.theta = need_number(doc, "theta");
  p.half_width = need_number(doc, "half_width");
  if (!doc.contains("source_points") || !doc["source_points"].is_array())
    throw ParseError("missing source_points");
  for (const auto& pt : doc["source_points"]) {
    if (!pt.is_array() || pt.size() != 2)
      throw ParseError("source_points entries must be [x, weight]");
    p.source_points.emplace_back(pt[0].get<double>(), pt[1].get<double>());
  }
  if (doc.contains("epsilon0")) p.epsilon0 = need_number(doc, "epsilon0");
  return p;
}

apps::ChannelProblem load_channel(const json& doc) {
  apps::ChannelProblem p;
  p.x_labels = opt_labels(doc, "x_alphabet");
  p.y_labels = opt_labels(doc, "y_alphabet");
  p.input_q = need_vector(doc, "input_q");
  p.channel_w = need_matrix(doc, "channel");
  if (doc.contains("metric")) p.metric = need_matrix(doc, "metric");
  if (doc.contains("epsilon0")) p.epsilon0 = need_number(doc, "epsilon0");
  return p;
}

apps::DetectionProblem load_detection(const json& doc) {
  apps::DetectionProblem p;
  p.x_labels = opt_labels(doc, "x_alphabet");
  p.y_labels = opt_labels(doc, "y_alphabet");
  p.signal_composition = need_vector(doc, "signal_composition");
  p.noise_q = need_vector(doc, "noise_q");
  p.signal_q = need_matrix(doc, "signal_q");
  p.threshold_e0 = need_number(doc, "threshold_E0");
  return p;
}

apps::TempTestProblem load_temp_test(const json& doc, bool need_betas) {
  apps::TempTestProblem p;
  p.x_labels = opt_labels(doc, "x_alphabet");
  p.y_labels = opt_labels(doc, "y_alphabet");
  p.state_p = need_vector(doc, "state_p");
  p.hamiltonian = need_matrix(doc, "hamiltonian");
  if (need_betas || doc.contains("beta1")) p.beta1 = need_number(doc, "beta1");
  if (need_betas || doc.contains("beta2")) p.beta2 = need_number(doc, "beta2");
  if (need_betas || doc.contains("threshold_E0"))
    p.threshold_e0 = need_number(doc, "threshold_E0");
  if (doc.contains("k")) p.k_boltzmann = need_number(doc, "k");
  return p;
}

apps::QuantizerProblem load_quantizer(const json& doc) {
  apps::QuantizerProblem p;
  p.x_labels = opt_labels(doc, "x_alphabet");
  p.source_q = need_vector(doc, "source_q");
  if (!doc.contains("quantizers") || !doc["quantizers"].is_array())
    throw ParseError("missing quantizers");
  // Either each quantizer carries its per-symbol distortion directly, or it
  // maps source symbols to reproduction indices into a shared `distortion`
  // table (rows = source symbols, columns = reproductions).
  std::vector<std::vector<double>> dtable;
  if (doc.contains("distortion")) dtable = need_matrix(doc, "distortion");
  for (const auto& qd : doc["quantizers"]) {
    apps::Quantizer qz;
    qz.label = qd.contains("label") ? qd["label"].get<std::string>()
                                    : "s" + std::to_string(p.quantizers.size());
    qz.rate = need_number(qd, "rate");
    if (qd.contains("distortion")) {
      qz.distortion = need_vector(qd, "distortion");
    } else if (qd.contains("map") && !dtable.empty()) {
      for (std::size_t x = 0; x < qd["map"].size(); ++x) {
        std::size_t xhat = qd["map"][x].get<std::size_t>();
        if (x >= dtable.size() || xhat >= dtable[x].size())
          throw ParseError("quantizer map index outside the distortion table");
        qz.distortion.push_back(dtable[x][xhat]);
      }
    } else {
      throw ParseError("quantizer needs `distortion` or `map` + table");
    }
    p.quantizers.push_back(std::move(qz));
  }
  p.budget_r = need_number(doc, "budget_R");
  if (doc.contains("level_D")) p.level_d = need_number(doc, "level_D");
  std::string dir = doc.value("direction", "small-distortion");
  if (dir == "small-distortion") {
    p.direction = apps::Direction::kSmallDistortion;
  } else if (dir == "excess-distortion") {
    p.direction = apps::Direction::kExcessDistortion;
  } else {
    throw ParseError("direction must be small-distortion or excess-distortion");
  }
  return p;
}

std::string support_text(const apps::QuantizerPlan& plan) {
  std::string out;
  for (std::size_t i = 0; i < plan.support.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(plan.support[i]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* th = std::getenv("CHERNOFF_THERMO_THREADS")) {
    int n = std::atoi(th);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Chernoff-bound thermodynamics toolkit"};
  app.require_subcommand(1);

  std::string model_path, format = "table";
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  app.add_option("--model", model_path, "path to the model/problem JSON file");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--tol", tol, "tolerance override");
  app.add_option("--seed", seed, "RNG seed");

  double E = 0.0, D = 0.0, beta = 0.0, delta = 0.0;
  double e0_override = std::numeric_limits<double>::quiet_NaN();
  double d_min = 0.0, d_max = 0.0;
  double e_min_opt = std::numeric_limits<double>::quiet_NaN();
  double e_max_opt = std::numeric_limits<double>::quiet_NaN();
  int n_block = 0, points = 101;
  long long trials = 0;
  double eps0 = 1.0, kb = 1.0;
  std::string which = "i2";
  bool serial = false;

  CLI::App* c_id = app.add_subcommand("identity-check",
                                      "both sides of the entropy identity");
  c_id->add_option("--E", E, "energy constraint")->required();

  CLI::App* c_rate = app.add_subcommand("rate-fn", "rate function I(E)");
  c_rate->add_option("--E", E, "energy constraint")->required();

  CLI::App* c_exact =
      app.add_subcommand("exact-prob", "certified bounds on ln P_n");
  c_exact->add_option("--n", n_block, "block length")->required();
  c_exact->add_option("--E", E, "energy threshold")->required();
  c_exact->add_option("--delta", delta, "quantization bin width")->required();

  CLI::App* c_mc = app.add_subcommand("mc-prob", "Monte Carlo estimate of P_n");
  c_mc->add_option("--n", n_block, "block length")->required();
  c_mc->add_option("--E", E, "energy threshold")->required();
  c_mc->add_option("--trials", trials, "number of trials")->required();
  c_mc->add_flag("--serial", serial, "single-threaded sampling");

  CLI::App* c_dual = app.add_subcommand(
      "dual-check", "allocation-search vs block-solve rate function");
  c_dual->add_option("--E", E, "energy constraint")->required();

  CLI::App* c_rd = app.add_subcommand("rd", "rate-distortion point");
  c_rd->add_option("--D", D, "override level_D from the problem file");

  CLI::App* c_rdb =
      app.add_subcommand("rd-binary", "binary/Hamming closed forms");
  c_rdb->add_option("--D", D, "distortion level")->required();
  c_rdb->add_option("--eps0", eps0, "energy unit");
  c_rdb->add_option("--k", kb, "Boltzmann constant");

  CLI::App* c_rdh =
      app.add_subcommand("rd-highres", "high-resolution distortion or rate");
  auto* opt_beta = c_rdh->add_option("--beta", beta, "inverse temperature");
  auto* opt_d = c_rdh->add_option("--D", D, "distortion level");
  opt_beta->excludes(opt_d);
  opt_d->excludes(opt_beta);

  app.add_subcommand("capacity", "channel exponent / capacity");

  CLI::App* c_det = app.add_subcommand("detect", "detection error exponents");
  c_det->add_option("--E0", e0_override, "override threshold_E0");

  app.add_subcommand("temp-test", "temperature-test error exponents");

  CLI::App* c_hc =
      app.add_subcommand("hc-integral", "heat-capacity integral form");
  c_hc->add_option("--which", which, "i1 or i2")
      ->check(CLI::IsMember({"i1", "i2"}));

  app.add_subcommand("quantizer", "optimal quantizer time-sharing");

  CLI::App* c_pt = app.add_subcommand("pt-scan", "phase-transition scan");
  c_pt->add_option("--d-min", d_min, "lowest distortion level")->required();
  c_pt->add_option("--d-max", d_max, "highest distortion level")->required();
  c_pt->add_option("--points", points, "grid size");
  c_pt->add_flag("--serial", serial, "disable the parallel scan");

  CLI::App* c_curve =
      app.add_subcommand("entropy-curve", "Sigma-bar curve with tangents");
  c_curve->add_option("--e-min", e_min_opt, "grid start");
  c_curve->add_option("--e-max", e_max_opt, "grid end");
  c_curve->add_option("--points", points, "grid size");

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto need_model = [&]() {
      if (model_path.empty()) throw UsageError("--model is required");
      return load_model(slurp(model_path));
    };
    auto need_doc = [&]() {
      if (model_path.empty()) throw UsageError("--model is required");
      return parse_doc(model_path);
    };

    if (c_id->parsed()) {
      auto chk = thermo::verify_identity(need_model(), E, tol);
      emit_record({{"lhs", Field::number(chk.lhs)},
                   {"rhs", Field::number(chk.rhs)},
                   {"gap", Field::number(chk.gap)},
                   {"pass", Field::boolean(chk.pass)}},
                  format);
    } else if (c_rate->parsed()) {
      auto r = ldp::rate_function(need_model(), E);
      emit_record({{"energy", Field::number(r.energy)},
                   {"rate", Field::number(r.rate)},
                   {"regime", Field::text(ldp::regime_name(r.regime))},
                   {"beta_star", Field::number(r.beta_star)}},
                  format);
    } else if (c_exact->parsed()) {
      auto est = ldp::exact_probability(need_model(), n_block, E, delta);
      emit_record({{"n", Field::integer_of(est.n)},
                   {"log_prob", Field::number(est.log_prob)},
                   {"log_prob_upper", Field::number(est.log_prob_upper)},
                   {"method", Field::text(est.method)},
                   {"bin_width", Field::number(est.bin_width.value_or(delta))}},
                  format);
    } else if (c_mc->parsed()) {
      if (!seed.has_value()) throw UsageError("mc-prob requires --seed");
      auto est = ldp::monte_carlo_probability(need_model(), n_block, E, trials,
                                              *seed, !serial);
      emit_record(
          {{"n", Field::integer_of(est.n)},
           {"log_prob", Field::number(est.log_prob)},
           {"hits", Field::integer_of(est.hits)},
           {"trials", Field::integer_of(est.trials.value_or(trials))},
           {"ci95_log_lo", Field::number(est.ci95_log->first)},
           {"ci95_log_hi", Field::number(est.ci95_log->second)},
           {"seed", Field::integer_of(static_cast<long long>(*seed))},
           {"method", Field::text(est.method)}},
          format);
    } else if (c_dual->parsed()) {
      auto r = ldp::dual_rate_check(need_model(), E);
      emit_record({{"per_symbol_rate", Field::number(r.per_symbol_rate)},
                   {"block_rate", Field::number(r.block_rate)},
                   {"gap", Field::number(r.gap)}},
                  format);
    } else if (c_rd->parsed()) {
      apps::RdProblem p = load_rd(need_doc());
      if (c_rd->count("--D")) p.level_d = D;
      auto r = apps::rate_distortion(p);
      emit_record({{"rate", Field::number(r.rate)},
                   {"beta_star", Field::number(r.beta_star)},
                   {"temperature", Field::number(r.temperature)}},
                  format);
    } else if (c_rdb->parsed()) {
      auto r = apps::binary_hamming_rd(D, eps0, kb);
      emit_record({{"rate", Field::number(r.rate)},
                   {"temperature", Field::number(r.temperature)},
                   {"beta", Field::number(r.beta)}},
                  format);
    } else if (c_rdh->parsed()) {
      apps::HighResProblem p = load_highres(need_doc());
      if (c_rdh->count("--beta")) {
        auto r = apps::highres_distortion(p, beta);
        emit_record(
            {{"distortion", Field::number(r.distortion)},
             {"equipartition_ratio", Field::number(r.equipartition_ratio)},
             {"validity_warning", Field::boolean(r.validity_warning)}},
            format);
      } else if (c_rdh->count("--D")) {
        auto r = apps::highres_rate(p, D);
        emit_record({{"rate", Field::number(r.rate)},
                     {"beta_star", Field::number(r.beta_star)},
                     {"validity_warning", Field::boolean(r.validity_warning)}},
                    format);
      } else {
        throw UsageError("rd-highres needs --beta or --D");
      }
    } else if (app.get_subcommand("capacity")->parsed()) {
      auto r = apps::channel_exponent(load_channel(need_doc()));
      emit_record(
          {{"value", Field::number(r.value)},
           {"beta_star", Field::number(r.beta_star)},
           {"is_matched", Field::boolean(r.is_matched)},
           {"energy", Field::number(r.energy)},
           {"mutual_information", Field::number(r.mutual_information)}},
          format);
    } else if (c_det->parsed()) {
      apps::DetectionProblem p = load_detection(need_doc());
      if (c_det->count("--E0")) p.threshold_e0 = e0_override;
      auto r = apps::detection_exponents(p);
      emit_record(
          {{"false_alarm_exp", Field::number(r.false_alarm_exp)},
           {"missed_detection_exp", Field::number(r.missed_detection_exp)},
           {"false_alarm_beta", Field::number(r.false_alarm_beta)},
           {"missed_detection_beta", Field::number(r.missed_detection_beta)}},
          format);
    } else if (app.get_subcommand("temp-test")->parsed()) {
      auto r = apps::temperature_test_exponents(load_temp_test(need_doc(), true));
      emit_record({{"i1", Field::number(r.i1)},
                   {"i2", Field::number(r.i2)},
                   {"e0", Field::number(r.e0)},
                   {"e1", Field::number(r.e1)},
                   {"e2", Field::number(r.e2)},
                   {"t0", Field::number(r.t0)},
                   {"t1", Field::number(r.t1)},
                   {"t2", Field::number(r.t2)},
                   {"beta0", Field::number(r.beta0)}},
                  format);
    } else if (c_hc->parsed()) {
      auto p = load_temp_test(need_doc(), true);
      double v = apps::heat_capacity_integral(
          p, which == "i1" ? apps::ExponentKind::kI1 : apps::ExponentKind::kI2);
      emit_record({{"which", Field::text(which)}, {"value", Field::number(v)}},
                  format);
    } else if (app.get_subcommand("quantizer")->parsed()) {
      auto plan = apps::quantizer_exponent(load_quantizer(need_doc()));
      Record rec{{"exponent", Field::number(plan.exponent)},
                 {"support", Field::text(support_text(plan))},
                 {"rate_used", Field::number(plan.rate_used)},
                 {"beta_star", Field::number(plan.beta_star)}};
      for (std::size_t s = 0; s < plan.sharing_p.size(); ++s)
        rec.emplace_back("p" + std::to_string(s),
                         Field::number(plan.sharing_p[s]));
      emit_record(rec, format);
    } else if (c_pt->parsed()) {
      auto p = load_quantizer(need_doc());
      if (points < 1) throw UsageError("--points must be >= 1");
      std::vector<double> grid;
      for (int i = 0; i < points; ++i)
        grid.push_back(points == 1 ? d_min
                                   : d_min + (d_max - d_min) * i / (points - 1));
      auto rows = apps::phase_transition_scan(p, grid, !serial);
      Table t;
      t.headers = {"D", "exponent", "support", "beta_star", "transition",
                   "error"};
      for (const auto& row : rows) {
        if (row.error.empty()) {
          t.rows.push_back({Field::number(row.level_d),
                            Field::number(row.plan.exponent),
                            Field::text(support_text(row.plan)),
                            Field::number(row.plan.beta_star),
                            Field::boolean(row.transition), Field::text("")});
        } else {
          t.rows.push_back({Field::number(row.level_d), Field::text(""),
                            Field::text(""), Field::text(""),
                            Field::boolean(false), Field::text(row.error)});
        }
      }
      emit_table(t, format);
    } else if (c_curve->parsed()) {
      json doc = need_doc();
      bool with_tangents = doc.contains("beta1");
      apps::TempTestProblem p = load_temp_test(doc, false);
      WeightedModel model = apps::temp_test_model(p);
      EnergyRange range = energy_range(model);
      double lo = std::isnan(e_min_opt) ? range.e_min + 1e-9 : e_min_opt;
      double hi = std::isnan(e_max_opt) ? range.e_mean : e_max_opt;
      if (points < 1) throw UsageError("--points must be >= 1");

      double sig1 = 0.0, sig2 = 0.0, e1 = 0.0, e2 = 0.0;
      if (with_tangents) {
        apps::TempTestResult tt = apps::temperature_test_exponents(p);
        e1 = tt.e1;
        e2 = tt.e2;
        sig1 = apps::ordinary_sigma_bar(p, e1);
        sig2 = apps::ordinary_sigma_bar(p, e2);
      }
      Table t;
      t.headers = {"E", "sigma_bar", "beta"};
      if (with_tangents) {
        t.headers.insert(t.headers.end(),
                         {"tangent1", "tangent2", "gap1", "gap2"});
      }
      const double log_ny = std::log(static_cast<double>(model.num_u()));
      for (int i = 0; i < points; ++i) {
        double e = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
        thermo::ThermoSolution sol = thermo::solve_beta(model, e);
        double sig = sol.value + log_ny;
        std::vector<Field> row{Field::number(e), Field::number(sig),
                               Field::number(sol.beta_star)};
        if (with_tangents) {
          double t1 = sig1 + p.beta1 * (e - e1);
          double t2 = sig2 + p.beta2 * (e - e2);
          row.insert(row.end(), {Field::number(t1), Field::number(t2),
                                 Field::number(t1 - sig),
                                 Field::number(t2 - sig)});
        }
        t.rows.push_back(std::move(row));
      }
      emit_table(t, format);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.code() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
