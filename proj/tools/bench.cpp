// Benchmark comparing the OpenMP kernels against their serial reference
// paths: the allocation locator behind lhs_entropy and the Monte Carlo
// sampler. Results must agree bit-for-bit; only the wall time differs.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "chernoff/counter_rng.hpp"
#include "chernoff/ldp.hpp"
#include "chernoff/model.hpp"
#include "chernoff/thermo.hpp"

using namespace chernoff;

namespace {

WeightedModel bench_model(int num_v, int num_u, std::uint64_t seed) {
  CounterRng rng(seed);
  std::uint64_t draw = 0;
  std::vector<std::string> vl, ul;
  for (int v = 0; v < num_v; ++v) vl.push_back("v" + std::to_string(v));
  for (int u = 0; u < num_u; ++u) ul.push_back("u" + std::to_string(u));
  std::vector<double> p(num_v);
  std::vector<std::vector<double>> q(num_v, std::vector<double>(num_u));
  std::vector<std::vector<double>> f(num_v, std::vector<double>(num_u));
  double ps = 0.0;
  for (int v = 0; v < num_v; ++v) ps += p[v] = 0.1 + rng.uniform(draw++, 0);
  for (int v = 0; v < num_v; ++v) p[v] /= ps;
  for (int v = 0; v < num_v; ++v) {
    double qs = 0.0;
    for (int u = 0; u < num_u; ++u)
      qs += q[v][u] = 0.05 + rng.uniform(draw++, 0);
    for (int u = 0; u < num_u; ++u) q[v][u] /= qs;
    for (int u = 0; u < num_u; ++u) f[v][u] = 3.0 * rng.uniform(draw++, 0);
  }
  return WeightedModel(vl, ul, p, q, f);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 50;
  std::printf("threads available: %d\n", omp_get_max_threads());

  {
    WeightedModel model = bench_model(4, 5, 7);
    EnergyRange range = energy_range(model);
    thermo::SearchControl serial, parallel;
    serial.parallel = false;
    parallel.parallel = true;
    double checksum_s = 0.0, checksum_p = 0.0;

    double t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) {
      double frac = (r + 1.0) / (reps + 1.0);
      double E = range.e_min + frac * (range.e_mean - range.e_min);
      checksum_s += thermo::lhs_entropy(model, E, serial);
    }
    double t1 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) {
      double frac = (r + 1.0) / (reps + 1.0);
      double E = range.e_min + frac * (range.e_mean - range.e_min);
      checksum_p += thermo::lhs_entropy(model, E, parallel);
    }
    double t2 = omp_get_wtime();
    std::printf("lhs_entropy x%d   serial %.3fs  parallel %.3fs  match %s\n",
                reps, t1 - t0, t2 - t1,
                checksum_s == checksum_p ? "yes" : "NO");
  }

  {
    WeightedModel base = bench_model(2, 4, 11);
    // composition must make n*p(v) integral for the sampler
    WeightedModel model({"v0", "v1"}, base.u_alphabet(), {0.5, 0.5},
                        {base.q_row(0), base.q_row(1)},
                        {base.f_row(0), base.f_row(1)});
    EnergyRange range = energy_range(model);
    double E = 0.7 * range.e_min + 0.3 * range.e_mean;
    const long long trials = 2'000'000;
    double t0 = omp_get_wtime();
    auto s = ldp::monte_carlo_probability(model, 16, E, trials, 42, false);
    double t1 = omp_get_wtime();
    auto par = ldp::monte_carlo_probability(model, 16, E, trials, 42, true);
    double t2 = omp_get_wtime();
    std::printf("monte_carlo %lldx  serial %.3fs  parallel %.3fs  match %s\n",
                trials, t1 - t0, t2 - t1, s.hits == par.hits ? "yes" : "NO");
  }
  return 0;
}
