#include "homoflow/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "homoflow/exact.hpp"
#include "homoflow/pressure.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homoflow {

int thread_cap() {
  const char* env = std::getenv("HOMOFLOW_THREADS");
  if (!env || !*env) return 0;
  const long v = std::strtol(env, nullptr, 10);
  if (v <= 0) return 0;
  return static_cast<int>(std::min<long>(v, 1024));
}

namespace {

double lin(double lo, double hi, int n, int i) {
  return n < 2 ? lo : lo + (hi - lo) * i / (n - 1);
}

JetmapRow jet_cell(double mu, double gamma) {
  const JetReport rep = classify_jet({mu, gamma});
  return {mu, gamma, rep.in_Ip ? 1.0 : 0.0, rep.u_r_north, rep.p_slope_north};
}

double residual_max(const MuGamma& p, int nx) {
  double lo = -0.999;
  if (classify(p).region == Region::Exterior) {
    const double ds = delta_star(p);
    lo = ds + 0.05 * (1.0 - ds);
  }
  double worst = 0.0;
  for (int j = 0; j < nx; ++j) {
    const double x = lo + (j + 0.5) * (1.0 - lo) / nx;
    worst = std::max(worst, std::fabs(residual_smooth_north(p, x)));
  }
  return worst;
}

}  // namespace

std::vector<JetmapRow> jetmap_serial(const JetmapSpec& spec) {
  std::vector<JetmapRow> rows;
  if (spec.n_mu <= 0 || spec.n_gamma <= 0) return rows;
  rows.resize(static_cast<std::size_t>(spec.n_mu) * spec.n_gamma);
  for (int i = 0; i < spec.n_mu; ++i)
    for (int j = 0; j < spec.n_gamma; ++j)
      rows[static_cast<std::size_t>(i) * spec.n_gamma + j] =
          jet_cell(lin(spec.mu_lo, spec.mu_hi, spec.n_mu, i),
                   lin(spec.gamma_lo, spec.gamma_hi, spec.n_gamma, j));
  return rows;
}

std::vector<JetmapRow> jetmap_parallel(const JetmapSpec& spec) {
  std::vector<JetmapRow> rows;
  if (spec.n_mu <= 0 || spec.n_gamma <= 0) return rows;
  rows.resize(static_cast<std::size_t>(spec.n_mu) * spec.n_gamma);
#ifdef _OPENMP
  const int cap = thread_cap();
  if (cap > 0) omp_set_num_threads(cap);
#endif
#pragma omp parallel for schedule(static)
  for (int i = 0; i < spec.n_mu; ++i)
    for (int j = 0; j < spec.n_gamma; ++j)
      rows[static_cast<std::size_t>(i) * spec.n_gamma + j] =
          jet_cell(lin(spec.mu_lo, spec.mu_hi, spec.n_mu, i),
                   lin(spec.gamma_lo, spec.gamma_hi, spec.n_gamma, j));
  return rows;
}

std::vector<double> residual_sweep_serial(const std::vector<MuGamma>& ps,
                                          int nx) {
  std::vector<double> out(ps.size());
  for (std::size_t k = 0; k < ps.size(); ++k) out[k] = residual_max(ps[k], nx);
  return out;
}

std::vector<double> residual_sweep_parallel(const std::vector<MuGamma>& ps,
                                            int nx) {
  std::vector<double> out(ps.size());
#ifdef _OPENMP
  const int cap = thread_cap();
  if (cap > 0) omp_set_num_threads(cap);
#endif
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(ps.size()); ++k)
    out[k] = residual_max(ps[k], nx);
  return out;
}

}  // namespace homoflow
