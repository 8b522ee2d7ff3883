#pragma once
#include <array>
#include <vector>

#include "homoflow/params.hpp"

namespace homoflow {

// Thread cap from HOMOFLOW_THREADS (0 = leave the OpenMP default alone).
int thread_cap();

// Uniform (mu, gamma) grid, mu outer / gamma inner, endpoints included.
struct JetmapSpec {
  double mu_lo = -2, mu_hi = 3;
  int n_mu = 200;
  double gamma_lo = -4, gamma_hi = 3;
  int n_gamma = 200;
};

// One row per grid cell: mu, gamma, in_Ip (0/1), u_r_north, p_slope_north.
using JetmapRow = std::array<double, 5>;

// Serial reference and the OpenMP kernel; both produce byte-identical rows
// (each cell is an independent closed-form evaluation).
std::vector<JetmapRow> jetmap_serial(const JetmapSpec& spec);
std::vector<JetmapRow> jetmap_parallel(const JetmapSpec& spec);

// Max |closed-form ODE residual| per parameter point over nx midpoint
// samples of the existence interval: [-0.999, 1] on region I, and
// [delta* + 0.05 (1 - delta*), 1] outside it (clear of the blow-up).
std::vector<double> residual_sweep_serial(const std::vector<MuGamma>& ps,
                                          int nx);
std::vector<double> residual_sweep_parallel(const std::vector<MuGamma>& ps,
                                            int nx);

}  // namespace homoflow
