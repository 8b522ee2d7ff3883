#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "homoflow/sweeps.hpp"

using namespace homoflow;

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  JetmapSpec spec;
  spec.n_mu = 400;
  spec.n_gamma = 400;

  std::vector<MuGamma> ps;
  for (int i = 0; i < 200; ++i)
    ps.push_back({-1.8 + 0.02 * i, -3.5 + 0.03 * i});

  const int cap = thread_cap();
  std::printf("HOMOFLOW_THREADS cap: %s\n",
              cap > 0 ? std::to_string(cap).c_str() : "(default)");

  double sink = 0;
  const double jm_s = time_ms([&] { sink += jetmap_serial(spec)[0][4]; });
  const double jm_p = time_ms([&] { sink += jetmap_parallel(spec)[0][4]; });
  std::printf("jetmap %dx%d        serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              spec.n_mu, spec.n_gamma, jm_s, jm_p, jm_s / jm_p);

  const double rs_s =
      time_ms([&] { sink += residual_sweep_serial(ps, 1000)[0]; });
  const double rs_p =
      time_ms([&] { sink += residual_sweep_parallel(ps, 1000)[0]; });
  std::printf("residual 200x1000   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              rs_s, rs_p, rs_s / rs_p);

  return sink == sink ? 0 : 1;
}
