#include "doctest.h"

#include <cstdlib>
#include <cstring>
#include <vector>

#include "homoflow/params.hpp"
#include "homoflow/pressure.hpp"
#include "homoflow/sweeps.hpp"

using namespace homoflow;

TEST_SUITE("sweeps") {

TEST_CASE("sweeps.thread_cap_env") {
  unsetenv("HOMOFLOW_THREADS");
  CHECK(thread_cap() == 0);
  setenv("HOMOFLOW_THREADS", "3", 1);
  CHECK(thread_cap() == 3);
  setenv("HOMOFLOW_THREADS", "1", 1);
  CHECK(thread_cap() == 1);
  setenv("HOMOFLOW_THREADS", "not-a-number", 1);
  CHECK(thread_cap() == 0);
  setenv("HOMOFLOW_THREADS", "-2", 1);
  CHECK(thread_cap() == 0);
  unsetenv("HOMOFLOW_THREADS");
}

TEST_CASE("sweeps.jetmap_grid_layout") {
  JetmapSpec spec;
  spec.mu_lo = -1.0;
  spec.mu_hi = 1.0;
  spec.n_mu = 3;
  spec.gamma_lo = 0.0;
  spec.gamma_hi = 2.0;
  spec.n_gamma = 5;
  auto rows = jetmap_serial(spec);
  REQUIRE(rows.size() == 15);
  // mu outer, gamma inner, endpoints included
  CHECK(rows[0][0] == doctest::Approx(-1.0));
  CHECK(rows[0][1] == doctest::Approx(0.0));
  CHECK(rows[4][0] == doctest::Approx(-1.0));
  CHECK(rows[4][1] == doctest::Approx(2.0));
  CHECK(rows[5][0] == doctest::Approx(0.0));
  CHECK(rows[14][0] == doctest::Approx(1.0));
  CHECK(rows[14][1] == doctest::Approx(2.0));
  // row content agrees with the pointwise classifier
  for (const auto& r : rows) {
    JetReport rep = classify_jet({r[0], r[1]});
    CHECK(r[2] == (rep.in_Ip ? 1.0 : 0.0));
    CHECK(r[3] == rep.u_r_north);
    CHECK(r[4] == rep.p_slope_north);
  }
}

TEST_CASE("sweeps.jetmap_serial_parallel_identical") {
  JetmapSpec spec;
  spec.n_mu = 40;
  spec.n_gamma = 37;
  auto s = jetmap_serial(spec);
  auto p = jetmap_parallel(spec);
  REQUIRE(s.size() == p.size());
  CHECK(std::memcmp(s.data(), p.data(), s.size() * sizeof(JetmapRow)) == 0);
}

TEST_CASE("sweeps.jetmap_parallel_respects_thread_cap") {
  // byte-identical under any cap (results must not depend on scheduling)
  JetmapSpec spec;
  spec.n_mu = 16;
  spec.n_gamma = 16;
  auto base = jetmap_serial(spec);
  for (const char* cap : {"1", "2", "5"}) {
    setenv("HOMOFLOW_THREADS", cap, 1);
    auto p = jetmap_parallel(spec);
    REQUIRE(p.size() == base.size());
    CHECK(std::memcmp(base.data(), p.data(), base.size() * sizeof(JetmapRow)) ==
          0);
  }
  unsetenv("HOMOFLOW_THREADS");
}

TEST_CASE("sweeps.jetmap_degenerate_grid") {
  JetmapSpec spec;
  spec.mu_lo = spec.mu_hi = 1.0;
  spec.n_mu = 1;
  spec.gamma_lo = spec.gamma_hi = 0.2;
  spec.n_gamma = 1;
  auto rows = jetmap_serial(spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][2] == 1.0);  // (1, 0.2) is inside I_p
}

TEST_CASE("sweeps.residual_sweep_small_everywhere") {
  std::vector<MuGamma> ps = {{0.0, 1.0},   {0.3, 0.8},  {-0.5, 0.5},
                             {1.0, -1.0 - 1.7320508075688772},
                             {0.0, -3.0},  {-1.0, -1.0}, {2.5, 1.4}};
  auto res = residual_sweep_serial(ps, 257);
  REQUIRE(res.size() == ps.size());
  for (double r : res) CHECK(r <= 1e-9);
}

TEST_CASE("sweeps.residual_serial_parallel_identical") {
  std::vector<MuGamma> ps;
  for (int i = 0; i < 25; ++i)
    ps.push_back({-1.5 + 0.16 * i, -3.0 + 0.23 * i});
  auto s = residual_sweep_serial(ps, 101);
  auto p = residual_sweep_parallel(ps, 101);
  REQUIRE(s.size() == p.size());
  CHECK(std::memcmp(s.data(), p.data(), s.size() * sizeof(double)) == 0);
}

TEST_CASE("sweeps.empty_inputs") {
  auto res = residual_sweep_serial({}, 64);
  CHECK(res.empty());
  auto resp = residual_sweep_parallel({}, 64);
  CHECK(resp.empty());
}

}  // TEST_SUITE
