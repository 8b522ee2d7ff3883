#include "doctest.h"

#include <cmath>
#include <vector>

#include "homoflow/errors.hpp"
#include "homoflow/params.hpp"

using namespace homoflow;

TEST_SUITE("params") {

TEST_CASE("params.correspondence_forward") {
  // mu = tau^2/8 - tau/2, gamma = -2 sigma.
  MuGamma a = tau_sigma_to_mu_gamma({0.0, 0.5});
  CHECK(a.mu == doctest::Approx(0.0));
  CHECK(a.gamma == doctest::Approx(-1.0));

  MuGamma b = tau_sigma_to_mu_gamma({2.0, 0.25});
  CHECK(b.mu == doctest::Approx(-0.5));
  CHECK(b.gamma == doctest::Approx(-0.5));

  // tau = 3 lands on mu = -3/8 regardless of sigma.
  for (double sg : {-1.0, 0.0, 2.5}) {
    MuGamma c = tau_sigma_to_mu_gamma({3.0, sg});
    CHECK(c.mu == doctest::Approx(-0.375));
    CHECK(c.gamma == doctest::Approx(-2.0 * sg));
  }
}

TEST_CASE("params.correspondence_inverse") {
  TauSigma a = mu_gamma_to_tau_sigma({0.0, -1.0}, Region::I1);
  CHECK(a.tau == doctest::Approx(0.0));
  CHECK(a.sigma == doctest::Approx(0.5));

  TauSigma b = mu_gamma_to_tau_sigma({-0.375, -1.5}, Region::I3);
  CHECK(b.tau == doctest::Approx(3.0));

  // Double root at mu = -1/2: no hint needed, tau = 2 either way.
  TauSigma c = mu_gamma_to_tau_sigma({-0.5, 0.7});
  CHECK(c.tau == doctest::Approx(2.0));
  TauSigma d = mu_gamma_to_tau_sigma({-0.5, 0.7}, Region::I3);
  CHECK(d.tau == doctest::Approx(2.0));
}

TEST_CASE("params.correspondence_errors") {
  CHECK_THROWS_AS(mu_gamma_to_tau_sigma({0.5, 0.0}), BranchAmbiguous);
  CHECK_THROWS_AS(mu_gamma_to_tau_sigma({-0.75, 0.0}, Region::I1), DomainError);
}

TEST_CASE("params.correspondence_round_trip") {
  // Round trip to 1e-12 across both branches of the inverse.
  std::vector<double> taus = {-3.0, -1.0, 0.0, 0.5, 1.0, 1.9, 2.0,
                              2.1, 2.5, 3.0, 3.5, 4.0, 5.0};
  for (double tau : taus) {
    for (double sg : {-2.0, 0.0, 1.3}) {
      MuGamma p = tau_sigma_to_mu_gamma({tau, sg});
      Region hint = (tau <= 2.0) ? Region::I1 : Region::I3;
      TauSigma back = mu_gamma_to_tau_sigma(p, hint);
      CHECK(std::abs(back.tau - tau) <= 1e-12);
      CHECK(std::abs(back.sigma - sg) <= 1e-12);
    }
  }
}

TEST_CASE("params.classify_examples") {
  CHECK(classify({0.0, 1.0}).region == Region::I1);
  CHECK(classify({-0.5, 0.0}).region == Region::I2);

  RegionInfo p6 = classify({1.0, -1.0 - std::sqrt(3.0)});
  CHECK(p6.region == Region::I3);
  CHECK(p6.tau_gt_3);
  CHECK(!p6.tau_lt_3);
  CHECK(!p6.tau_eq_3);

  // tau = 2 + 2 sqrt(1+2mu): mu = -3/8 gives exactly 3, mu = 0 gives 4 > 3,
  // mu = -0.45 gives 2 + 2*sqrt(0.1) < 3.
  RegionInfo eq3 = classify({-0.375, -1.5});
  CHECK(eq3.region == Region::I3);
  CHECK(eq3.tau_eq_3);
  RegionInfo lt3 = classify({-0.45, -1.0 - std::sqrt(0.1)});
  CHECK(lt3.region == Region::I3);
  CHECK(lt3.tau_lt_3);

  CHECK(classify({-1.0, 0.0}).region == Region::Exterior);
  CHECK(classify({0.0, -3.0}).region == Region::Exterior);
  CHECK(classify({-0.5, -1.5}).region == Region::Exterior);
}

TEST_CASE("params.classify_boundary_tolerance") {
  // Membership in I2/I3 uses an absolute 1e-9 tolerance so callers get a
  // deterministic branch switch.
  CHECK(classify({-0.5 + 4e-10, 0.5}).region == Region::I2);
  CHECK(classify({-0.5 - 4e-10, 0.5}).region == Region::I2);
  double g3 = -1.0 - std::sqrt(1.0 + 2.0 * 0.25);
  CHECK(classify({0.25, g3 + 4e-10}).region == Region::I3);
  CHECK(classify({0.25, g3 - 2e-9}).region == Region::Exterior);
}

TEST_CASE("params.delta_star_frozen_values") {
  CHECK(delta_star({0.0, 0.0}) == -1.0);

  // mu = -1/2, gamma = -2: alpha = -1, -1 + 2 e^{2/alpha} = -1 + 2 e^{-2}.
  double d2 = delta_star({-0.5, -2.0});
  CHECK(d2 == doctest::Approx(-1.0 + 2.0 * std::exp(-2.0)).epsilon(1e-12));
  CHECK(d2 == doctest::Approx(-0.72933).epsilon(1e-5));

  // mu = -1, gamma = -1: b = 1, -1 + 2 e^{-pi}.
  double d5 = delta_star({-1.0, -1.0});
  CHECK(d5 == doctest::Approx(-1.0 + 2.0 * std::exp(-M_PI)).epsilon(1e-12));
  CHECK(d5 == doctest::Approx(-0.91358).epsilon(1e-5));

  // mu > -1/2, gamma < -1-b: -1 + 2((alpha-b)/(alpha+b))^(-1/b).
  // mu = 0 (b=1), gamma = -3 (alpha=-2): ratio 3, -1 + 2/3.
  CHECK(delta_star({0.0, -3.0}) ==
        doctest::Approx(-1.0 + 2.0 / 3.0).epsilon(1e-12));

  // mu < -1/2, gamma > -1: -1 + 2 exp((2/b)(atan(b/alpha) - pi)); b = 1 here.
  double want = -1.0 + 2.0 * std::exp(2.0 * (std::atan(1.0 / 1.5) - M_PI));
  CHECK(delta_star({-1.0, 0.5}) == doctest::Approx(want).epsilon(1e-12));

  // mu < -1/2, gamma < -1: -1 + 2 exp((2/b) atan(b/alpha)).
  double want6 = -1.0 + 2.0 * std::exp(2.0 * std::atan(1.0 / -1.5));
  CHECK(delta_star({-1.0, -2.5}) == doctest::Approx(want6).epsilon(1e-12));
}

TEST_CASE("params.delta_star_region_agreement") {
  // classify != Exterior  <=>  delta_star == -1 exactly, on a grid.
  int n = 100;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MuGamma p{-2.0 + 4.0 * i / (n - 1), -2.0 + 4.0 * j / (n - 1)};
      bool inside = classify(p).region != Region::Exterior;
      bool dsm1 = delta_star(p) == -1.0;
      CHECK(inside == dsm1);
    }
  }
}

TEST_CASE("params.delta_star_monotone_and_limit") {
  // Interior of I^c: delta_star decreasing in mu and in gamma.
  double h = 1e-6;
  std::vector<MuGamma> pts = {{-1.0, -1.0}, {-0.8, 0.5},  {-1.5, -2.0},
                              {0.0, -3.0},  {0.5, -4.0},  {-0.5 - 0.01, -2.0},
                              {-2.0, 1.0},  {1.0, -5.0}};
  for (const auto& p : pts) {
    REQUIRE(classify(p).region == Region::Exterior);
    double d0 = delta_star(p);
    CHECK(delta_star({p.mu + h, p.gamma}) < d0);
    CHECK(delta_star({p.mu, p.gamma + h}) < d0);
  }

  // gamma -> -inf pushes the singularity toward the north pole.
  CHECK(delta_star({0.0, -1000.0}) > 0.99);
  CHECK(delta_star({-1.0, -1000.0}) > 0.99);

  // Clamp guard: never reaches 1.
  CHECK(delta_star({0.0, -1e9}) <= 1.0 - 1e-12);
}

}  // TEST_SUITE
