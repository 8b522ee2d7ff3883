#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "homoflow/errors.hpp"
#include "homoflow/exact.hpp"
#include "homoflow/grid.hpp"
#include "homoflow/ivp.hpp"
#include "homoflow/odecore.hpp"
#include "homoflow/quad.hpp"

using namespace homoflow;

namespace {

std::vector<double> uniform(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

// synthetic swirl-only profile U_phi = (1-s^2) g(s) with polynomial g
SolutionProfile swirl_profile(const std::vector<double>& xs,
                              const std::function<double(double)>& f,
                              const std::function<double(double)>& df,
                              const std::function<double(double)>& d2f) {
  SolutionProfile prof;
  prof.x = xs;
  const std::size_t n = xs.size();
  prof.Utheta.assign(n, 0.0);
  prof.dUtheta.assign(n, 0.0);
  prof.Uphi.resize(n);
  prof.dUphi.resize(n);
  prof.d2Uphi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    prof.Uphi[i] = f(xs[i]);
    prof.dUphi[i] = df(xs[i]);
    prof.d2Uphi[i] = d2f(xs[i]);
  }
  prof.source = ProfileSource::Synthetic;
  return prof;
}

}  // namespace

TEST_SUITE("odecore") {

TEST_CASE("odecore.weights_normalization_and_identity") {
  std::vector<MuGamma> ps = {{0.0, 2.0}, {-0.5, 0.3}, {0.3, 0.8},
                             {1.0, -1.0 - std::sqrt(3.0)}};
  for (const auto& p : ps) {
    WeightsAB w0 = weights_ab(p, 0.0);
    CHECK(w0.a == doctest::Approx(0.0).scale(1.0));
    CHECK(w0.b == doctest::Approx(0.0).scale(1.0));
    for (double x : {-0.9, -0.4, 0.55, 0.99}) {
      WeightsAB w = weights_ab(p, x);
      CHECK(w.a == doctest::Approx(-std::log(1.0 - x * x) + w.b)
                       .epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(weights_ab({-1.0, -1.0}, 0.5), OutOfDomain);  // exterior
  CHECK_THROWS_AS(weights_ab({0.0, 2.0}, -1.0), OutOfDomain);
}

TEST_CASE("odecore.weights_match_direct_quadrature") {
  // b(x) = int_0^x Ubar/(1-s^2); closed form vs adaptive quadrature of the
  // defining integral, plus one Simpson-rule cross check.
  std::vector<MuGamma> ps = {{0.0, 2.0}, {-0.5, 0.3}, {0.3, 0.8},
                             {0.25, -1.0 - std::sqrt(1.5)}};
  for (const auto& p : ps) {
    auto integrand = [&](double s) {
      return eval_U_theta(p, s) / (1.0 - s * s);
    };
    for (double x : {-0.95, -0.5, 0.5, 0.9}) {
      double want = quad::integrate(integrand, 0.0, x, 1e-12);
      CHECK(weights_ab(p, x).b == doctest::Approx(want).epsilon(1e-10));
    }
  }
  // Simpson with 2e5 panels as a third, dumb oracle (mu=0, gamma=2, x=0.5).
  MuGamma p{0.0, 2.0};
  int n = 200000;
  double h = 0.5 / n, acc = 0.0;
  for (int i = 0; i < n; ++i) {
    double s0 = i * h, s1 = s0 + h, sm = s0 + 0.5 * h;
    auto f = [&](double s) { return eval_U_theta(p, s) / (1.0 - s * s); };
    acc += h / 6.0 * (f(s0) + 4.0 * f(sm) + f(s1));
  }
  CHECK(weights_ab(p, 0.5).b == doctest::Approx(acc).epsilon(1e-10));
}

TEST_CASE("odecore.weights_boundary_log_form") {
  // On I3, b(x) = (1+sqrt(1+2mu)) ln(1+x); at mu=-0.5 simply ln(1+x).
  MuGamma p{-0.5, -1.0};
  for (double x : {-0.9, -0.3, 0.2, 0.8}) {
    CHECK(weights_ab(p, x).b == doctest::Approx(std::log1p(x)).epsilon(1e-12));
  }
  MuGamma p2{0.25, -1.0 - std::sqrt(1.5)};
  double c = 1.0 + std::sqrt(1.5);
  for (double x : {-0.9, 0.2, 0.8}) {
    CHECK(weights_ab(p2, x).b ==
          doctest::Approx(c * std::log1p(x)).epsilon(1e-12));
  }
}

TEST_CASE("odecore.psi_polynomial_oracle") {
  // U_phi = 1 - s^2: the weight cancels and
  //   psi(x) = -2 int_x^1 s (s-x)^2 ds
  //          = -2 [ (1/4 - 2x/3 + x^2/2) - x^4/12 ],  psi(-1) = -8/3.
  auto xs = uniform(-1.0, 1.0, 201);
  auto prof = swirl_profile(
      xs, [](double s) { return 1.0 - s * s; }, [](double s) { return -2.0 * s; },
      [](double) { return -2.0; });
  auto want = [](double x) {
    return -2.0 * ((0.25 - 2.0 * x / 3.0 + 0.5 * x * x) -
                   x * x * x * x / 12.0);
  };
  CHECK(psi_triple(prof, -1.0) == doctest::Approx(-8.0 / 3.0).epsilon(1e-10));
  for (double x : {-1.0, -0.6, 0.0, 0.4, 0.95}) {
    CHECK(psi_triple(prof, x) == doctest::Approx(want(x)).epsilon(1e-10));
  }
  CHECK(psi_triple(prof, 1.0) == doctest::Approx(0.0).scale(1.0));

  // constant swirl has zero psi at every base point
  auto cprof = swirl_profile(
      xs, [](double) { return 3.0; }, [](double) { return 0.0; },
      [](double) { return 0.0; });
  for (double x : {-1.0, 0.0, 0.9}) {
    CHECK(psi_triple(cprof, x) == doctest::Approx(0.0).scale(1.0));
  }
}

TEST_CASE("odecore.psi_single_equals_literal_nested") {
  // The reduced single integral must agree with the literal nested integral
  //   int_x^1 dl int_l^1 dt int_t^1 2 U_phi U_phi' / (1-s^2) ds
  // for random smooth swirls U_phi = (1-s^2)(c0 + c1 s). For these the inner
  // integrand is the polynomial 2(c0+c1 s)(-2s(c0+c1 s) + (1-s^2)c1), so the
  // nested integral can be done exactly with coefficient arithmetic.
  auto suffix_poly = [](std::vector<double> a) {
    // antiderivative P with P(0)=0, then Q(t) = P(1) - P(t)
    std::vector<double> P(a.size() + 1, 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) P[k + 1] = a[k] / (k + 1.0);
    double p1 = 0.0;
    for (double c : P) p1 += c;
    std::vector<double> Q(P.size(), 0.0);
    Q[0] = p1;
    for (std::size_t k = 1; k < P.size(); ++k) Q[k] = -P[k];
    return Q;
  };
  auto eval_poly = [](const std::vector<double>& a, double t) {
    double acc = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) acc = acc * t + a[k];
    return acc;
  };

  std::mt19937 rng(42);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  auto xs = uniform(-1.0, 1.0, 801);
  for (int trial = 0; trial < 20; ++trial) {
    double c0 = coef(rng), c1 = coef(rng);
    auto f = [=](double s) { return (1.0 - s * s) * (c0 + c1 * s); };
    auto df = [=](double s) { return -2.0 * s * (c0 + c1 * s) +
                                     (1.0 - s * s) * c1; };
    auto d2f = [=](double s) { return -2.0 * (c0 + c1 * s) - 4.0 * s * c1; };
    auto prof = swirl_profile(xs, f, df, d2f);

    // 2 f f' / (1-s^2) = 2(c0+c1 s)(c1 - 2 c0 s - 3 c1 s^2); for c1 = 0 this
    // is the -4 c0^2 s of the hand oracle above.
    std::vector<double> g = {2.0 * c0 * c1, 2.0 * c1 * c1 - 4.0 * c0 * c0,
                             -10.0 * c0 * c1, -6.0 * c1 * c1};
    auto nested = suffix_poly(suffix_poly(suffix_poly(g)));
    for (double x : {-1.0, -0.4, 0.1, 0.8}) {
      CHECK(std::abs(psi_triple(prof, x) - eval_poly(nested, x)) <= 1e-8);
    }
  }
}

TEST_CASE("odecore.psi_bilinear_is_exact_derivative") {
  // psi is quadratic in U_phi, so psi[u + t v] expands exactly:
  //   psi[u+tv] = psi[u] + t B(u,v) + t^2 psi[v].
  auto xs = uniform(-1.0, 1.0, 801);
  auto u = swirl_profile(
      xs, [](double s) { return 1.0 - s * s; }, [](double s) { return -2.0 * s; },
      [](double) { return -2.0; });
  auto v = swirl_profile(
      xs, [](double s) { return (1.0 - s * s) * s; },
      [](double s) { return 1.0 - 3.0 * s * s; },
      [](double s) { return -6.0 * s; });
  double t = 0.5;
  SolutionProfile w = u;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w.Uphi[i] += t * v.Uphi[i];
    w.dUphi[i] += t * v.dUphi[i];
    w.d2Uphi[i] += t * v.d2Uphi[i];
  }
  for (double x : {-1.0, -0.3, 0.6}) {
    double lhs = psi_triple(w, x);
    double rhs = psi_triple(u, x) + t * psi_bilinear(u, v, x) +
                 t * t * psi_triple(v, x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    // and B(u,u) = 2 psi[u]
    CHECK(psi_bilinear(u, u, x) ==
          doctest::Approx(2.0 * psi_triple(u, x)).epsilon(1e-10));
  }
}

TEST_CASE("odecore.residual_G_zero_and_kernel_directions") {
  MuGamma p{0.0, 2.0};
  ChebGrid grid(96);
  const auto& xs = grid.x();
  const std::size_t n = xs.size();

  // tildeU = 0 -> residual identically zero
  SolutionProfile zero;
  zero.x = xs;
  zero.Utheta.assign(n, 0.0);
  zero.dUtheta.assign(n, 0.0);
  zero.Uphi.assign(n, 0.0);
  zero.dUphi.assign(n, 0.0);
  zero.d2Uphi.assign(n, 0.0);
  zero.source = ProfileSource::Synthetic;
  for (double x : {-0.9, 0.0, 0.9}) {
    ResidualG r = residual_G(p, zero, x, 0.0);
    CHECK(r.theta == 0.0);
    CHECK(r.phi == 0.0);
  }

  // tildeU = eps V1: linear terms annihilate, only the quadratic survives:
  // res_theta = eps^2 e^{-2a(x)} / 2, res_phi = 0.
  const double eps = 1e-3;
  KernelBasis kb = kernel_basis(p, grid);
  SolutionProfile ev1 = kb.V1;
  for (std::size_t j = 0; j < n; ++j) {
    ev1.Utheta[j] *= eps;
    ev1.dUtheta[j] *= eps;
  }
  for (std::size_t j = 4; j < n; j += 9) {
    const double x = xs[j];
    if (std::abs(x) > 0.99) continue;
    ResidualG r = residual_G(p, ev1, x, 0.0);
    double ea = std::exp(-weights_ab(p, x).a);
    double want = 0.5 * eps * eps * ea * ea;
    CHECK(std::abs(r.theta - want) <= 1e-6 * want + 1e-18);
    CHECK(r.phi == 0.0);
  }

  // tildeU = eps V2: res_phi = 0 and the theta component reduces to the
  // psi terms with a sign flip.
  SolutionProfile ev2 = kb.V2;
  for (std::size_t j = 0; j < n; ++j) {
    ev2.Uphi[j] *= eps;
    ev2.dUphi[j] *= eps;
    ev2.d2Uphi[j] *= eps;
  }
  const double pm1 = psi_triple(ev2, -1.0);
  for (std::size_t j = 4; j < n; j += 9) {
    const double x = xs[j];
    if (std::abs(x) > 0.99) continue;
    ResidualG r = residual_G(p, ev2, x, pm1);
    double want = -(psi_triple(ev2, x) - 0.25 * pm1 * (1 - x) * (1 - x));
    CHECK(std::abs(r.theta - want) <= 1e-12);
    CHECK(std::abs(r.phi) <= 1e-12);
  }
}

TEST_CASE("odecore.ivp_matches_closed_form") {
  for (const MuGamma& p : {MuGamma{0.0, 2.0}, MuGamma{-0.5, 0.3}}) {
    IvpOptions opt;
    opt.x_end = -0.99;
    SolutionProfile prof = integrate_ivp(p, opt);
    prof.validate();
    double worst = 0.0;
    for (double x : uniform(-0.985, 0.999, 200)) {
      worst = std::max(worst, std::abs(prof.utheta(x) - eval_U_theta(p, x)));
    }
    CHECK(worst <= 1e-6);
    for (double u : prof.Uphi) CHECK(u == 0.0);
  }
}

TEST_CASE("odecore.ivp_swirl_is_monotone") {
  MuGamma p{0.0, 2.0};
  IvpOptions opt;
  opt.x_end = -0.9;
  opt.swirl_c = 0.7;
  SolutionProfile prof = integrate_ivp(p, opt);
  bool has_swirl = false;
  for (double u : prof.Uphi) has_swirl = has_swirl || u != 0.0;
  CHECK(has_swirl);
  // U_phi' = c exp(-int U/(1-s^2)) never changes sign => strictly monotone
  for (std::size_t i = 0; i + 1 < prof.size(); ++i) {
    CHECK(prof.Uphi[i] < prof.Uphi[i + 1]);
  }
  for (double d : prof.dUphi) CHECK(d > 0.0);
}

TEST_CASE("odecore.ivp_blowup_near_delta_star") {
  for (const MuGamma& p :
       {MuGamma{-1.0, -1.0}, MuGamma{0.0, -3.0}, MuGamma{-0.5, -2.0}}) {
    double ds = delta_star(p);
    REQUIRE(ds > -1.0);
    bool blew = false;
    try {
      integrate_ivp(p);
    } catch (const BlowUp& e) {
      blew = true;
      CHECK(std::abs(e.x_stop - ds) <= 1e-2);
    }
    CHECK(blew);
  }
}

TEST_CASE("odecore.kernel_functionals") {
  ChebGrid grid(128);
  for (const MuGamma& p : {MuGamma{0.3, 0.8}, MuGamma{-0.5, 0.5},
                           MuGamma{0.25, -1.0 - std::sqrt(1.5)}}) {
    KernelBasis kb = kernel_basis(p, grid);
    CHECK(l1_of(kb.V1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(l2_of(kb.V1) == 0.0);
    CHECK(l1_of(kb.V2) == 0.0);
    CHECK(l2_of(kb.V2) > 0.0);
    CHECK(l2_of(kb.V2) == doctest::Approx(kb.l2_V2).epsilon(1e-12));
    CHECK(l1_of(kb.V3) == 0.0);
    CHECK(l2_of(kb.V3) == doctest::Approx(1.0));
    // independent quadrature for l2(V2)
    double want = quad::integrate(
        [&](double t) { return std::exp(-weights_ab(p, t).b); }, 0.0,
        1.0 - 1e-12, 1e-12);
    CHECK(kb.l2_V2 == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("odecore.kernel_boundary_log_profile") {
  // I3 at mu=-0.5: V2_phi(x) = ln 2 - ln(1+x).
  MuGamma p{-0.5, -1.0};
  ChebGrid grid(128);
  KernelBasis kb = kernel_basis(p, grid);
  for (std::size_t j = 0; j < grid.x().size(); j += 7) {
    double x = grid.x()[j];
    CHECK(kb.V2.Uphi[j] ==
          doctest::Approx(std::log(2.0) - std::log1p(x)).epsilon(1e-9));
  }
  CHECK(kb.l2_V2 == doctest::Approx(std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("odecore.kernel_annihilation") {
  ChebGrid grid(128);
  for (const MuGamma& p : {MuGamma{0.3, 0.8}, MuGamma{-0.5, 0.5},
                           MuGamma{0.25, -1.0 - std::sqrt(1.5)},
                           MuGamma{1.4, 2.2}}) {
    KernelBasis kb = kernel_basis(p, grid);
    for (const SolutionProfile* v : {&kb.V1, &kb.V2, &kb.V3}) {
      // tolerance scales with ||V||_inf: near the boundary region the kernels
      // reach ~1e13, where doubles are quantized far above 1e-8 absolute.
      double worst = 0.0, vnorm = 0.0;
      for (std::size_t j = 0; j < grid.x().size(); ++j) {
        double x = grid.x()[j];
        ResidualG r = apply_L(p, nullptr, *v, x);
        worst = std::max(worst, std::max(std::abs(r.theta), std::abs(r.phi)));
        vnorm = std::max(vnorm,
                         std::max(std::abs(v->Utheta[j]), std::abs(v->Uphi[j])));
      }
      CHECK(worst <= 1e-8 * vnorm);
    }
  }
}

TEST_CASE("odecore.right_inverse_identity_at_midpoints") {
  ChebGrid grid(256);
  auto xt = [](double s) { return (1.0 - s) * (1.0 - s) * (1.0 + s); };
  auto xp = [](double s) { return (1.0 - s) * (1.0 + s) * (1.0 + s); };
  for (const MuGamma& p : {MuGamma{0.3, 0.8}, MuGamma{-0.5, 0.5},
                           MuGamma{0.25, -1.0 - std::sqrt(1.5)}}) {
    SolutionProfile w = right_inverse_W(p, xt, xp, grid);
    w.validate();
    double worst = 0.0;
    const auto& xs = grid.x();
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
      double x = 0.5 * (xs[j] + xs[j + 1]);
      if (std::abs(x) > 0.9) continue;
      ResidualG r = apply_L(p, nullptr, w, x);
      worst = std::max(worst, std::max(std::abs(r.theta - xt(x)),
                                       std::abs(r.phi - xp(x))));
    }
    CHECK(worst <= 1e-7);
    if (classify(p).region != Region::I3) {
      CHECK(std::abs(l1_of(w)) <= 1e-12);  // theta integral based at 0
    }
  }
}

TEST_CASE("odecore.right_inverse_round_trip") {
  // xi = L0 V for a polynomial V in the admissible class is mapped back to
  // exactly V (l1(V)=0 picks out the unique theta part; V_phi'(1)=0 and
  // V_phi(1)=0 pin the phi part).
  ChebGrid grid(256);
  auto Vt = [](double s) { return s - s * s - s * s * s + s * s * s * s; };
  auto dVt = [](double s) { return 1.0 - 2.0 * s - 3.0 * s * s +
                                   4.0 * s * s * s; };
  auto Vp = [](double s) { return s - 2.0 * s * s * s +
                                  s * s * s * s * s; };
  auto dVp = [](double s) { return 1.0 - 6.0 * s * s +
                                   5.0 * s * s * s * s; };
  auto d2Vp = [](double s) { return -12.0 * s + 20.0 * s * s * s; };

  for (const MuGamma& p : {MuGamma{0.3, 0.8}, MuGamma{-0.5, 0.5},
                           MuGamma{0.25, -1.0 - std::sqrt(1.5)}}) {
    auto xi_t = [&](double s) {
      return (1.0 - s * s) * dVt(s) + (2.0 * s + eval_U_theta(p, s)) * Vt(s);
    };
    auto xi_p = [&](double s) {
      return (1.0 - s * s) * d2Vp(s) + eval_U_theta(p, s) * dVp(s);
    };
    SolutionProfile w = right_inverse_W(p, xi_t, xi_p, grid);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.x().size(); ++j) {
      double x = grid.x()[j];
      worst = std::max(worst, std::abs(w.Utheta[j] - Vt(x)));
      worst = std::max(worst, std::abs(w.Uphi[j] - Vp(x)));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("odecore.right_inverse_rejects_singular_data") {
  // On I3 the theta integral is based at -1; data decaying too slowly there
  // makes the weighted integrand non-integrable.
  ChebGrid grid(64);
  MuGamma p{0.25, -1.0 - std::sqrt(1.5)};
  auto bad = [](double s) { return (1.0 - s) / ((1.0 + s) * (1.0 + s)); };
  auto ok_phi = [](double s) { return (1.0 - s) * (1.0 + s) * (1.0 + s); };
  CHECK_THROWS_AS(right_inverse_W(p, bad, ok_phi, grid), SingularQuadrature);
  // data not vanishing at the north pole is rejected up front
  auto notzero = [](double) { return 1.0; };
  CHECK_THROWS_AS(right_inverse_W(p, notzero, ok_phi, grid), OutOfDomain);
}

TEST_CASE("odecore.frechet_consistency") {
  // (G(U + hV) - G(U))/h -> L_U V with first-order convergence in h.
  auto xs = uniform(-0.999, 1.0, 601);
  const std::size_t n = xs.size();
  MuGamma p{0.3, 0.8};

  SolutionProfile base;
  base.x = xs;
  base.Utheta.resize(n);
  base.dUtheta.resize(n);
  base.Uphi.resize(n);
  base.dUphi.resize(n);
  base.d2Uphi.resize(n);
  base.source = ProfileSource::Synthetic;
  SolutionProfile dir = base;
  for (std::size_t i = 0; i < n; ++i) {
    double s = xs[i];
    base.Utheta[i] = 0.3 * (1.0 - s) * (1.0 + s);
    base.dUtheta[i] = 0.3 * (-2.0 * s);
    base.Uphi[i] = 0.5 * (1.0 - s * s);
    base.dUphi[i] = 0.5 * (-2.0 * s);
    base.d2Uphi[i] = -1.0;
    dir.Utheta[i] = 0.2 * s * (1.0 - s * s);
    dir.dUtheta[i] = 0.2 * (1.0 - 3.0 * s * s);
    dir.Uphi[i] = 0.1 * (1.0 - s * s) * s * s;
    dir.dUphi[i] = 0.1 * (2.0 * s - 4.0 * s * s * s);
    dir.d2Uphi[i] = 0.1 * (2.0 - 12.0 * s * s);
  }

  auto fd_err = [&](double h, double x) {
    SolutionProfile pert = base;
    for (std::size_t i = 0; i < n; ++i) {
      pert.Utheta[i] += h * dir.Utheta[i];
      pert.dUtheta[i] += h * dir.dUtheta[i];
      pert.Uphi[i] += h * dir.Uphi[i];
      pert.dUphi[i] += h * dir.dUphi[i];
      pert.d2Uphi[i] += h * dir.d2Uphi[i];
    }
    ResidualG g1 = residual_G(p, pert, x);
    ResidualG g0 = residual_G(p, base, x);
    ResidualG lv = apply_L(p, &base, dir, x);
    double et = (g1.theta - g0.theta) / h - lv.theta;
    double ep = (g1.phi - g0.phi) / h - lv.phi;
    return std::max(std::abs(et), std::abs(ep));
  };
  for (double x : {-0.5, 0.2, 0.8}) {
    double e1 = fd_err(1e-3, x);
    double e2 = fd_err(5e-4, x);
    CHECK(e1 <= 1e-2);
    CHECK(e2 <= 0.6 * e1 + 1e-11);  // first order: halving h halves the error
  }
}

TEST_CASE("odecore.profile_validation_errors") {
  SolutionProfile broken;
  broken.x = {0.0, 0.5, 1.0};
  broken.Utheta = {0.0, 0.0, 0.0};
  broken.dUtheta = {0.0, 0.0, 0.0};
  broken.Uphi = {0.0, 0.0};  // short column
  broken.dUphi = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(broken.validate(), IncompleteProfile);

  SolutionProfile disordered;
  disordered.x = {0.0, 0.5, 0.4};
  disordered.Utheta = {0.0, 0.0, 0.0};
  disordered.dUtheta = {0.0, 0.0, 0.0};
  disordered.Uphi = {0.0, 0.0, 0.0};
  disordered.dUphi = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(disordered.validate(), GridMismatch);
}

}  // TEST_SUITE
