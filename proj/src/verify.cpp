#include "homoflow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "homoflow/asympt.hpp"
#include "homoflow/branch.hpp"
#include "homoflow/errors.hpp"
#include "homoflow/exact.hpp"
#include "homoflow/odecore.hpp"
#include "homoflow/pressure.hpp"
#include "homoflow/quad.hpp"
#include "homoflow/sweeps.hpp"
#include "homoflow/ivp.hpp"

namespace homoflow {

namespace {

CheckResult make(const std::string& name, bool pass, double worst,
                 double threshold) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst %.3g vs threshold %.3g", worst,
                threshold);
  return {name, pass, buf};
}

const std::vector<MuGamma>& probe_params() {
  static const std::vector<MuGamma> ps = {
      {0.0, 2.0},          {0.0, -1.0},         {1.0, 0.5},
      {-0.5, 0.3},         {-0.5, 2.0},         {-0.375, -0.2},
      {1.0, -1.0 - std::sqrt(3.0)}, {-1.0, 0.5}, {1.0, -3.0},
      {2.0, -4.0},         {-0.5, -2.0},        {-2.0, 1.0},
  };
  return ps;
}

CheckResult check_closed_form_residual(bool inject_error) {
  double worst = 0.0;
  if (!inject_error) {
    const auto maxima = residual_sweep_serial(probe_params(), 300);
    for (double m : maxima) worst = std::max(worst, m);
  } else {
    // negative control: evaluate the residual of a perturbed profile
    const MuGamma p = {0.0, 2.0};
    for (int j = 0; j < 100; ++j) {
      const double x = -0.99 + (j + 0.5) * 1.98 / 100;
      const double om = 1 - x * x;
      const double U = eval_U_theta(p, x) + 1e-6 * om;
      const double dU = eval_U_theta_deriv(p, x, 1) - 2e-6 * x;
      const double res =
          om * dU + 2 * x * U + 0.5 * U * U - p.mu * (1 - x) * (1 - x);
      worst = std::max(worst, std::fabs(res));
    }
  }
  return make("closed-form-residual", worst <= 1e-9, worst, 1e-9);
}

CheckResult check_delta_star_region_I() {
  const std::vector<MuGamma> ps = {
      {0.0, 2.0}, {-0.5, 0.3}, {1.0, -1.0 - std::sqrt(3.0)}, {3.0, 0.0}};
  double worst = 0.0;
  for (const auto& p : ps) worst = std::max(worst, std::fabs(delta_star(p) + 1));
  return make("delta-star-on-region-I", worst == 0.0, worst, 0.0);
}

CheckResult check_correspondence() {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const TauSigma q = {-3.0 + 0.55 * i, -2.0 + 0.45 * j};
      const MuGamma p = tau_sigma_to_mu_gamma(q);
      const Region hint = q.tau <= 2.0 ? Region::I1 : Region::I3;
      const TauSigma back = mu_gamma_to_tau_sigma(p, hint);
      worst = std::max({worst, std::fabs(back.tau - q.tau),
                        std::fabs(back.sigma - q.sigma)});
    }
  return make("correspondence-round-trip", worst <= 1e-12, worst, 1e-12);
}

CheckResult check_weights_quadrature() {
  const std::vector<MuGamma> ps = {{0.0, 2.0}, {-0.5, 0.3}, {1.0, 0.5}};
  double worst = 0.0;
  for (const auto& p : ps)
    for (double x : {-0.5, 0.4, 0.9}) {
      const double oracle = quad::integrate(
          [&](double s) { return eval_U_theta(p, s) / (1 - s * s); }, 0.0, x,
          1e-12);
      worst = std::max(worst, std::fabs(weights_ab(p, x).b - oracle));
    }
  return make("weights-vs-quadrature", worst <= 1e-10, worst, 1e-10);
}

CheckResult check_psi_oracle() {
  SolutionProfile prof;
  const int n = 200;
  for (int j = 0; j <= n; ++j) {
    const double x = -1.0 + 2.0 * j / n;
    prof.x.push_back(x);
    prof.Utheta.push_back(0.0);
    prof.dUtheta.push_back(0.0);
    prof.Uphi.push_back(1 - x * x);
    prof.dUphi.push_back(-2 * x);
    prof.d2Uphi.push_back(-2.0);
  }
  prof.source = ProfileSource::Synthetic;
  const double got = psi_triple(prof, -1.0);
  const double worst = std::fabs(got + 8.0 / 3.0);
  return make("psi-reduction-oracle", worst <= 1e-10, worst, 1e-10);
}

CheckResult check_kernel_annihilation() {
  const std::vector<MuGamma> ps = {{0.0, 2.0}, {-0.5, 0.3}, {-0.3, -0.7}};
  ChebGrid grid(128);
  double worst = 0.0;
  for (const auto& p : ps) {
    const KernelBasis kb = kernel_basis(p, grid);
    for (const SolutionProfile* v : {&kb.V1, &kb.V2, &kb.V3})
      for (std::size_t j = 2; j + 2 < grid.x().size(); j += 3) {
        const ResidualG r = apply_L(p, nullptr, *v, grid.x()[j]);
        worst = std::max({worst, std::fabs(r.theta), std::fabs(r.phi)});
      }
  }
  return make("kernel-annihilation", worst <= 1e-8, worst, 1e-8);
}

CheckResult check_right_inverse() {
  const std::vector<MuGamma> ps = {{0.0, 2.0}, {-0.5, 0.3}};
  ChebGrid grid(256);
  double worst = 0.0;
  for (const auto& p : ps) {
    const auto xth = [](double s) { return (1 - s) * (1 - s) * (1 + s); };
    const auto xph = [](double s) { return (1 - s) * (1 + s) * (1 + s); };
    const SolutionProfile W = right_inverse_W(p, xth, xph, grid);
    const auto& xs = grid.x();
    for (std::size_t j = 8; j + 8 < xs.size(); ++j) {
      const double q = 0.5 * (xs[j] + xs[j + 1]);
      if (std::fabs(q) > 0.9) continue;
      const ResidualG r = apply_L(p, nullptr, W, q);
      worst = std::max(
          {worst, std::fabs(r.theta - xth(q)), std::fabs(r.phi - xph(q))});
    }
  }
  return make("right-inverse-identity", worst <= 1e-7, worst, 1e-7);
}

CheckResult check_ivp() {
  const MuGamma p = {0.0, 2.0};
  IvpOptions opt;
  opt.x_end = -0.9;
  const SolutionProfile prof = integrate_ivp(p, opt);
  double worst = 0.0;
  for (int j = 0; j < 200; ++j) {
    const double x = -0.9 + (j + 0.5) * 1.89 / 200;
    worst = std::max(worst, std::fabs(prof.utheta(x) - eval_U_theta(p, x)));
  }
  return make("ivp-vs-closed-form", worst <= 1e-6, worst, 1e-6);
}

SolutionProfile full_correction(const BranchPoint& bp) {
  SolutionProfile corr = bp.total;
  for (std::size_t i = 0; i < corr.x.size(); ++i) {
    corr.Utheta[i] -= eval_U_theta(bp.p, corr.x[i]);
    corr.dUtheta[i] -= eval_U_theta_deriv(bp.p, corr.x[i], 1);
  }
  corr.source = ProfileSource::Branch;
  return corr;
}

CheckResult check_branch() {
  const MuGamma p = {0.0, 2.0};
  const BranchPoint bp = solve_branch(p, 1e-3);
  double worst = bp.newton_residual;
  const SolutionProfile corr = full_correction(bp);
  const std::vector<double> probes = {-0.95, -0.5, 0.0, 0.5, 0.95};
  for (double x : probes) {
    const ResidualG r = residual_G(p, corr, x, bp.psi_m1);
    worst = std::max({worst, std::fabs(r.theta), std::fabs(r.phi)});
  }
  const bool swirl_on = bp.sup_Uphi > 1e-5;
  return make("branch-small-beta", worst <= 1e-9 && swirl_on, worst, 1e-9);
}

CheckResult check_pole_relation() {
  const std::vector<MuGamma> ps = {{0.0, 2.0}, {-0.5, 0.3}, {0.5, 1.0}};
  double worst = 0.0;
  for (const auto& p : ps) {
    std::vector<double> xs;
    for (double k = 1.0; k <= 12.0; k += 0.5) xs.push_back(-1 + std::pow(10.0, -k));
    for (int j = 1; j <= 200; ++j) xs.push_back(-0.9 + j * 1.8999 / 200);
    std::sort(xs.begin(), xs.end());
    const SolutionProfile prof = closed_form_profile(p, xs);
    const double tau = pole_limit(prof);
    const double lhs = 0.5 * (tau - 2) * (tau - 2) - 2.0;
    worst = std::max(worst, std::fabs(lhs - 4.0 * p.mu));
  }
  return make("pole-quadratic-relation", worst <= 1e-5, worst, 1e-5);
}

CheckResult check_jetmap_signs() {
  JetmapSpec spec;
  spec.n_mu = 50;
  spec.n_gamma = 50;
  const auto rows = jetmap_serial(spec);
  bool ok = true;
  for (const auto& row : rows) {
    const bool in = row[2] > 0.5;
    if (row[0] > -0.5 + 1e-9) {
      if (in != (row[3] > 0 && row[4] < 0)) ok = false;
    } else {
      if (row[4] <= 0) ok = false;
      if (in) ok = false;
    }
  }
  return {"jetmap-sign-dichotomy", ok,
          ok ? "in_Ip matches the sign test on all cells"
             : "sign test disagrees with in_Ip"};
}

CheckResult check_f_curve() {
  double worst = std::fabs(f_of_b(1.0));
  bool neg_ok = true;
  for (int k = 1; k <= 60; ++k)
    if (f_of_b(1.0 + 0.15 * k) >= 0) neg_ok = false;
  const double at_corner = std::fabs(f_of_b(1.0 / std::sqrt(3.0)) + 1.0 / 108.0);
  const bool pass = worst <= 1e-14 && neg_ok && at_corner <= 1e-12;
  return make("f-curve-values", pass, std::max(worst, at_corner), 1e-12);
}

CheckResult check_serial_parallel() {
  JetmapSpec spec;
  spec.n_mu = 40;
  spec.n_gamma = 40;
  const auto a = jetmap_serial(spec);
  const auto b = jetmap_parallel(spec);
  bool same = a.size() == b.size() &&
              std::memcmp(a.data(), b.data(), a.size() * sizeof(a[0])) == 0;
  const auto ra = residual_sweep_serial(probe_params(), 64);
  const auto rb = residual_sweep_parallel(probe_params(), 64);
  same = same && ra.size() == rb.size() &&
         std::memcmp(ra.data(), rb.data(), ra.size() * sizeof(double)) == 0;
  return {"serial-parallel-bytewise", same,
          same ? "OpenMP kernels match the serial reference bytewise"
               : "kernel outputs differ"};
}

}  // namespace

std::vector<CheckResult> run_verification(bool inject_error) {
  std::vector<CheckResult> out;
  out.push_back(check_closed_form_residual(inject_error));
  out.push_back(check_delta_star_region_I());
  out.push_back(check_correspondence());
  out.push_back(check_weights_quadrature());
  out.push_back(check_psi_oracle());
  out.push_back(check_kernel_annihilation());
  out.push_back(check_right_inverse());
  out.push_back(check_ivp());
  out.push_back(check_branch());
  out.push_back(check_pole_relation());
  out.push_back(check_jetmap_signs());
  out.push_back(check_f_curve());
  out.push_back(check_serial_parallel());
  return out;
}

}  // namespace homoflow
