#include "homoflow/ivp.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_odeiv2.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "homoflow/errors.hpp"
#include "homoflow/exact.hpp"

namespace homoflow {

namespace {

struct RhsParams {
  double mu;
  bool swirl;
};

// state: (U_theta) or (U_theta, U_phi, U_phi', J1, J2, psi)
int rhs(double x, const double y[], double dy[], void* params) {
  const auto* p = static_cast<const RhsParams*>(params);
  const double om = 1.0 - x * x;
  if (om <= 0) return GSL_EDOM;
  const double psi = p->swirl ? y[5] : 0.0;
  dy[0] = (p->mu * (1 - x) * (1 - x) + psi - 2 * x * y[0] -
           0.5 * y[0] * y[0]) /
          om;
  if (p->swirl) {
    dy[1] = y[2];
    dy[2] = -y[0] * y[2] / om;
    dy[3] = -2 * y[1] * y[2] / om;
    dy[4] = -y[3];
    dy[5] = -y[4];
  }
  return GSL_SUCCESS;
}

struct OdeGuard {
  gsl_odeiv2_step* s = nullptr;
  gsl_odeiv2_control* c = nullptr;
  gsl_odeiv2_evolve* e = nullptr;
  ~OdeGuard() {
    if (e) gsl_odeiv2_evolve_free(e);
    if (c) gsl_odeiv2_control_free(c);
    if (s) gsl_odeiv2_step_free(s);
  }
};

}  // namespace

IvpResult integrate_ivp_full(const MuGamma& p, const IvpOptions& opt) {
  if (!(opt.x_end > -1.0 && opt.x_end < opt.x_start && opt.x_start < 1.0))
    throw DomainError("ivp window must satisfy -1 < x_end < x_start < 1");

  const bool swirl = opt.swirl_c != 0.0;
  const std::size_t dim = swirl ? 6 : 1;
  RhsParams rp{p.mu, swirl};
  gsl_odeiv2_system sys{rhs, nullptr, dim, &rp};

  OdeGuard g;
  g.s = gsl_odeiv2_step_alloc(gsl_odeiv2_step_rkf45, dim);
  g.c = gsl_odeiv2_control_y_new(opt.tol, opt.tol);
  g.e = gsl_odeiv2_evolve_alloc(dim);

  const double t0 = opt.x_start - 1.0;
  const double q = north_q(p);
  double y[6] = {0, 0, 0, 0, 0, 0};
  y[0] = p.gamma * t0 + q * t0 * t0;
  if (swirl) {
    y[1] = opt.swirl_c * t0;
    y[2] = opt.swirl_c;
    y[3] = opt.swirl_c * opt.swirl_c * t0;
  }

  std::vector<double> xs{opt.x_start};
  std::vector<std::array<double, 3>> ys{{y[0], y[1], y[2]}};
  std::vector<double> psis{y[5]};

  double x = opt.x_start, h = -1e-8;
  const long max_steps = 2000000;
  for (long step = 0; x > opt.x_end; ++step) {
    if (step >= max_steps)
      throw NoConvergence("ivp exceeded the step budget");
    const int status =
        gsl_odeiv2_evolve_apply(g.e, g.c, g.s, &sys, &x, opt.x_end, &h, y);
    if (status != GSL_SUCCESS) throw BlowUp(x, "integrator step failed");
    if (std::abs(y[0]) > opt.blowup)
      throw BlowUp(x, "profile left the admissible range");
    if (std::abs(h) < 1e-17 * (1 + std::abs(x)))
      throw BlowUp(x, "step size collapsed");
    if (x < xs.back()) {
      xs.push_back(x);
      ys.push_back({y[0], y[1], y[2]});
      psis.push_back(y[5]);
    }
  }

  IvpResult out;
  SolutionProfile& prof = out.profile;
  const std::size_t n = xs.size();
  prof.x.resize(n);
  prof.Utheta.resize(n);
  prof.dUtheta.resize(n);
  prof.Uphi.resize(n);
  prof.dUphi.resize(n);
  prof.d2Uphi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;  // stored descending; emit ascending
    const double xi = xs[j];
    const double om = 1 - xi * xi;
    prof.x[i] = xi;
    prof.Utheta[i] = ys[j][0];
    prof.Uphi[i] = ys[j][1];
    prof.dUphi[i] = ys[j][2];
    prof.d2Uphi[i] = -ys[j][0] * ys[j][2] / om;
    const double psi = swirl ? psis[j] : 0.0;
    prof.dUtheta[i] = (p.mu * (1 - xi) * (1 - xi) + psi - 2 * xi * ys[j][0] -
                       0.5 * ys[j][0] * ys[j][0]) /
                      om;
  }
  prof.source = ProfileSource::Ivp;
  prof.params = p;
  prof.validate();
  out.psi_end = swirl ? psis.back() : 0.0;
  return out;
}

SolutionProfile integrate_ivp(const MuGamma& p, const IvpOptions& opt) {
  return integrate_ivp_full(p, opt).profile;
}

}  // namespace homoflow
