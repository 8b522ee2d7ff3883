#include "homoflow/pressure.hpp"

#include <cmath>
#include <cstddef>

#include "homoflow/errors.hpp"
#include "homoflow/exact.hpp"
#include "homoflow/quad.hpp"

namespace homoflow {

double pressure_slope_north(MuGamma p) {
  const double alpha = p.gamma + 1.0;
  const double disc = 1.0 + 2.0 * p.mu;
  const double b = std::sqrt(std::fabs(disc));
  const double shear = 0.25 * (alpha - 1.0) * (alpha - 1.0);
  if (disc > kRegionTol) return 0.5 * (alpha + b) * (alpha - b) + shear;
  if (disc < -kRegionTol) return 0.5 * alpha * alpha + 0.5 * b * b + shear;
  return 0.5 * alpha * alpha + shear;
}

double f_of_b(double b) {
  const double rad2 = 3.0 * b * b - 1.0;
  if (rad2 < -1e-12)
    throw DomainError("f_of_b: b < 1/sqrt(3), radicand negative");
  const double root = std::sqrt(2.0 * std::max(rad2, 0.0));
  return (54.0 * b * b - 22.0 - root * (15.0 * b * b + 1.0)) / 432.0;
}

double ip_boundary_gamma(double mu) {
  return (2.0 / 3.0) * (std::sqrt(1.0 + 3.0 * mu) - 1.0);
}

JetReport classify_jet(MuGamma p) {
  JetReport rep;
  rep.params = p;
  rep.u_r_north = p.gamma;
  rep.p_slope_north = pressure_slope_north(p);
  if (p.mu > 0.0) {
    const double gb = ip_boundary_gamma(p.mu);
    rep.in_Ip = p.gamma > 0.0 && p.gamma < gb;
    if (std::fabs(p.gamma - gb) <= 1e-9)
      rep.f_quadratic = f_of_b(std::sqrt(1.0 + 2.0 * p.mu));
  }
  return rep;
}

namespace {

// p(x) from U, its first three derivatives, and U_phi.
double assemble(double x, double U, double dU, double d2U, double d3U,
                double Uphi) {
  const double om = 1.0 - x * x;
  return 0.5 * (-om * d3U + 2.0 * x * d2U - dU * dU - U * d2U -
                (U * U + Uphi * Uphi) / om);
}

// Barycentric weights for arbitrary distinct nodes, with per-factor scaling
// by 4/(span) so products stay O(1) on Chebyshev-like grids.
std::vector<double> bary_weights(const std::vector<double>& x) {
  const std::size_t n = x.size();
  const double scale = 4.0 / (x.back() - x.front());
  std::vector<double> w(n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) w[i] *= scale * (x[i] - x[j]);
  for (auto& wi : w) wi = 1.0 / wi;
  return w;
}

// One spectral differentiation pass: dy_i = sum_j D_ij y_j with the
// negative-sum diagonal, without materializing D.
std::vector<double> bary_diff(const std::vector<double>& x,
                              const std::vector<double>& w,
                              const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> dy(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 0.0, acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dij = (w[j] / w[i]) / (x[i] - x[j]);
      diag -= dij;
      acc += dij * y[j];
    }
    dy[i] = acc + diag * y[i];
  }
  return dy;
}

}  // namespace

std::vector<double> pressure_profile(const SolutionProfile& prof) {
  prof.validate();
  const std::size_t n = prof.size();
  if (n < 32) throw GridTooCoarse("pressure_profile: need at least 32 nodes");
  for (double x : prof.x)
    if (std::fabs(x) >= 1.0)
      throw OutOfDomain("pressure_profile: node on |x| >= 1");

  std::vector<double> p(n);
  if (prof.source == ProfileSource::ClosedForm && prof.params.has_value()) {
    const MuGamma mg = *prof.params;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = prof.x[i];
      p[i] = assemble(x, eval_U_theta(mg, x), eval_U_theta_deriv(mg, x, 1),
                      eval_U_theta_deriv(mg, x, 2),
                      eval_U_theta_deriv(mg, x, 3), prof.Uphi[i]);
    }
    return p;
  }

  const auto w = bary_weights(prof.x);
  const auto d2 = bary_diff(prof.x, w, prof.dUtheta);
  const auto d3 = bary_diff(prof.x, w, d2);
  for (std::size_t i = 0; i < n; ++i)
    p[i] = assemble(prof.x[i], prof.Utheta[i], prof.dUtheta[i], d2[i], d3[i],
                    prof.Uphi[i]);
  return p;
}

std::vector<double> pressure_at(const SolutionProfile& prof, double mu_hat,
                                const std::vector<double>& xq) {
  prof.validate();
  double sup_phi = 0.0;
  for (double v : prof.Uphi) sup_phi = std::max(sup_phi, std::fabs(v));
  const bool swirl = sup_phi > 1e-14;

  std::vector<double> p(xq.size());
  for (std::size_t i = 0; i < xq.size(); ++i) {
    const double x = xq[i];
    if (std::fabs(x) >= 1.0)
      throw OutOfDomain("pressure_at: point on |x| >= 1");
    const double om = 1.0 - x * x;
    const double U = prof.utheta(x);
    const double dU = prof.dutheta(x);
    const double Uphi = prof.uphi(x);
    double m0 = 0.0, m1 = 0.0;
    if (swirl) {
      m0 = quad::integrate(
          [&](double s) {
            return prof.uphi(s) * prof.duphi(s) / (1.0 - s * s);
          },
          x, 1.0 - 1e-12, 1e-12);
      m1 = quad::integrate(
          [&](double s) {
            return prof.uphi(s) * prof.duphi(s) * (s - x) / (1.0 - s * s);
          },
          x, 1.0 - 1e-12, 1e-12);
    }
    const double d2 = (-2.0 * mu_hat * (1.0 - x) - 2.0 * m1 - 2.0 * U - U * dU) / om;
    const double d3 =
        (2.0 * mu_hat + 2.0 * m0 - 2.0 * dU - dU * dU + (2.0 * x - U) * d2) / om;
    p[i] = assemble(x, U, dU, d2, d3, Uphi);
  }
  return p;
}

}  // namespace homoflow
