#include "homoflow/exact.hpp"

#include <cmath>

#include "homoflow/errors.hpp"

namespace homoflow {

namespace {

constexpr double kPoleTol = 1e-14;
constexpr double kSeriesWindow = 1e-6;  // |1-x| below which the series is used

struct ValDer {
  double U = 0, dU = 0;
};

// Closed-form value and first derivative, by case. All formulas are written
// in v = ((1+x)/2)^b (or logs of it) so nothing overflows near x = -1.
ValDer closed_form(MuGamma p, double x, Region region) {
  const double alpha = p.gamma + 1.0;
  const double disc = 1.0 + 2.0 * p.mu;

  if (region == Region::I3) {
    const double b = std::sqrt(std::max(disc, 0.0));
    return {(1.0 + b) * (1.0 - x), -(1.0 + b)};
  }

  if (disc >= kCaseTol) {
    const double b = std::sqrt(disc);
    const double cp = alpha + b, cm = alpha - b;
    const double v = std::pow((1.0 + x) / 2.0, b);
    const double den = cp - cm * v;
    if (std::abs(den) < kPoleTol * (std::abs(cp) + std::abs(cm * v) + 1.0))
      throw PoleHit("eval_U_theta: denominator vanished (mu > -1/2 case)");
    const double F = 2.0 * b * cm * v / den;
    const double dF = 2.0 * b * b * cp * cm * v / ((1.0 + x) * den * den);
    const double G = 1.0 - b - F;
    return {(1.0 - x) * G, -G - (1.0 - x) * dF};
  }

  if (disc > -kCaseTol) {  // mu = -1/2
    const double L = std::log((1.0 + x) / 2.0);
    const double den = alpha * L - 2.0;
    if (std::abs(den) < kPoleTol * (std::abs(alpha * L) + 2.0))
      throw PoleHit("eval_U_theta: denominator vanished (mu = -1/2 case)");
    const double F = 2.0 * alpha / den;
    const double dF = -2.0 * alpha * alpha / ((1.0 + x) * den * den);
    return {(1.0 - x) * (1.0 + F), -(1.0 + F) + (1.0 - x) * dF};
  }

  // mu < -1/2: oscillatory case, h = (b/2) log((1+x)/2).
  const double b = std::sqrt(-disc);
  const double h = 0.5 * b * std::log((1.0 + x) / 2.0);
  const double sh = std::sin(h), ch = std::cos(h);
  const double N = b * sh + alpha * ch;
  const double M = alpha * sh - b * ch;
  const double P = alpha * ch + b * sh;
  if (std::abs(M) < kPoleTol * (std::abs(alpha) + b))
    throw PoleHit("eval_U_theta: denominator vanished (mu < -1/2 case)");
  const double R = N / M;
  const double dh = 0.5 * b / (1.0 + x);
  const double dR = -dh * (M * M + N * P) / (M * M);
  return {(1.0 - x) * (1.0 + b * R), -(1.0 + b * R) + (1.0 - x) * b * dR};
}

ValDer eval_checked(MuGamma p, double x) {
  if (!(x > -1.0) || !(x <= 1.0))
    throw OutOfDomain("eval_U_theta: x outside (-1, 1]");
  const RegionInfo info = classify(p);
  if (info.region == Region::Exterior && x <= delta_star(p))
    throw OutOfDomain("eval_U_theta: x at or below the blow-up point");
  return closed_form(p, x, info.region);
}

}  // namespace

double north_q(MuGamma p) {
  return (2.0 * p.gamma + p.gamma * p.gamma - 2.0 * p.mu) / 4.0;
}

double eval_U_theta(MuGamma p, double x) { return eval_checked(p, x).U; }

double eval_U_theta_deriv(MuGamma p, double x, int order) {
  if (order < 1 || order > 3)
    throw OutOfDomain("eval_U_theta_deriv: order must be 1, 2 or 3");
  const ValDer vd = eval_checked(p, x);
  if (order == 1) return vd.dU;

  if (classify(p).region == Region::I3) return 0.0;  // exactly linear

  if (std::abs(1.0 - x) < kSeriesWindow) {
    const double t = x - 1.0;
    const double q = north_q(p);
    const double r = p.gamma * q / 4.0;
    const double s = (q * q / 2.0 + (p.gamma - 1.0) * r) / 6.0;
    return order == 2 ? 2.0 * q + 6.0 * r * t + 12.0 * s * t * t
                      : 6.0 * r + 24.0 * s * t;
  }
  const double om = 1.0 - x * x;
  const double d2 =
      (-2.0 * p.mu * (1.0 - x) - 2.0 * vd.U - vd.U * vd.dU) / om;
  if (order == 2) return d2;
  return (2.0 * p.mu - 2.0 * vd.dU - vd.dU * vd.dU + (2.0 * x - vd.U) * d2) /
         om;
}

double residual_smooth_north(MuGamma p, double x) {
  const ValDer vd = eval_checked(p, x);
  return (1.0 - x * x) * vd.dU + 2.0 * x * vd.U + 0.5 * vd.U * vd.U -
         p.mu * (1.0 - x) * (1.0 - x);
}

FieldSample field_at(MuGamma p, double x) {
  if (!(x > -1.0) || !(x <= 1.0))
    throw OutOfDomain("field_at: x outside (-1, 1]");
  FieldSample out;
  if (std::abs(x - 1.0) < 1e-8) {  // removable singularity at the north pole
    out.u_r = p.gamma;
    out.u_theta = 0.0;
    out.p = 2.0 * north_q(p) - 0.5 * p.gamma * p.gamma;
    return out;
  }
  const ValDer vd = eval_checked(p, x);
  const double d2 = eval_U_theta_deriv(p, x, 2);
  const double d3 = eval_U_theta_deriv(p, x, 3);
  const double om = 1.0 - x * x;
  out.u_r = vd.dU;
  out.u_theta = vd.U / std::sqrt(om);
  out.p = 0.5 * (-om * d3 + 2.0 * x * d2 - vd.dU * vd.dU - vd.U * d2 -
                 vd.U * vd.U / om);
  return out;
}

double landau_lambda(MuGamma p) {
  if (std::abs(p.mu) > 1e-9 || p.gamma <= -2.0 || std::abs(p.gamma) <= 1e-9)
    throw OutOfDomain("landau_lambda: needs mu = 0 and gamma in (-2,0)u(0,inf)");
  return -(p.gamma + 4.0) / p.gamma;
}

SolutionProfile closed_form_profile(MuGamma p, std::vector<double> xs) {
  SolutionProfile prof;
  prof.x = std::move(xs);
  const std::size_t n = prof.x.size();
  prof.Utheta.resize(n);
  prof.dUtheta.resize(n);
  prof.Uphi.assign(n, 0.0);
  prof.dUphi.assign(n, 0.0);
  prof.d2Uphi.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    prof.Utheta[i] = eval_U_theta(p, prof.x[i]);
    prof.dUtheta[i] = eval_U_theta_deriv(p, prof.x[i], 1);
  }
  prof.source = ProfileSource::ClosedForm;
  prof.params = p;
  prof.validate();
  return prof;
}

}  // namespace homoflow
