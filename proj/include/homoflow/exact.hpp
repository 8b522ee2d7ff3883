#pragma once
#include <vector>

#include "homoflow/grid.hpp"
#include "homoflow/params.hpp"

namespace homoflow {

// Closed-form no-swirl profile U_theta(x) solving
//   (1-x^2) U' + 2x U + U^2/2 = mu (1-x)^2,   U(1) = 0, U'(1) = gamma,
// smooth on (delta_star(p), 1]. Three formula cases by the sign of 1+2mu,
// plus the exact linear profile (1+sqrt(1+2mu))(1-x) on the boundary curve I3.
// Throws OutOfDomain for x outside (delta_star, 1], PoleHit if a denominator
// vanishes to within 1e-14 (relative).
double eval_U_theta(MuGamma p, double x);

// Analytic derivative of order 1, 2 or 3. Order 1 comes from the closed form
// directly; orders 2 and 3 use the identities obtained by differentiating the
// profile ODE:
//   U''  = (-2 mu (1-x) - 2U - U U') / (1-x^2),
//   U''' = (2 mu - 2U' - U'^2 + (2x - U) U'') / (1-x^2),
// switching to the north Taylor series within |1-x| < 1e-6 where those
// quotients lose digits.
double eval_U_theta_deriv(MuGamma p, double x, int order);

// Residual of the profile ODE at x; ~1e-14 * (1 + |U|^2) for the closed forms.
double residual_smooth_north(MuGamma p, double x);

// Physical field on the unit sphere at polar abscissa x = cos(theta):
//   u_r = U', u_theta = U / sin(theta), u_phi = 0,
//   p = [-(1-x^2) U''' + 2x U'' - U'^2 - U U'' - U^2/(1-x^2)] / 2.
// Requires -1 < x <= 1; within |x-1| < 1e-8 the removable-singularity limits
// are returned (u_theta -> 0, u_r -> gamma, p -> 2q - gamma^2/2).
struct FieldSample {
  double u_r = 0, u_theta = 0, u_phi = 0, p = 0;
};
FieldSample field_at(MuGamma p, double x);

// For mu = 0 (within 1e-9) and gamma in (-2,0) u (0,inf) the profile is the
// classical one-parameter jet family U = 2(1-x^2)/(x+lambda) with
// lambda = -(gamma+4)/gamma, |lambda| > 1. Throws OutOfDomain otherwise.
double landau_lambda(MuGamma p);

// Second-order north-series coefficient: U = gamma t + q t^2 + O(t^3),
// t = x-1. Matching powers of t in the profile ODE gives
//   t^2:  gamma - 2q + gamma^2/2 = mu   =>   q = (2 gamma + gamma^2 - 2 mu)/4,
// and the next two orders r = gamma q / 4, s = (q^2/2 + (gamma-1) r)/6 used by
// the series evaluation near the north pole.
double north_q(MuGamma p);

// Nodal no-swirl profile sampled at xs (ascending, strictly inside the
// existence interval). U_phi columns are zero.
SolutionProfile closed_form_profile(MuGamma p, std::vector<double> xs);

}  // namespace homoflow
