#pragma once
#include <optional>
#include <vector>

#include "homoflow/grid.hpp"
#include "homoflow/params.hpp"

namespace homoflow {

// North-pole pressure slope lim_{x->1-} p'(x), case-dispatched on mu with
// alpha = gamma+1, b = sqrt|1+2mu|:
//   mu > -1/2:  (alpha+b)(alpha-b)/2 + (alpha-1)^2/4
//   mu = -1/2:  alpha^2/2 + (alpha-1)^2/4
//   mu < -1/2:  alpha^2/2 + b^2/2 + (alpha-1)^2/4
// Continuous across mu = -1/2 (b -> 0 in the first form).
double pressure_slope_north(MuGamma p);

// f(b) = (54 b^2 - 22 - sqrt(2(3b^2-1)) (15 b^2 + 1)) / 432 for b >= 1/sqrt(3).
// f(1) = f'(1) = 0, f(1/sqrt(3)) = -1/108, f < 0 for b > 1.
// Throws DomainError when the radicand is negative.
double f_of_b(double b);

// Jet classification: the pressure-deficit cone
//   I_p = { (mu,gamma) : mu > 0, 0 < gamma < (2/3)(sqrt(1+3mu)-1) }.
// Inside it the axis outflow has u_r(north) > 0 while p'(north) < 0; on the
// boundary curve the slope vanishes and the quadratic coefficient f(b),
// b = sqrt(1+2mu), takes over (reported in f_quadratic when on the curve).
struct JetReport {
  MuGamma params;
  double u_r_north = 0;      // = gamma
  double p_slope_north = 0;  // lim p'(x) at x -> 1
  bool in_Ip = false;
  std::optional<double> f_quadratic;  // f(b) when on the boundary curve
};
JetReport classify_jet(MuGamma p);

// gamma value of the I_p boundary curve at mu (only meaningful for mu > 0).
double ip_boundary_gamma(double mu);

// Pressure on the profile's own grid:
//   p = [-(1-x^2) U''' + 2x U'' - U'^2 - U U'' - U^2/(1-x^2)
//        - U_phi^2/(1-x^2)] / 2.
// Closed-form profiles use the analytic derivatives from the exact module;
// everything else differentiates the stored (U, U') spectrally with the
// barycentric matrix of the profile's nodes. Throws GridTooCoarse for fewer
// than 32 nodes and OutOfDomain if a node sits on |x| >= 1.
std::vector<double> pressure_profile(const SolutionProfile& prof);

// Pointwise pressure at arbitrary abscissas from the profile ODE identities
//   U''  = (-2 mu_hat (1-x) - 2 m1 - 2U - U U') / (1-x^2)
//   U''' = (2 mu_hat + 2 m0 - 2U' - U'^2 + (2x-U) U'') / (1-x^2)
// where m_k(x) = int_x^1 U_phi U_phi' (s-x)^k / (1-s^2) ds are the psi
// derivative integrals (zero for no-swirl input, detected and skipped) and
// mu_hat is the profile's effective ODE constant (= mu when no swirl).
std::vector<double> pressure_at(const SolutionProfile& prof, double mu_hat,
                                const std::vector<double>& xq);

}  // namespace homoflow
