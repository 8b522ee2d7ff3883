#pragma once
#include <functional>
#include <optional>

#include "homoflow/grid.hpp"
#include "homoflow/params.hpp"

namespace homoflow {

// Singular weights attached to a background profile on region I:
//   b(x) = integral from 0 to x of Ubar_theta(s) / (1 - s^2) ds
//   a(x) = -log(1 - x^2) + b(x)
// both in closed form (the background itself is in closed form). b extends
// continuously to x = 1; a diverges at both endpoints.
struct WeightsAB {
  double a, b;
};
WeightsAB weights_ab(const MuGamma& p, double x);

// Intermediate swirl functional, reduced to one integral:
//   psi[U_phi](x) = integral from x to 1 of
//                   U_phi(s) U_phi'(s) (s - x)^2 / (1 - s^2) ds
// pre: U_phi(1) = 0 (else the integrand is non-integrable at s = 1).
double psi_triple(const SolutionProfile& prof, double x);

// Bilinear version, integrand (U_phi V_phi' + V_phi U_phi')(s-x)^2/(1-s^2),
// i.e. the directional derivative of psi at U in direction V.
double psi_bilinear(const SolutionProfile& u, const SolutionProfile& v,
                    double x);

struct ResidualG {
  double theta, phi;
};

// Full nonlinear residual of the correction equations at x, for a correction
// profile tildeU around the closed-form background at p (p must lie in I):
//   theta: (1-x^2) tU' + (2x + Ubar) tU + tU^2/2 - psi[tU_phi](x)
//          + psi[tU_phi](-1) (1-x)^2 / 4
//   phi:   (1-x^2) tU_phi'' + (tU + Ubar) tU_phi'
// psi_m1, when given, short-circuits the psi(-1) quadrature.
ResidualG residual_G(const MuGamma& p, const SolutionProfile& tildeU, double x,
                     std::optional<double> psi_m1 = std::nullopt);

// Boundary functionals on perturbation profiles:
//   l1(V) = V_theta(0),  l2(V) = V_phi(0).
double l1_of(const SolutionProfile& V);
double l2_of(const SolutionProfile& V);

// Kernel of the linearization at the background (swirl-free) state:
//   V1 = (e^{-a}, 0)            with a(0) = 0, so l1(V1) = 1
//   V2 = (0, int_x^1 e^{-b})    l2(V2) = int_0^1 e^{-b} > 0
//   V3 = (0, 1)                 l2(V3) = 1
// and l1(V2) = l1(V3) = l2(V1) = 0.
struct KernelBasis {
  SolutionProfile V1, V2, V3;
  double l2_V2 = 0.0;
};
KernelBasis kernel_basis(const MuGamma& p, const ChebGrid& grid);

// Linearization of the correction operator at base (pass nullptr for the
// linearization at the background itself), applied to V and evaluated at x.
ResidualG apply_L(const MuGamma& p, const SolutionProfile* base,
                  const SolutionProfile& V, double x,
                  std::optional<double> psi_lin_m1 = std::nullopt);

// Right inverse W of the background linearization: given data (xi_theta,
// xi_phi) with xi(1) = 0, returns a profile with L0 W xi = xi. The theta
// integral is taken from 0 on interior regions and from -1 on the boundary
// region; the phi inner integral is anchored at -1 wherever tau > 0 (I2, I3,
// and I1 with mu < 0; integrability at -1 is probed first, throwing
// SingularQuadrature on failure) and at 1 otherwise.
SolutionProfile right_inverse_W(const MuGamma& p,
                                const std::function<double(double)>& xi_theta,
                                const std::function<double(double)>& xi_phi,
                                const ChebGrid& grid);

}  // namespace homoflow
