#pragma once
#include "homoflow/grid.hpp"
#include "homoflow/params.hpp"

namespace homoflow {

struct IvpOptions {
  double x_start = 1.0 - 1e-6;  // series-seeded start next to the north pole
  double x_end = -1.0 + 1e-6;
  double tol = 1e-12;       // per-step absolute and relative control
  double blowup = 1e6;      // |U_theta| threshold reported as BlowUp
  double swirl_c = 0.0;     // U_phi'(x_start); 0 selects the no-swirl system
  double beta1 = 0.0;       // reserved linear-in-(1-x) seed perturbation
};

// Integrates the profile ODE downward from the north pole, seeding with the
// local series U_theta = gamma t + q t^2 (t = x - 1). With swirl_c != 0 the
// swirl component and the cumulative source integrals ride along as extra
// state. Throws BlowUp (carrying the last x reached) when the solution
// leaves |U_theta| <= blowup or the integrator stalls.
SolutionProfile integrate_ivp(const MuGamma& p, const IvpOptions& opt = {});

// psi value at x_end accumulated by the last swirl integration is stored per
// profile; exposed here for the swirl run without recomputing quadrature.
struct IvpResult {
  SolutionProfile profile;
  double psi_end = 0.0;  // psi at x_end (swirl runs only)
};
IvpResult integrate_ivp_full(const MuGamma& p, const IvpOptions& opt = {});

}  // namespace homoflow
