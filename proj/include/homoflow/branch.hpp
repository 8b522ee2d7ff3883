#pragma once
#include <vector>

#include "homoflow/grid.hpp"
#include "homoflow/params.hpp"

namespace homoflow {

struct BranchOptions {
  int grid_n = 256;          // collocation degree (even)
  double newton_tol = 1e-10;  // discrete sup norm over all rows
  int max_iter = 30;          // per continuation stage
  double beta1 = 0.0;         // loading along V1 (interior regions only)
  double continuation_start = 1e-4;
};

// One point of a swirl branch. `tildeU` is the correction with
// l1 = l2 = 0 (kernel loading removed); `total` is the full profile
// background + loading + correction, so the full correction relative to the
// background is total minus the closed form.
struct BranchPoint {
  MuGamma p;
  double beta = 0.0, beta1 = 0.0;
  double c = 0.0;       // swirl slope U_phi'(x) at x -> 1
  double lambda = 0.0;  // bordering multiplier, ~0 at a true solution
  double newton_residual = 0.0;
  int iterations = 0;
  double psi_m1 = 0.0;  // psi[U_phi](-1)
  double mu_hat = 0.0;  // mu - psi(-1)/4
  double sup_Uphi = 0.0;
  SolutionProfile tildeU, total;
};

// Solves the correction equations around the closed-form background at p for
// swirl loading beta: theta component by Chebyshev collocation with a
// bordered kernel multiplier, swirl component reconstructed exactly by
// quadrature of its first-order factor each iterate, continuation in beta.
// Throws RegionUnsupported outside I or on the boundary branch with
// tau >= 3, NoConvergence when Newton stalls.
BranchPoint solve_branch(const MuGamma& p, double beta,
                         const BranchOptions& opt = {});

// Central-difference tangent test of the branch at beta = 0 against the
// kernel direction V2, one sup error per magnitude.
struct TangentReport {
  std::vector<double> magnitudes, errors;
  double ratio() const;  // err(largest)/err(smallest)
};
TangentReport tangent_check(const MuGamma& p,
                            std::vector<double> magnitudes = {1e-3, 1e-2},
                            const BranchOptions& opt = {});

// Witness of the divergence that obstructs swirl loading on the boundary
// branch with tau >= 3: the swirl source integral against the frozen
// background, evaluated at x_k = -1 + 10^{-k}, k = 1..6.
struct DivergenceReport {
  std::vector<double> x, I;
  double power_slope = 0.0;   // d log|I| / d log(1+x), last two samples
  double loglog_slope = 0.0;  // d log|I| / d log|log(1+x)|, last two samples
};
DivergenceReport nonexistence_witness(const MuGamma& p, double c = 1.0);

// Weighted diagnostic norms of the branch correction; eps must lie in the
// region's admissible window (BadEpsilon otherwise).
struct WeightedNorms {
  double m1_value = 0, m1_deriv = 0, m1_second = 0;
  double m2_value = 0, m2_deriv = 0, m2_second = 0;
  double m1() const { return m1_value + m1_deriv + m1_second; }
  double m2() const { return m2_value + m2_deriv + m2_second; }
};
WeightedNorms weighted_norms(const BranchPoint& bp, double eps);

}  // namespace homoflow
