#pragma once
#include <optional>

namespace homoflow {

// Two equivalent parameterizations of the no-swirl solution family:
//   (tau, sigma): pole value tau = U_theta(-1) and sigma = -gamma/2,
//   (mu, gamma):  ODE constant mu and north-pole slope gamma = U_theta'(1).
// They are related by mu = tau^2/8 - tau/2, gamma = -2*sigma.
struct TauSigma {
  double tau = 0;
  double sigma = 0;
};

struct MuGamma {
  double mu = 0;
  double gamma = 0;
};

// Existence regions in the (mu,gamma) half-plane.
//   I1: mu > -1/2 and gamma > -1 - sqrt(1+2mu)   (open region above the curve)
//   I2: mu = -1/2 and gamma > -1                 (vertical segment)
//   I3: mu >= -1/2 and gamma = -1 - sqrt(1+2mu)  (boundary curve)
// Everything else is Exterior: the profile blows up at delta_star > -1.
enum class Region { I1, I2, I3, Exterior };

// classify() result; the tau_* flags subdivide I3 by the pole value
// tau = 2 + 2*sqrt(1+2mu) (only meaningful when region == I3).
struct RegionInfo {
  Region region = Region::Exterior;
  bool tau_lt_3 = false;
  bool tau_eq_3 = false;
  bool tau_gt_3 = false;
};

MuGamma tau_sigma_to_mu_gamma(TauSigma q);

// Inverse correspondence. tau = 2 - 2*sqrt(1+2mu) on the I1/I2 side and
// tau = 2 + 2*sqrt(1+2mu) on the I3 side, so a region hint is required when
// mu > -1/2 (throws BranchAmbiguous without one). Throws DomainError for
// mu < -1/2 where no real pole value exists.
TauSigma mu_gamma_to_tau_sigma(MuGamma p, std::optional<Region> hint = {});

RegionInfo classify(MuGamma p);

// First singularity of the no-swirl profile below the north pole: the
// solution is smooth on (delta_star(p), 1]. Returns exactly -1 on the
// existence region I = I1 u I2 u I3. Six closed-form cases with
// b = sqrt(|1+2mu|), alpha = gamma+1:
//   mu >= -1/2, on I            -> -1
//   mu >  -1/2, gamma < -1-b    -> -1 + 2*((alpha-b)/(alpha+b))^(-1/b)
//   mu == -1/2, gamma < -1      -> -1 + 2*exp(2/alpha)
//   mu <  -1/2, gamma > -1      -> -1 + 2*exp((2/b)*(atan(b/alpha) - pi))
//   mu <  -1/2, gamma = -1      -> -1 + 2*exp(-pi/b)
//   mu <  -1/2, gamma < -1      -> -1 + 2*exp((2/b)*atan(b/alpha))
// Off I the result is clamped to (-1, 1 - 1e-12]: strictly above -1 even
// when the closed form underflows, so delta_star(p) == -1 exactly
// characterizes the existence region.
double delta_star(MuGamma p);

// Shared tolerances.
inline constexpr double kRegionTol = 1e-9;  // region-boundary classification
inline constexpr double kCaseTol = 1e-8;    // |1+2mu| closed-form case switch

}  // namespace homoflow
