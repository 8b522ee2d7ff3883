#include "homoflow/params.hpp"

#include <algorithm>
#include <cmath>

#include "homoflow/errors.hpp"

namespace homoflow {

MuGamma tau_sigma_to_mu_gamma(TauSigma q) {
  return {q.tau * q.tau / 8.0 - q.tau / 2.0, -2.0 * q.sigma};
}

TauSigma mu_gamma_to_tau_sigma(MuGamma p, std::optional<Region> hint) {
  const double sigma = -p.gamma / 2.0;
  const double disc = 1.0 + 2.0 * p.mu;
  if (disc < -kRegionTol)
    throw DomainError("mu_gamma_to_tau_sigma: mu < -1/2, no real pole value");
  if (std::abs(disc) <= kRegionTol) return {2.0, sigma};  // double root
  const double b = std::sqrt(disc);
  if (!hint)
    throw BranchAmbiguous(
        "mu_gamma_to_tau_sigma: mu > -1/2 needs a region hint (I1/I2 vs I3)");
  if (*hint == Region::I3) return {2.0 + 2.0 * b, sigma};
  return {2.0 - 2.0 * b, sigma};
}

RegionInfo classify(MuGamma p) {
  RegionInfo out;
  const double disc = 1.0 + 2.0 * p.mu;
  if (disc < -kRegionTol) return out;  // mu < -1/2: exterior
  const double b = std::sqrt(std::max(disc, 0.0));
  const double gamma_bdy = -1.0 - b;
  if (std::abs(p.gamma - gamma_bdy) <= kRegionTol) {
    out.region = Region::I3;
    const double tau = 2.0 + 2.0 * b;
    out.tau_lt_3 = tau < 3.0 - kRegionTol;
    out.tau_eq_3 = std::abs(tau - 3.0) <= kRegionTol;
    out.tau_gt_3 = tau > 3.0 + kRegionTol;
    return out;
  }
  if (p.gamma < gamma_bdy) return out;  // below the boundary curve
  out.region = std::abs(disc) <= kRegionTol ? Region::I2 : Region::I1;
  return out;
}

double delta_star(MuGamma p) {
  if (classify(p).region != Region::Exterior) return -1.0;
  const double alpha = p.gamma + 1.0;
  const double disc = 1.0 + 2.0 * p.mu;
  const double b = std::sqrt(std::abs(disc));
  double d;
  if (disc >= kCaseTol) {
    // gamma < -(1+b): the denominator of the closed form crosses zero once.
    d = -1.0 + 2.0 * std::pow((alpha - b) / (alpha + b), -1.0 / b);
  } else if (disc > -kCaseTol) {
    d = -1.0 + 2.0 * std::exp(2.0 / alpha);  // mu = -1/2, alpha < 0
  } else if (alpha > 0.0) {
    d = -1.0 + 2.0 * std::exp((2.0 / b) * (std::atan(b / alpha) - M_PI));
  } else if (alpha == 0.0) {
    d = -1.0 + 2.0 * std::exp(-M_PI / b);
  } else {
    d = -1.0 + 2.0 * std::exp((2.0 / b) * std::atan(b / alpha));
  }
  // Off the existence region the singularity sits strictly above -1 even
  // when the closed form underflows (exponents ~ -2pi/b near the region
  // boundary); keep the result distinguishable from the on-region sentinel.
  d = std::clamp(d, std::nextafter(-1.0, 1.0), 1.0 - 1e-12);
  return d;
}

}  // namespace homoflow
