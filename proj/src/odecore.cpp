#include "homoflow/odecore.hpp"

#include <algorithm>
#include <cmath>

#include "homoflow/errors.hpp"
#include "homoflow/exact.hpp"
#include "homoflow/quad.hpp"

namespace homoflow {

namespace {

RegionInfo require_region_I(const MuGamma& p) {
  const RegionInfo info = classify(p);
  if (info.region == Region::Exterior)
    throw OutOfDomain("weights require parameters in the interior region");
  return info;
}

}  // namespace

WeightsAB weights_ab(const MuGamma& p, double x) {
  const RegionInfo info = require_region_I(p);
  if (!(x > -1.0 && x <= 1.0))
    throw OutOfDomain("weights defined for -1 < x <= 1");
  const double alpha = p.gamma + 1.0;
  const double disc = 1.0 + 2.0 * p.mu;
  double b;
  if (info.region == Region::I3) {
    const double bc = std::sqrt(std::max(0.0, disc));
    b = (1.0 + bc) * std::log1p(x);
  } else if (std::abs(disc) <= kRegionTol) {  // mu = -1/2
    const double L = std::log((1.0 + x) / 2.0);
    b = std::log1p(x) + 2.0 * (std::log(std::abs(alpha * L - 2.0)) -
                               std::log(std::abs(-alpha * std::log(2.0) - 2.0)));
  } else {  // mu > -1/2, interior of I1
    const double bc = std::sqrt(disc);
    const double cp = alpha + bc, cm = alpha - bc;
    const double v = std::pow((1.0 + x) / 2.0, bc);
    const double v0 = std::pow(0.5, bc);
    b = (1.0 - bc) * std::log1p(x) +
        2.0 * (std::log(std::abs(cp - cm * v)) -
               std::log(std::abs(cp - cm * v0)));
  }
  const double a = -(std::log1p(-x) + std::log1p(x)) + b;
  return {a, b};
}

double psi_triple(const SolutionProfile& prof, double x) {
  prof.validate();
  const auto f = [&](double s) {
    return prof.uphi(s) * prof.duphi(s) * (s - x) * (s - x) /
           (1.0 - s * s);
  };
  // stop just short of s = 1; the integrand is bounded there when
  // U_phi(1) = 0 and the excluded sliver is below working tolerance
  return quad::integrate(f, x, 1.0 - 1e-12, 1e-12);
}

double psi_bilinear(const SolutionProfile& u, const SolutionProfile& v,
                    double x) {
  u.validate();
  v.validate();
  const auto f = [&](double s) {
    return (u.uphi(s) * v.duphi(s) + v.uphi(s) * u.duphi(s)) * (s - x) *
           (s - x) / (1.0 - s * s);
  };
  return quad::integrate(f, x, 1.0 - 1e-12, 1e-12);
}

ResidualG residual_G(const MuGamma& p, const SolutionProfile& tildeU, double x,
                     std::optional<double> psi_m1) {
  require_region_I(p);
  const double Ub = eval_U_theta(p, x);
  const double tu = tildeU.utheta(x);
  const double psi_x = psi_triple(tildeU, x);
  const double pm1 = psi_m1 ? *psi_m1 : psi_triple(tildeU, -1.0);
  ResidualG r;
  r.theta = (1 - x * x) * tildeU.dutheta(x) + (2 * x + Ub) * tu +
            0.5 * tu * tu - psi_x + 0.25 * pm1 * (1 - x) * (1 - x);
  r.phi = (1 - x * x) * tildeU.d2uphi(x) + (tu + Ub) * tildeU.duphi(x);
  return r;
}

KernelBasis kernel_basis(const MuGamma& p, const ChebGrid& grid) {
  require_region_I(p);
  const auto& xs = grid.x();
  const std::size_t n = xs.size();

  KernelBasis kb;
  auto init = [&](SolutionProfile& v) {
    v.x = xs;
    v.Utheta.assign(n, 0.0);
    v.dUtheta.assign(n, 0.0);
    v.Uphi.assign(n, 0.0);
    v.dUphi.assign(n, 0.0);
    v.d2Uphi.assign(n, 0.0);
    v.source = ProfileSource::Kernel;
    v.params = p;
  };
  init(kb.V1);
  init(kb.V2);
  init(kb.V3);
  kb.V3.Uphi.assign(n, 1.0);

  std::vector<double> expnb(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = xs[j];
    const double Ub = eval_U_theta(p, x);
    const double eb = std::exp(-weights_ab(p, x).b);
    expnb[j] = eb;
    kb.V1.Utheta[j] = (1 - x * x) * eb;  // e^{-a}, equal to 1 at x = 0
    kb.V1.dUtheta[j] = -(2 * x + Ub) * eb;
  }

  std::vector<double> part = xs;
  part.push_back(1.0);
  const auto ib = [&](double t) { return std::exp(-weights_ab(p, t).b); };
  const auto sfx = quad::suffix_integrals(ib, part, 1e-13);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = xs[j];
    kb.V2.Uphi[j] = sfx[j];
    kb.V2.dUphi[j] = -expnb[j];
    kb.V2.d2Uphi[j] = eval_U_theta(p, x) * expnb[j] / (1 - x * x);
  }
  kb.l2_V2 = sfx[static_cast<std::size_t>(grid.mid())];
  return kb;
}

double l1_of(const SolutionProfile& V) { return V.utheta(0.0); }
double l2_of(const SolutionProfile& V) { return V.uphi(0.0); }

ResidualG apply_L(const MuGamma& p, const SolutionProfile* base,
                  const SolutionProfile& V, double x,
                  std::optional<double> psi_lin_m1) {
  require_region_I(p);
  const double Ub = eval_U_theta(p, x);
  const double bu = base ? base->utheta(x) : 0.0;
  const double psi_x = base ? psi_bilinear(*base, V, x) : 0.0;
  const double pm1 =
      psi_lin_m1 ? *psi_lin_m1 : (base ? psi_bilinear(*base, V, -1.0) : 0.0);
  ResidualG r;
  r.theta = (1 - x * x) * V.dutheta(x) + (2 * x + Ub + bu) * V.utheta(x) -
            psi_x + 0.25 * pm1 * (1 - x) * (1 - x);
  r.phi = (1 - x * x) * V.d2uphi(x) + (bu + Ub) * V.duphi(x) +
          (base ? V.utheta(x) * base->duphi(x) : 0.0);
  return r;
}

SolutionProfile right_inverse_W(const MuGamma& p,
                                const std::function<double(double)>& xi_theta,
                                const std::function<double(double)>& xi_phi,
                                const ChebGrid& grid) {
  const RegionInfo info = require_region_I(p);
  if (std::abs(xi_theta(1.0)) > 1e-8 || std::abs(xi_phi(1.0)) > 1e-8)
    throw OutOfDomain("right inverse requires data vanishing at x = 1");

  const auto& xs = grid.x();
  const std::size_t n = xs.size();
  const bool base_neg1 = info.region == Region::I3;

  const auto gtheta = [&](double s) {
    const double om = 1 - s * s;
    return std::exp(weights_ab(p, s).b) * xi_theta(s) / (om * om);
  };
  if (base_neg1) quad::check_integrable_at_left(gtheta, -1.0, -0.5);

  // prefix integrals of gtheta from the grid's left edge.  Tolerance 1e-11:
  // the data arrives through a 1/(1-x^2)^2 division, so its roundoff floor
  // is amplified on the last Chebyshev segments near the poles and tighter
  // absolute requests cannot converge there.
  std::vector<double> pref(n, 0.0);
  for (std::size_t j = 1; j < n; ++j)
    pref[j] = pref[j - 1] + quad::integrate(gtheta, xs[j - 1], xs[j], 1e-11);
  double base_off = 0.0;  // integral from the theta base point to xs[0]
  if (base_neg1)
    base_off = quad::integrate(gtheta, -1.0, xs[0], 1e-12);
  else
    base_off = -pref[static_cast<std::size_t>(grid.mid())];

  // inner integral for the phi equation, modeled piecewise.  Anchor choice:
  // e^{-b} grows like (1+x)^{-tau/2} at the south pole, so whenever tau > 0
  // (I2, I3, and I1 with mu < 0) the antiderivative anchored at 1 would ride
  // an unbounded multiple of the phi kernel; anchoring at -1 keeps
  // e^{-b} * (inner integral) bounded there.  For tau <= 0 the integrand
  // need not be integrable at -1 and the anchor stays at 1 (w'(1) = 0).
  const bool phi_base_neg1 = info.region != Region::I1 || p.mu < 0.0;
  const auto gphi = [&](double s) {
    return std::exp(weights_ab(p, s).b) * xi_phi(s) / (1 - s * s);
  };
  if (phi_base_neg1) quad::check_integrable_at_left(gphi, -1.0, -0.5);
  // gphi has an algebraic branch point at -1, so the net is geometrically
  // graded there (and near 1, where e^{-b} magnifies resolution demands).
  const double s0 = phi_base_neg1 ? 1e-12 : xs.front() + 1.0;
  std::vector<double> net{-1.0 + s0};
  for (double d = 2 * s0; d < 0.1; d *= 2) net.push_back(-1.0 + d);
  const double u0 = net.back();
  for (double step = (1.0 - 1e-4 - u0) / 96, t = u0 + step; t < 1.0 - 1e-4;
       t += step)
    net.push_back(t);
  for (double d = 1e-4; d > 1.5e-10; d /= 2) net.push_back(1.0 - d);
  net.push_back(1.0 - 1e-10);
  // For the south anchor the antiderivative is modeled on the mirrored axis:
  // accumulating from -1 outward keeps S relatively accurate there, where the
  // direct form (total minus suffix) would cancel to roundoff in Ktot.
  if (phi_base_neg1) {
    std::reverse(net.begin(), net.end());
    for (double& t : net) t = -t;
  }
  const auto gk = [&](double s) { return phi_base_neg1 ? gphi(-s) : gphi(s); };
  quad::SegmentedAntiderivative K(gk, net);
  // S(t) = int from the phi anchor to t of gphi, so that w' = e^{-b} S
  const auto S = [&](double t) {
    return phi_base_neg1 ? K.suffix(-t) : -K.suffix(t);
  };

  const auto houter = [&](double t) {
    return -std::exp(-weights_ab(p, t).b) * S(t);
  };
  std::vector<double> part = xs;
  part.push_back(1.0 - 1e-10);
  const auto wphi = quad::suffix_integrals(houter, part, 1e-13);

  SolutionProfile w;
  w.x = xs;
  w.Utheta.resize(n);
  w.dUtheta.resize(n);
  w.Uphi.resize(n);
  w.dUphi.resize(n);
  w.d2Uphi.resize(n);
  w.source = ProfileSource::Synthetic;
  w.params = p;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = xs[j];
    const double om = 1 - x * x;
    const double Ub = eval_U_theta(p, x);
    const double eb = std::exp(-weights_ab(p, x).b);
    const double I = base_off + pref[j];
    w.Utheta[j] = om * eb * I;
    w.dUtheta[j] = -(2 * x + Ub) * eb * I + xi_theta(x) / om;
    const double Sj = S(x);
    w.Uphi[j] = wphi[j];
    w.dUphi[j] = eb * Sj;
    w.d2Uphi[j] = (xi_phi(x) - Ub * eb * Sj) / om;
  }
  return w;
}

}  // namespace homoflow
