#include "homoflow/branch.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "homoflow/errors.hpp"
#include "homoflow/exact.hpp"
#include "homoflow/odecore.hpp"
#include "homoflow/quad.hpp"

namespace homoflow {

namespace {

struct SwirlPipeline {
  // c-independent swirl machinery for one Newton state: e^{-B} model,
  // psibar = psi / c^2 at the nodes and at -1, and the suffix integral
  // Sbar(x) = int_x^1 e^{-B}
  std::unique_ptr<quad::SegmentedAntiderivative> sa_s, sa_j1, sa_j2, sa_psi;
  Eigen::VectorXd psibar;
  double psibar_m1 = 0.0;
  double sbar0 = 0.0;
  Eigen::VectorXd btilde;  // nodal cumulative correction weight

  double sbar(double x) const { return sa_s->suffix(x); }
};

struct Workspace {
  MuGamma p;
  RegionInfo info;
  bool bordered = false;  // lambda + l1 row present (interior regions)
  ChebGrid grid;
  std::vector<double> net;
  Eigen::VectorXd Ub, dUb, expnb, V1th, dV1th, V2ph, om;  // nodal data
  double l2V2 = 0.0;

  explicit Workspace(const MuGamma& pp, int grid_n)
      : p(pp), info(classify(pp)), grid(grid_n) {}
};

void build_background(Workspace& w) {
  const auto& xs = w.grid.x();
  const int n = static_cast<int>(xs.size());
  w.Ub.resize(n);
  w.dUb.resize(n);
  w.expnb.resize(n);
  w.V1th.resize(n);
  w.dV1th.resize(n);
  w.om.resize(n);
  for (int j = 0; j < n; ++j) {
    const double x = xs[j];
    w.om[j] = 1 - x * x;
    w.Ub[j] = eval_U_theta(w.p, x);
    w.dUb[j] = eval_U_theta_deriv(w.p, x, 1);
    w.expnb[j] = std::exp(-weights_ab(w.p, x).b);
    w.V1th[j] = w.om[j] * w.expnb[j];
    w.dV1th[j] = -(2 * x + w.Ub[j]) * w.expnb[j];
  }
  std::vector<double> part = xs;
  part.push_back(1.0);
  const auto sfx = quad::suffix_integrals(
      [&](double t) { return std::exp(-weights_ab(w.p, t).b); }, part, 1e-13);
  w.V2ph.resize(n);
  for (int j = 0; j < n; ++j) w.V2ph[j] = sfx[j];
  w.l2V2 = sfx[w.grid.mid()];
  w.net = quad::graded_net(-1 + 1e-13, 1.0, 0.1, 2.0, 64);
}

SwirlPipeline run_pipeline(const Workspace& w, const Eigen::VectorXd& u) {
  SwirlPipeline pl;
  const auto& xs = w.grid.x();
  const int n = static_cast<int>(xs.size());

  Eigen::VectorXd integ(n);
  for (int j = 0; j < n; ++j) integ[j] = u[j] / w.om[j];
  pl.btilde = w.grid.cumint(integ);
  pl.btilde.array() -= pl.btilde[w.grid.mid()];  // pin btilde(0) = 0

  const double lo = xs.front(), hi = xs.back();
  const auto btq = [&](double s) {
    if (s <= lo) return pl.btilde[0];
    if (s >= hi) return pl.btilde[n - 1];
    return w.grid.interp(pl.btilde, s);
  };
  const auto enB = [&](double s) {
    return std::exp(-weights_ab(w.p, s).b - btq(s));
  };
  pl.sa_s = std::make_unique<quad::SegmentedAntiderivative>(enB, w.net);
  const auto g1 = [&](double s) {
    if (s >= 1.0) {  // Sbar ~ enB(1) * (1 - s), so the ratio has a limit
      const double v = pl.sa_s->value(1.0);
      return -v * v;
    }
    return -2.0 * pl.sa_s->suffix(s) * pl.sa_s->value(s) / (1 - s * s);
  };
  pl.sa_j1 = std::make_unique<quad::SegmentedAntiderivative>(g1, w.net);
  const auto g2 = [&](double s) { return pl.sa_j1->suffix(s); };
  pl.sa_j2 = std::make_unique<quad::SegmentedAntiderivative>(g2, w.net);
  const auto g3 = [&](double s) { return pl.sa_j2->suffix(s); };
  pl.sa_psi = std::make_unique<quad::SegmentedAntiderivative>(g3, w.net);

  pl.psibar.resize(n);
  for (int j = 0; j < n; ++j) pl.psibar[j] = pl.sa_psi->suffix(xs[j]);
  pl.psibar_m1 = pl.sa_psi->suffix(w.net.front());
  pl.sbar0 = pl.sa_s->suffix(0.0);
  return pl;
}

Eigen::VectorXd assemble_residual(const Workspace& w, const SwirlPipeline& pl,
                                  const Eigen::VectorXd& u, double c,
                                  double lam, double beta, double beta1) {
  const auto& xs = w.grid.x();
  const int n = static_cast<int>(xs.size());
  const int rows = n + (w.bordered ? 2 : 1);
  Eigen::VectorXd du = w.grid.D() * u;
  Eigen::VectorXd r(rows);
  const double c2 = c * c;
  for (int j = 0; j < n; ++j) {
    const double omx = 1 - xs[j];
    r[j] = w.om[j] * du[j] + (2 * xs[j] + w.Ub[j]) * u[j] + 0.5 * u[j] * u[j] -
           c2 * pl.psibar[j] + 0.25 * c2 * pl.psibar_m1 * omx * omx;
    if (w.bordered) r[j] += lam * w.V1th[j];
  }
  int k = n;
  if (w.bordered) r[k++] = u[w.grid.mid()] - beta1;
  r[k] = -c * pl.sbar0 - beta * w.l2V2;
  return r;
}

Eigen::MatrixXd assemble_jacobian(const Workspace& w, const SwirlPipeline& pl,
                                  const Eigen::VectorXd& u, double c) {
  const auto& xs = w.grid.x();
  const int n = static_cast<int>(xs.size());
  const int dim = n + (w.bordered ? 2 : 1);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) J(j, k) = w.om[j] * w.grid.D()(j, k);
    J(j, j) += 2 * xs[j] + w.Ub[j] + u[j];
    const double omx = 1 - xs[j];
    J(j, n) = -2 * c * (pl.psibar[j] - 0.25 * pl.psibar_m1 * omx * omx);
    if (w.bordered) J(j, n + 1) = w.V1th[j];
  }
  int k = n;
  if (w.bordered) J(k++, w.grid.mid()) = 1.0;
  J(k, n) = -pl.sbar0;
  return J;
}

}  // namespace

BranchPoint solve_branch(const MuGamma& p, double beta,
                         const BranchOptions& opt) {
  const RegionInfo info = classify(p);
  if (info.region == Region::Exterior)
    throw RegionUnsupported("swirl branches require parameters in I");
  const bool i3 = info.region == Region::I3;
  if (i3 && !info.tau_lt_3)
    throw RegionUnsupported(
        "no swirl branch on the boundary family with tau >= 3");
  if (i3 && opt.beta1 != 0.0)
    throw RegionUnsupported(
        "V1 loading is unavailable on the boundary family");

  Workspace w(p, opt.grid_n);
  w.bordered = !i3;
  build_background(w);
  const auto& xs = w.grid.x();
  const int n = static_cast<int>(xs.size());

  // continuation targets, geometric up to the requested loading
  std::vector<double> targets;
  const double ab = std::abs(beta);
  if (ab <= opt.continuation_start) {
    targets.push_back(beta);
  } else {
    const int stages =
        1 + static_cast<int>(std::ceil(std::log2(ab / opt.continuation_start)));
    for (int s = stages - 1; s >= 0; --s) targets.push_back(beta * std::pow(2.0, -s));
  }

  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  if (w.bordered) u = opt.beta1 * w.V1th;
  double c = 0.0, lam = 0.0, prev_bt = 0.0;
  int total_iters = 0;
  double final_res = 0.0;
  SwirlPipeline pl;

  for (const double bt : targets) {
    if (prev_bt != 0.0) {  // warm start: kernel part scales linearly,
      const double r = bt / prev_bt;  // correction quadratically
      Eigen::VectorXd ker = w.bordered ? (opt.beta1 * w.V1th).eval()
                                       : Eigen::VectorXd::Zero(n).eval();
      u = ker + (u - ker) * r * r;
      c *= r;
    } else if (bt != 0.0) {
      c = -bt;
    }
    bool done = false;
    for (int it = 0; it <= opt.max_iter; ++it) {
      pl = run_pipeline(w, u);
      const Eigen::VectorXd r =
          assemble_residual(w, pl, u, c, lam, bt, opt.beta1);
      final_res = r.lpNorm<Eigen::Infinity>();
      if (!std::isfinite(final_res))
        throw NoConvergence("branch iteration produced non-finite residual");
      if (final_res <= opt.newton_tol) {
        done = true;
        break;
      }
      if (it == opt.max_iter) break;
      const Eigen::MatrixXd J = assemble_jacobian(w, pl, u, c);
      const Eigen::VectorXd d = J.partialPivLu().solve(-r);
      u += d.head(n);
      c += d[n];
      if (w.bordered) lam += d[n + 1];
      ++total_iters;
    }
    if (!done)
      throw NoConvergence("branch Newton stalled at loading " +
                          std::to_string(bt) + ", residual " +
                          std::to_string(final_res));
    prev_bt = bt;
  }

  BranchPoint bp;
  bp.p = p;
  bp.beta = beta;
  bp.beta1 = opt.beta1;
  bp.c = c;
  bp.lambda = lam;
  bp.newton_residual = final_res;
  bp.iterations = total_iters;
  bp.psi_m1 = c * c * pl.psibar_m1;
  bp.mu_hat = p.mu - 0.25 * bp.psi_m1;

  auto mkprof = [&](SolutionProfile& pr, const std::vector<double>& nodes) {
    pr.x = nodes;
    const std::size_t m = nodes.size();
    pr.Utheta.resize(m);
    pr.dUtheta.resize(m);
    pr.Uphi.resize(m);
    pr.dUphi.resize(m);
    pr.d2Uphi.resize(m);
    pr.source = ProfileSource::Branch;
    pr.params = p;
  };
  // `total` carries a geometric tail of extra nodes below the collocation
  // clip so that downstream psi quadratures see the swirl component at the
  // pipeline's own accuracy instead of through one sparse Hermite segment.
  std::vector<double> xfull;
  for (double d = 1e-12; d < 0.75 * (1.0 + xs.front()); d *= 2.0)
    xfull.push_back(-1.0 + d);
  const int ntail = static_cast<int>(xfull.size());
  xfull.insert(xfull.end(), xs.begin(), xs.end());
  mkprof(bp.total, xfull);
  mkprof(bp.tildeU, xs);
  const Eigen::VectorXd du = w.grid.D() * u;
  for (int i = 0; i < ntail; ++i) {
    const double x = xfull[i];
    const double ux = w.grid.interp(u, x);
    const double uphi = -c * pl.sbar(x);
    const double duphi = c * std::exp(-weights_ab(p, x).b - pl.btilde[0]);
    bp.total.Utheta[i] = eval_U_theta(p, x) + ux;
    bp.total.dUtheta[i] = eval_U_theta_deriv(p, x, 1) + w.grid.interp(du, x);
    bp.total.Uphi[i] = uphi;
    bp.total.dUphi[i] = duphi;
    bp.total.d2Uphi[i] = -bp.total.Utheta[i] * duphi / (1 - x * x);
  }
  for (int j = 0; j < n; ++j) {
    const int i = ntail + j;
    const double uphi = -c * pl.sbar(xs[j]);
    const double duphi = c * std::exp(-weights_ab(p, xs[j]).b - pl.btilde[j]);
    bp.total.Utheta[i] = w.Ub[j] + u[j];
    bp.total.dUtheta[i] = w.dUb[j] + du[j];
    bp.total.Uphi[i] = uphi;
    bp.total.dUphi[i] = duphi;
    bp.total.d2Uphi[i] = -(w.Ub[j] + u[j]) * duphi / w.om[j];
    bp.tildeU.Utheta[j] = u[j] - opt.beta1 * w.V1th[j];
    bp.tildeU.dUtheta[j] = du[j] - opt.beta1 * w.dV1th[j];
    bp.tildeU.Uphi[j] = uphi - beta * w.V2ph[j];
    bp.tildeU.dUphi[j] = duphi + beta * w.expnb[j];
    bp.tildeU.d2Uphi[j] =
        bp.total.d2Uphi[i] - beta * w.Ub[j] * w.expnb[j] / w.om[j];
    bp.sup_Uphi = std::max(bp.sup_Uphi, std::abs(uphi));
  }
  return bp;
}

double TangentReport::ratio() const {
  if (magnitudes.size() < 2) throw DomainError("need at least two magnitudes");
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < magnitudes.size(); ++i) {
    if (magnitudes[i] < magnitudes[lo]) lo = i;
    if (magnitudes[i] > magnitudes[hi]) hi = i;
  }
  return errors[hi] / errors[lo];
}

TangentReport tangent_check(const MuGamma& p, std::vector<double> magnitudes,
                            const BranchOptions& opt) {
  TangentReport rep;
  rep.magnitudes = magnitudes;
  ChebGrid grid(opt.grid_n);
  const KernelBasis kb = kernel_basis(p, grid);
  for (const double m : magnitudes) {
    const BranchPoint plus = solve_branch(p, m, opt);
    const BranchPoint minus = solve_branch(p, -m, opt);
    double err = 0.0;
    for (std::size_t j = 0; j < grid.x().size(); ++j) {
      const double dphi =
          (plus.total.Uphi[j] - minus.total.Uphi[j]) / (2 * m) -
          kb.V2.Uphi[j];
      const double dth =
          (plus.total.Utheta[j] - minus.total.Utheta[j]) / (2 * m);
      err = std::max(err, std::max(std::abs(dphi), std::abs(dth)));
    }
    rep.errors.push_back(err);
  }
  return rep;
}

DivergenceReport nonexistence_witness(const MuGamma& p, double c) {
  const RegionInfo info = classify(p);
  if (info.region != Region::I3 || info.tau_lt_3)
    throw OutOfDomain("witness applies to the boundary family with tau >= 3");
  const double bc = std::sqrt(1 + 2 * p.mu);

  // frozen background swirl: U_phi' = c (1+s)^{-(1+bc)}, U_phi its
  // antiderivative vanishing at the base point x0 = 0
  const auto uphi = [&](double s) {
    return (c / bc) * (1.0 - std::pow(1.0 + s, -bc));
  };
  const auto duphi = [&](double s) { return c * std::pow(1.0 + s, -1.0 - bc); };

  DivergenceReport rep;
  for (int k = 1; k <= 6; ++k) {
    const double xk = -1.0 + std::pow(10.0, -k);
    const auto f = [&](double s) {
      return uphi(s) * duphi(s) * (s - xk) * (s - xk) / (1 - s * s);
    };
    rep.x.push_back(xk);
    rep.I.push_back(-quad::integrate(f, xk, 0.0, 1e-10));
  }
  const std::size_t m = rep.x.size();
  const double la = std::log(std::abs(rep.I[m - 1])),
               lb = std::log(std::abs(rep.I[m - 2]));
  rep.power_slope = (la - lb) / (std::log(1 + rep.x[m - 1]) -
                                 std::log(1 + rep.x[m - 2]));
  rep.loglog_slope =
      (la - lb) / (std::log(std::abs(std::log(1 + rep.x[m - 1]))) -
                   std::log(std::abs(std::log(1 + rep.x[m - 2]))));
  return rep;
}

WeightedNorms weighted_norms(const BranchPoint& bp, double eps) {
  const RegionInfo info = classify(bp.p);
  const TauSigma ts = mu_gamma_to_tau_sigma(
      bp.p, info.region == Region::I3 ? std::optional<Region>(Region::I3)
                                      : std::optional<Region>(Region::I1));
  double lo = 0.0, hi = 1.0;
  switch (info.region) {
    case Region::I1:
      lo = std::max(0.0, ts.tau) / 2;
      hi = 1.0;
      break;
    case Region::I2:
      lo = 0.0;
      hi = 0.5;
      break;
    case Region::I3:
      lo = std::sqrt(1 + 2 * bp.p.mu);
      hi = 0.5;
      break;
    default:
      throw OutOfDomain("norms require parameters in I");
  }
  if (!(eps > lo && eps < hi))
    throw BadEpsilon("eps outside the admissible window (" +
                     std::to_string(lo) + ", " + std::to_string(hi) + ")");

  const SolutionProfile& v = bp.tildeU;
  WeightedNorms nm;
  const double h = 1e-6;
  for (std::size_t j = 0; j < v.x.size(); ++j) {
    const double x = v.x[j], op = 1 + x;
    nm.m1_value = std::max(nm.m1_value,
                           std::pow(op, -1 + eps) * std::abs(v.Utheta[j]));
    nm.m1_deriv =
        std::max(nm.m1_deriv, std::pow(op, eps) * std::abs(v.dUtheta[j]));
    if (x > 0 && x < v.x.back() - h) {
      const double d2 = (v.dutheta(x + h) - v.dutheta(x - h)) / (2 * h);
      nm.m1_second = std::max(nm.m1_second, std::abs(d2));
    }
    nm.m2_value = std::max(nm.m2_value, std::abs(v.Uphi[j]));
    nm.m2_deriv =
        std::max(nm.m2_deriv, std::pow(op, eps) * std::abs(v.dUphi[j]));
    nm.m2_second = std::max(nm.m2_second,
                            std::pow(op, 1 + eps) * std::abs(v.d2Uphi[j]));
  }
  return nm;
}

}  // namespace homoflow
