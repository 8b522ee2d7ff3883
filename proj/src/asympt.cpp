#include "homoflow/asympt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "homoflow/errors.hpp"

namespace homoflow {

namespace {

struct Aitken {
  double value = 0.0, error = 0.0;
};

Aitken iterated_aitken(std::vector<double> s) {
  Aitken out;
  out.value = s.back();
  out.error = std::abs(s[s.size() - 1] - s[s.size() - 2]);
  while (s.size() >= 3) {
    std::vector<double> t;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      const double d2 = s[i + 2] - 2 * s[i + 1] + s[i];
      if (std::abs(d2) < 1e-15 * (1 + std::abs(s[i + 2]))) {
        t.push_back(s[i + 2]);
        continue;
      }
      const double d1 = s[i + 2] - s[i + 1];
      t.push_back(s[i + 2] - d1 * d1 / d2);
    }
    out.error = std::abs(t.back() - out.value);
    out.value = t.back();
    s = std::move(t);
  }
  return out;
}

Eigen::VectorXd lsq(const Eigen::MatrixXd& A, const Eigen::VectorXd& y) {
  auto svd = A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  return svd.solve(y);
}

// least-squares fit of data against 1, 1/L, 1/L^2, ... with L = ln((1+x)/2)
Aitken log_model_limit(const std::vector<double>& xs,
                       const std::vector<double>& vals, int terms) {
  const int n = static_cast<int>(xs.size());
  Eigen::VectorXd y(n);
  Eigen::MatrixXd A(n, terms), A1(n, terms - 1);
  for (int i = 0; i < n; ++i) {
    const double t = 1.0 / std::log((1 + xs[i]) / 2);
    y[i] = vals[i];
    double pw = 1.0;
    for (int k = 0; k < terms; ++k) {
      A(i, k) = pw;
      if (k < terms - 1) A1(i, k) = pw;
      pw *= t;
    }
  }
  const Eigen::VectorXd c = lsq(A, y), c1 = lsq(A1, y);
  Aitken out;
  out.value = c[0];
  out.error = std::abs(c[0] - c1[0]) +
              (A * c - y).lpNorm<Eigen::Infinity>();
  return out;
}

std::vector<double> window_samples(const WindowSpec& win) {
  if (!(win.lo > -1.0 && win.lo < win.hi && win.hi <= -1.0 + 0.1))
    throw OutOfDomain("fit window must lie within (-1, -1+0.1]");
  if (win.n < 8) throw OutOfDomain("fit window needs at least 8 samples");
  std::vector<double> xs(win.n);
  const double la = std::log1p(win.lo), lb = std::log1p(win.hi);
  for (int i = 0; i < win.n; ++i)
    xs[i] = -1.0 + std::exp(la + (lb - la) * i / (win.n - 1));
  return xs;
}

double sup_residual(const Eigen::MatrixXd& A, const Eigen::VectorXd& c,
                    const Eigen::VectorXd& y) {
  return (A * c - y).lpNorm<Eigen::Infinity>();
}

// slope of ln|y| against ln(1+x), ignoring samples below the noise floor
double loglog_slope(const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  std::vector<double> u, v;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(ys[i]) > 1e-13) {
      u.push_back(std::log1p(xs[i]));
      v.push_back(std::log(std::abs(ys[i])));
    }
  }
  if (u.size() < 3) return 0.0;
  const double n = static_cast<double>(u.size());
  double su = 0, sv = 0, suu = 0, suv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    sv += v[i];
    suu += u[i] * u[i];
    suv += u[i] * v[i];
  }
  return (n * suv - su * sv) / (n * suu - su * su);
}

}  // namespace

PoleLimit pole_limit_full(const SolutionProfile& prof) {
  prof.validate();
  const double front = 1.0 + prof.x.front();
  if (front > 1e-4 * (1 + 1e-9))
    throw TailTooShort("profile must reach x <= -1 + 1e-4");
  const double kmax = std::min(12.0, -std::log10(front));
  std::vector<double> ks;
  for (double k = 1.0; k <= kmax + 1e-12; k += 0.5) ks.push_back(k);
  if (ks.size() < 5) throw TailTooShort("tail has too few usable decades");

  std::vector<double> xs, us;
  for (const double k : ks) {
    xs.push_back(-1.0 + std::pow(10.0, -k));
    us.push_back(prof.utheta(xs.back()));
  }
  const Aitken pw = iterated_aitken(us);
  const int terms = static_cast<int>(std::min<std::size_t>(4, us.size() - 1));
  const Aitken lg = log_model_limit(xs, us, terms);

  PoleLimit out;
  if (lg.error < 0.3 * pw.error) {
    out.value = lg.value;
    out.error = lg.error;
    out.log_rate = true;
  } else {
    out.value = pw.value;
    out.error = pw.error;
    out.log_rate = false;
  }
  return out;
}

double pole_limit(const SolutionProfile& prof) {
  return pole_limit_full(prof).value;
}

ExpansionFit fit_theta_expansion(const SolutionProfile& prof,
                                 const WindowSpec& win) {
  const PoleLimit pl = pole_limit_full(prof);
  const double tau = pl.value;
  const std::vector<double> xs = window_samples(win);
  if (xs.front() < prof.x.front() - 1e-12)
    throw TailTooShort("window extends below the profile tail");
  const int n = static_cast<int>(xs.size());

  ExpansionFit fit;
  fit.pole_value = tau;
  fit.alpha0 = 1.0 - tau / 2.0;
  fit.window_lo = win.lo;
  fit.window_hi = win.hi;

  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y[i] = prof.utheta(xs[i]) - tau;

  const double he = 1.0 + win.hi;  // far edge, where the remainder is largest
  const double eps = 0.1;

  if (std::abs(tau) < 1e-6) {
    fit.case_tag = ExpansionCase::TauZeroLog;
    Eigen::MatrixXd A(n, 2);
    for (int i = 0; i < n; ++i) {
      const double h = 1 + xs[i];
      A(i, 0) = h * std::log(h);
      A(i, 1) = h;
    }
    const Eigen::VectorXd c = lsq(A, y);
    fit.coefficients["a1"] = c[0];
    fit.coefficients["a2"] = c[1];
    fit.residual_norm = sup_residual(A, c, y);
    const double C = std::max({1.0, std::abs(c[0]), std::abs(c[1])});
    fit.remainder_edge = C * std::pow(he, 2 - eps);
  } else if (std::abs(tau - 2) < 5e-3 || (pl.log_rate && std::abs(tau - 2) < 0.1)) {
    // eta = lim (U_theta - 2) ln(1+x) decides between the two log cases
    std::vector<double> etas;
    for (int i = 0; i < n; ++i)
      etas.push_back((y[i] + tau - 2.0) * std::log1p(xs[i]));
    const Aitken eta = log_model_limit(xs, etas, 3);
    fit.pole_value = 2.0;
    fit.alpha0 = 0.0;
    fit.coefficients["eta"] = eta.value;
    if (std::abs(eta.value - 4) < 0.5) {
      fit.case_tag = ExpansionCase::TauTwoLog4;
      Eigen::MatrixXd A(n, 2);
      Eigen::VectorXd y2(n);
      for (int i = 0; i < n; ++i) {
        const double L = std::log1p(xs[i]);
        A(i, 0) = 1 / L;
        A(i, 1) = 1 / (L * L);
        y2[i] = prof.utheta(xs[i]) - 2.0;
      }
      const Eigen::VectorXd c = lsq(A, y2);
      fit.coefficients["a1"] = c[0];
      fit.coefficients["a2"] = c[1];
      fit.residual_norm = sup_residual(A, c, y2);
      fit.remainder_edge = std::pow(std::abs(std::log(he)), -2 + eps);
    } else if (std::abs(eta.value) < 0.5) {
      fit.case_tag = ExpansionCase::TauTwoLog0;
      Eigen::MatrixXd A(n, 2);
      Eigen::VectorXd y2(n);
      for (int i = 0; i < n; ++i) {
        const double h = 1 + xs[i];
        A(i, 0) = std::pow(h, 1 - eps);
        A(i, 1) = h;
        y2[i] = prof.utheta(xs[i]) - 2.0;
      }
      const Eigen::VectorXd c = lsq(A, y2);
      fit.coefficients["a1"] = c[0];
      fit.coefficients["a2"] = c[1];
      fit.residual_norm = sup_residual(A, c, y2);
      const double C = std::max({1.0, std::abs(c[0]), std::abs(c[1])});
      fit.remainder_edge = C * std::pow(he, 1 - eps);
    } else {
      throw CaseMismatch("eta is neither near 0 nor near 4");
    }
  } else if (tau < 2) {
    fit.case_tag = ExpansionCase::Generic;
    Eigen::MatrixXd A(n, 2);
    for (int i = 0; i < n; ++i) {
      const double h = 1 + xs[i];
      A(i, 0) = std::pow(h, fit.alpha0);
      A(i, 1) = h;
    }
    const Eigen::VectorXd c = lsq(A, y);
    fit.coefficients["a1"] = c[0];
    fit.coefficients["a2"] = c[1];
    fit.residual_norm = sup_residual(A, c, y);
    const double C = std::max({1.0, std::abs(c[0]), std::abs(c[1])});
    const double q =
        std::min({2 * fit.alpha0, 1 + fit.alpha0, 2.0}) - eps;
    fit.remainder_edge = C * std::pow(he, std::max(q, 0.1));
  } else if (tau < 3 - 1e-9) {
    fit.case_tag = ExpansionCase::TauIn23;
    Eigen::MatrixXd A(n, 2);
    for (int i = 0; i < n; ++i) {
      const double h = 1 + xs[i];
      A(i, 0) = std::pow(h, 3 - tau);
      A(i, 1) = h;
    }
    const Eigen::VectorXd c = lsq(A, y);
    fit.coefficients["a1"] = c[0];
    fit.coefficients["a2"] = c[1];
    fit.residual_norm = sup_residual(A, c, y);
    // slope-based estimate of the excited exponent, after removing the
    // fitted linear part
    std::vector<double> resid(n);
    for (int i = 0; i < n; ++i) resid[i] = y[i] - c[1] * (1 + xs[i]);
    if (std::abs(c[0]) > 1e-8 * std::max(1.0, std::abs(c[1])))
      fit.coefficients["exponent_est"] = loglog_slope(xs, resid);
    const double C = std::max({1.0, std::abs(c[0]), std::abs(c[1])});
    const double q = std::min({2 * (3 - tau), 4 - tau, 2.0}) - eps;
    fit.remainder_edge = C * std::pow(he, std::max(q, 0.1));
  } else {
    fit.case_tag = ExpansionCase::TauGe3;
    Eigen::MatrixXd A(n, 1);
    for (int i = 0; i < n; ++i) A(i, 0) = 1 + xs[i];
    const Eigen::VectorXd c = lsq(A, y);
    fit.coefficients["a1"] = 0.0;
    fit.coefficients["a2"] = c[0];
    fit.residual_norm = sup_residual(A, c, y);
    const double C = std::max(1.0, std::abs(c[0]));
    fit.remainder_edge = C * std::pow(he, 2 - eps);
  }

  if (fit.residual_norm > 10 * fit.remainder_edge)
    throw CaseMismatch("expansion residual exceeds the admissible remainder");
  return fit;
}

ExpansionFit fit_phi_expansion(const SolutionProfile& prof,
                               const ExpansionFit& tf, const WindowSpec& win) {
  const std::vector<double> xs = window_samples(win);
  if (xs.front() < prof.x.front() - 1e-12)
    throw TailTooShort("window extends below the profile tail");
  const int n = static_cast<int>(xs.size());
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y[i] = prof.uphi(xs[i]);

  ExpansionFit fit;
  fit.case_tag = tf.case_tag;
  fit.alpha0 = tf.alpha0;
  fit.window_lo = win.lo;
  fit.window_hi = win.hi;
  const double he = 1.0 + win.hi;
  const double eps = 0.1;

  auto run = [&](const std::vector<std::function<double(double)>>& basis,
                 int const_idx) {
    Eigen::MatrixXd A(n, basis.size());
    for (int i = 0; i < n; ++i)
      for (std::size_t k = 0; k < basis.size(); ++k)
        A(i, k) = basis[k](xs[i]);
    const Eigen::VectorXd c = lsq(A, y);
    for (std::size_t k = 0; k < basis.size(); ++k)
      fit.coefficients["b" + std::to_string(k + 1)] = c[k];
    if (const_idx >= 0) fit.pole_value = c[const_idx];
    fit.residual_norm = sup_residual(A, c, y);
    double C = 1.0;
    for (std::size_t k = 0; k < basis.size(); ++k)
      C = std::max(C, std::abs(c[k]));
    return C;
  };

  switch (tf.case_tag) {
    case ExpansionCase::TauGe3: {
      double mean = y.mean();
      double dev = 0;
      for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(y[i] - mean));
      if (dev > 1e-9)
        throw CaseMismatch("swirl component is not constant on tau >= 3");
      fit.pole_value = mean;
      fit.residual_norm = dev;
      fit.remainder_edge = 1e-9;
      return fit;
    }
    case ExpansionCase::TauZeroLog: {
      const double C = run(
          {[](double x) { return 1.0; }, [](double x) { return 1 + x; },
           [](double x) {
             return (1 + x) * (1 + x) * std::log1p(x);
           },
           [](double x) { return (1 + x) * (1 + x); }},
          0);
      fit.remainder_edge = C * std::pow(he, 3 - eps);
      break;
    }
    case ExpansionCase::TauTwoLog4: {
      const double C = run({[](double x) { return 1.0; },
                            [](double x) { return 1.0 / std::log1p(x); }},
                           0);
      fit.remainder_edge = C * std::pow(std::abs(std::log(he)), -2 + eps);
      break;
    }
    case ExpansionCase::TauTwoLog0: {
      const double C = run(
          {[](double x) { return std::log1p(x); }, [](double x) { return 1.0; }},
          1);
      fit.remainder_edge = C * std::pow(he, 1 - eps);
      break;
    }
    case ExpansionCase::TauIn23: {
      const double a0 = tf.alpha0;  // negative: the swirl diverges
      const double tau = tf.pole_value;
      const double C =
          run({[a0](double x) { return std::pow(1 + x, a0); },
               [](double x) { return 1.0; },
               [tau](double x) { return std::pow(1 + x, 4 - 1.5 * tau); },
               [tau](double x) { return std::pow(1 + x, 2 - tau / 2); }},
              1);
      const double q = std::min(2 * (3 - tau), 1.0) - eps;
      fit.remainder_edge = C * std::pow(he, std::max(q, 0.05));
      break;
    }
    default: {  // Generic: tau < 2, tau != 0
      const double a0 = tf.alpha0;
      const double C = run({[](double x) { return 1.0; },
                            [a0](double x) { return std::pow(1 + x, a0); },
                            [a0](double x) { return std::pow(1 + x, 2 * a0); },
                            [a0](double x) { return std::pow(1 + x, 1 + a0); }},
                           0);
      const double q = std::min({3 * a0, 1 + 2 * a0, 2.0}) - eps;
      fit.remainder_edge = C * std::pow(he, std::max(q, 0.05));
      break;
    }
  }

  // slope estimate of alpha0 from the swirl derivative, U_phi' ~ (1+x)^{alpha0-1}
  if (fit.case_tag == ExpansionCase::Generic ||
      fit.case_tag == ExpansionCase::TauIn23) {
    std::vector<double> dv(xs.size());
    for (int i = 0; i < n; ++i) dv[i] = prof.duphi(xs[i]);
    const double s = loglog_slope(xs, dv);
    if (s != 0.0) fit.coefficients["alpha0_est"] = s + 1.0;
  }

  if (fit.residual_norm > 10 * fit.remainder_edge)
    throw CaseMismatch("swirl expansion residual exceeds the remainder");
  return fit;
}

ProbeReport probe_bounded_limit(const SingularODEProbe& probe, double delta) {
  if (!(delta > 0 && delta < 1)) throw OutOfDomain("bad probe delta");
  ProbeReport rep;

  std::vector<double> xs, gs, ags;
  for (double h = delta; h > 1e-9; h *= 0.5) {
    const double x = -1 + h;
    const double g = probe.g(x);
    rep.sup_g = std::max(rep.sup_g, std::abs(g));
    if (rep.sup_g > 1e6)
      throw UnboundedDetected("probe solution exceeded the bounded range");
    const double fd = 0.05 * h;
    const double gp = (probe.g(x + fd) - probe.g(x - fd)) / (2 * fd);
    xs.push_back(x);
    gs.push_back(g);
    ags.push_back(probe.a(x) * gp);
  }
  if (xs.size() < 5) throw TailTooShort("probe window too narrow");

  const Aitken gl = iterated_aitken(gs);
  const Aitken lg = log_model_limit(xs, gs, 4);
  rep.g_limit = (lg.error < 0.3 * gl.error) ? lg.value : gl.value;
  rep.ag_limit = iterated_aitken(ags).value;
  rep.ag_ok = std::abs(rep.ag_limit) <= 1e-4;
  const double b1 = probe.b(-1.0), H1 = probe.H(-1.0);
  rep.consistency = b1 * rep.g_limit + 0.5 * rep.g_limit * rep.g_limit - H1;
  rep.consistency_ok = std::abs(rep.consistency) <= 1e-6;
  return rep;
}

}  // namespace homoflow
