#include "homoflow/grid.hpp"

#include <algorithm>
#include <cmath>

#include "homoflow/errors.hpp"

namespace homoflow {

namespace {

// interval index i with xs[i] <= xq < xs[i+1], clamped to end segments
std::size_t locate(const std::vector<double>& xs, double xq) {
  auto it = std::upper_bound(xs.begin(), xs.end(), xq);
  std::ptrdiff_t i = (it - xs.begin()) - 1;
  i = std::max<std::ptrdiff_t>(0, std::min<std::ptrdiff_t>(i, xs.size() - 2));
  return static_cast<std::size_t>(i);
}

double hermite_piece(double x0, double x1, double f0, double f1, double d0,
                     double d1, double xq, bool deriv) {
  const double h = x1 - x0, t = (xq - x0) / h;
  const double t2 = t * t, t3 = t2 * t;
  if (!deriv) {
    return f0 * (2 * t3 - 3 * t2 + 1) + f1 * (-2 * t3 + 3 * t2) +
           h * (d0 * (t3 - 2 * t2 + t) + d1 * (t3 - t2));
  }
  return (f0 * (6 * t2 - 6 * t) + f1 * (-6 * t2 + 6 * t)) / h +
         d0 * (3 * t2 - 4 * t + 1) + d1 * (3 * t2 - 2 * t);
}

}  // namespace

double hermite_interp(const std::vector<double>& xs,
                      const std::vector<double>& f,
                      const std::vector<double>& df, double xq) {
  const std::size_t i = locate(xs, xq);
  return hermite_piece(xs[i], xs[i + 1], f[i], f[i + 1], df[i], df[i + 1], xq,
                       false);
}

void SolutionProfile::validate() const {
  const std::size_t n = x.size();
  if (n < 2 || Utheta.size() != n || dUtheta.size() != n ||
      Uphi.size() != n || dUphi.size() != n ||
      (!d2Uphi.empty() && d2Uphi.size() != n)) {
    throw IncompleteProfile("profile arrays missing or of unequal length");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(x[i] < x[i + 1]))
      throw GridMismatch("profile grid is not strictly increasing");
  }
}

double SolutionProfile::utheta(double xq) const {
  return hermite_interp(x, Utheta, dUtheta, xq);
}

double SolutionProfile::dutheta(double xq) const {
  const std::size_t i = locate(x, xq);
  return hermite_piece(x[i], x[i + 1], Utheta[i], Utheta[i + 1], dUtheta[i],
                       dUtheta[i + 1], xq, true);
}

double SolutionProfile::uphi(double xq) const {
  return hermite_interp(x, Uphi, dUphi, xq);
}

double SolutionProfile::duphi(double xq) const {
  if (!d2Uphi.empty()) return hermite_interp(x, dUphi, d2Uphi, xq);
  const std::size_t i = locate(x, xq);
  return hermite_piece(x[i], x[i + 1], Uphi[i], Uphi[i + 1], dUphi[i],
                       dUphi[i + 1], xq, true);
}

double SolutionProfile::d2uphi(double xq) const {
  if (!d2Uphi.empty()) {
    const std::size_t i = locate(x, xq);
    return hermite_piece(x[i], x[i + 1], dUphi[i], dUphi[i + 1], d2Uphi[i],
                         d2Uphi[i + 1], xq, true);
  }
  const double h = 1e-5 * (x.back() - x.front());
  return (duphi(xq + h) - duphi(xq - h)) / (2 * h);
}

ChebGrid::ChebGrid(int n, double clip) : n_(n), clip_(clip) {
  if (n < 4 || n % 2 != 0)
    throw DomainError("collocation degree must be even and >= 4");
  if (!(clip > 0 && clip < 0.1)) throw DomainError("bad grid clip");
  scale_ = 1.0 - clip;

  x_.resize(n_ + 1);
  bw_.resize(n_ + 1);
  for (int j = 0; j <= n_; ++j) {
    x_[j] = -scale_ * std::cos(M_PI * j / n_);  // ascending
    bw_[j] = ((j % 2) ? -1.0 : 1.0) * ((j == 0 || j == n_) ? 0.5 : 1.0);
  }
  x_[n_ / 2] = 0.0;  // exact midpoint node

  // differentiation via barycentric weights with the negative-sum trick
  D_.setZero(n_ + 1, n_ + 1);
  for (int i = 0; i <= n_; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j <= n_; ++j) {
      if (j == i) continue;
      D_(i, j) = (bw_[j] / bw_[i]) / (x_[i] - x_[j]);
      rowsum += D_(i, j);
    }
    D_(i, i) = -rowsum;
  }

  // cumulative integration through Chebyshev coefficients in y = x/scale,
  // with the standard descending ordering y_k = cos(k pi / n)
  const int m = n_ + 1;
  Eigen::MatrixXd C(m, m);  // values (descending) -> coefficients
  for (int k = 0; k < m; ++k) {
    const double ck = (k == 0 || k == n_) ? 2.0 : 1.0;
    for (int j = 0; j < m; ++j) {
      const double cj = (j == 0 || j == n_) ? 2.0 : 1.0;
      C(k, j) = 2.0 / (n_ * ck * cj) * std::cos(M_PI * k * j / n_);
    }
  }
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m + 1, m);  // antiderivative coeffs
  for (int k = 1; k <= n_ + 1; ++k) {
    A(k, k - 1) += 1.0 / (2 * k);
    if (k + 1 < m) A(k, k + 1) -= 1.0 / (2 * k);
  }
  Eigen::MatrixXd E(m, m + 1);  // evaluate sum A_k T_k at descending nodes
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n_ + 1; ++k) E(j, k) = std::cos(M_PI * j * k / n_);
  Eigen::MatrixXd F = E * A * C;  // antiderivative values, descending order
  cum_.resize(m, m);
  for (int i = 0; i < m; ++i)  // pin F = 0 at y = -1 (descending row n_),
    for (int j = 0; j < m; ++j)  // flip both indices back to ascending
      cum_(i, j) = scale_ * (F(n_ - i, n_ - j) - F(n_, n_ - j));
}

Eigen::VectorXd ChebGrid::cumint(const Eigen::VectorXd& f) const {
  return cum_ * f;
}

double ChebGrid::interp(const Eigen::VectorXd& f, double xq) const {
  double num = 0.0, den = 0.0;
  for (int j = 0; j <= n_; ++j) {
    const double d = xq - x_[j];
    if (std::abs(d) < 1e-14) return f[j];
    const double w = bw_[j] / d;
    num += w * f[j];
    den += w;
  }
  return num / den;
}

}  // namespace homoflow
