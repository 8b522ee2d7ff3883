#include "homoflow/quad.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "homoflow/errors.hpp"

namespace homoflow::quad {

namespace {

struct GslInit {
  GslInit() { gsl_set_error_handler_off(); }
};
const GslInit gsl_init_once;

double fn_thunk(double x, void* p) { return (*static_cast<const Fn*>(p))(x); }

double qk15(const Fn& f, double a, double b, double* err) {
  gsl_function F;
  F.function = &fn_thunk;
  F.params = const_cast<void*>(static_cast<const void*>(&f));
  double result = 0, abserr = 0, resabs = 0, resasc = 0;
  gsl_integration_qk15(&F, a, b, &result, &abserr, &resabs, &resasc);
  *err = abserr;
  return result;
}

struct Panel {
  double err, a, b, val;
  bool operator<(const Panel& o) const { return err < o.err; }
};

double clenshaw(const double* c, int n, double t) {
  double b1 = 0, b2 = 0;
  for (int k = n - 1; k >= 1; --k) {
    const double bk = c[k] + 2 * t * b1 - b2;
    b2 = b1;
    b1 = bk;
  }
  return c[0] + t * b1 - b2;
}

}  // namespace

double integrate(const Fn& f, double a, double b, double abs_tol) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, abs_tol);
  std::priority_queue<Panel> q;
  double err0;
  const double v0 = qk15(f, a, b, &err0);
  q.push({err0, a, b, v0});
  double total_val = v0, total_err = err0;
  const int max_panels = 20000;
  for (int it = 0; it < max_panels; ++it) {
    if (total_err <= std::max(abs_tol, 1e-14 * std::abs(total_val))) break;
    const Panel p = q.top();
    q.pop();
    const double m = 0.5 * (p.a + p.b);
    if (!(p.a < m && m < p.b)) {  // interval exhausted at machine precision
      total_err -= p.err;  // keep the panel but stop counting its error
      q.push({0.0, p.a, p.b, p.val});
      continue;
    }
    double e1, e2;
    const double v1 = qk15(f, p.a, m, &e1);
    const double v2 = qk15(f, m, p.b, &e2);
    total_val += v1 + v2 - p.val;
    total_err += e1 + e2 - p.err;
    q.push({e1, p.a, m, v1});
    q.push({e2, m, p.b, v2});
  }
  if (total_err > std::max(abs_tol * 50, 1e-11 * std::abs(total_val))) {
    throw SingularQuadrature("quadrature did not converge on [" +
                             std::to_string(a) + ", " + std::to_string(b) +
                             "], err " + std::to_string(total_err));
  }
  return total_val;
}

std::vector<double> suffix_integrals(const Fn& f, const std::vector<double>& xs,
                                     double abs_tol) {
  const std::size_t n = xs.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  const double panel_tol = abs_tol / static_cast<double>(n);
  for (std::size_t j = n - 1; j-- > 0;)
    out[j] = out[j + 1] + integrate(f, xs[j], xs[j + 1], panel_tol);
  return out;
}

void check_integrable_at_left(const Fn& f, double a, double c) {
  const double scale = c - a;
  const double i1 = integrate(f, a + 1e-2 * scale, c, 1e-10);
  const double i2 = integrate(f, a + 1e-4 * scale, c, 1e-10);
  const double i3 = integrate(f, a + 1e-6 * scale, c, 1e-10);
  const double d1 = std::abs(i2 - i1), d2 = std::abs(i3 - i2);
  if (d2 > 0.7 * d1 + 1e-9 * (1 + std::abs(i3))) {
    throw SingularQuadrature(
        "integrand appears non-integrable at the left endpoint");
  }
}

SegmentedAntiderivative::SegmentedAntiderivative(const Fn& f,
                                                 std::vector<double> breaks)
    : breaks_(std::move(breaks)) {
  const std::size_t nseg = breaks_.size() - 1;
  if (breaks_.size() < 2) throw DomainError("antiderivative net too small");
  for (std::size_t i = 0; i < nseg; ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw DomainError("antiderivative net not increasing");

  coef_.resize(nseg);
  acoef_.resize(nseg);
  seg_int_.resize(nseg);
  seg_suffix_.assign(nseg + 1, 0.0);

  constexpr int N = 15;  // 16 Chebyshev-Lobatto samples, degree 15
  double ct[N + 1];
  for (int i = 0; i <= N; ++i) ct[i] = std::cos(M_PI * i / N);

  for (std::size_t s = 0; s < nseg; ++s) {
    const double mid = 0.5 * (breaks_[s] + breaks_[s + 1]);
    const double half = 0.5 * (breaks_[s + 1] - breaks_[s]);
    double fv[N + 1];
    for (int i = 0; i <= N; ++i) fv[i] = f(mid + half * ct[i]);
    auto& c = coef_[s];
    for (int k = 0; k <= N; ++k) {
      double acc = 0;
      for (int i = 0; i <= N; ++i) {
        const double gi = (i == 0 || i == N) ? 2.0 : 1.0;
        acc += fv[i] * std::cos(M_PI * k * i / N) / gi;
      }
      const double gk = (k == 0 || k == N) ? 2.0 : 1.0;
      c[k] = 2.0 * acc / (N * gk);
    }
    auto& A = acoef_[s];
    A.fill(0.0);
    A[1] = c[0] - c[2] / 2;
    for (int k = 2; k <= N + 1; ++k)
      A[k] = ((c[k - 1]) - (k + 1 <= N ? c[k + 1] : 0.0)) / (2 * k);
    double a0 = 0, f1 = 0;
    for (int k = 1; k <= N + 1; ++k) {
      a0 -= ((k % 2) ? -1.0 : 1.0) * A[k];  // pin F(-1) = 0
      f1 += A[k];
    }
    A[0] = a0;
    seg_int_[s] = half * (f1 + a0);  // integral over the whole segment
  }
  for (std::size_t s = nseg; s-- > 0;)
    seg_suffix_[s] = seg_suffix_[s + 1] + seg_int_[s];
}

std::size_t SegmentedAntiderivative::seg(double s) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), s);
  std::ptrdiff_t i = (it - breaks_.begin()) - 1;
  i = std::max<std::ptrdiff_t>(
      0, std::min<std::ptrdiff_t>(i, breaks_.size() - 2));
  return static_cast<std::size_t>(i);
}

double SegmentedAntiderivative::value(double s) const {
  const std::size_t i = seg(s);
  const double mid = 0.5 * (breaks_[i] + breaks_[i + 1]);
  const double half = 0.5 * (breaks_[i + 1] - breaks_[i]);
  return clenshaw(coef_[i].data(), 16, (s - mid) / half);
}

double SegmentedAntiderivative::suffix(double s) const {
  if (s <= breaks_.front()) return seg_suffix_.front();
  if (s >= breaks_.back()) return 0.0;
  const std::size_t i = seg(s);
  const double mid = 0.5 * (breaks_[i] + breaks_[i + 1]);
  const double half = 0.5 * (breaks_[i + 1] - breaks_[i]);
  const double upto = half * clenshaw(acoef_[i].data(), 17, (s - mid) / half);
  return seg_suffix_[i + 1] + (seg_int_[i] - upto);
}

std::vector<double> graded_net(double lo, double hi, double edge, double ratio,
                               int n_uniform) {
  if (!(-1.0 < lo && lo < hi)) throw DomainError("bad net bounds");
  std::vector<double> pts{lo};
  double g = (1.0 + lo) * ratio;  // grade relative to the pole at x = -1
  while (g < edge && -1.0 + g < hi) {
    pts.push_back(-1.0 + g);
    g *= ratio;
  }
  const double u0 = pts.back();
  for (int i = 1; i <= n_uniform; ++i)
    pts.push_back(u0 + (hi - u0) * i / n_uniform);
  pts.back() = hi;
  return pts;
}

}  // namespace homoflow::quad
