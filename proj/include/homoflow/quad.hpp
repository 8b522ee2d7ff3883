#pragma once
#include <array>
#include <functional>
#include <vector>

namespace homoflow::quad {

using Fn = std::function<double(double)>;

// Adaptive Gauss-Kronrod integration of f over [a, b] to the given absolute
// tolerance (bisection on the 15-point rule). Throws SingularQuadrature when
// subdivision stalls without converging.
double integrate(const Fn& f, double a, double b, double abs_tol = 1e-12);

// Suffix integrals over a partition: out[j] = integral of f from xs[j] to
// xs.back(), each inter-node panel integrated adaptively.
std::vector<double> suffix_integrals(const Fn& f, const std::vector<double>& xs,
                                     double abs_tol = 1e-12);

// Probes whether f is integrable at the left endpoint a by comparing
// integrals from a + h over shrinking h; throws SingularQuadrature when the
// tail contributions fail to contract (log or worse divergence).
void check_integrable_at_left(const Fn& f, double a, double c);

// Piecewise Chebyshev model of f on a fixed breakpoint net, supporting cheap
// pointwise evaluation of both f and its suffix antiderivative
// F(s) = integral of f from s to the right end of the net. Breakpoints must
// be strictly increasing; f is sampled at 16 Chebyshev points per segment,
// so per-segment smoothness sets the accuracy (grade the net accordingly).
class SegmentedAntiderivative {
 public:
  SegmentedAntiderivative(const Fn& f, std::vector<double> breaks);
  double value(double s) const;   // interpolated f(s)
  double suffix(double s) const;  // F(s), integral from s to the end
  const std::vector<double>& breaks() const { return breaks_; }

 private:
  std::vector<double> breaks_;
  std::vector<std::array<double, 16>> coef_;   // Chebyshev coeffs per segment
  std::vector<std::array<double, 18>> acoef_;  // antiderivative coeffs
  std::vector<double> seg_int_, seg_suffix_;
  std::size_t seg(double s) const;
};

// Geometrically graded breakpoint net on [lo, hi] refined toward lo, for
// integrands with an algebraic singularity just left of lo.
std::vector<double> graded_net(double lo, double hi, double edge = 0.1,
                               double ratio = 2.0, int n_uniform = 64);

}  // namespace homoflow::quad
