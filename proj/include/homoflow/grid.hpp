#pragma once
#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <vector>

#include "homoflow/params.hpp"

namespace homoflow {

enum class ProfileSource { ClosedForm, Ivp, Branch, Kernel, Synthetic };

// Sampled solution profile on a strictly increasing grid. Both velocity
// components are stored with first derivatives (second derivative of the
// swirl component optionally, filled analytically where the producer knows
// it). Off-grid evaluation is piecewise cubic Hermite; queries slightly
// outside the grid use the end segment, which covers the 1e-6 clip slivers
// next to the poles.
struct SolutionProfile {
  std::vector<double> x;
  std::vector<double> Utheta, dUtheta;
  std::vector<double> Uphi, dUphi;
  std::vector<double> d2Uphi;  // optional; empty when not available
  ProfileSource source = ProfileSource::Synthetic;
  std::optional<MuGamma> params;

  std::size_t size() const { return x.size(); }
  void validate() const;  // IncompleteProfile / GridMismatch on bad layout

  double utheta(double xq) const;
  double dutheta(double xq) const;
  double uphi(double xq) const;
  double duphi(double xq) const;
  // d2Uphi interpolant when present, else a finite difference of duphi
  double d2uphi(double xq) const;
};

// Piecewise cubic Hermite interpolation on (xs, f, df).
double hermite_interp(const std::vector<double>& xs,
                      const std::vector<double>& f,
                      const std::vector<double>& df, double xq);

// Chebyshev-Gauss-Lobatto collocation grid on [-(1-clip), 1-clip], nodes
// ascending. D() differentiates the nodal interpolant, cumint() integrates it
// from the leftmost node, interp() is barycentric evaluation.
class ChebGrid {
 public:
  explicit ChebGrid(int n, double clip = 1e-6);

  int n() const { return n_; }  // degree; n+1 nodes
  double clip() const { return clip_; }
  const std::vector<double>& x() const { return x_; }
  const Eigen::MatrixXd& D() const { return D_; }
  // index of the node at x = 0 (requires even n)
  int mid() const { return n_ / 2; }

  Eigen::VectorXd cumint(const Eigen::VectorXd& f) const;
  double interp(const Eigen::VectorXd& f, double xq) const;

 private:
  int n_;
  double clip_, scale_;
  std::vector<double> x_;   // ascending nodes
  std::vector<double> bw_;  // barycentric weights
  Eigen::MatrixXd D_;
  Eigen::MatrixXd cum_;  // cumulative-integral matrix
};

}  // namespace homoflow
