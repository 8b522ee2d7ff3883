#pragma once
#include <cstddef>
#include <functional>
#include <vector>

#include "homoflow/grid.hpp"
#include "homoflow/params.hpp"

namespace homoflow {

// Meridional velocity in the cross-section plane x1 = 0. A point (x2, x3)
// has r = |X|, polar abscissa x = x3/r and st = x2/r (signed; the field is
// mirror-symmetric in x2). With the (-1)-homogeneous scaling u(rw) = u(w)/r,
//   u2 = [U'(x) st + U(x) x / st] / r,
//   u3 = [U'(x) x  - U(x)] / r.
// The U(x) x / st term has a removable zero on the north half-axis and a
// genuine singularity on the south half-axis (the excluded ray).
class CrossSection {
 public:
  static CrossSection from_exact(MuGamma p);
  static CrossSection from_profile(SolutionProfile prof);

  // Throws PoleHit on the south half-axis ray, OutOfDomain past delta*.
  void velocity(double x2, double x3, double& u2, double& u3) const;

 private:
  std::function<void(double, double&, double&)> eval_;  // x -> U, U'
};

enum class TraceStop { AnnulusExit, MaxSteps, Stagnation, DomainEdge };

struct Streamline {
  std::vector<double> x2, x3;
  TraceStop stop = TraceStop::MaxSteps;
};

struct TraceOptions {
  double r_min = 0.5;
  double r_max = 2.0;
  double h_over_rmin = 1e-3;  // fixed step h = h_over_rmin * r_min
  std::size_t max_steps = 100000;
};

// Fixed-step fourth-order integration of dX/ds = u(X)/|u(X)|. Normalizing to
// the unit field makes the trace commute exactly with radial scaling: doubling
// the seed, the annulus and the step doubles every emitted point bit-for-bit.
// Stops on annulus exit (the offending point is dropped: emitted points stay
// inside), stagnation |u| < 1e-14, a domain edge, or max_steps. Throws
// ConfigError when the seed is not inside the annulus.
Streamline trace_streamline(const CrossSection& field, double seed2,
                            double seed3, const TraceOptions& opt);

}  // namespace homoflow
