#include "homoflow/flowfield.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "homoflow/errors.hpp"
#include "homoflow/exact.hpp"

namespace homoflow {

CrossSection CrossSection::from_exact(MuGamma p) {
  CrossSection cs;
  cs.eval_ = [p](double x, double& U, double& dU) {
    U = eval_U_theta(p, x);
    dU = eval_U_theta_deriv(p, x, 1);
  };
  return cs;
}

CrossSection CrossSection::from_profile(SolutionProfile prof) {
  prof.validate();
  auto sp = std::make_shared<SolutionProfile>(std::move(prof));
  CrossSection cs;
  cs.eval_ = [sp](double x, double& U, double& dU) {
    U = sp->utheta(x);
    dU = sp->dutheta(x);
  };
  return cs;
}

void CrossSection::velocity(double x2, double x3, double& u2,
                            double& u3) const {
  const double r = std::sqrt(x2 * x2 + x3 * x3);
  if (r == 0.0) throw PoleHit("velocity: origin");
  const double st = x2 / r;
  double x = x3 / r;
  if (x > 1.0) x = 1.0;
  if (x < -1.0) x = -1.0;
  if (x <= 0.0 && std::fabs(st) < 1e-14)
    throw PoleHit("velocity: south half-axis");
  double U, dU;
  eval_(x, U, dU);
  // north axis: U ~ gamma (x-1) ~ -gamma st^2/2, so U x / st vanishes there
  const double swirl_term = (std::fabs(st) < 1e-8 && x > 0.0) ? 0.0
                                                              : U * x / st;
  u2 = (dU * st + swirl_term) / r;
  u3 = (dU * x - U) / r;
}

namespace {

// unit direction of the field; false when the field is stagnant there
bool unit_dir(const CrossSection& f, double x2, double x3, double& d2,
              double& d3) {
  double u2, u3;
  f.velocity(x2, x3, u2, u3);
  const double norm = std::sqrt(u2 * u2 + u3 * u3);
  if (!(norm > 1e-14) || !std::isfinite(norm)) return false;
  d2 = u2 / norm;
  d3 = u3 / norm;
  return true;
}

}  // namespace

Streamline trace_streamline(const CrossSection& field, double seed2,
                            double seed3, const TraceOptions& opt) {
  const double r0 = std::sqrt(seed2 * seed2 + seed3 * seed3);
  if (!(r0 >= opt.r_min && r0 <= opt.r_max))
    throw ConfigError("trace_streamline: seed outside annulus");

  const double h = opt.h_over_rmin * opt.r_min;
  Streamline line;
  line.x2.push_back(seed2);
  line.x3.push_back(seed3);

  double p2 = seed2, p3 = seed3;
  for (std::size_t step = 0; step < opt.max_steps; ++step) {
    double k12, k13, k22, k23, k32, k33, k42, k43;
    try {
      if (!unit_dir(field, p2, p3, k12, k13) ||
          !unit_dir(field, p2 + 0.5 * h * k12, p3 + 0.5 * h * k13, k22, k23) ||
          !unit_dir(field, p2 + 0.5 * h * k22, p3 + 0.5 * h * k23, k32, k33) ||
          !unit_dir(field, p2 + h * k32, p3 + h * k33, k42, k43)) {
        line.stop = TraceStop::Stagnation;
        return line;
      }
    } catch (const PoleHit&) {
      line.stop = TraceStop::DomainEdge;
      return line;
    } catch (const OutOfDomain&) {
      line.stop = TraceStop::DomainEdge;
      return line;
    } catch (const DomainError&) {
      line.stop = TraceStop::DomainEdge;
      return line;
    }
    const double n2 = p2 + (h / 6.0) * (k12 + 2.0 * k22 + 2.0 * k32 + k42);
    const double n3 = p3 + (h / 6.0) * (k13 + 2.0 * k23 + 2.0 * k33 + k43);
    const double r = std::sqrt(n2 * n2 + n3 * n3);
    if (!(r >= opt.r_min && r <= opt.r_max)) {
      line.stop = TraceStop::AnnulusExit;
      return line;
    }
    line.x2.push_back(n2);
    line.x3.push_back(n3);
    p2 = n2;
    p3 = n3;
  }
  line.stop = TraceStop::MaxSteps;
  return line;
}

}  // namespace homoflow
