#pragma once
#include <functional>
#include <map>
#include <string>

#include "homoflow/grid.hpp"

namespace homoflow {

enum class ExpansionCase {
  Generic,     // tau < 2, tau != 0: modes (1+x)^{alpha0}, (1+x)
  TauZeroLog,  // tau = 0: modes (1+x)ln(1+x), (1+x)
  TauTwoLog4,  // tau = 2, eta = 4: modes 1/ln, 1/ln^2
  TauTwoLog0,  // tau = 2, eta = 0: power-type remainder
  TauIn23,     // 2 < tau < 3: modes (1+x)^{3-tau}, (1+x)
  TauGe3,      // tau >= 3: linear only / constant swirl
};

struct ExpansionFit {
  double pole_value = 0.0;  // U_theta(-1), or the swirl constant term
  double alpha0 = 0.0;      // 1 - U_theta(-1)/2
  ExpansionCase case_tag = ExpansionCase::Generic;
  std::map<std::string, double> coefficients;  // a1,a2 / b1..b4 / eta / *_est
  double residual_norm = 0.0;   // sup |data - fit| over the window
  double remainder_edge = 0.0;  // predicted remainder at the far window edge
  double window_lo = 0.0, window_hi = 0.0;
};

struct PoleLimit {
  double value = 0.0;
  double error = 0.0;   // self-consistency estimate
  bool log_rate = false;  // tail converged logarithmically (tau = 2 family)
};

// Extrapolated pole value of U_theta over the geometric tail
// x_k = -1 + 10^{-k}: iterated Aitken for power-law tails, a least-squares
// model in 1/log for logarithmic ones. Requires the profile to reach
// x <= -1 + 1e-4 (TailTooShort otherwise).
PoleLimit pole_limit_full(const SolutionProfile& prof);
double pole_limit(const SolutionProfile& prof);

struct WindowSpec {
  double lo = -1 + 1e-8, hi = -1 + 1e-2;
  int n = 48;  // geometric sample count in 1+x
};

// Least-squares fit of the pole expansion of U_theta in the basis selected
// by the extrapolated pole value. Throws CaseMismatch when the residual
// exceeds ten times the predicted remainder at the far window edge.
ExpansionFit fit_theta_expansion(const SolutionProfile& prof,
                                 const WindowSpec& win);

// Swirl-component expansion, dispatched on the theta fit's case.
// For tau >= 3 asserts constancy of U_phi to 1e-9.
ExpansionFit fit_phi_expansion(const SolutionProfile& prof,
                               const ExpansionFit& theta_fit,
                               const WindowSpec& win);

// Boundedness/limit probe for a(x) g' + b(x) g + g^2/2 = H(x) near x = -1.
// a, b, H must extend continuously to -1; g is sampled on (-1, -1+delta].
struct SingularODEProbe {
  std::function<double(double)> a, b, H, g;
};
struct ProbeReport {
  double sup_g = 0.0;
  double g_limit = 0.0;
  double ag_limit = 0.0;       // extrapolated a g' (should vanish)
  double consistency = 0.0;    // b(-1) g(-1) + g(-1)^2/2 - H(-1)
  bool ag_ok = false;          // |ag_limit| <= 1e-4
  bool consistency_ok = false;  // |consistency| <= 1e-6
};
// Throws UnboundedDetected when sup |g| exceeds 1e6 on the sample set.
ProbeReport probe_bounded_limit(const SingularODEProbe& probe, double delta);

}  // namespace homoflow
