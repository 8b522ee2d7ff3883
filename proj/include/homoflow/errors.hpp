#pragma once
#include <stdexcept>
#include <string>

namespace homoflow {

// Error taxonomy. Each failure condition gets its own type so the CLI can map
// them onto exit codes without string matching.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error { using Error::Error; };        // exit 2
struct OutOfDomain : Error { using Error::Error; };        // exit 3
struct DomainError : Error { using Error::Error; };        // exit 3
struct PoleHit : Error { using Error::Error; };            // exit 3
struct BranchAmbiguous : Error { using Error::Error; };    // exit 3
struct IncompleteProfile : Error { using Error::Error; };  // exit 3
struct GridMismatch : Error { using Error::Error; };       // exit 3
struct GridTooCoarse : Error { using Error::Error; };      // exit 3
struct SingularQuadrature : Error { using Error::Error; }; // exit 3
struct TailTooShort : Error { using Error::Error; };       // exit 3
struct CaseMismatch : Error { using Error::Error; };       // exit 3
struct UnboundedDetected : Error { using Error::Error; };  // exit 3
struct BadEpsilon : Error { using Error::Error; };         // exit 3
struct NoConvergence : Error { using Error::Error; };      // exit 4
struct RegionUnsupported : Error { using Error::Error; };  // exit 5

// Thrown by the north-pole initial value integrator when |U_theta| passes the
// blow-up threshold; carries the abscissa where integration stopped.
struct BlowUp : Error {
  double x_stop;
  BlowUp(double xs, const std::string& msg) : Error(msg), x_stop(xs) {}
};

}  // namespace homoflow
