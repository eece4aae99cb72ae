#pragma once

#include <optional>

namespace bfwave {

// Depths outside this window are rejected: the closed-form coefficients
// degenerate as h -> 0+ and saturate long before h = 50.
inline constexpr double kMinDepth = 0.05;
inline constexpr double kMaxDepth = 50.0;

// All closed-form depth-dependent constants at a given h, with wavenumber 1
// and unit gravity.  Every field is an explicit function of c_h = sqrt(tanh h).
struct DepthCoefficients {
  double h;
  double c_h;      // linear phase speed sqrt(tanh h)
  double gamma_h;  // 1 + h(1 - c^4)/c^2
  double alpha_h;
  double beta_h;
  double delta_h;
  double zeta_h;
  double b_bold_h;
  double e_11;
  double e_12;
  double e_22;
  double e_wb;  // Whitham-Benjamin function; sign decides instability
  double f_11;
  double tilde_e11;  // e_wb - e_11 via the independent formula
  double d_h;        // h - e_12^2/4
  double breve_c_h;  // 2 c_h - e_12
  // Half-width slope of the unstable Floquet band, sqrt(8 e_wb / e_22);
  // only defined on the unstable side e_wb > 0.
  std::optional<double> e_h;
};

// Throws std::domain_error when h is outside (kMinDepth, kMaxDepth).
DepthCoefficients depth_coefficients(double h);

// Root of e_wb on [lo, hi] by bisection with secant acceleration.
// Throws BracketError when e_wb does not change sign across the bracket.
double critical_depth(double lo = 1.0, double hi = 2.0, double tol = 1e-12);

}  // namespace bfwave
