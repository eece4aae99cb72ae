#pragma once

#include "bfwave/fourier.hpp"

namespace bfwave {

// Small-amplitude Stokes wave through second order in the amplitude eps:
//   eta = eps cos x + eps^2 (eta2_0 + eta2_2 cos 2x),
//   psi = eps c^-1 sin x + eps^2 psi2_2 sin 2x,
//   speed = c + eps^2 c2.
struct StokesExpansion {
  double h = 0;
  double c0 = 0, c1 = 0, c2 = 0;
  double eta2_0 = 0, eta2_2 = 0, psi2_2 = 0;
  FourierField eta1, psi1, eta2, psi2;

  FourierField eta_field(double eps, int modes) const;
  FourierField psi_field(double eps, int modes) const;
  double speed(double eps) const { return c0 + eps * eps * c2; }
};

StokesExpansion stokes_expansion(double h);

// Dirichlet-Neumann operator truncated at the given expansion order (0, 1, 2),
// with every product computed as an exact convolution re-truncated to the
// common mode count.
FourierField dirichlet_neumann(const FourierField& eta, const FourierField& psi,
                               double h, int order);

// Max of the L2 norms of the two traveling-wave equations evaluated on the
// eps^2-truncated Stokes wave with the order-2 Dirichlet-Neumann operator.
// Scales like eps^3.
double traveling_residual(double h, double eps, int modes);

// Conformal parametrization of the fluid domain under the Stokes wave:
// periodic shift p_frak (odd) and mean depth correction f_eps.
struct ConformalData {
  double h = 0, eps = 0;
  FourierField p_frak;
  double f_eps = 0;
  int iterations = 0;
  double residual = 0;
};

ConformalData conformal_fixed_point(double h, double eps, int modes,
                                    double tol = 1e-13);

// Even coefficient functions of the linearized operator at the Stokes wave in
// conformal variables, plus their leading analytic harmonics for cross-checks.
struct CoefficientFunctions {
  double h = 0, eps = 0;
  FourierField p_eps, a_eps;
  double f_eps = 0;
  double p1_1 = 0, p2_0 = 0, p2_2 = 0;
  double a1_1 = 0, a2_0 = 0, a2_2 = 0;
};

CoefficientFunctions coefficient_functions(double h, double eps, int modes);

}  // namespace bfwave
