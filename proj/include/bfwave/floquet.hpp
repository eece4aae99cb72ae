#pragma once

#include <Eigen/Dense>

#include "bfwave/fourier.hpp"

namespace bfwave {

// Dense matrix of a 2-component Fourier operator truncated to modes -M..M,
// row/column blocks ordered (eta, psi), index k+M within each block.
struct OperatorMatrix {
  double h = 0, mu = 0, eps = 0;
  int modes = 0;
  bool shifted = false;  // true when the rigid i*c*mu drift has been removed
  Eigen::MatrixXcd mat;
};

// Matrix of J = [[0, Id], [-Id, 0]] on the truncated 2-component space.
Eigen::MatrixXcd symplectic_j(int modes);

// Everything that depends on the wave amplitude but not on the Floquet
// parameter; assembling many mu values reuses one conformal solve.
struct WaveData {
  double h = 0, eps = 0;
  int modes = 0;
  double c = 0;      // unperturbed speed sqrt(tanh h)
  double f_eps = 0;  // conformal mean depth correction
  FourierField p, a;
};

WaveData wave_data(double h, double eps, int modes);

// Bloch-Floquet linearization at the Stokes wave.  With shifted = true the
// assembled operator is L - i c mu, whose near-zero cluster the reduction
// tracks.  Requires 0 <= mu < 1/2.
OperatorMatrix assemble_L(const WaveData& w, double mu, bool shifted = false);
OperatorMatrix assemble_L(double h, double mu, double eps, int modes,
                          bool shifted = false);

// Self-adjoint factor with L = J * B (and likewise for the shifted pair).
OperatorMatrix assemble_B(const WaveData& w, double mu, bool shifted = false);
OperatorMatrix assemble_B(double h, double mu, double eps, int modes,
                          bool shifted = false);

// Eigenvalues sorted by (imag, real).
Eigen::VectorXcd full_spectrum(const OperatorMatrix& op);

// Closed-form spectrum of the flat-state operator, same ordering.
Eigen::VectorXcd flat_spectrum(double h, double mu, int modes, bool shifted = false);

}  // namespace bfwave
