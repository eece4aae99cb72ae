#pragma once

#include <Eigen/Dense>

#include "bfwave/kato.hpp"

namespace bfwave {

// Entries of the structured real matrix
//   [a,  b,  c,  0]
//   [d,  a,  0, -c]
//   [e,  0,  a, -b]
//   [0, -e, -d,  a]
// that represents the commutator equation on patterned 2x2 blocks.
struct SylvesterCoefficients {
  double a = 0, b = 0, c = 0, d = 0, e = 0;
};

Eigen::Matrix4d sylvester_matrix(const SylvesterCoefficients& co);

// det A = a^4 - 2 a^2 (bd + ce) + (bd - ce)^2
double sylvester_det(const SylvesterCoefficients& co);

// Closed-form inverse.  Throws RankError when |det A| <= 1e-6.
Eigen::Matrix4d sylvester_inverse(const SylvesterCoefficients& co);

Eigen::Matrix2cd j2();

// exp by scaling and squaring with a degree-6 series; accurate to 1e-14
// for the block sizes arising here.
Eigen::Matrix4cd matrix_exponential(const Eigen::Matrix4cd& s);

// The quadruple built from the closed-form depth coefficients alone, with
// all higher-order remainders dropped.  Shares the pipeline below with the
// numerically extracted quadruple.
ReducedQuadruple analytic_quadruple(double h, double mu, double eps);

// Congruence by Y = diag(sqrt(mu), 1/sqrt(mu), sqrt(mu), 1/sqrt(mu)).
// Similarity on the Hamiltonian side, so the spectrum is unchanged; the
// off-diagonal block shrinks to O(mu eps).  Throws for mu <= 0.
ReducedQuadruple singular_rescaling(const ReducedQuadruple& q, double mu);

// Coefficients of the linear system tied to the rescaled blocks.
SylvesterCoefficients homological_coefficients(const ReducedQuadruple& q);

// The patterned 2x2 matrix X with D1 X - X D0 = -J2 F, where D1, D0 are the
// diagonal blocks of the rescaled matrix and F its coupling block.
Eigen::Matrix2cd solve_homological(const ReducedQuadruple& q);

// One conjugation by exp(S), S built from X.  With the homological solution
// the coupling block drops from O(mu eps) to O(mu eps^3) and the (1,1) entry
// of the upper block transitions to the effective second-order coefficient.
ReducedQuadruple decouple_step(const ReducedQuadruple& q, const Eigen::Matrix2cd& x);

struct DecoupledPair {
  double h = 0, mu = 0, eps = 0;
  Eigen::Matrix2cd u_block, s_block;
  double off_diagonal_residual = 0;
  int iterations = 0;
};

// Fixed-point iteration on the nonlinear commutator equation until the
// conjugated matrix is block-diagonal to tol.  Returns the two 2x2 blocks
// with the drift i c_h mu restored.  Throws ConvergenceError after 50
// passes or when the residual increases.
DecoupledPair full_decouple(const ReducedQuadruple& q, double tol = 1e-12);

}  // namespace bfwave
