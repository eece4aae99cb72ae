#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "bfwave/floquet.hpp"

namespace bfwave {

struct Contour {
  std::complex<double> center{0.0, 0.0};
  double radius = 0.0;
  int nodes = 64;
};

// Circle around 0 with radius min(0.4 * gap, 0.2), where gap is the distance
// from 0 to the nearest flat-state eigenvalue outside the zero cluster.
Contour default_contour(double h, double mu, int modes, int nodes = 64);

// Riesz projector -(1/2 pi i) * contour integral of the resolvent of the
// shifted operator, by the trapezoid rule with one dense solve per node.
// Throws RankError unless exactly four singular values exceed 0.5.
Eigen::MatrixXcd spectral_projector(const OperatorMatrix& shifted_op,
                                    const Contour& contour, int jobs = 1);

struct TransformationPair {
  Eigen::MatrixXcd u, u_inv;
};

// Similarity with u * p00 * u_inv = p, built from the binomial series for
// (Id - (p - p00)^2)^{-1/2}.  Throws ConvergenceError when ||p - p00|| >= 1.
TransformationPair transformation_operator(const Eigen::MatrixXcd& p,
                                           const Eigen::MatrixXcd& p00);

// Order f1+, f1-, f0+, f0-.
struct KatoBasis {
  double h = 0, mu = 0, eps = 0;
  int modes = 0;
  bool transported = false;
  std::array<Eigen::VectorXcd, 4> f;
};

KatoBasis unperturbed_basis(double h, int modes);
KatoBasis transported_basis(const TransformationPair& tp, const KatoBasis& base,
                            double mu, double eps);

Eigen::Matrix4cd j4();

// Self-adjoint 4x4 representation of the shifted operator on the invariant
// subspace: l4 = j4 * b4, blocks b4 = [[e, f], [f*, g]].
struct ReducedQuadruple {
  double h = 0, mu = 0, eps = 0;
  Eigen::Matrix4cd b4;
  Eigen::Matrix4cd l4;
  Eigen::Matrix2cd e, f, g;
};

// Throws std::invalid_argument when the symplectic Gram matrix of the basis
// deviates from the canonical form by more than 1e-6.
ReducedQuadruple reduced_matrix(const OperatorMatrix& shifted_op,
                                const KatoBasis& basis);

// Full chain: contour, both projectors, transformation, transported basis,
// reduced matrix.  The overload with p00 reuses a projector computed once at
// (mu, eps) = (0, 0), e.g. across a mu sweep.
ReducedQuadruple kato_reduction(const WaveData& w, double mu, int nodes = 64,
                                int jobs = 1);
ReducedQuadruple kato_reduction(const WaveData& w, double mu,
                                const Eigen::MatrixXcd& p00, int nodes = 64,
                                int jobs = 1);

}  // namespace bfwave
