#include "bfwave/kato.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bfwave/depth.hpp"
#include "bfwave/errors.hpp"

namespace bfwave {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

// (x, y) with the normalized scalar product, so that (f0+, f0+) = 1.
std::complex<double> inner(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  return y.dot(x);
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()[0];
}

Eigen::MatrixXcd quadrature_pass(const Eigen::MatrixXcd& lmat, double radius,
                                 int nodes, int jobs) {
  const int n = static_cast<int>(lmat.rows());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
  const double step = 2.0 * std::numbers::pi / nodes;
  if (jobs <= 1) {
    for (int m = 0; m < nodes; ++m) {
      const std::complex<double> phase = std::exp(kI * (m * step));
      const std::complex<double> lambda = radius * phase;
      acc += phase * (lmat - lambda * id).partialPivLu().solve(id);
    }
  } else {
#pragma omp parallel num_threads(jobs)
    {
      Eigen::MatrixXcd local = Eigen::MatrixXcd::Zero(n, n);
#pragma omp for nowait
      for (int m = 0; m < nodes; ++m) {
        const std::complex<double> phase = std::exp(kI * (m * step));
        const std::complex<double> lambda = radius * phase;
        local += phase * (lmat - lambda * id).partialPivLu().solve(id);
      }
#pragma omp critical
      acc += local;
    }
  }
  return (-radius / nodes) * acc;
}
}  // namespace

Contour default_contour(double h, double mu, int modes, int nodes) {
  if (nodes < 32) throw std::invalid_argument("contour needs at least 32 nodes");
  const auto flat = flat_spectrum(h, mu, modes, true);
  std::vector<double> mods(flat.size());
  for (int i = 0; i < flat.size(); ++i) mods[i] = std::abs(flat[i]);
  std::sort(mods.begin(), mods.end());
  Contour c;
  c.radius = std::min(0.4 * mods[4], 0.2);
  c.nodes = nodes;
  return c;
}

Eigen::MatrixXcd spectral_projector(const OperatorMatrix& shifted_op,
                                    const Contour& contour, int jobs) {
  if (!shifted_op.shifted) {
    throw std::invalid_argument("projector expects the drift-shifted operator");
  }
  if (contour.nodes < 32) {
    throw std::invalid_argument("contour needs at least 32 nodes");
  }
  Eigen::MatrixXcd p =
      quadrature_pass(shifted_op.mat, contour.radius, contour.nodes, jobs);
  if (!p.allFinite() || (p * p - p).norm() > 1e-6) {
    // A node can sit nearly on an eigenvalue; nudge the radius once.
    p = quadrature_pass(shifted_op.mat, contour.radius * 1.0131, contour.nodes, jobs);
    if (!p.allFinite() || (p * p - p).norm() > 1e-6) {
      throw ConvergenceError("resolvent quadrature failed on both contour radii");
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) rank += sv[i] > 0.5 ? 1 : 0;
  if (rank != 4) {
    throw RankError("projector rank " + std::to_string(rank) +
                    ", expected 4; contour does not separate the zero cluster");
  }
  return p;
}

TransformationPair transformation_operator(const Eigen::MatrixXcd& p,
                                           const Eigen::MatrixXcd& p00) {
  const int n = static_cast<int>(p.rows());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd diff = p - p00;
  const double dist = spectral_norm(diff);
  if (!(dist < 1.0)) {
    throw ConvergenceError("projector distance " + std::to_string(dist) +
                           " >= 1; outside the perturbative regime");
  }
  const Eigen::MatrixXcd r = diff * diff;
  Eigen::MatrixXcd series = id;
  Eigen::MatrixXcd term = id;
  for (int k = 1; k <= 200; ++k) {
    term = term * r * ((2.0 * k - 1.0) / (2.0 * k));
    series += term;
    if (term.norm() < 1e-14) break;
    if (k == 200) throw ConvergenceError("binomial series did not converge");
  }
  TransformationPair tp;
  tp.u = series * (p * p00 + (id - p) * (id - p00));
  tp.u_inv = (p00 * p + (id - p00) * (id - p)) * series;
  return tp;
}

KatoBasis unperturbed_basis(double h, int modes) {
  const double c = depth_coefficients(h).c_h;
  const double sc = std::sqrt(c);
  const int n = 2 * modes + 1;
  KatoBasis b;
  b.h = h;
  b.modes = modes;
  for (auto& v : b.f) v = Eigen::VectorXcd::Zero(2 * n);
  const int k0 = modes;  // index of mode 0 within a component block
  // f1+ = (sqrt(c) cos x, sin x / sqrt(c))
  b.f[0][k0 + 1] = 0.5 * sc;
  b.f[0][k0 - 1] = 0.5 * sc;
  b.f[0][n + k0 + 1] = -0.5 * kI / sc;
  b.f[0][n + k0 - 1] = 0.5 * kI / sc;
  // f1- = (-sqrt(c) sin x, cos x / sqrt(c))
  b.f[1][k0 + 1] = 0.5 * kI * sc;
  b.f[1][k0 - 1] = -0.5 * kI * sc;
  b.f[1][n + k0 + 1] = 0.5 / sc;
  b.f[1][n + k0 - 1] = 0.5 / sc;
  // f0+ = (1, 0), f0- = (0, 1)
  b.f[2][k0] = 1.0;
  b.f[3][n + k0] = 1.0;
  return b;
}

KatoBasis transported_basis(const TransformationPair& tp, const KatoBasis& base,
                            double mu, double eps) {
  KatoBasis b = base;
  b.mu = mu;
  b.eps = eps;
  b.transported = true;
  for (auto& v : b.f) v = tp.u * v;
  return b;
}

Eigen::Matrix4cd j4() {
  Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
  j(0, 1) = 1.0;
  j(1, 0) = -1.0;
  j(2, 3) = 1.0;
  j(3, 2) = -1.0;
  return j;
}

ReducedQuadruple reduced_matrix(const OperatorMatrix& shifted_op,
                                const KatoBasis& basis) {
  if (!shifted_op.shifted) {
    throw std::invalid_argument("reduction expects the drift-shifted operator");
  }
  const auto j = symplectic_j(shifted_op.modes);
  Eigen::Matrix4cd gram;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      gram(i, k) = inner(j * basis.f[k], basis.f[i]);
    }
  }
  if ((gram - j4()).cwiseAbs().maxCoeff() > 1e-6) {
    throw std::invalid_argument("degenerate symplectic basis: Gram deviation " +
                                std::to_string((gram - j4()).cwiseAbs().maxCoeff()));
  }
  const Eigen::MatrixXcd bmat = -j * shifted_op.mat;
  ReducedQuadruple q;
  q.h = shifted_op.h;
  q.mu = shifted_op.mu;
  q.eps = shifted_op.eps;
  for (int k = 0; k < 4; ++k) {
    const Eigen::VectorXcd bf = bmat * basis.f[k];
    for (int i = 0; i < 4; ++i) q.b4(i, k) = inner(bf, basis.f[i]);
  }
  q.l4 = j4() * q.b4;
  q.e = q.b4.topLeftCorner<2, 2>();
  q.f = q.b4.topRightCorner<2, 2>();
  q.g = q.b4.bottomRightCorner<2, 2>();
  return q;
}

ReducedQuadruple kato_reduction(const WaveData& w, double mu, int nodes, int jobs) {
  const auto p00 = spectral_projector(
      assemble_L(wave_data(w.h, 0.0, w.modes), 0.0, true),
      default_contour(w.h, 0.0, w.modes, nodes), jobs);
  return kato_reduction(w, mu, p00, nodes, jobs);
}

ReducedQuadruple kato_reduction(const WaveData& w, double mu,
                                const Eigen::MatrixXcd& p00, int nodes, int jobs) {
  const auto contour = default_contour(w.h, mu, w.modes, nodes);
  const auto lsh = assemble_L(w, mu, true);
  const auto p = spectral_projector(lsh, contour, jobs);
  const auto tp = transformation_operator(p, p00);
  const auto basis = transported_basis(tp, unperturbed_basis(w.h, w.modes), mu, w.eps);
  return reduced_matrix(lsh, basis);
}

}  // namespace bfwave
