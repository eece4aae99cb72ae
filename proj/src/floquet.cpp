#include "bfwave/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "bfwave/depth.hpp"
#include "bfwave/stokes.hpp"

namespace bfwave {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

void check_parameters(double mu, int modes) {
  if (!(mu >= 0.0 && mu < 0.5)) {
    throw std::domain_error("Floquet parameter must satisfy 0 <= mu < 1/2");
  }
  if (modes < 1) throw std::invalid_argument("mode count must be positive");
}

bool spectral_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.imag() != b.imag()) return a.imag() < b.imag();
  return a.real() < b.real();
}
}  // namespace

Eigen::MatrixXcd symplectic_j(int modes) {
  const int n = 2 * modes + 1;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
  return j;
}

WaveData wave_data(double h, double eps, int modes) {
  WaveData w;
  w.h = h;
  w.eps = eps;
  w.modes = modes;
  w.c = depth_coefficients(h).c_h;
  if (eps == 0.0) {
    w.p = FourierField(modes, Parity::kEven);
    w.a = FourierField(modes, Parity::kEven);
    w.f_eps = 0.0;
    return w;
  }
  const auto cf = coefficient_functions(h, eps, modes);
  w.p = cf.p_eps;
  w.a = cf.a_eps;
  w.f_eps = cf.f_eps;
  return w;
}

OperatorMatrix assemble_L(const WaveData& w, double mu, bool shifted) {
  check_parameters(mu, w.modes);
  const int m = w.modes;
  const int n = 2 * m + 1;
  OperatorMatrix op;
  op.h = w.h;
  op.mu = mu;
  op.eps = w.eps;
  op.modes = m;
  op.shifted = shifted;
  op.mat = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  const double depth = w.h + w.f_eps;
  const double drift = shifted ? w.c * mu : 0.0;
  for (int k = -m; k <= m; ++k) {
    const int rk = k + m;
    // (eta, psi) diagonal couplings
    op.mat(rk, n + rk) = (k + mu) * std::tanh(depth * (k + mu));
    for (int l = -m; l <= m; ++l) {
      const int cl = l + m;
      const std::complex<double> p_kl = w.p.coeff(k - l);
      const std::complex<double> a_kl = w.a.coeff(k - l);
      const double c_kl = k == l ? w.c : 0.0;
      // (d_x + i mu)(c + p) on the eta block
      op.mat(rk, cl) = kI * ((k + mu) * (c_kl + p_kl) - (k == l ? drift : 0.0));
      // -(1 + a)
      op.mat(n + rk, cl) = -((k == l ? 1.0 : 0.0) + a_kl);
      // (c + p)(d_x + i mu) on the psi block
      op.mat(n + rk, n + cl) =
          kI * ((l + mu) * (c_kl + p_kl) - (k == l ? drift : 0.0));
    }
  }
  return op;
}

OperatorMatrix assemble_L(double h, double mu, double eps, int modes, bool shifted) {
  return assemble_L(wave_data(h, eps, modes), mu, shifted);
}

OperatorMatrix assemble_B(const WaveData& w, double mu, bool shifted) {
  check_parameters(mu, w.modes);
  const int m = w.modes;
  const int n = 2 * m + 1;
  OperatorMatrix op;
  op.h = w.h;
  op.mu = mu;
  op.eps = w.eps;
  op.modes = m;
  op.shifted = shifted;
  op.mat = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  const double depth = w.h + w.f_eps;
  const double drift = shifted ? w.c * mu : 0.0;
  for (int k = -m; k <= m; ++k) {
    const int rk = k + m;
    op.mat(n + rk, n + rk) = (k + mu) * std::tanh(depth * (k + mu));
    for (int l = -m; l <= m; ++l) {
      const int cl = l + m;
      const std::complex<double> p_kl = w.p.coeff(k - l);
      const std::complex<double> a_kl = w.a.coeff(k - l);
      const double c_kl = k == l ? w.c : 0.0;
      op.mat(rk, cl) = (k == l ? 1.0 : 0.0) + a_kl;
      op.mat(rk, n + cl) = -kI * ((l + mu) * (c_kl + p_kl) - (k == l ? drift : 0.0));
      op.mat(n + rk, cl) = kI * ((k + mu) * (c_kl + p_kl) - (k == l ? drift : 0.0));
    }
  }
  return op;
}

OperatorMatrix assemble_B(double h, double mu, double eps, int modes, bool shifted) {
  return assemble_B(wave_data(h, eps, modes), mu, shifted);
}

Eigen::VectorXcd full_spectrum(const OperatorMatrix& op) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(op.mat, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue iteration failed");
  }
  Eigen::VectorXcd ev = solver.eigenvalues();
  std::sort(ev.begin(), ev.end(), spectral_less);
  return ev;
}

Eigen::VectorXcd flat_spectrum(double h, double mu, int modes, bool shifted) {
  check_parameters(mu, modes);
  const double c = depth_coefficients(h).c_h;
  Eigen::VectorXcd ev(2 * (2 * modes + 1));
  int idx = 0;
  for (int j = -modes; j <= modes; ++j) {
    const double osc = std::sqrt(std::abs(j + mu) * std::tanh(h * std::abs(j + mu)));
    const double base = shifted ? c * j : c * (j + mu);
    ev[idx++] = kI * (base + osc);
    ev[idx++] = kI * (base - osc);
  }
  std::sort(ev.begin(), ev.end(), spectral_less);
  return ev;
}

}  // namespace bfwave
