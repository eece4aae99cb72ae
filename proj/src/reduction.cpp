#include "bfwave/reduction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bfwave/depth.hpp"
#include "bfwave/errors.hpp"

namespace bfwave {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

// Real scalars of a patterned self-adjoint block [p11, i p12; -i p12, p22].
struct DiagBlock {
  double p11, p12, p22;
};

DiagBlock split_diag(const Eigen::Matrix2cd& m) {
  return {m(0, 0).real(), m(0, 1).imag(), m(1, 1).real()};
}

// Real scalars of a patterned coupling block [q11, i q12; i q21, q22].
struct CouplingBlock {
  double q11, q12, q21, q22;
};

CouplingBlock split_coupling(const Eigen::Matrix2cd& m) {
  return {m(0, 0).real(), m(0, 1).imag(), m(1, 0).imag(), m(1, 1).real()};
}

Eigen::Vector4d coupling_rhs(const CouplingBlock& f) {
  return Eigen::Vector4d(-f.q21, f.q22, -f.q11, f.q12);
}

Eigen::Matrix2cd patterned_x(const Eigen::Vector4d& x) {
  Eigen::Matrix2cd m;
  m << x[0], kI * x[1], kI * x[2], x[3];
  return m;
}

ReducedQuadruple from_b4(const ReducedQuadruple& like, const Eigen::Matrix4cd& b4) {
  ReducedQuadruple q;
  q.h = like.h;
  q.mu = like.mu;
  q.eps = like.eps;
  q.b4 = b4;
  q.l4 = j4() * b4;
  q.e = b4.topLeftCorner<2, 2>();
  q.f = b4.topRightCorner<2, 2>();
  q.g = b4.bottomRightCorner<2, 2>();
  return q;
}

Eigen::Matrix4cd generator(const Eigen::Matrix2cd& x) {
  const Eigen::Matrix2cd sigma = j2() * x;
  Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
  s.topRightCorner<2, 2>() = j2() * sigma;
  s.bottomLeftCorner<2, 2>() = j2() * sigma.adjoint();
  return s;
}
}  // namespace

Eigen::Matrix4d sylvester_matrix(const SylvesterCoefficients& co) {
  Eigen::Matrix4d m;
  m << co.a, co.b, co.c, 0.0,
       co.d, co.a, 0.0, -co.c,
       co.e, 0.0, co.a, -co.b,
       0.0, -co.e, -co.d, co.a;
  return m;
}

double sylvester_det(const SylvesterCoefficients& co) {
  const double a2 = co.a * co.a;
  const double bd = co.b * co.d;
  const double ce = co.c * co.e;
  return a2 * a2 - 2.0 * a2 * (bd + ce) + (bd - ce) * (bd - ce);
}

Eigen::Matrix4d sylvester_inverse(const SylvesterCoefficients& co) {
  const double det = sylvester_det(co);
  // the entries scale like mu, so the singularity test must be relative
  const double scale = std::max(
      {std::abs(co.a), std::abs(co.b), std::abs(co.c), std::abs(co.d),
       std::abs(co.e), std::numeric_limits<double>::min()});
  if (std::abs(det) <= 1e-6 * scale * scale * scale * scale) {
    throw RankError("near-singular block system: |det| = " + std::to_string(std::abs(det)));
  }
  const double a = co.a, b = co.b, c = co.c, d = co.d, e = co.e;
  const double a2 = a * a;
  const double bd = b * d;
  const double ce = c * e;
  Eigen::Matrix4d m;
  m << a * (a2 - bd - ce), b * (-a2 + bd - ce), -c * (a2 + bd - ce), -2.0 * a * b * c,
       d * (-a2 + bd - ce), a * (a2 - bd - ce), 2.0 * a * c * d, -c * (-a2 - bd + ce),
       -e * (a2 + bd - ce), 2.0 * a * b * e, a * (a2 - bd - ce), b * (a2 - bd + ce),
       -2.0 * a * d * e, -e * (-a2 - bd + ce), d * (a2 - bd + ce), a * (a2 - bd - ce);
  return m / det;
}

Eigen::Matrix2cd j2() {
  Eigen::Matrix2cd j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

Eigen::Matrix4cd matrix_exponential(const Eigen::Matrix4cd& s) {
  const double norm = s.norm();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.015625 && squarings < 60) {
    scale *= 0.5;
    ++squarings;
  }
  const Eigen::Matrix4cd t = scale * s;
  Eigen::Matrix4cd sum = Eigen::Matrix4cd::Identity();
  Eigen::Matrix4cd term = Eigen::Matrix4cd::Identity();
  for (int k = 1; k <= 6; ++k) {
    term = term * t / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

ReducedQuadruple analytic_quadruple(double h, double mu, double eps) {
  const auto dc = depth_coefficients(h);
  Eigen::Matrix4cd b4 = Eigen::Matrix4cd::Zero();
  b4(0, 0) = dc.e_11 * eps * eps - dc.e_22 * mu * mu / 8.0;
  b4(0, 1) = kI * 0.5 * dc.e_12 * mu;
  b4(1, 0) = -kI * 0.5 * dc.e_12 * mu;
  b4(1, 1) = -dc.e_22 * mu * mu / 8.0;
  b4(2, 2) = 1.0;
  b4(3, 3) = mu * std::tanh(h * mu);
  b4(0, 2) = dc.f_11 * eps;
  b4(0, 3) = kI * mu * eps / std::sqrt(dc.c_h);
  b4.bottomLeftCorner<2, 2>() = b4.topRightCorner<2, 2>().adjoint();
  ReducedQuadruple like;
  like.h = h;
  like.mu = mu;
  like.eps = eps;
  return from_b4(like, b4);
}

ReducedQuadruple singular_rescaling(const ReducedQuadruple& q, double mu) {
  if (!(mu > 0.0)) {
    throw std::domain_error("rescaling is singular at mu = 0; need mu > 0");
  }
  const double r = std::sqrt(mu);
  Eigen::Vector4cd y(r, 1.0 / r, r, 1.0 / r);
  const Eigen::Matrix4cd b4 = y.asDiagonal() * q.b4 * y.asDiagonal();
  return from_b4(q, b4);
}

SylvesterCoefficients homological_coefficients(const ReducedQuadruple& q) {
  const DiagBlock e = split_diag(q.e);
  const DiagBlock g = split_diag(q.g);
  return {g.p12 - e.p12, g.p11, e.p22, g.p22, e.p11};
}

Eigen::Matrix2cd solve_homological(const ReducedQuadruple& q) {
  const Eigen::Matrix4d inv = sylvester_inverse(homological_coefficients(q));
  const Eigen::Vector4d x = inv * coupling_rhs(split_coupling(q.f));
  return patterned_x(x);
}

ReducedQuadruple decouple_step(const ReducedQuadruple& q, const Eigen::Matrix2cd& x) {
  const Eigen::Matrix4cd s = generator(x);
  const Eigen::Matrix4cd m =
      matrix_exponential(s) * q.l4 * matrix_exponential(-s);
  return from_b4(q, -j4() * m);
}

DecoupledPair full_decouple(const ReducedQuadruple& q, double tol) {
  const Eigen::Matrix2cd d1 = j2() * q.e;
  const Eigen::Matrix2cd d0 = j2() * q.g;
  const Eigen::Matrix4d inv = sylvester_inverse(homological_coefficients(q));
  const std::complex<double> drift = kI * depth_coefficients(q.h).c_h * q.mu;

  Eigen::Matrix2cd x = Eigen::Matrix2cd::Zero();
  double previous = -1.0;
  for (int it = 1; it <= 50; ++it) {
    const Eigen::Matrix4cd s = generator(x);
    const Eigen::Matrix4cd m =
        matrix_exponential(s) * q.l4 * matrix_exponential(-s);
    const double residual =
        std::max(m.topRightCorner<2, 2>().cwiseAbs().maxCoeff(),
                 m.bottomLeftCorner<2, 2>().cwiseAbs().maxCoeff());
    if (residual <= tol) {
      DecoupledPair out;
      out.h = q.h;
      out.mu = q.mu;
      out.eps = q.eps;
      out.u_block = drift * Eigen::Matrix2cd::Identity() + m.topLeftCorner<2, 2>();
      out.s_block = drift * Eigen::Matrix2cd::Identity() + m.bottomRightCorner<2, 2>();
      out.off_diagonal_residual = residual;
      out.iterations = it;
      return out;
    }
    if (previous >= 0.0 && residual >= previous) {
      throw ConvergenceError("off-diagonal residual stalled at " +
                             std::to_string(residual));
    }
    previous = residual;
    // full coupling seen by the current conjugation, folded back into the
    // linear system
    const Eigen::Matrix2cd phi =
        -j2() * (m.topRightCorner<2, 2>() - (d1 * x - x * d0));
    x = patterned_x(inv * coupling_rhs(split_coupling(phi)));
  }
  throw ConvergenceError("block decoupling did not reach tolerance in 50 passes");
}

}  // namespace bfwave
