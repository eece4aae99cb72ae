#include "bfwave/stokes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bfwave/depth.hpp"
#include "bfwave/errors.hpp"

namespace bfwave {

namespace {

// Symbol k (so that G0 = D tanh(h D) has the even symbol k tanh(hk)).
FourierField apply_d(const FourierField& f) {
  return f.map_symbol([](int k) -> std::complex<double> { return k; });
}

FourierField apply_tanh(const FourierField& f, double depth) {
  return f.map_symbol(
      [depth](int k) -> std::complex<double> { return std::tanh(depth * k); });
}

FourierField apply_g0(const FourierField& f, double depth) {
  return f.map_symbol([depth](int k) -> std::complex<double> {
    return std::abs(k) * std::tanh(depth * std::abs(k));
  });
}

}  // namespace

FourierField StokesExpansion::eta_field(double eps, int modes) const {
  FourierField f(modes, Parity::kEven);
  f.add_cos(1, eps);
  f.add_cos(0, eps * eps * eta2_0);
  f.add_cos(2, eps * eps * eta2_2);
  return f;
}

FourierField StokesExpansion::psi_field(double eps, int modes) const {
  FourierField f(modes, Parity::kOdd);
  f.add_sin(1, eps / c0);
  f.add_sin(2, eps * eps * psi2_2);
  return f;
}

StokesExpansion stokes_expansion(double h) {
  const auto k = depth_coefficients(h);
  const double c = k.c_h;
  const double c2 = c * c;
  const double c4 = c2 * c2;
  const double c8 = c4 * c4;
  StokesExpansion st;
  st.h = h;
  st.c0 = c;
  st.c1 = 0.0;
  st.c2 = (-2.0 * c8 * c4 + 13.0 * c8 - 12.0 * c4 + 9.0) / (16.0 * c4 * c2 * c);
  st.eta2_0 = (c4 - 1.0) / (4.0 * c2);
  st.eta2_2 = (3.0 - c4) / (4.0 * c4 * c2);
  st.psi2_2 = (3.0 + c8) / (8.0 * c4 * c2 * c);
  st.eta1 = FourierField(2, Parity::kEven);
  st.eta1.add_cos(1, 1.0);
  st.psi1 = FourierField(2, Parity::kOdd);
  st.psi1.add_sin(1, 1.0 / c);
  st.eta2 = FourierField(2, Parity::kEven);
  st.eta2.add_cos(0, st.eta2_0);
  st.eta2.add_cos(2, st.eta2_2);
  st.psi2 = FourierField(2, Parity::kOdd);
  st.psi2.add_sin(2, st.psi2_2);
  return st;
}

FourierField dirichlet_neumann(const FourierField& eta, const FourierField& psi,
                               double h, int order) {
  if (eta.modes() != psi.modes()) {
    throw std::invalid_argument("Fourier truncations differ between eta and psi");
  }
  if (order < 0 || order > 2) {
    throw std::invalid_argument("Dirichlet-Neumann expansion order must be 0, 1 or 2");
  }
  if (!(h > kMinDepth && h < kMaxDepth)) {
    throw std::domain_error("depth outside admissible range");
  }
  FourierField out = apply_g0(psi, h);
  if (order >= 1) {
    const FourierField psi_x = psi.derivative();
    out -= (eta * psi_x).derivative();
    out -= apply_g0(eta * apply_g0(psi, h), h);
  }
  if (order >= 2) {
    const FourierField u = apply_d(psi);
    const FourierField eta_sq = eta * eta;
    const FourierField a = apply_d(eta_sq * apply_tanh(u, h));
    const FourierField b = apply_tanh(eta_sq * apply_d(u), h);
    const FourierField c =
        apply_tanh(eta * apply_d(apply_tanh(eta * apply_tanh(u, h), h)), h);
    out -= 0.5 * apply_d(a + b - 2.0 * c);
  }
  return out;
}

double traveling_residual(double h, double eps, int modes) {
  const auto st = stokes_expansion(h);
  const FourierField eta = st.eta_field(eps, modes);
  const FourierField psi = st.psi_field(eps, modes);
  const double c_eps = st.speed(eps);
  const FourierField g_psi = dirichlet_neumann(eta, psi, h, 2);
  const FourierField eta_x = eta.derivative();
  const FourierField psi_x = psi.derivative();

  const int n = std::max(8 * modes, 64);
  const auto eta_v = eta.grid_values(n);
  const auto etax_v = eta_x.grid_values(n);
  const auto psix_v = psi_x.grid_values(n);
  const auto g_v = g_psi.grid_values(n);
  double acc1 = 0.0, acc2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double ex = etax_v[j].real();
    const double px = psix_v[j].real();
    const double gv = g_v[j].real();
    const double r1 = c_eps * ex + gv;
    const double r2 = c_eps * px - eta_v[j].real() - 0.5 * px * px +
                      (gv + ex * px) * (gv + ex * px) / (2.0 * (1.0 + ex * ex));
    acc1 += r1 * r1;
    acc2 += r2 * r2;
  }
  return std::sqrt(std::max(acc1, acc2) / n);
}

ConformalData conformal_fixed_point(double h, double eps, int modes, double tol) {
  const auto st = stokes_expansion(h);
  const FourierField eta = st.eta_field(eps, modes);
  ConformalData out;
  out.h = h;
  out.eps = eps;
  out.p_frak = FourierField(modes, Parity::kOdd);
  out.f_eps = 0.0;
  constexpr int kMaxIter = 200;
  for (int it = 1; it <= kMaxIter; ++it) {
    const FourierField g = compose(eta, out.p_frak);
    const double f_new = g.coeff(0).real();
    const double depth = h + f_new;
    FourierField p_new = g.map_symbol([depth](int k) -> std::complex<double> {
      if (k == 0) return 0.0;
      const double sign = k > 0 ? 1.0 : -1.0;
      return std::complex<double>(0.0, -sign) / std::tanh(depth * std::abs(k));
    });
    p_new.set_tag(Parity::kOdd);
    const double delta = (p_new - out.p_frak).l2_norm() + std::abs(f_new - out.f_eps);
    out.p_frak = p_new;
    out.f_eps = f_new;
    out.iterations = it;
    out.residual = delta;
    if (delta <= tol) return out;
  }
  throw ConvergenceError("conformal fixed point did not converge in 200 iterations");
}

CoefficientFunctions coefficient_functions(double h, double eps, int modes) {
  const auto st = stokes_expansion(h);
  const auto kd = depth_coefficients(h);
  const double c = kd.c_h;
  const double c2 = c * c;
  const double c4 = c2 * c2;
  const double c8 = c4 * c4;
  const FourierField eta = st.eta_field(eps, modes);
  const FourierField psi = st.psi_field(eps, modes);
  const double c_eps = st.speed(eps);
  const FourierField eta_x = eta.derivative();
  const FourierField psi_x = psi.derivative();

  // Horizontal velocity at the surface and its conformal transplant:
  //   B = (psi_x - c_eps) eta_x / (1 + eta_x^2),  V = -B eta_x + psi_x.
  const int n = std::max(8 * modes, 64);
  const auto etax_v = eta_x.grid_values(n);
  const auto psix_v = psi_x.grid_values(n);
  Eigen::VectorXcd b_v(n), v_v(n);
  for (int j = 0; j < n; ++j) {
    const double ex = etax_v[j].real();
    const double px = psix_v[j].real();
    const double b = (px - c_eps) * ex / (1.0 + ex * ex);
    b_v[j] = b;
    v_v[j] = -b * ex + px;
  }
  const FourierField b_field = FourierField::from_grid(b_v, modes, Parity::kOdd);
  const FourierField v_field = FourierField::from_grid(v_v, modes, Parity::kEven);
  const FourierField bx_field = b_field.derivative();

  const auto conf = conformal_fixed_point(h, eps, modes, 1e-13);
  const FourierField px_field = conf.p_frak.derivative();

  const int m = std::max(4 * modes, 16);
  Eigen::VectorXcd p_v(m), a_v(m);
  const double step = 2.0 * std::numbers::pi / m;
  for (int j = 0; j < m; ++j) {
    const double x = j * step;
    const double shift = conf.p_frak.eval(x).real();
    const double px = px_field.eval(x).real();
    const double vc = v_field.eval(x + shift).real();
    const double bxc = bx_field.eval(x + shift).real();
    p_v[j] = (c_eps - vc) / (1.0 + px) - c;
    a_v[j] = (1.0 + (vc - c_eps) * bxc) / (1.0 + px) - 1.0;
  }

  CoefficientFunctions out;
  out.h = h;
  out.eps = eps;
  out.p_eps = FourierField::from_grid(p_v, modes, Parity::kEven);
  out.a_eps = FourierField::from_grid(a_v, modes, Parity::kEven);
  out.f_eps = conf.f_eps;
  out.p1_1 = -2.0 / c;
  out.p2_0 = (9.0 + 12.0 * c4 + 5.0 * c8 - 2.0 * c8 * c4) / (16.0 * c4 * c2 * c);
  out.p2_2 = -(3.0 + c4) / (2.0 * c4 * c2 * c);
  out.a1_1 = -(c2 + 1.0 / c2);
  out.a2_0 = 1.5 + 1.0 / (2.0 * c4);
  out.a2_2 = (-14.0 * c4 + 9.0 * c8 - 3.0) / (4.0 * c8);
  return out;
}

}  // namespace bfwave
