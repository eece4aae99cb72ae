#include "bfwave/acceptance.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bfwave/depth.hpp"
#include "bfwave/floquet.hpp"
#include "bfwave/io.hpp"
#include "bfwave/kato.hpp"
#include "bfwave/reduction.hpp"
#include "bfwave/spectrum.hpp"
#include "bfwave/stokes.hpp"

namespace bfwave {
namespace {

using Cd = std::complex<double>;

struct Result {
  bool ok = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// deterministic uniform samples in [-2, 2]
double sample(std::mt19937& gen) {
  return 4.0 * (static_cast<double>(gen()) / 4294967296.0) - 2.0;
}

double pattern_leakage(const Eigen::Matrix4cd& b4) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const double off = (i + k) % 2 == 0 ? std::abs(b4(i, k).imag())
                                          : std::abs(b4(i, k).real());
      worst = std::max(worst, off);
    }
  }
  return worst;
}

Eigen::Vector4cd smallest_four(const Eigen::VectorXcd& ev) {
  std::vector<Cd> v(ev.begin(), ev.end());
  std::sort(v.begin(), v.end(),
            [](Cd a, Cd b) { return std::abs(a) < std::abs(b); });
  Eigen::Vector4cd out;
  for (int i = 0; i < 4; ++i) out[i] = v[i];
  return out;
}

// best max-distance over all pairings of two quadruples
double quadruple_distance(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
  std::array<int, 4> perm{0, 1, 2, 3};
  double best = 1e300;
  do {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Eigen::Vector4cd matrix_eigs(const Eigen::Matrix4cd& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m, false);
  return es.eigenvalues();
}

Eigen::Vector2cd matrix_eigs2(const Eigen::Matrix2cd& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(m, false);
  return es.eigenvalues();
}

Result critical_depth_criterion() {
  const double hwb = critical_depth();
  const double dev = std::abs(hwb - 1.363);
  return {dev <= 1e-3,
          "h_wb=" + format_value(hwb) + ", |h_wb-1.363|=" + num(dev) +
              " (tol 1e-3)"};
}

Result coefficient_identity_criterion() {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double h = 0.1 + (30.0 - 0.1) * i / 199.0;
    const DepthCoefficients dc = depth_coefficients(h);
    const double dev = std::abs(dc.e_wb - (dc.e_11 + dc.tilde_e11)) /
                       std::max(1.0, std::abs(dc.e_wb));
    worst = std::max(worst, dev);
  }
  return {worst <= 1e-12, "max scaled |e_wb-(e_11+tilde_e11)|=" + num(worst) +
                              " over 200 depths in [0.1,30] (tol 1e-12)"};
}

Result flat_spectrum_criterion() {
  double worst = 0.0;
  for (double h : {0.5, 1.0, 2.0}) {
    for (double mu : {0.1, 0.3}) {
      const Eigen::VectorXcd direct = full_spectrum(assemble_L(h, mu, 0.0, 32));
      const Eigen::VectorXcd flat = flat_spectrum(h, mu, 32);
      worst = std::max(worst, (direct - flat).cwiseAbs().maxCoeff());
    }
  }
  return {worst <= 1e-10,
          "max eigenvalue deviation " + num(worst) +
              " over h in {0.5,1,2}, mu in {0.1,0.3} (tol 1e-10)"};
}

Result sylvester_criterion() {
  std::mt19937 det_gen(12345);
  double worst_det = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const SylvesterCoefficients co{sample(det_gen), sample(det_gen),
                                   sample(det_gen), sample(det_gen),
                                   sample(det_gen)};
    const double dense = sylvester_matrix(co).determinant();
    const double dev =
        std::abs(sylvester_det(co) - dense) / std::max(1.0, std::abs(dense));
    worst_det = std::max(worst_det, dev);
  }
  std::mt19937 inv_gen(98765);
  double worst_inv = 0.0;
  int accepted = 0;
  while (accepted < 100) {
    const SylvesterCoefficients co{sample(inv_gen), sample(inv_gen),
                                   sample(inv_gen), sample(inv_gen),
                                   sample(inv_gen)};
    if (std::abs(sylvester_det(co)) < 1e-3) continue;
    ++accepted;
    const Eigen::Matrix4d a = sylvester_matrix(co);
    worst_inv = std::max(
        worst_inv,
        (sylvester_inverse(co) - a.inverse()).cwiseAbs().maxCoeff());
  }
  return {worst_det <= 1e-12 && worst_inv <= 1e-10,
          "det deviation " + num(worst_det) + " (tol 1e-12), inverse deviation " +
              num(worst_inv) + " (tol 1e-10), 100 samples each"};
}

Result residual_order_criterion() {
  const double res = traveling_residual(1.5, 0.02, 32);
  const double half = traveling_residual(1.5, 0.01, 32);
  const double ratio = res / half;
  return {ratio >= 6.5 && ratio <= 9.5,
          "residual(0.02)/residual(0.01)=" + num(ratio) +
              " (window [6.5,9.5])"};
}

Result harmonic_oracle_criterion() {
  const double eps = 0.005;
  double worst = 0.0;
  for (double h : {1.0, 2.0}) {
    const CoefficientFunctions cf = coefficient_functions(h, eps, 32);
    const double c = depth_coefficients(h).c_h;
    const double p_ref = -2.0 / c * eps;
    const double a_ref = -(c * c + 1.0 / (c * c)) * eps;
    worst = std::max(worst,
                     std::abs(cf.p_eps.cos_amp(1) - p_ref) / std::abs(p_ref));
    worst = std::max(worst,
                     std::abs(cf.a_eps.cos_amp(1) - a_ref) / std::abs(a_ref));
  }
  return {worst <= 2.0 * eps, "max relative deviation " + num(worst) +
                                  " at eps=0.005, h in {1,2} (tol " +
                                  num(2.0 * eps) + ")"};
}

Result reduced_structure_criterion() {
  double worst_sym = 0.0, worst_pattern = 0.0, worst_eig = 0.0;
  for (double h : {1.0, 2.0}) {
    const double c = depth_coefficients(h).c_h;
    for (double eps : {0.005, 0.01}) {
      const WaveData w = wave_data(h, eps, 32);
      for (double mu : {0.005, 0.02}) {
        const ReducedQuadruple q = kato_reduction(w, mu);
        worst_sym = std::max(worst_sym, (q.b4 - q.b4.adjoint()).norm());
        worst_pattern = std::max(worst_pattern, pattern_leakage(q.b4));
        const Eigen::Vector4cd reduced =
            matrix_eigs(q.l4).array() + Cd(0.0, c * mu);
        const Eigen::Vector4cd direct =
            smallest_four(full_spectrum(assemble_L(w, mu, false)));
        worst_eig = std::max(worst_eig, quadruple_distance(reduced, direct));
      }
    }
  }
  return {worst_sym <= 1e-8 && worst_pattern <= 1e-8 && worst_eig <= 1e-7,
          "self-adjointness " + num(worst_sym) + ", pattern leakage " +
              num(worst_pattern) + " (tol 1e-8), eigenvalue deviation " +
              num(worst_eig) + " (tol 1e-7), 8 parameter triples"};
}

Result entry_scaling_criterion() {
  const double epss[3] = {0.02, 0.01, 0.005};
  bool ok = true;
  std::string detail;
  for (double h : {1.0, 2.0}) {
    const DepthCoefficients dc = depth_coefficients(h);
    double d11[3], d12[3], df[3];
    for (int i = 0; i < 3; ++i) {
      const double eps = epss[i], mu = eps;
      const ReducedQuadruple q = kato_reduction(wave_data(h, eps, 32), mu);
      d11[i] = std::abs(q.e(0, 0).real() -
                        (dc.e_11 - dc.e_22 / 8.0) * eps * eps) /
               (eps * eps * eps);
      d12[i] = std::abs(q.e(0, 1).imag() - 0.5 * dc.e_12 * mu) / (eps * eps);
      df[i] = std::abs(q.f(0, 0).real() - dc.f_11 * eps) / (eps * eps * eps);
    }
    for (const double* d : {d11, d12, df}) {
      for (int i = 0; i + 1 < 3; ++i) {
        const double ratio = d[i] / d[i + 1];
        ok = ok && ratio >= 0.3 && ratio <= 3.0;
      }
    }
    if (!detail.empty()) detail += "; ";
    detail += "h=" + num(h) + ": scaled defects E11 " + num(d11[2]) +
              ", ImE12 " + num(d12[2]) + ", F11 " + num(df[2]);
  }
  return {ok, detail + " (successive ratios in [0.3,3])"};
}

Result dichotomy_criterion() {
  const double eps = 0.01;
  const double mu_bar = unstable_band(2.0, eps, BandMethod::kAnalytic);
  const WaveData w2 = wave_data(2.0, eps, 32);
  const auto growth_count = [&](double mu) {
    const SpectrumReport rep = match_spectrum(
        full_spectrum(assemble_L(w2, mu, false)), predict_eigenvalues(2.0, mu, eps));
    int n = 0;
    for (const Cd& q : rep.quadruple) {
      if (std::abs(q.real()) > 1e-8) ++n;
    }
    return n;
  };
  const int inside = growth_count(0.5 * mu_bar);
  const int outside = growth_count(2.0 * mu_bar);
  const WaveData w1 = wave_data(1.0, eps, 32);
  double worst_re = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double mu = 0.05 * i / 20.0;
    const Eigen::VectorXcd spec = full_spectrum(assemble_L(w1, mu, false));
    worst_re = std::max(worst_re, spec.real().cwiseAbs().maxCoeff());
  }
  return {inside == 2 && outside == 0 && worst_re <= 1e-8,
          "growing modes inside/outside the band " + std::to_string(inside) +
              "/" + std::to_string(outside) +
              " (want 2/0), max |Re| at h=1 over 20 points " + num(worst_re) +
              " (tol 1e-8)"};
}

Result peak_growth_criterion() {
  const double e_wb = depth_coefficients(2.0).e_wb;
  const auto gap = [&](double eps) {
    const GrowthScan scan = max_growth(2.0, eps, 32, 48);
    const double reference = 0.5 * e_wb * eps * eps;
    return std::abs(scan.re_peak - reference) / reference;
  };
  const double coarse = gap(0.01);
  const double fine = gap(0.005);
  return {coarse <= 0.15 && fine < coarse,
          "relative gap to the closed-form maximum " + num(coarse) +
              " at eps=0.01 (tol 0.15), " + num(fine) + " at eps=0.005"};
}

Result decoupling_criterion() {
  bool ok = true;
  double worst_offdiag = 0.0, worst_spec = 0.0;
  std::string signs;
  for (double h : {1.0, 2.0}) {
    const DepthCoefficients dc = depth_coefficients(h);
    for (double eps : {0.01, 0.005}) {
      const double mu = eps;
      const ReducedQuadruple q = kato_reduction(wave_data(h, eps, 32), mu);
      const ReducedQuadruple q1 = singular_rescaling(q, mu);
      const ReducedQuadruple q2 = decouple_step(q1, solve_homological(q1));
      // isolate the effective coefficient from the explicit third-order term
      const double val = q2.e(0, 0).real() / (eps * eps * eps) + dc.e_22 / 8.0;
      ok = ok && std::abs(val - dc.e_wb) <= 10.0 * eps * std::abs(dc.e_wb);
      ok = ok && (val < 0.0) == (h < 1.363);

      const DecoupledPair pair = full_decouple(q2, 1e-12);
      worst_offdiag = std::max(worst_offdiag, pair.off_diagonal_residual);
      Eigen::Vector4cd from_blocks;
      from_blocks.head<2>() = matrix_eigs2(pair.u_block);
      from_blocks.tail<2>() = matrix_eigs2(pair.s_block);
      const Eigen::Vector4cd reference =
          matrix_eigs(q2.l4).array() + Cd(0.0, dc.c_h * mu);
      worst_spec =
          std::max(worst_spec, quadruple_distance(from_blocks, reference));
      if (eps == 0.005) {
        if (!signs.empty()) signs += ", ";
        signs += "h=" + num(h) + " coefficient " + num(val);
      }
    }
  }
  ok = ok && worst_offdiag <= 1e-12 && worst_spec <= 1e-10;
  return {ok, signs + "; off-diagonal residual " + num(worst_offdiag) +
                  " (tol 1e-12), spectrum deviation " + num(worst_spec) +
                  " (tol 1e-10)"};
}

Result symmetry_criterion() {
  const auto closure = [](const Eigen::VectorXcd& spec) {
    double worst = 0.0;
    for (int i = 0; i < spec.size(); ++i) {
      const Cd target = -std::conj(spec[i]);
      double best = 1e300;
      for (int k = 0; k < spec.size(); ++k) {
        best = std::min(best, std::abs(spec[k] - target));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  double worst_closure = 0.0;
  const struct {
    double h, mu, eps;
  } cases[] = {{0.5, 0.1, 0.0},
               {2.0, 0.3, 0.0},
               {2.0, 0.005, 0.01},
               {2.0, 0.02, 0.01},
               {1.0, 0.02, 0.01}};
  for (const auto& c : cases) {
    worst_closure = std::max(
        closure(full_spectrum(assemble_L(c.h, c.mu, c.eps, 32))), worst_closure);
  }

  const int modes = 32;
  const OperatorMatrix lsh = assemble_L(wave_data(2.0, 0.01, modes), 0.05, true);
  const Eigen::MatrixXcd p =
      spectral_projector(lsh, default_contour(2.0, 0.05, modes));
  const double idem = (p * p - p).norm();

  const Eigen::MatrixXcd p00 =
      spectral_projector(assemble_L(wave_data(2.0, 0.0, modes), 0.0, true),
                         default_contour(2.0, 0.0, modes));
  const TransformationPair tp = transformation_operator(p, p00);
  const Eigen::MatrixXcd j = symplectic_j(modes);
  const double symp = (tp.u.adjoint() * j * tp.u - j).norm();

  return {worst_closure <= 1e-9 && idem <= 1e-8 && symp <= 1e-8,
          "spectrum closure under -conj " + num(worst_closure) +
              " (tol 1e-9), projector idempotency " + num(idem) +
              ", symplectic defect " + num(symp) + " (tol 1e-8)"};
}

}  // namespace

int run_acceptance(std::ostream& out) {
  const struct {
    const char* label;
    Result (*fn)();
  } criteria[] = {
      {"critical depth root lies within 1e-3 of 1.363",
       critical_depth_criterion},
      {"closed-form identity e_wb = e_11 + tilde_e11 across depths",
       coefficient_identity_criterion},
      {"flat-state spectrum reproduces the dispersion relation",
       flat_spectrum_criterion},
      {"structured determinant and inverse match dense oracles",
       sylvester_criterion},
      {"traveling-wave residual scales at third order",
       residual_order_criterion},
      {"first-harmonic coefficients match their closed forms",
       harmonic_oracle_criterion},
      {"reduced 4x4 matrix is self-adjoint, patterned, spectrum-faithful",
       reduced_structure_criterion},
      {"reduced entries approach their leading coefficients",
       entry_scaling_criterion},
      {"instability dichotomy across the band edge and across depth",
       dichotomy_criterion},
      {"peak growth rate matches the closed-form maximum",
       peak_growth_criterion},
      {"decoupling recovers the effective coefficient and keeps spectra",
       decoupling_criterion},
      {"Hamiltonian closure, projector idempotency, symplectic transformation",
       symmetry_criterion},
  };

  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Result r;
    try {
      r = c.fn();
    } catch (const std::exception& ex) {
      r = {false, std::string("exception: ") + ex.what()};
    }
    if (!r.ok) ++failures;
    char head[8];
    std::snprintf(head, sizeof(head), "%2d", index);
    out << head << "  " << (r.ok ? "PASS" : "FAIL") << "  " << c.label << "\n";
    if (!r.detail.empty()) out << "          " << r.detail << "\n";
  }
  out << (failures == 0
              ? std::string("all 12 criteria passed")
              : std::to_string(failures) + " of 12 criteria failed")
      << "\n";
  return failures;
}

}  // namespace bfwave
