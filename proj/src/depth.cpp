#include "bfwave/depth.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bfwave/errors.hpp"

namespace bfwave {

DepthCoefficients depth_coefficients(double h) {
  if (!(h > kMinDepth && h < kMaxDepth)) {
    throw std::domain_error("depth h = " + std::to_string(h) +
                            " outside admissible range (0.05, 50)");
  }
  DepthCoefficients k;
  k.h = h;
  const double c = std::sqrt(std::tanh(h));
  const double c2 = c * c;
  const double c4 = c2 * c2;
  const double c8 = c4 * c4;
  // 1 - c^4 = sech^2 h, computed without cancellation for large h.
  const double s2 = 1.0 / (std::cosh(h) * std::cosh(h));
  k.c_h = c;
  k.gamma_h = 1.0 + h * s2 / c2;
  k.alpha_h = 0.5 * (3.0 + c4) / std::pow(c, 5.5);
  k.beta_h = 0.25 * (1.0 + c4) * (3.0 - c4) / std::pow(c, 6.5);
  k.delta_h = (3.0 + c4) / (4.0 * c2 * std::sqrt(c));
  k.zeta_h = 0.125 * c * k.gamma_h * k.gamma_h;
  k.b_bold_h = k.gamma_h * c + h * s2 * (k.gamma_h - 2.0 * (1.0 - c2 * h)) / c;
  k.e_11 = (9.0 * c8 - 10.0 * c4 + 9.0) / (8.0 * c4 * c2 * c);
  k.e_12 = c + h * s2 / c;
  k.e_22 = (s2 * (1.0 + 3.0 * c4) * h * h - 2.0 * c2 * s2 * h + c4) / (c2 * c);
  k.f_11 = 0.5 * s2 / (c * std::sqrt(c));
  k.d_h = h - 0.25 * k.e_12 * k.e_12;
  k.breve_c_h = 2.0 * c - k.e_12;
  k.e_wb = (1.0 / c) *
           ((9.0 * c8 - 10.0 * c4 + 9.0) / (8.0 * c4 * c2) -
            (1.0 / k.d_h) * (1.0 + 0.5 * s2 + 0.75 * s2 * s2 / c2 * h));
  k.tilde_e11 =
      -(1.0 / k.d_h) * (1.0 / c + h * k.f_11 * k.f_11 + k.e_12 * k.f_11 / std::sqrt(c));
  if (k.e_wb > 0.0) {
    k.e_h = std::sqrt(8.0 * k.e_wb / k.e_22);
  }
  return k;
}

double critical_depth(double lo, double hi, double tol) {
  double flo = depth_coefficients(lo).e_wb;
  double fhi = depth_coefficients(hi).e_wb;
  if (!(flo * fhi < 0.0)) {
    throw BracketError("e_wb does not change sign on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    // Secant candidate, clamped away from the endpoints; fall back to the
    // midpoint whenever it does not shrink the bracket robustly.
    double mid = lo + (hi - lo) * (flo / (flo - fhi));
    const double margin = 0.1 * (hi - lo);
    if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
    const double fm = depth_coefficients(mid).e_wb;
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bfwave
