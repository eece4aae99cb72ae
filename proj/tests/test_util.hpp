#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <complex>
#include <vector>

// Shared helpers for structural checks on the truncated operators.

namespace testutil {

using Cd = std::complex<double>;

// diag(+1 on the eta block, -1 on the psi block); together with entrywise
// conjugation this represents the reversal involution.
inline Eigen::MatrixXcd sign_matrix(int modes) {
  const int n = 2 * modes + 1;
  Eigen::VectorXcd d(2 * n);
  d.head(n).setConstant(1.0);
  d.tail(n).setConstant(-1.0);
  return d.asDiagonal();
}

// Conjugation representing complex conjugation of the underlying functions:
// entry (k,l) maps to conj(entry(-k,-l)) within each component block.
inline Eigen::MatrixXcd function_conj(const Eigen::MatrixXcd& mat, int modes) {
  const int n = 2 * modes + 1;
  Eigen::MatrixXcd out(2 * n, 2 * n);
  for (int br = 0; br < 2; ++br) {
    for (int bc = 0; bc < 2; ++bc) {
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          out(br * n + r, bc * n + c) =
              std::conj(mat(br * n + (n - 1 - r), bc * n + (n - 1 - c)));
        }
      }
    }
  }
  return out;
}

inline bool spectral_less(Cd a, Cd b) {
  return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real();
}

// The `count` smallest-modulus entries, returned in (imag, real) order.
inline Eigen::VectorXcd smallest_by_modulus(const Eigen::VectorXcd& ev, int count) {
  std::vector<Cd> v(ev.begin(), ev.end());
  std::sort(v.begin(), v.end(),
            [](Cd a, Cd b) { return std::abs(a) < std::abs(b); });
  v.resize(count);
  std::sort(v.begin(), v.end(), spectral_less);
  Eigen::VectorXcd out(count);
  for (int i = 0; i < count; ++i) out[i] = v[i];
  return out;
}

// Best max-distance over all pairings of two quadruples.
inline double quadruple_distance(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
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

}  // namespace testutil
