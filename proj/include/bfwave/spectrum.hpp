#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace bfwave {

// Closed-form predictions for the four eigenvalues nearest zero.  The
// correction functions multiplying them are dropped and leading_order records
// that.  The flat state is the exception: its dispersion relation is exact,
// so at eps = 0 nothing is dropped and the flag is cleared.
struct BenjaminFeirPrediction {
  double h = 0, mu = 0, eps = 0;
  double delta_bf_leading = 0;           // 8 e_wb eps^2 - e_22 mu^2
  std::optional<double> mu_bar_leading;  // e_h * eps, unstable side only
  std::complex<double> lambda1_plus, lambda1_minus;  // colliding pair
  std::complex<double> lambda0_plus, lambda0_minus;  // always imaginary
  bool unstable = false;
  bool leading_order = true;
};

// Benjamin-Feir discriminant, leading part.  Positive exactly when the pair
// lambda1 picks up a real part.
double delta_bf(double h, double mu, double eps);

// Requires 0 <= mu <= 0.2 and 0 <= eps <= 0.05 (std::domain_error outside);
// the closed forms degrade quickly beyond that corner.
BenjaminFeirPrediction predict_eigenvalues(double h, double mu, double eps);

// One sampled point of the instability locus; the two branches carry
// opposite real parts at the same height.
struct Figure8Point {
  double mu = 0;
  double re_plus = 0, im_plus = 0;
  double re_minus = 0, im_minus = 0;
};

// Samples the locus of the lambda1 pair over mu in [0, mu_bar] and appends
// the conjugate mirror rows (mu < 0) closing the "8".  Throws RegimeError
// when e_wb(h) <= 0 and std::invalid_argument when samples < 2.
std::vector<Figure8Point> figure8(double h, double eps, int samples);

// One predicted eigenvalue next to the computed eigenvalue assigned to it.
struct MatchedPair {
  std::complex<double> predicted, computed;
  double absolute = 0;
  double relative = 0;  // absolute over the larger of the two moduli
};

// Direct spectrum together with the near-zero quadruple and per-eigenvalue
// discrepancies.  quadruple and matches follow the prediction order
// (lambda1+, lambda1-, lambda0+, lambda0-).
struct SpectrumReport {
  std::vector<std::complex<double>> spectrum;
  std::array<std::complex<double>, 4> quadruple;
  BenjaminFeirPrediction prediction;
  std::array<MatchedPair, 4> matches;
  double cluster_gap = 0;  // modulus ratio of 5th to 4th at the cut
};

// Selects the four eigenvalues nearest zero and pairs them with the
// prediction by minimal total distance over all assignments.  Throws
// ClusterError when the 4th and 5th moduli sit within a factor 2 of each
// other: the near-zero cluster is then not cleanly separated (truncation
// too small or mu too large).
SpectrumReport match_spectrum(const std::vector<std::complex<double>>& full,
                              const BenjaminFeirPrediction& prediction);
SpectrumReport match_spectrum(const Eigen::VectorXcd& full,
                              const BenjaminFeirPrediction& prediction);

enum class BandMethod { kAnalytic, kNumeric };

// Edge of the unstable Floquet band.  Analytic returns e_h * eps; numeric
// bisects, to absolute tolerance tol in mu, on the indicator "some member of
// the near-zero quadruple of the direct solve has |Re| > 1e-9".  Throws
// RegimeError when e_wb(h) <= 0 and BracketError when no edge is bracketed
// near the predicted width.
double unstable_band(double h, double eps, BandMethod method, int modes = 32,
                     double tol = 1e-4);

// Grid maximum of the growth rate over the band, from the direct solve.
struct GrowthScan {
  double mu_peak = 0;
  double re_peak = 0;
};

// Scans samples points over mu in (0, 1.25 e_h eps], independent per point;
// jobs > 1 distributes the grid without changing the result.
GrowthScan max_growth(double h, double eps, int modes, int samples = 48,
                      int jobs = 1);

}  // namespace bfwave
