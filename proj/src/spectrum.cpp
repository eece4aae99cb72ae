#include "bfwave/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bfwave/depth.hpp"
#include "bfwave/errors.hpp"
#include "bfwave/floquet.hpp"

namespace bfwave {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// Indices of the spectrum sorted by modulus, ties broken by (imag, real) so
// the selection is deterministic.
std::vector<int> modulus_order(const std::vector<std::complex<double>>& ev) {
  std::vector<int> idx(ev.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const double ma = std::abs(ev[a]), mb = std::abs(ev[b]);
    if (ma != mb) return ma < mb;
    if (ev[a].imag() != ev[b].imag()) return ev[a].imag() < ev[b].imag();
    return ev[a].real() < ev[b].real();
  });
  return idx;
}

std::vector<std::complex<double>> to_std(const Eigen::VectorXcd& v) {
  return {v.data(), v.data() + v.size()};
}

// Largest |Re| among the four eigenvalues nearest zero.
double quadruple_growth(const Eigen::VectorXcd& spectrum) {
  const auto ev = to_std(spectrum);
  const auto idx = modulus_order(ev);
  double out = 0;
  for (int i = 0; i < 4; ++i) out = std::max(out, std::abs(ev[idx[i]].real()));
  return out;
}

}  // namespace

double delta_bf(double h, double mu, double eps) {
  const auto dc = depth_coefficients(h);
  return 8.0 * dc.e_wb * eps * eps - dc.e_22 * mu * mu;
}

BenjaminFeirPrediction predict_eigenvalues(double h, double mu, double eps) {
  if (!(mu >= 0.0 && mu <= 0.2))
    throw std::domain_error("predict_eigenvalues: mu must lie in [0, 0.2]");
  if (!(eps >= 0.0 && eps <= 0.05))
    throw std::domain_error("predict_eigenvalues: eps must lie in [0, 0.05]");
  const auto dc = depth_coefficients(h);

  BenjaminFeirPrediction out;
  out.h = h;
  out.mu = mu;
  out.eps = eps;
  out.delta_bf_leading = 8.0 * dc.e_wb * eps * eps - dc.e_22 * mu * mu;
  if (dc.e_h) out.mu_bar_leading = *dc.e_h * eps;

  if (eps == 0.0) {
    // Flat state: use the dispersion relation itself instead of its
    // expansion in mu.
    const auto omega = [h](double k) { return std::sqrt(k * std::tanh(h * k)); };
    out.lambda1_plus = kI * (dc.c_h * (1.0 + mu) - omega(1.0 + mu));
    out.lambda1_minus = kI * (dc.c_h * (mu - 1.0) + omega(1.0 - mu));
    out.lambda0_plus = kI * (dc.c_h * mu - omega(mu));
    out.lambda0_minus = kI * (dc.c_h * mu + omega(mu));
    out.leading_order = false;
    return out;
  }

  const double drift = 0.5 * dc.breve_c_h * mu;
  const double amp = 0.125 * mu * std::sqrt(dc.e_22) *
                     std::sqrt(std::abs(out.delta_bf_leading));
  if (out.delta_bf_leading > 0.0) {
    out.lambda1_plus = {amp, drift};
    out.lambda1_minus = {-amp, drift};
    out.unstable = dc.e_wb > 0.0;
  } else {
    out.lambda1_plus = kI * (drift + amp);
    out.lambda1_minus = kI * (drift - amp);
  }
  const double osc = std::sqrt(mu * std::tanh(h * mu));
  out.lambda0_plus = kI * (dc.c_h * mu - osc);
  out.lambda0_minus = kI * (dc.c_h * mu + osc);
  return out;
}

std::vector<Figure8Point> figure8(double h, double eps, int samples) {
  if (samples < 2) throw std::invalid_argument("figure8: need at least 2 samples");
  if (!(eps >= 0.0)) throw std::domain_error("figure8: eps must be nonnegative");
  const auto dc = depth_coefficients(h);
  if (!(dc.e_wb > 0.0))
    throw RegimeError("figure8: e_wb(h) <= 0, no unstable band at this depth");

  const double mu_bar = *dc.e_h * eps;
  const double root_e22 = std::sqrt(dc.e_22);
  std::vector<Figure8Point> rows;
  rows.reserve(2 * static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double mu = mu_bar * i / (samples - 1);
    // radicand factored through the band edge so both endpoints land on the
    // imaginary axis exactly
    const double rad = dc.e_22 * std::max(0.0, (mu_bar - mu) * (mu_bar + mu));
    const double re = 0.125 * mu * root_e22 * std::sqrt(rad);
    const double im = 0.5 * dc.breve_c_h * mu;
    rows.push_back({mu, re, im, -re, im});
  }
  for (int i = 0; i < samples; ++i) {
    const Figure8Point u = rows[i];  // conjugate mirror, lower loop
    rows.push_back({-u.mu, u.re_plus, -u.im_plus, u.re_minus, -u.im_minus});
  }
  return rows;
}

SpectrumReport match_spectrum(const std::vector<std::complex<double>>& full,
                              const BenjaminFeirPrediction& prediction) {
  if (full.size() < 5)
    throw std::invalid_argument("match_spectrum: spectrum has fewer than 5 eigenvalues");
  const auto idx = modulus_order(full);
  const double m4 = std::abs(full[idx[3]]);
  const double m5 = std::abs(full[idx[4]]);
  if (m5 < 2.0 * m4)
    throw ClusterError("match_spectrum: 4th and 5th moduli within a factor 2, "
                       "near-zero cluster not separated");

  std::array<std::complex<double>, 4> cand;
  for (int i = 0; i < 4; ++i) cand[i] = full[idx[i]];
  const std::array<std::complex<double>, 4> pred = {
      prediction.lambda1_plus, prediction.lambda1_minus,
      prediction.lambda0_plus, prediction.lambda0_minus};

  std::array<int, 4> perm = {0, 1, 2, 3};
  std::array<int, 4> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0;
    for (int i = 0; i < 4; ++i) cost += std::abs(cand[perm[i]] - pred[i]);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  SpectrumReport rep;
  rep.spectrum = full;
  rep.prediction = prediction;
  rep.cluster_gap = m4 == 0.0 ? std::numeric_limits<double>::infinity() : m5 / m4;
  for (int i = 0; i < 4; ++i) {
    rep.quadruple[i] = cand[best[i]];
    MatchedPair& mp = rep.matches[i];
    mp.predicted = pred[i];
    mp.computed = rep.quadruple[i];
    mp.absolute = std::abs(mp.computed - mp.predicted);
    const double denom = std::max(std::abs(mp.predicted), std::abs(mp.computed));
    mp.relative = denom == 0.0 ? 0.0 : mp.absolute / denom;
  }
  return rep;
}

SpectrumReport match_spectrum(const Eigen::VectorXcd& full,
                              const BenjaminFeirPrediction& prediction) {
  return match_spectrum(to_std(full), prediction);
}

double unstable_band(double h, double eps, BandMethod method, int modes,
                     double tol) {
  const auto dc = depth_coefficients(h);
  if (!(dc.e_wb > 0.0))
    throw RegimeError("unstable_band: e_wb(h) <= 0, no unstable band at this depth");
  if (!(eps >= 0.0)) throw std::domain_error("unstable_band: eps must be nonnegative");
  const double mu_a = *dc.e_h * eps;
  if (method == BandMethod::kAnalytic || eps == 0.0) return mu_a;
  if (!(tol > 0.0)) throw std::invalid_argument("unstable_band: tol must be positive");

  const WaveData w = wave_data(h, eps, modes);
  const auto inside = [&](double mu) {
    return quadruple_growth(full_spectrum(assemble_L(w, mu))) > 1e-9;
  };

  double lo = 0.5 * mu_a;
  if (!inside(lo)) {
    lo = 0.25 * mu_a;
    if (!inside(lo))
      throw BracketError("unstable_band: no growth detected inside the predicted band");
  }
  double hi = 1.5 * mu_a;
  while (inside(hi)) {
    hi *= 1.3;
    if (hi > std::min(4.0 * mu_a, 0.49))
      throw BracketError("unstable_band: band edge not bracketed above the predicted width");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

GrowthScan max_growth(double h, double eps, int modes, int samples, int jobs) {
  const auto dc = depth_coefficients(h);
  if (!(dc.e_wb > 0.0))
    throw RegimeError("max_growth: e_wb(h) <= 0, no unstable band at this depth");
  if (samples < 2) throw std::invalid_argument("max_growth: need at least 2 samples");
  if (eps == 0.0) return {};

  const double mu_hi = 1.25 * *dc.e_h * eps;
  const WaveData w = wave_data(h, eps, modes);
  std::vector<double> mus(samples), growth(samples);
  for (int i = 0; i < samples; ++i) mus[i] = mu_hi * (i + 1) / samples;
  if (jobs <= 1) {
    for (int i = 0; i < samples; ++i)
      growth[i] = quadruple_growth(full_spectrum(assemble_L(w, mus[i])));
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < samples; ++i)
      growth[i] = quadruple_growth(full_spectrum(assemble_L(w, mus[i])));
  }
  GrowthScan out{mus[0], growth[0]};
  for (int i = 1; i < samples; ++i)
    if (growth[i] > out.re_peak) out = {mus[i], growth[i]};
  return out;
}

}  // namespace bfwave
