#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "bfwave/depth.hpp"
#include "bfwave/errors.hpp"
#include "bfwave/floquet.hpp"
#include "bfwave/spectrum.hpp"

using namespace bfwave;
using Cd = std::complex<double>;

namespace {

// independently computed reference values, 50-digit arithmetic
constexpr double kMuBar = 0.0137563125301115;     // e_h(2) * 0.01
constexpr double kMuPeak = 0.0097271818741633;    // kMuBar / sqrt(2)
constexpr double kRePeak = 2.158487222323412e-5;  // e_wb(2) / 2 * 1e-4

std::vector<Cd> sorted_by_modulus(const Eigen::VectorXcd& ev) {
  std::vector<Cd> v(ev.data(), ev.data() + ev.size());
  std::sort(v.begin(), v.end(), [](Cd a, Cd b) { return std::abs(a) < std::abs(b); });
  return v;
}

double worst_match(const SpectrumReport& rep) {
  double out = 0;
  for (const auto& m : rep.matches) out = std::max(out, m.absolute);
  return out;
}

}  // namespace

TEST_CASE("discriminant sign structure") {
  const auto dc = depth_coefficients(2.0);

  // eps = 0 leaves only the negative dispersive term
  CHECK(delta_bf(2.0, 0.05, 0.0) == -dc.e_22 * 0.05 * 0.05);
  CHECK(delta_bf(1.0, 0.05, 0.0) < 0.0);

  // cancellation at the leading band edge
  const double edge = *dc.e_h * 0.01;
  CHECK(std::abs(delta_bf(2.0, edge, 0.01)) < 1e-18);
  CHECK(std::abs(delta_bf(2.0, 2.0 * edge, 0.02)) < 1e-17);
  CHECK(delta_bf(2.0, 0.999 * edge, 0.01) > 0.0);
  CHECK(delta_bf(2.0, 1.001 * edge, 0.01) < 0.0);

  // below the critical depth the discriminant never turns positive
  CHECK(delta_bf(1.0, 0.005, 0.01) < 0.0);
  CHECK(delta_bf(1.0, 0.0, 0.01) < 0.0);
  CHECK(delta_bf(1.36, 0.001, 0.01) < 0.0);
}

TEST_CASE("flat-state predictions reproduce the dispersion relation") {
  for (double h : {1.0, 2.0}) {
    const auto dc = depth_coefficients(h);
    const auto omega = [h](double k) { return std::sqrt(k * std::tanh(h * k)); };
    for (double mu : {0.05, 0.1, 0.2}) {
      const auto flat = predict_eigenvalues(h, mu, 0.0);
      CHECK_FALSE(flat.leading_order);
      CHECK_FALSE(flat.unstable);
      CHECK(std::abs(flat.lambda1_plus - Cd(0, dc.c_h * (1 + mu) - omega(1 + mu))) < 1e-15);
      CHECK(std::abs(flat.lambda1_minus - Cd(0, dc.c_h * (mu - 1) + omega(1 - mu))) < 1e-15);
      CHECK(std::abs(flat.lambda0_plus - Cd(0, dc.c_h * mu - omega(mu))) < 1e-15);
      CHECK(std::abs(flat.lambda0_minus - Cd(0, dc.c_h * mu + omega(mu))) < 1e-15);

      // the truncated closed form agrees with the dispersion relation to
      // cubic order in mu; measured defect stays below 0.19 mu^3
      const auto lead = predict_eigenvalues(h, mu, 1e-30);
      CHECK(lead.leading_order);
      const double mu3 = mu * mu * mu;
      CHECK(std::abs(lead.lambda1_plus - flat.lambda1_plus) < 0.5 * mu3);
      CHECK(std::abs(lead.lambda1_minus - flat.lambda1_minus) < 0.5 * mu3);
      CHECK(std::abs(lead.lambda0_plus - flat.lambda0_plus) < 1e-16);
      CHECK(std::abs(lead.lambda0_minus - flat.lambda0_minus) < 1e-16);
    }
  }
}

TEST_CASE("prediction corner guards") {
  CHECK_THROWS_AS(predict_eigenvalues(2.0, 0.21, 0.01), std::domain_error);
  CHECK_THROWS_AS(predict_eigenvalues(2.0, -0.01, 0.01), std::domain_error);
  CHECK_THROWS_AS(predict_eigenvalues(2.0, 0.1, 0.06), std::domain_error);
  CHECK_THROWS_AS(predict_eigenvalues(2.0, 0.1, -0.01), std::domain_error);
  CHECK_THROWS_AS(predict_eigenvalues(0.01, 0.1, 0.01), std::domain_error);
  CHECK_NOTHROW(predict_eigenvalues(2.0, 0.2, 0.05));
}

TEST_CASE("prediction branches across the critical depth") {
  // sufficiently deep: a real pair inside the band, imaginary outside
  const auto inside = predict_eigenvalues(2.0, 0.5 * kMuBar, 0.01);
  REQUIRE(inside.mu_bar_leading.has_value());
  CHECK(std::abs(*inside.mu_bar_leading - kMuBar) < 1e-13);
  CHECK(inside.unstable);
  CHECK(inside.lambda1_plus.real() > 1e-6);
  CHECK(inside.lambda1_plus.real() == -inside.lambda1_minus.real());
  CHECK(inside.lambda1_plus.imag() == inside.lambda1_minus.imag());
  CHECK(inside.lambda1_plus.imag() > 0.0);
  CHECK(inside.lambda0_plus.real() == 0.0);
  CHECK(inside.lambda0_minus.real() == 0.0);

  const auto outside = predict_eigenvalues(2.0, 2.0 * kMuBar, 0.01);
  CHECK_FALSE(outside.unstable);
  CHECK(outside.lambda1_plus.real() == 0.0);
  CHECK(outside.lambda1_minus.real() == 0.0);
  CHECK(outside.lambda1_plus.imag() != outside.lambda1_minus.imag());

  // exactly at the edge the pair collides on the imaginary axis
  const auto edge = predict_eigenvalues(2.0, kMuBar, 0.01);
  CHECK(std::abs(edge.lambda1_plus - edge.lambda1_minus) < 1e-11);
  CHECK(std::abs(edge.lambda1_plus.real()) < 1e-11);

  // shallow: no band, never unstable
  for (double mu : {0.002, 0.01, 0.05}) {
    const auto p = predict_eigenvalues(1.0, mu, 0.01);
    CHECK_FALSE(p.mu_bar_leading.has_value());
    CHECK_FALSE(p.unstable);
    CHECK(p.lambda1_plus.real() == 0.0);
    CHECK(p.lambda1_minus.real() == 0.0);
  }
}

TEST_CASE("figure-8 locus geometry") {
  const auto rows = figure8(2.0, 0.01, 101);
  REQUIRE(rows.size() == 202);

  // endpoints sit on the imaginary axis exactly
  CHECK(rows[0].re_plus == 0.0);
  CHECK(rows[100].re_plus == 0.0);
  CHECK(rows[100].mu == doctest::Approx(kMuBar).epsilon(1e-13));

  int peak_at = 0;
  for (int i = 0; i < 101; ++i) {
    CHECK(rows[i].re_minus == -rows[i].re_plus);
    CHECK(rows[i].im_minus == rows[i].im_plus);
    CHECK(rows[i].re_plus >= 0.0);
    if (i > 0) CHECK(rows[i].im_plus > rows[i - 1].im_plus);
    if (rows[i].re_plus > rows[peak_at].re_plus) peak_at = i;
    // lower loop mirrors the upper one through the real axis
    const auto& m = rows[101 + i];
    CHECK(m.mu == -rows[i].mu);
    CHECK(m.re_plus == rows[i].re_plus);
    CHECK(m.im_plus == -rows[i].im_plus);
  }
  // single interior maximum of the growth rate
  for (int i = 1; i <= peak_at; ++i) CHECK(rows[i].re_plus > rows[i - 1].re_plus);
  for (int i = peak_at + 1; i < 101; ++i) CHECK(rows[i].re_plus < rows[i - 1].re_plus);
  CHECK(rows[peak_at].mu == doctest::Approx(kMuPeak).epsilon(0.02));

  // dense sampling approaches the closed-form maximum from below
  const auto dense = figure8(2.0, 0.01, 2001);
  double mx = 0;
  for (const auto& r : dense) mx = std::max(mx, r.re_plus);
  CHECK(mx <= kRePeak * (1 + 1e-12));
  CHECK(mx == doctest::Approx(kRePeak).epsilon(1e-6));

  // the locus is the real/imaginary part of the predicted eigenvalue
  const auto p = predict_eigenvalues(2.0, rows[50].mu, 0.01);
  CHECK(p.lambda1_plus.real() == doctest::Approx(rows[50].re_plus).epsilon(1e-10));
  CHECK(p.lambda1_plus.imag() == doctest::Approx(rows[50].im_plus).epsilon(1e-13));
  CHECK(predict_eigenvalues(2.0, kMuPeak, 0.01).lambda1_plus.real() ==
        doctest::Approx(kRePeak).epsilon(1e-12));
}

TEST_CASE("figure-8 guards") {
  CHECK_THROWS_AS(figure8(1.0, 0.01, 50), RegimeError);
  CHECK_THROWS_AS(figure8(1.3, 0.01, 50), RegimeError);
  CHECK_THROWS_AS(figure8(2.0, 0.01, 1), std::invalid_argument);
  CHECK_THROWS_AS(figure8(2.0, -0.01, 50), std::domain_error);
  CHECK_NOTHROW(figure8(1.4, 0.01, 2));
}

TEST_CASE("matching the flat spectrum is exact") {
  const auto ev = full_spectrum(assemble_L(2.0, 0.1, 0.0, 32));
  const auto rep = match_spectrum(ev, predict_eigenvalues(2.0, 0.1, 0.0));
  CHECK(worst_match(rep) < 1e-10);
  CHECK(rep.cluster_gap > 2.0);
  CHECK(rep.cluster_gap < 2.1);
  CHECK(rep.spectrum.size() == static_cast<std::size_t>(ev.size()));
  for (const auto& m : rep.matches) {
    CHECK(m.absolute == std::abs(m.computed - m.predicted));
    CHECK(m.relative <= m.absolute / std::abs(m.predicted) + 1e-18);
  }
}

TEST_CASE("cluster guard rejects an ambiguous selection") {
  // at mu = 0.2 a fifth branch drifts into the near-zero cluster
  const auto ev = full_spectrum(assemble_L(2.0, 0.2, 0.0, 32));
  CHECK_THROWS_AS(match_spectrum(ev, predict_eigenvalues(2.0, 0.2, 0.0)),
                  ClusterError);
  CHECK_THROWS_AS(match_spectrum(std::vector<Cd>{{1, 0}, {0, 1}, {0, 2}, {1, 1}},
                                 predict_eigenvalues(2.0, 0.1, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("instability dichotomy between the two regimes") {
  const double eps = 0.01;
  const WaveData w2 = wave_data(2.0, eps, 32);

  // inside the band: exactly one pair with opposite real parts
  {
    const double mu = 0.5 * kMuBar;
    const auto rep = match_spectrum(full_spectrum(assemble_L(w2, mu)),
                                    predict_eigenvalues(2.0, mu, eps));
    int with_growth = 0;
    double max_re = 0;
    for (const auto& q : rep.quadruple) {
      if (std::abs(q.real()) > 1e-8) ++with_growth;
      max_re = std::max(max_re, std::abs(q.real()));
    }
    CHECK(with_growth == 2);
    CHECK(rep.quadruple[0].real() > 1e-8);
    CHECK(rep.quadruple[1].real() < -1e-8);
    CHECK(std::abs(rep.quadruple[0].real() + rep.quadruple[1].real()) < 1e-12);
    // the unstable pair collides: identical imaginary parts
    CHECK(std::abs(rep.quadruple[0].imag() - rep.quadruple[1].imag()) < 10 * max_re);
    // the second pair stays on the axis
    CHECK(std::abs(rep.quadruple[2].real()) < 1e-9);
    CHECK(std::abs(rep.quadruple[3].real()) < 1e-9);
    // closed forms track the direct solve to the size of the dropped terms
    CHECK(rep.matches[0].absolute < 1e-5);
    CHECK(rep.matches[1].absolute < 1e-5);
    CHECK(rep.matches[2].absolute < 5e-6);
    CHECK(rep.matches[3].absolute < 5e-6);
    CHECK(max_re == doctest::Approx(rep.prediction.lambda1_plus.real()).epsilon(5e-2));
    // quadruple closed under lambda -> -conj(lambda)
    for (const auto& q : rep.quadruple) {
      double nearest = 1e9;
      for (const auto& r : rep.quadruple)
        nearest = std::min(nearest, std::abs(r - Cd(-q.real(), q.imag())));
      CHECK(nearest < 1e-9);
    }
  }

  // beyond the band: all four back on the imaginary axis
  {
    const double mu = 2.0 * kMuBar;
    const auto rep = match_spectrum(full_spectrum(assemble_L(w2, mu)),
                                    predict_eigenvalues(2.0, mu, eps));
    for (const auto& q : rep.quadruple) CHECK(std::abs(q.real()) < 1e-8);
    CHECK(worst_match(rep) < 1e-5);
  }

  // shallow water: purely imaginary across the whole scanned zone
  {
    const WaveData w1 = wave_data(1.0, eps, 32);
    for (int i = 1; i <= 20; ++i) {
      const double mu = 0.05 * i / 20;
      const auto four = sorted_by_modulus(full_spectrum(assemble_L(w1, mu)));
      for (int k = 0; k < 4; ++k) CHECK(std::abs(four[k].real()) < 1e-8);
    }
  }
}

TEST_CASE("band edge from formula and from bisection") {
  CHECK(unstable_band(2.0, 0.01, BandMethod::kAnalytic) ==
        doctest::Approx(kMuBar).epsilon(1e-13));
  CHECK(unstable_band(2.0, 0.0, BandMethod::kAnalytic) == 0.0);
  CHECK(unstable_band(2.0, 0.0, BandMethod::kNumeric) == 0.0);
  CHECK_THROWS_AS(unstable_band(1.0, 0.01, BandMethod::kAnalytic), RegimeError);
  CHECK_THROWS_AS(unstable_band(1.0, 0.01, BandMethod::kNumeric), RegimeError);
  CHECK_THROWS_AS(unstable_band(2.0, 0.01, BandMethod::kNumeric, 32, 0.0),
                  std::invalid_argument);

  const double ana = unstable_band(2.0, 0.01, BandMethod::kAnalytic);
  const double num = unstable_band(2.0, 0.01, BandMethod::kNumeric, 32, 1e-6);
  CHECK(std::abs(num - ana) / ana < 1e-3);
}

TEST_CASE("band edge correction vanishes quadratically") {
  // relative analytic/numeric gap drops by about 4x per halving of eps
  double prev = 0;
  for (double eps : {0.02, 0.01, 0.005}) {
    const double ana = unstable_band(2.0, eps, BandMethod::kAnalytic);
    const double num = unstable_band(2.0, eps, BandMethod::kNumeric, 32, 1e-8);
    const double gap = std::abs(num - ana) / ana;
    CHECK(gap < 5e-4);
    if (prev > 0) {
      CHECK(gap < prev);
      CHECK(prev / gap > 2.5);
      CHECK(prev / gap < 6.0);
    }
    prev = gap;
  }
}

TEST_CASE("grid maximum of the growth rate") {
  const auto g = max_growth(2.0, 0.01, 32);
  CHECK(g.re_peak == doctest::Approx(kRePeak).epsilon(0.01));
  CHECK(g.mu_peak == doctest::Approx(kMuPeak).epsilon(0.03));

  // the gap to the closed form shrinks with the amplitude
  const auto gh = max_growth(2.0, 0.005, 32);
  const auto dc = depth_coefficients(2.0);
  const double gap = std::abs(g.re_peak - kRePeak) / kRePeak;
  const double ref_h = 0.5 * dc.e_wb * 0.005 * 0.005;
  const double gap_h = std::abs(gh.re_peak - ref_h) / ref_h;
  CHECK(gap_h < gap);

  // distributing the grid does not change the result
  const auto par = max_growth(2.0, 0.01, 32, 48, 4);
  CHECK(par.re_peak == g.re_peak);
  CHECK(par.mu_peak == g.mu_peak);

  CHECK_THROWS_AS(max_growth(1.0, 0.01, 32), RegimeError);
  CHECK_THROWS_AS(max_growth(2.0, 0.01, 32, 1), std::invalid_argument);
  const auto flat = max_growth(2.0, 0.0, 32);
  CHECK(flat.re_peak == 0.0);
  CHECK(flat.mu_peak == 0.0);
}
