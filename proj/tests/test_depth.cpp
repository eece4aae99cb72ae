#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bfwave/depth.hpp"
#include "bfwave/errors.hpp"

using namespace bfwave;

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    out.push_back(lo * std::pow(hi / lo, t));
  }
  return out;
}

}  // namespace

// Reference values below were frozen from a 50-digit mpmath evaluation of the
// same closed forms (tools/make_reference_values.py).

TEST_CASE("spot values at h = 1 and h = 2") {
  const auto k1 = depth_coefficients(1.0);
  CHECK(k1.c_h == doctest::Approx(0.8726936208978297).epsilon(1e-14));
  CHECK(k1.e_wb == doctest::Approx(-0.9075690643665259).epsilon(1e-13));
  CHECK(k1.e_wb < 0.0);
  CHECK(!k1.e_h.has_value());
  CHECK(k1.gamma_h == doctest::Approx(1.5514411295435664).epsilon(1e-13));
  CHECK(k1.alpha_h == doctest::Approx(3.7854388567957601).epsilon(1e-13));
  CHECK(k1.beta_h == doctest::Approx(2.3163981013390309).epsilon(1e-13));
  CHECK(k1.delta_h == doctest::Approx(1.2579739398885009).epsilon(1e-13));
  CHECK(k1.zeta_h == doctest::Approx(0.2625683745999022).epsilon(1e-13));
  CHECK(k1.b_bold_h == doctest::Approx(1.8710865424271424).epsilon(1e-13));

  const auto k2 = depth_coefficients(2.0);
  CHECK(k2.e_wb == doctest::Approx(0.4316974444646824).epsilon(1e-13));
  CHECK(k2.e_wb > 0.0);
  CHECK(k2.e_11 == doctest::Approx(1.0628747449343640).epsilon(1e-13));
  CHECK(k2.tilde_e11 == doctest::Approx(-0.6311773004696816).epsilon(1e-13));
  CHECK(k2.e_12 == doctest::Approx(1.1257628823340968).epsilon(1e-13));
  CHECK(k2.e_22 == doctest::Approx(1.8250106229400419).epsilon(1e-13));
  CHECK(k2.d_h == doctest::Approx(1.6831644831897066).epsilon(1e-13));
  CHECK(k2.f_11 == doctest::Approx(0.0363094898240466).epsilon(1e-13));
  CHECK(k2.breve_c_h == doctest::Approx(0.8379352411826691).epsilon(1e-13));
  REQUIRE(k2.e_h.has_value());
  CHECK(*k2.e_h == doctest::Approx(1.3756312530111476).epsilon(1e-13));
}

TEST_CASE("deep-water limits at h = 20") {
  const auto k = depth_coefficients(20.0);
  CHECK(std::abs(k.e_22 - 1.0) < 1e-4);
  CHECK(std::abs(k.e_12 - 1.0) < 1e-4);
}

TEST_CASE("admissible range is enforced") {
  CHECK_THROWS_AS(depth_coefficients(0.04), std::domain_error);
  CHECK_THROWS_AS(depth_coefficients(0.05), std::domain_error);
  CHECK_THROWS_AS(depth_coefficients(50.0), std::domain_error);
  CHECK_THROWS_AS(depth_coefficients(-1.0), std::domain_error);
  CHECK_NOTHROW(depth_coefficients(0.0501));
  CHECK_NOTHROW(depth_coefficients(49.9));
}

TEST_CASE("sign and positivity invariants on a log grid") {
  for (double h : log_spaced(0.1, 30.0, 200)) {
    const auto k = depth_coefficients(h);
    CHECK(k.e_22 > 0.0);
    CHECK(k.d_h > 0.0);
    // The gap e_12 - c_h = h sech^2(h)/c_h drops below double rounding near
    // h = 19; past that the stored sum collapses onto c_h.
    if (h < 18.0) {
      CHECK(k.e_12 > k.c_h);
    } else {
      CHECK(k.e_12 >= k.c_h);
    }
    CHECK(k.e_11 > 0.0);
    CHECK(k.breve_c_h > 0.0);
    // Two independent formulas for the same function.
    CHECK(std::abs(k.e_wb - (k.e_11 + k.tilde_e11)) <=
          1e-12 * std::max(1.0, std::abs(k.e_wb)));
    CHECK(std::abs(k.e_22 - 2.0 * (k.b_bold_h - 4.0 * k.zeta_h)) <=
          1e-12 * std::max(1.0, k.e_22));
    CHECK(k.e_h.has_value() == (k.e_wb > 0.0));
    if (k.e_h) CHECK(*k.e_h == doctest::Approx(std::sqrt(8.0 * k.e_wb / k.e_22)));
  }
}

TEST_CASE("critical depth") {
  const double h_star = critical_depth();
  CHECK(std::abs(h_star - 1.363) < 1e-3);
  CHECK(std::abs(h_star - 1.3627827567264201) < 1e-9);
  CHECK(std::abs(depth_coefficients(h_star).e_wb) < 1e-10);

  const double h_narrow = critical_depth(1.3, 1.4, 1e-12);
  CHECK(std::abs(h_narrow - h_star) < 1e-10);

  CHECK_THROWS_AS(critical_depth(2.0, 3.0), BracketError);
}

TEST_CASE("e_wb sign is uniform on both sides of the root") {
  const double h_star = critical_depth();
  for (double h : log_spaced(0.2, h_star - 0.01, 60)) {
    CHECK(depth_coefficients(h).e_wb < 0.0);
  }
  for (double h : log_spaced(h_star + 0.01, 30.0, 60)) {
    CHECK(depth_coefficients(h).e_wb > 0.0);
  }
}
