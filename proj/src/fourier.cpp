#include "bfwave/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bfwave {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

void check_same_modes(const FourierField& a, const FourierField& b) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("Fourier truncations differ: M = " +
                                std::to_string(a.modes()) + " vs " +
                                std::to_string(b.modes()));
  }
}

Parity combine_additive(Parity a, Parity b) { return a == b ? a : Parity::kNone; }

Parity combine_multiplicative(Parity a, Parity b) {
  if (a == Parity::kNone || b == Parity::kNone) return Parity::kNone;
  return a == b ? Parity::kEven : Parity::kOdd;
}
}  // namespace

FourierField::FourierField(int modes, Parity tag)
    : modes_(modes), tag_(tag), c_(Eigen::VectorXcd::Zero(2 * modes + 1)) {
  if (modes < 0) throw std::invalid_argument("negative mode count");
}

std::complex<double> FourierField::coeff(int k) const {
  if (std::abs(k) > modes_) return 0.0;
  return c_[k + modes_];
}

void FourierField::set_coeff(int k, std::complex<double> v) {
  if (std::abs(k) > modes_) throw std::out_of_range("mode index beyond truncation");
  c_[k + modes_] = v;
}

void FourierField::add_cos(int k, double amp) {
  if (k == 0) {
    c_[modes_] += amp;
    return;
  }
  c_[k + modes_] += 0.5 * amp;
  c_[-k + modes_] += 0.5 * amp;
}

void FourierField::add_sin(int k, double amp) {
  c_[k + modes_] += -0.5 * kI * amp;
  c_[-k + modes_] += 0.5 * kI * amp;
}

double FourierField::cos_amp(int k) const {
  if (k == 0) return c_[modes_].real();
  return (coeff(k) + coeff(-k)).real();
}

double FourierField::sin_amp(int k) const { return (coeff(-k) - coeff(k)).imag(); }

std::complex<double> FourierField::eval(double x) const {
  std::complex<double> acc = 0.0;
  for (int k = -modes_; k <= modes_; ++k) {
    acc += c_[k + modes_] * std::exp(kI * (static_cast<double>(k) * x));
  }
  return acc;
}

Eigen::VectorXcd FourierField::grid_values(int n) const {
  Eigen::VectorXcd out(n);
  const double step = 2.0 * std::numbers::pi / n;
  for (int j = 0; j < n; ++j) out[j] = eval(j * step);
  return out;
}

FourierField FourierField::from_grid(const Eigen::VectorXcd& values, int modes,
                                     Parity tag) {
  const int n = static_cast<int>(values.size());
  if (n < 2 * modes + 1) {
    throw std::invalid_argument("grid too coarse for requested mode count");
  }
  FourierField f(modes, tag);
  const double step = 2.0 * std::numbers::pi / n;
  for (int k = -modes; k <= modes; ++k) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += values[j] * std::exp(-kI * (static_cast<double>(k) * j * step));
    }
    f.c_[k + modes] = acc / static_cast<double>(n);
  }
  return f;
}

FourierField FourierField::derivative() const {
  FourierField d(modes_, tag_ == Parity::kEven   ? Parity::kOdd
                         : tag_ == Parity::kOdd ? Parity::kEven
                                                : Parity::kNone);
  for (int k = -modes_; k <= modes_; ++k) {
    d.c_[k + modes_] = kI * static_cast<double>(k) * c_[k + modes_];
  }
  return d;
}

FourierField FourierField::map_symbol(
    const std::function<std::complex<double>(int)>& symbol) const {
  FourierField out(modes_, Parity::kNone);
  for (int k = -modes_; k <= modes_; ++k) {
    out.c_[k + modes_] = symbol(k) * c_[k + modes_];
  }
  return out;
}

double FourierField::l2_norm() const { return c_.norm(); }

double FourierField::sup_norm_bound() const { return c_.cwiseAbs().sum(); }

double FourierField::conj_asymmetry() const {
  double worst = 0.0;
  for (int k = 0; k <= modes_; ++k) {
    worst = std::max(worst, std::abs(coeff(-k) - std::conj(coeff(k))));
  }
  return worst;
}

double FourierField::parity_residual() const {
  if (tag_ == Parity::kNone) return 0.0;
  double worst = 0.0;
  for (int k = 0; k <= modes_; ++k) {
    const auto cp = coeff(k);
    const auto cm = coeff(-k);
    if (tag_ == Parity::kEven) {
      worst = std::max({worst, std::abs(cp.imag()), std::abs(cp - cm)});
    } else {
      worst = std::max({worst, std::abs(cp.real()), std::abs(cp + cm)});
    }
  }
  return worst;
}

FourierField& FourierField::operator+=(const FourierField& rhs) {
  check_same_modes(*this, rhs);
  c_ += rhs.c_;
  tag_ = combine_additive(tag_, rhs.tag_);
  return *this;
}

FourierField& FourierField::operator-=(const FourierField& rhs) {
  check_same_modes(*this, rhs);
  c_ -= rhs.c_;
  tag_ = combine_additive(tag_, rhs.tag_);
  return *this;
}

FourierField& FourierField::operator*=(double s) {
  c_ *= s;
  return *this;
}

FourierField operator+(FourierField lhs, const FourierField& rhs) { return lhs += rhs; }
FourierField operator-(FourierField lhs, const FourierField& rhs) { return lhs -= rhs; }
FourierField operator*(double s, FourierField f) { return f *= s; }

FourierField operator*(const FourierField& lhs, const FourierField& rhs) {
  check_same_modes(lhs, rhs);
  const int m = lhs.modes();
  FourierField out(m, combine_multiplicative(lhs.tag(), rhs.tag()));
  for (int k = -m; k <= m; ++k) {
    std::complex<double> acc = 0.0;
    for (int j = std::max(-m, k - m); j <= std::min(m, k + m); ++j) {
      acc += lhs.coeff(j) * rhs.coeff(k - j);
    }
    out.set_coeff(k, acc);
  }
  return out;
}

FourierField compose(const FourierField& u, const FourierField& shift) {
  check_same_modes(u, shift);
  const int m = u.modes();
  const int n = std::max(4 * m, 16);
  Eigen::VectorXcd values(n);
  const double step = 2.0 * std::numbers::pi / n;
  for (int j = 0; j < n; ++j) {
    const double x = j * step;
    values[j] = u.eval(x + shift.eval(x).real());
  }
  return FourierField::from_grid(values, m, Parity::kNone);
}

}  // namespace bfwave
