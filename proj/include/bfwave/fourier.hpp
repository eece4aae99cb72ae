#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace bfwave {

enum class Parity { kEven, kOdd, kNone };

// Truncated Fourier series sum_{|k| <= M} c_k e^{ikx} on [0, 2pi).
// Real-valued fields keep the symmetry coeff(-k) = conj(coeff(k)).
class FourierField {
 public:
  FourierField() : modes_(0), tag_(Parity::kNone), c_(Eigen::VectorXcd::Zero(1)) {}
  explicit FourierField(int modes, Parity tag = Parity::kNone);

  int modes() const { return modes_; }
  Parity tag() const { return tag_; }
  void set_tag(Parity tag) { tag_ = tag; }

  std::complex<double> coeff(int k) const;
  void set_coeff(int k, std::complex<double> v);
  void add_cos(int k, double amp);
  void add_sin(int k, double amp);
  double cos_amp(int k) const;  // amplitude of cos(kx), k >= 0
  double sin_amp(int k) const;  // amplitude of sin(kx), k >= 1

  std::complex<double> eval(double x) const;
  // Samples on the uniform grid x_j = 2 pi j / n; requires n >= 2M+1 when the
  // result is meant to be projected back.
  Eigen::VectorXcd grid_values(int n) const;
  static FourierField from_grid(const Eigen::VectorXcd& values, int modes,
                                Parity tag = Parity::kNone);

  FourierField derivative() const;
  // Applies a Fourier multiplier symbol(k) coefficient-wise.
  FourierField map_symbol(const std::function<std::complex<double>(int)>& symbol) const;

  double l2_norm() const;       // sqrt of the mean of |f|^2 over a period
  double sup_norm_bound() const;  // sum of |c_k|
  double conj_asymmetry() const;  // deviation from the real-field symmetry
  double parity_residual() const;  // deviation from the declared parity

  FourierField& operator+=(const FourierField& rhs);
  FourierField& operator-=(const FourierField& rhs);
  FourierField& operator*=(double s);

 private:
  int modes_;
  Parity tag_;
  Eigen::VectorXcd c_;  // index k + modes_
};

FourierField operator+(FourierField lhs, const FourierField& rhs);
FourierField operator-(FourierField lhs, const FourierField& rhs);
FourierField operator*(double s, FourierField f);
// Exact convolution of the coefficient ranges, truncated back to the common
// mode count.  Throws std::invalid_argument when the truncations differ.
FourierField operator*(const FourierField& lhs, const FourierField& rhs);

// u(x + shift(x)) by dense resampling on a 4M-point grid followed by direct
// projection onto modes -M..M.  shift must be a real field.
FourierField compose(const FourierField& u, const FourierField& shift);

}  // namespace bfwave
