#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace necklace {

/// Exact Gaussian rational re + im*i, both parts kept in lowest terms.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar rational(long num, long den);
  static Scalar imaginary_unit() { return Scalar(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always real.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  double real_value() const { return re_.get_d(); }

  /// Canonical serialization: "p/q" or "p/q+r/s*i" with explicit signs.
  std::string str() const;
  /// Compact human form: "1/2", "3", "-i", "1/2+1/3*i".
  std::string pretty() const;

  /// Accepts the canonical form and the compact form. Decimal input is
  /// rejected (ParseError) so no float ever becomes a rational silently.
  static Scalar parse(std::string_view text);

 private:
  void canonicalize();

  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace necklace
