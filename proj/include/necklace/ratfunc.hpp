#pragma once

#include <complex>
#include <span>
#include <string>

#include "necklace/poly.hpp"

namespace necklace {

/// Rational function num/den in canonical form: gcd(num, den) is a unit, the
/// grlex-leading coefficient of den is 1, and zero is stored as 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(num_.vars(), Scalar(1))) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const VarsPtr& vars, const Scalar& c) { return RatFunc(Poly::constant(vars, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc derivative(std::size_t var) const;
  RatFunc conj() const;
  RatFunc inverse() const;
  RatFunc pow(int k) const;

  Scalar eval(std::span<const Scalar> point) const;
  std::complex<double> eval(std::span<const double> point) const;
  RatFunc compose(std::span<const RatFunc> values) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Scalar& c);
  friend RatFunc operator*(const Scalar& c, RatFunc a) { return std::move(a) * c; }
  /// a/b == c/d iff a*d - c*b == 0.
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Poly num_;
  Poly den_;
};

/// Canonical form of num/den; ZeroDenominator when den = 0.
RatFunc ratfunc_simplify(const Poly& num, const Poly& den);

}  // namespace necklace
