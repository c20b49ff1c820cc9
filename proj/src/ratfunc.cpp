#include "necklace/ratfunc.hpp"

#include "necklace/error.hpp"

namespace necklace {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.vars(), Scalar(1))) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  auto [n, d] = align(num, den);
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.vars(), Scalar(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const Scalar& lc = den_.leading().coeff;
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc ratfunc_simplify(const Poly& num, const Poly& den) { return RatFunc(num, den); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    auto [a, b] = align(num_, o.num_);
    num_ = a + b;
    den_ = Poly::constant(num_.vars(), Scalar(1));
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly da = *divide_exact(den_, g);
  Poly db = *divide_exact(o.den_, g);
  num_ = num_ * db + o.num_ * da;
  den_ = den_ * db;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFunc(Poly(align(num_, o.num_).first.vars()));
    return *this;
  }
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    den_ = Poly::constant(num_.vars(), Scalar(1));
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant()) {
    Poly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = *divide_exact(n1, g);
      d2 = *divide_exact(d2, g);
    }
  }
  if (!d1.is_constant()) {
    Poly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = *divide_exact(n2, g);
      d1 = *divide_exact(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  auto [n, d] = align(num_, den_);
  num_ = std::move(n);
  den_ = std::move(d);
  const Scalar lc = den_.leading().coeff;
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator*(RatFunc a, const Scalar& c) {
  if (c.is_zero()) return RatFunc(Poly(a.num_.vars()));
  a.num_ = a.num_.scaled(c);
  return a;
}

bool operator==(const RatFunc& a, const RatFunc& b) { return (a.num_ * b.den_ - b.num_ * a.den_).is_zero(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Canonical{});
}

RatFunc RatFunc::derivative(std::size_t var) const {
  if (is_polynomial()) return RatFunc(num_.derivative(var).scaled(den_.leading().coeff.inverse()));
  Poly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RatFunc(n, den_ * den_);
}

RatFunc RatFunc::conj() const { return RatFunc(num_.conj(), den_.conj()); }

Scalar RatFunc::eval(std::span<const Scalar> point) const {
  Scalar d = den_.eval(point);
  if (d.is_zero()) throw Error(ErrorCode::ZeroDenominator, "evaluation at a pole");
  return num_.eval(point) / d;
}

std::complex<double> RatFunc::eval(std::span<const double> point) const {
  return num_.eval(point) / den_.eval(point);
}

RatFunc RatFunc::compose(std::span<const RatFunc> values) const {
  RatFunc n = num_.compose(values);
  if (is_polynomial()) return n * den_.leading().coeff.inverse();
  return n / den_.compose(values);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace necklace
