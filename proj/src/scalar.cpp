#include "necklace/scalar.hpp"

#include <cctype>
#include <utility>

#include "necklace/error.hpp"

namespace necklace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::WrongChart: return "WrongChart";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnknownChart: return "UnknownChart";
    case ErrorCode::NotPoisson: return "NotPoisson";
    case ErrorCode::ZeroDensity: return "ZeroDensity";
    case ErrorCode::SamplePointOutsideDomain: return "SamplePointOutsideDomain";
    case ErrorCode::DegenerateJacobian: return "DegenerateJacobian";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::SingularOnLoop: return "SingularOnLoop";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canonicalize(); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  return Scalar(mpq_class(num, den));
}

void Scalar::canonicalize() {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero scalar");
  if (is_real()) return Scalar(1 / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string fraction(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string compact(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return fraction(q);
}

mpq_class parse_rational(std::string_view body, std::string_view whole) {
  if (body.empty()) throw Error(ErrorCode::ParseError, "empty number in '" + std::string(whole) + "'");
  auto slash = body.find('/');
  auto digits = [&](std::string_view s) {
    if (s.empty()) throw Error(ErrorCode::ParseError, "malformed number in '" + std::string(whole) + "'");
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(ErrorCode::ParseError, "unexpected '" + std::string(1, ch) + "' in '" + std::string(whole) + "'");
    }
    return mpz_class(std::string(s));
  };
  if (slash == std::string_view::npos) return mpq_class(digits(body));
  mpz_class num = digits(body.substr(0, slash));
  mpz_class den = digits(body.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(whole) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::str() const {
  std::string out = fraction(re_);
  if (sgn(im_) != 0) {
    out += sgn(im_) > 0 ? "+" : "-";
    out += fraction(abs(im_)) + "*i";
  }
  return out;
}

std::string Scalar::pretty() const {
  if (is_real()) return compact(re_);
  std::string imag;
  mpq_class a = abs(im_);
  imag = (a == 1) ? "i" : compact(a) + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return compact(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  for (char ch : s) {
    if (ch == '.' || ch == 'e' || ch == 'E')
      throw Error(ErrorCode::ParseError, "decimal input '" + s + "' rejected; use an exact fraction like 1/2");
  }
  mpq_class re = 0, im = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw Error(ErrorCode::ParseError, "malformed scalar '" + s + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string_view term(s.data() + pos, end - pos);
    if (!term.empty() && term.back() == 'i') {
      term.remove_suffix(1);
      if (!term.empty() && term.back() == '*') term.remove_suffix(1);
      mpq_class v = term.empty() ? mpq_class(1) : parse_rational(term, s);
      im += sign * v;
    } else {
      re += sign * parse_rational(term, s);
    }
    any = true;
    pos = end;
  }
  return Scalar(re, im);
}

}  // namespace necklace
