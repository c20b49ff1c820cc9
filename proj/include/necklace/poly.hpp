#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "necklace/scalar.hpp"

namespace necklace {

inline constexpr std::size_t kMaxVars = 8;

using Monomial = std::array<std::uint16_t, kMaxVars>;
using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

VarsPtr make_vars(VarList names);

int total_degree(const Monomial& m);
/// Graded lexicographic order: higher total degree first, ties broken by
/// comparing exponents from the first variable on.
bool grlex_greater(const Monomial& a, const Monomial& b);

class RatFunc;

/// Sparse multivariate polynomial over Q(i) with named variables.
/// Terms are kept sorted in descending grlex order with no zero coefficient,
/// so two polynomials over the same variables are equal iff their term
/// vectors are equal.
class Poly {
 public:
  struct Term {
    Monomial exp{};
    Scalar coeff;
  };

  Poly() : vars_(empty_vars()) {}
  explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}

  static Poly constant(VarsPtr vars, const Scalar& c);
  static Poly variable(VarsPtr vars, std::size_t index);
  static Poly monomial(VarsPtr vars, const Monomial& exp, const Scalar& c);
  /// Builds from unsorted terms; like terms are combined.
  static Poly from_terms(VarsPtr vars, std::vector<Term> terms);

  const VarsPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Scalar constant_term() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  const Term& leading() const { return terms_.front(); }

  Poly derivative(std::size_t var) const;
  Poly scaled(const Scalar& c) const;
  Poly conj() const;
  Poly pow(unsigned k) const;
  /// Same polynomial re-expressed over `vars`, which must contain every
  /// variable this polynomial actually uses.
  Poly with_vars(const VarsPtr& vars) const;

  Scalar eval(std::span<const Scalar> point) const;
  std::complex<double> eval(std::span<const double> point) const;
  std::complex<double> eval(std::span<const std::complex<double>> point) const;
  /// Substitutes values[i] for variable i.
  RatFunc compose(std::span<const RatFunc> values) const;
  Poly compose_poly(std::span<const Poly> values) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a.scaled(c); }
  friend Poly operator*(const Scalar& c, Poly a) { return a.scaled(c); }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

 private:
  static const VarsPtr& empty_vars();
  void prune();

  VarsPtr vars_;
  std::vector<Term> terms_;

  friend std::pair<Poly, Poly> align(const Poly& a, const Poly& b);
};

/// Brings two polynomials onto one variable list (union, first operand order).
std::pair<Poly, Poly> align(const Poly& a, const Poly& b);

/// Scales so that the grlex-leading coefficient is 1 (zero stays zero).
Poly monic(const Poly& p);

/// Quotient when b divides a exactly, otherwise nullopt. Throws
/// ZeroDenominator when b is zero.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Monic greatest common divisor; BothZero when a = b = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Coefficients of p viewed as a polynomial in variable `var`; entry k is the
/// coefficient of var^k and does not involve var.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var);

}  // namespace necklace
