#pragma once

// Random generators and independent reference computations shared by the
// unit tests and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "necklace/calculus.hpp"
#include "necklace/formal.hpp"
#include "necklace/transform.hpp"

namespace testkit {

using namespace necklace;

inline Scalar random_scalar(std::mt19937_64& rng, bool complex = false) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  Scalar s = Scalar::rational(num(rng), den(rng));
  if (complex) s += Scalar::rational(num(rng), den(rng)) * Scalar::imaginary_unit();
  return s;
}

inline Poly random_poly(std::mt19937_64& rng, const VarsPtr& vars, int max_degree = 3, int max_terms = 3,
                        bool complex = false) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars->size() - 1);
  std::vector<Poly::Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Poly::Term t;
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) ++t.exp[pick(rng)];
    t.coeff = random_scalar(rng, complex);
    if (!t.coeff.is_zero()) terms.push_back(t);
  }
  return Poly::from_terms(vars, std::move(terms));
}

/// Homogeneous multivector of the given degree with sparse polynomial coefficients.
inline Multivector random_multivector(std::mt19937_64& rng, const ChartPtr& chart, int degree, int max_degree = 3) {
  Multivector out(chart);
  const std::size_t n = chart->dimension();
  std::bernoulli_distribution keep(0.6);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (mask_degree(m) != degree || !keep(rng)) continue;
    out.add(m, RatFunc(random_poly(rng, chart->vars, max_degree)));
  }
  return out;
}

inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

/// Number of random triples violating graded antisymmetry, Leibniz or Jacobi.
inline int schouten_identity_failures(const ChartPtr& chart, int triples, std::uint64_t seed, int max_deg) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, std::min<int>(3, static_cast<int>(chart->dimension())));
  int failures = 0;
  for (int k = 0; k < triples; ++k) {
    const int p = deg(rng), q = deg(rng), r = deg(rng);
    const Multivector P = random_multivector(rng, chart, p, max_deg);
    const Multivector Q = random_multivector(rng, chart, q, max_deg);
    const Multivector R = random_multivector(rng, chart, r, max_deg);
    const bool anti = schouten(P, Q) == -(sign_pow((p - 1) * (q - 1)) * schouten(Q, P));
    const bool leibniz =
        schouten(P, wedge(Q, R)) == wedge(schouten(P, Q), R) + sign_pow((p - 1) * q) * wedge(Q, schouten(P, R));
    const Multivector jac = sign_pow((p - 1) * (r - 1)) * schouten(P, schouten(Q, R)) +
                            sign_pow((q - 1) * (p - 1)) * schouten(Q, schouten(R, P)) +
                            sign_pow((r - 1) * (q - 1)) * schouten(R, schouten(P, Q));
    if (!anti || !leibniz || !jac.is_zero()) ++failures;
  }
  return failures;
}

/// {f,g} = sum_{i<j} pi^{ij} (d_i f d_j g - d_j f d_i g), straight from the components.
inline RatFunc bracket_oracle(const Multivector& pi, const RatFunc& f, const RatFunc& g) {
  const ChartPtr& ch = pi.chart();
  RatFunc out = ch->constant(Scalar(0));
  for (const auto& [m, c] : pi.components()) {
    std::size_t i = 0;
    while (!(m & bit(i))) ++i;
    std::size_t j = i + 1;
    while (!(m & bit(j))) ++j;
    out += c * (ch->derive(i, f) * ch->derive(j, g) - ch->derive(j, f) * ch->derive(i, g));
  }
  return out;
}

/// The mode differential written out from the recursions
///   d f : xi-part  i n f_{m-1} I^m,  eta-part -m f_m I^m
///   d X : h_0 = -a_0,  h_m = (m-1) a_m + i n b_{m-1}.
inline Matrix recursion_d0(long n, int M) {
  Matrix d(ModeElement::window(M, 1), ModeElement::window(M, 0));
  const Scalar in = Scalar(0, n);
  const std::size_t na = static_cast<std::size_t>(M) + 2;
  for (std::size_t m = 0; m <= static_cast<std::size_t>(M); ++m) {
    d.at(m + 1, m) = in;
    d.at(na + m, m) = Scalar(-static_cast<long>(m));
  }
  return d;
}

inline Matrix recursion_d1(long n, int M) {
  Matrix d(ModeElement::window(M, 2), ModeElement::window(M, 1));
  const Scalar in = Scalar(0, n);
  const std::size_t na = static_cast<std::size_t>(M) + 2;
  for (std::size_t m = 0; m < na; ++m) d.at(m, m) = m == 0 ? Scalar(-1) : Scalar(static_cast<long>(m) - 1);
  for (std::size_t m = 0; m <= static_cast<std::size_t>(M); ++m) d.at(m + 1, na + m) = in;
  return d;
}

/// Divergence of a vector field with respect to density*dx^dy by central differences.
inline double numeric_divergence(const Multivector& field, const RatFunc& density, double x, double y,
                                 double h = 1e-5) {
  auto flux = [&](std::size_t i, double px, double py) {
    const double p[2] = {px, py};
    return (density.eval(std::span<const double>(p, 2)) * field.component(bit(i)).eval(std::span<const double>(p, 2))).real();
  };
  const double p[2] = {x, y};
  const double rho = density.eval(std::span<const double>(p, 2)).real();
  const double dx = (flux(0, x + h, y) - flux(0, x - h, y)) / (2 * h);
  const double dy = (flux(1, x, y + h) - flux(1, x, y - h)) / (2 * h);
  return (dx + dy) / rho;
}

/// Real form of a Moebius map w -> (alpha w + beta)/(gamma w + delta) between plane charts.
inline ChartMap moebius_map(const ChartPtr& src, const ChartPtr& tgt, const Scalar& alpha, const Scalar& beta,
                            const Scalar& gamma, const Scalar& delta) {
  const Scalar i = Scalar::imaginary_unit();
  auto real_form = [&](const ChartPtr& c, const Scalar& a, const Scalar& b, const Scalar& g, const Scalar& d) {
    const RatFunc w = RatFunc(c->var(0)) + i * RatFunc(c->var(1));
    const RatFunc F = (a * w + c->constant(b)) / (g * w + c->constant(d));
    const RatFunc Fb = F.conj();
    return std::vector<RatFunc>{Scalar::rational(1, 2) * (F + Fb), (Scalar(2) * i).inverse() * (F - Fb)};
  };
  // Inverse: w = (delta F - beta)/(-gamma F + alpha).
  return rational_map("moebius", src, tgt, real_form(src, alpha, beta, gamma, delta),
                      real_form(tgt, delta, -beta, -gamma, alpha));
}

inline ChartMap affine_map(const ChartPtr& src, const ChartPtr& tgt, const std::array<Scalar, 6>& k) {
  // (x, y) -> (k0 x + k1 y + k4, k2 x + k3 y + k5)
  const Scalar det = k[0] * k[3] - k[1] * k[2];
  const Scalar inv = det.inverse();
  const RatFunc x(src->var(0)), y(src->var(1));
  const RatFunc u(tgt->var(0)), v(tgt->var(1));
  const RatFunc uu = u - tgt->constant(k[4]);
  const RatFunc vv = v - tgt->constant(k[5]);
  return rational_map("affine", src, tgt,
                      {k[0] * x + k[1] * y + src->constant(k[4]), k[2] * x + k[3] * y + src->constant(k[5])},
                      {(k[3] * inv) * uu - (k[1] * inv) * vv, (k[0] * inv) * vv - (k[2] * inv) * uu});
}

}  // namespace testkit
