#pragma once

#include "necklace/multivector.hpp"
#include "necklace/poisson.hpp"

namespace necklace {

template <Variance V>
Graded<V> wedge(const Graded<V>& a, const Graded<V>& b) {
  require_same_chart(a.chart(), b.chart());
  Graded<V> out(a.chart());
  for (const auto& [ma, fa] : a.components()) {
    for (const auto& [mb, fb] : b.components()) {
      int sign = wedge_sign(ma, mb);
      if (sign == 0) continue;
      out.add(ma | mb, sign > 0 ? fa * fb : -(fa * fb));
    }
  }
  return out;
}

/// Schouten-Nijenhuis bracket, evaluated term by term in the odd-coordinate
/// picture:
///   [P,Q] = sum_i (P <-d/dxi_i)(D_i Q) - (-1)^{(p-1)(q-1)} (Q <-d/dxi_i)(D_i P).
/// With this normalization [X,f] = X(f) and [X,Y] is the Lie bracket.
Multivector schouten(const Multivector& a, const Multivector& b);

/// Odd Laplacian sum_i d^2/(dx_i dxi_i) with the left odd derivative.
Multivector odd_laplacian(const Multivector& a);

/// Second, independent evaluator of the bracket through the odd Laplacian:
///   [a,b] = (-1)^{|a|+1} (L(ab) - L(a) b - (-1)^{|a|} a L(b)).
Multivector schouten_bv(const Multivector& a, const Multivector& b);

/// X(f) for a vector field X.
RatFunc apply(const Multivector& field, const RatFunc& f);

DiffForm differential(const ChartPtr& chart, const RatFunc& f);
DiffForm de_rham_d(const DiffForm& form);
/// Left contraction by a vector field.
DiffForm interior(const Multivector& field, const DiffForm& form);

/// L_X A = [X, A].
Multivector lie_derivative(const Multivector& field, const Multivector& tensor);
/// Cartan formula d i_X + i_X d.
DiffForm lie_derivative(const Multivector& field, const DiffForm& form);

/// d_pi = [pi, .].
Multivector d_pi(const PoissonStructure& pi, const Multivector& mv);

/// {f,g} = pi(df, dg).
RatFunc poisson_bracket(const Multivector& pi, const RatFunc& f, const RatFunc& g);
RatFunc poisson_bracket(const PoissonStructure& pi, const RatFunc& f, const RatFunc& g);

/// alpha -> pi(alpha, .).
Multivector pi_sharp(const Multivector& pi, const DiffForm& alpha);
Multivector pi_sharp(const PoissonStructure& pi, const DiffForm& alpha);

/// X_h = [pi, h] = -pi_sharp(dh), so X_h(k) = {k, h}.
Multivector hamiltonian_vf(const PoissonStructure& pi, const RatFunc& h);

/// Divergence of X with respect to the volume density * dx_1^...^dx_n.
RatFunc divergence(const Multivector& field, const RatFunc& density);

/// Vector field D with L_{X_h} mu = D(h) mu for mu = density * coordinate volume.
Multivector modular_field(const Multivector& pi, const RatFunc& density);
Multivector modular_field(const PoissonStructure& pi, const RatFunc& density);

/// Inverse 2-form (1/g) dx^dy of a two-dimensional bivector g d_x^d_y.
DiffForm symplectic_form(const Multivector& pi);

}  // namespace necklace
