#pragma once

#include <string>
#include <vector>

#include "necklace/calculus.hpp"

namespace necklace {

/// g d_w ^ d_wbar written out in real coordinates (x, y) of a two-dimensional
/// chart, with d_w = (d_x - i d_y)/2 and d_wbar = (d_x + i d_y)/2.
Multivector wirtinger_bivector(const ChartPtr& chart, const RatFunc& g);

/// The coordinate form of the multiplicative structure on SU(2), extended to
/// C^2 = R^4 with u = a + i b, v = p + i q.
PoissonStructure make_su2_bivector_r4();

/// Bruhat structure pi_1 on the w, z or xy chart.
PoissonStructure make_bruhat(const std::string& chart_id);

/// The invariant structure pi (inverse of the round area form) on
/// w, z, xy, st or action_angle (the latter normalized to R = 1).
PoissonStructure make_standard(const std::string& chart_id);

/// pi_c = pi_1 + (c-1) pi on w, z, xy or st; on action_angle the normalized
/// local model I d_I ^ d_theta, independent of c.
PoissonStructure make_pi_family(const std::string& chart_id, const Scalar& c);

/// True iff [pi, f] = 0 exactly.
bool casimir_check(const PoissonStructure& pi, const RatFunc& f);

/// Coefficient of the invariant area form omega = density dx^dy, the inverse
/// of the standard structure, on a two-dimensional chart.
RatFunc omega_density(const std::string& chart_id);

/// The height function x3 pulled back to a plane chart (w, xy or z).
RatFunc height_x3(const std::string& chart_id);

/// Checks pi_1 = (1 - x3) pi after substituting the stereographic
/// parametrization, on the z chart and the xy chart.
bool bruhat_is_height_times_standard();

struct NecklaceGeometry {
  Scalar c;
  Scalar radius_squared;  // (1-c)/2, exact
  double radius = 0.0;
  Scalar delta;
  /// s^2+t^2 bounds of the annulus around the necklace, clipped inside the disk.
  Scalar annulus_inner;
  Scalar annulus_outer;
  /// True when the s,t coefficient of pi_c was confirmed to be
  /// (1/2)(s^2+t^2-radius_squared) by exact division.
  bool zero_locus_verified = false;
};

/// Requires |c| < 1; throws OutOfRange otherwise. The annulus is
/// R^2(1-delta) < s^2+t^2 < R^2 + delta(1-R^2).
NecklaceGeometry necklace_radius(const Scalar& c, const Scalar& delta = Scalar::rational(1, 2));

struct AreaResult {
  double value = 0.0;
  double closed_form = 0.0;
  int quad_points = 0;
};

/// Signed symplectic area of (S^2, pi_c), |c| > 1, by Gauss-Legendre quadrature
/// after the substitution r^2 = tau/(1-tau). Throws DegenerateFamily for
/// |c| <= 1 and InvalidArgument for quad_points < 64.
AreaResult symplectic_area(const Scalar& c, int quad_points);

/// 2 pi ln((c+1)/(c-1)).
double area_closed_form(const Scalar& c);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace necklace
