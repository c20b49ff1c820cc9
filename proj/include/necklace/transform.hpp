#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "necklace/multivector.hpp"

namespace necklace {

enum class MapKind { rational_exact, algebraic_numeric };

std::string_view to_string(MapKind kind);

/// Image point and row-major Jacobian (target rows x source columns).
struct NumericJet {
  std::vector<double> image;
  std::vector<double> jacobian;
};

struct ChartMap {
  std::string name;
  ChartPtr source;
  ChartPtr target;
  MapKind kind = MapKind::rational_exact;
  /// Target coordinates as functions of the source variables (rational maps only).
  std::vector<RatFunc> components;
  /// Source coordinates as functions of the target variables; empty if none registered.
  std::vector<RatFunc> inverse;
  std::vector<std::string> formulas;
  std::vector<std::string> inverse_formulas;
  std::function<NumericJet(std::span<const double>)> numeric;
  /// Draws a point from the interior of the source domain.
  std::function<std::vector<double>(std::mt19937_64&)> sample;

  bool has_inverse() const { return !inverse.empty(); }
};

/// Rational map with exact Jacobian; numeric evaluation is derived from the
/// exact components. `sample` defaults to the box [-2,2]^n.
ChartMap rational_map(std::string name, ChartPtr source, ChartPtr target, std::vector<RatFunc> components,
                     std::vector<RatFunc> inverse = {});

/// g o f for rational maps; the inverse is f^-1 o g^-1 when both exist.
ChartMap compose(const ChartMap& g, const ChartMap& f);

/// f o F for a function f on the target chart.
RatFunc pullback(const RatFunc& f, const ChartMap& map);

/// Exact Jacobian entries dF_i/dx_j.
std::vector<std::vector<RatFunc>> jacobian(const ChartMap& map);

/// Transports a multivector along an invertible rational map: degree-k parts
/// pick up the k-th exterior power of the Jacobian and are then re-expressed
/// in the target variables through the registered inverse.
Multivector pushforward_rational(const Multivector& mv, const ChartMap& map);

struct ValidationResult {
  bool ok = false;
  double max_error = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// Compares J A J^T (bivectors), J v (vector fields) or f (functions) at
/// random source points against the target presentation at the image point.
ValidationResult validate_pushforward_numeric(const Multivector& src, const Multivector& tgt, const ChartMap& map,
                                              int samples, double tol, std::uint64_t seed = 42);

namespace atlas {

ChartMap w_to_z();
ChartMap z_to_w();
ChartMap w_to_xy();
ChartMap z_to_sphere();
/// s = x / sqrt(1+x^2+y^2), t = y / sqrt(1+x^2+y^2).
ChartMap xy_to_st();
/// I = (s^2+t^2)/R^2 - 1, theta = atan2(t, s); samples the annulus
/// R^2(1-delta) < s^2+t^2 < R^2(1+delta), clipped to the unit disk.
ChartMap st_to_action_angle(const Scalar& radius_squared, const Scalar& delta = Scalar::rational(1, 2));
/// s' = s/alpha, t' = t/alpha.
ChartMap rescale_st(const Scalar& alpha);

}  // namespace atlas

/// The registered transitions between the named charts.
std::vector<ChartMap> stereographic_atlas();

}  // namespace necklace
