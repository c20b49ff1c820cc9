#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "necklace/linalg.hpp"
#include "necklace/multivector.hpp"

namespace necklace {

/// A truncated multivector of Fourier mode n in the action-angle model,
/// written in the odd variables xi = d_I and eta = d_theta:
///   sum f_m I^m + (sum a_m I^m) xi + (sum b_m I^m) eta + (sum h_m I^m) xi eta,
/// all times e^{i n theta}. Windows: f 0..M, a 0..M+1, b 0..M, h 0..M+1.
struct ModeElement {
  long n = 0;
  int M = 0;
  std::vector<Scalar> f, a, b, h;

  static ModeElement zero(long n, int M);
  /// Coordinates of the degree-k part: f, then a followed by b, then h.
  std::vector<Scalar> part(int degree) const;
  static ModeElement from_part(long n, int M, int degree, const std::vector<Scalar>& coords);
  static std::size_t window(int M, int degree);

  bool is_zero() const;
  std::optional<int> degree() const;

  /// Multivector on charts::fourier_mode(n).
  Multivector to_multivector() const;
  /// Throws OutOfRange when a term falls outside the windows and
  /// InvalidArgument when the input is not a mode-n polynomial multivector.
  static ModeElement from_multivector(const Multivector& mv, int M);

  friend bool operator==(const ModeElement&, const ModeElement&) = default;
  std::string str() const;
};

/// d0 : degree-0 window -> degree-1 window, d1 : degree-1 window -> degree-2 window,
/// both generated by applying [I xi eta, .] to basis elements.
struct TruncatedModeComplex {
  long n = 0;
  int M = 0;
  Matrix d0;
  Matrix d1;
};

TruncatedModeComplex build_mode_complex(long n, int M);

struct CohomologyReport {
  std::string scope;  // "mode", "annulus"
  long mode = 0;
  int modes_N = 0;
  int M = 0;
  std::array<int, 3> dims{};
  std::array<std::vector<ModeElement>, 3> representatives;
  /// Representatives on a chart (fourier mode chart for single modes, st for the annulus).
  std::array<std::vector<Multivector>, 3> chart_representatives;
  std::vector<std::string> representative_labels;
  /// Cap values at which the dimensions were recomputed and found equal.
  std::vector<int> stable_M;
  std::vector<int> stable_N;
  bool cocycles_verified = false;
  bool independence_verified = false;
};

/// Exact ranks over Q(i); representatives extend the image basis by kernel
/// vectors. Dimensions are re-derived at M+1 as a stability certificate.
CohomologyReport mode_cohomology(long n, int M);

struct ZeroModeBlock {
  int m = 0;
  std::array<int, 3> dims{};
  std::array<std::vector<ModeElement>, 3> representatives;
};

/// The n = 0 complex splits by I-degree; one block per m = 0..M.
std::vector<ZeroModeBlock> zero_mode_split(int M);

/// Modes |n| <= N aggregated; representatives come from n = 0 and are also
/// translated to the st chart of the normalized model (necklace radius 1).
CohomologyReport annulus_cohomology(int N, int M);

/// A primitive within the windows, or nothing. Degree-2 inputs are solved with
/// a_0, b_0, a_2.. as preferred pivots so that the free unknowns a_1, b_m (m>=1)
/// vanish.
std::optional<ModeElement> is_coboundary_in_mode(const ModeElement& elem);

/// Applies the truncated differential to a homogeneous element.
ModeElement mode_differential(const ModeElement& elem);

/// Translates a mode-0 element to the st chart for necklace radius^2 = R2:
/// I = (s^2+t^2)/R2 - 1, xi = d_I = (R2/(2(s^2+t^2)))(s d_s + t d_t), eta = s d_t - t d_s.
Multivector mode0_to_disk(const ModeElement& elem, const Scalar& radius_squared);

}  // namespace necklace
