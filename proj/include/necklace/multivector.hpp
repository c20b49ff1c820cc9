#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "necklace/chart.hpp"
#include "necklace/error.hpp"

namespace necklace {

/// Sorted index subset of chart coordinates, bit i set when coordinate i is present.
using Mask = std::uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }
inline Mask bit(std::size_t i) { return Mask{1} << i; }

/// Sign of xi_a xi_b = sign * xi_{a|b} for anticommuting generators; 0 when
/// the subsets overlap.
inline int wedge_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  int swaps = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    Mask low = rest & (~rest + 1);
    swaps += std::popcount(a & ~((low << 1) - 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Right derivative d/dxi_i of xi_a: moving xi_i to the right end.
inline int right_derivative_sign(Mask a, std::size_t i) {
  return (std::popcount(a & ~((bit(i) << 1) - 1)) & 1) ? -1 : 1;
}

/// Left derivative d/dxi_i of xi_a: moving xi_i to the left end.
inline int left_derivative_sign(Mask a, std::size_t i) { return (std::popcount(a & (bit(i) - 1)) & 1) ? -1 : 1; }

enum class Variance { contravariant, covariant };

/// Graded alternating field on a chart: a formal sum over sorted index
/// subsets with rational-function coefficients. Contravariant values are
/// multivector fields, covariant values are differential forms.
template <Variance V>
class Graded {
 public:
  explicit Graded(ChartPtr chart) : chart_(std::move(chart)) {}

  static Graded function(ChartPtr chart, const RatFunc& f) {
    Graded g(std::move(chart));
    g.set(0, f);
    return g;
  }
  static Graded basis(ChartPtr chart, Mask m, const RatFunc& coeff) {
    Graded g(std::move(chart));
    g.set(m, coeff);
    return g;
  }
  static Graded basis(ChartPtr chart, Mask m) {
    RatFunc one = chart->constant(Scalar(1));
    return basis(std::move(chart), m, one);
  }

  const ChartPtr& chart() const { return chart_; }
  const std::map<Mask, RatFunc>& components() const { return comps_; }

  RatFunc component(Mask m) const {
    auto it = comps_.find(m);
    return it == comps_.end() ? chart_->constant(Scalar(0)) : it->second;
  }

  void set(Mask m, const RatFunc& f) {
    if (m >> chart_->dimension() != 0) throw Error(ErrorCode::InvalidArgument, "index outside chart dimension");
    if (f.is_zero()) {
      comps_.erase(m);
    } else {
      comps_.insert_or_assign(m, f);
    }
  }

  void add(Mask m, const RatFunc& f) {
    if (f.is_zero()) return;
    auto it = comps_.find(m);
    if (it == comps_.end()) {
      set(m, f);
      return;
    }
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }

  bool is_zero() const { return comps_.empty(); }

  /// Degree when homogeneous (zero counts as homogeneous of any degree and reports nullopt).
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, f] : comps_) {
      if (d && *d != mask_degree(m)) return std::nullopt;
      d = mask_degree(m);
    }
    return d;
  }

  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  Graded part(int k) const {
    Graded g(chart_);
    for (const auto& [m, f] : comps_) {
      if (mask_degree(m) == k) g.comps_.emplace(m, f);
    }
    return g;
  }

  Graded conj() const {
    Graded g(chart_);
    for (const auto& [m, f] : comps_) g.set(m, f.conj());
    return g;
  }

  Graded& operator+=(const Graded& o) {
    require_same_chart(chart_, o.chart_);
    for (const auto& [m, f] : o.comps_) add(m, f);
    return *this;
  }
  Graded& operator-=(const Graded& o) {
    require_same_chart(chart_, o.chart_);
    for (const auto& [m, f] : o.comps_) add(m, -f);
    return *this;
  }
  Graded operator-() const {
    Graded g(chart_);
    for (const auto& [m, f] : comps_) g.comps_.emplace(m, -f);
    return g;
  }
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(const RatFunc& f, const Graded& a) {
    Graded g(a.chart_);
    for (const auto& [m, c] : a.comps_) g.set(m, f * c);
    return g;
  }
  friend Graded operator*(const Scalar& s, const Graded& a) {
    Graded g(a.chart_);
    for (const auto& [m, c] : a.comps_) g.set(m, c * s);
    return g;
  }
  friend bool operator==(const Graded& a, const Graded& b) {
    if (!same_chart(a.chart_, b.chart_)) return false;
    if (a.comps_.size() != b.comps_.size()) return false;
    for (const auto& [m, f] : a.comps_) {
      auto it = b.comps_.find(m);
      if (it == b.comps_.end() || !(it->second == f)) return false;
    }
    return true;
  }
  friend bool operator!=(const Graded& a, const Graded& b) { return !(a == b); }

  /// Index label such as "s^t" (multivectors) or "ds^dt" (forms); "1" for degree 0.
  std::string label(Mask m) const {
    if (m == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < chart_->dimension(); ++i) {
      if (!(m & bit(i))) continue;
      if (!out.empty()) out += "^";
      out += (V == Variance::covariant ? "d" : "d_") + chart_->coords[i];
    }
    return out;
  }

  std::string str() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [m, f] : comps_) {
      if (!out.empty()) out += " + ";
      out += "(" + f.str() + ")";
      if (m != 0) out += " " + label(m);
    }
    return out;
  }

 private:
  ChartPtr chart_;
  std::map<Mask, RatFunc> comps_;
};

using Multivector = Graded<Variance::contravariant>;
using DiffForm = Graded<Variance::covariant>;

/// Vector field f * d/dcoord_i.
inline Multivector vector_field(const ChartPtr& chart, std::size_t i, const RatFunc& f) {
  return Multivector::basis(chart, bit(i), f);
}

}  // namespace necklace
