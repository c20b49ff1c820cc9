#pragma once

#include <memory>
#include <string>
#include <vector>

#include "necklace/ratfunc.hpp"

namespace necklace {

/// A coordinate chart. Multivector components are indexed by `coords`;
/// coefficients are rational functions in `vars`. For ordinary charts the two
/// coincide and coordinate derivations are partial derivatives. A chart may
/// instead carry an explicit commuting frame: derivation i acts on
/// coefficients as sum_j frame[i][j] * d/d vars[j]. The Fourier-mode charts use
/// this to realize d/dtheta on e^{i n theta}.
struct Chart {
  std::string name;
  std::vector<std::string> coords;
  VarsPtr vars;
  std::string domain_note;
  std::vector<std::vector<Poly>> frame;

  std::size_t dimension() const { return coords.size(); }
  bool has_coordinate_frame() const { return frame.empty(); }

  Poly var(std::size_t i) const { return Poly::variable(vars, i); }
  RatFunc constant(const Scalar& c) const { return RatFunc::constant(vars, c); }
  RatFunc derive(std::size_t i, const RatFunc& f) const;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::string name, std::vector<std::string> coords, std::string domain_note);

/// Charts compare by name; names are unique within the registry.
bool same_chart(const ChartPtr& a, const ChartPtr& b);
void require_same_chart(const ChartPtr& a, const ChartPtr& b);

namespace charts {

ChartPtr r4();            // (a, b, p, q) with u = a + i b, v = p + i q
ChartPtr w();             // (x, y) with w = x + i y, built from complex formulas
ChartPtr z();             // (X, Y) with z = X + i Y = 1/w, carries the stereographic atlas
ChartPtr xy();            // (x, y), real form of the w-chart
ChartPtr sphere();        // (x1, x2, x3) on the unit sphere
ChartPtr st();            // (s, t) on the open unit disk
ChartPtr st_rescaled();   // (s', t')
ChartPtr action_angle();  // (I, theta)
/// Mode-n chart: coords (I, theta), coefficient variables (I, E) with
/// E = e^{i n theta}; d/dtheta acts as i n E d/dE.
ChartPtr fourier_mode(long n);

/// Registry lookup by name; UnknownChart otherwise.
ChartPtr by_name(const std::string& name);
std::vector<ChartPtr> all();

}  // namespace charts
}  // namespace necklace
