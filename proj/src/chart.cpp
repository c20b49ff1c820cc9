#include "necklace/chart.hpp"

#include "necklace/error.hpp"

namespace necklace {

RatFunc Chart::derive(std::size_t i, const RatFunc& f) const {
  if (frame.empty()) return f.derivative(i);
  RatFunc out = constant(Scalar(0));
  for (std::size_t j = 0; j < frame[i].size(); ++j) {
    if (frame[i][j].is_zero()) continue;
    out += RatFunc(frame[i][j]) * f.derivative(j);
  }
  return out;
}

ChartPtr make_chart(std::string name, std::vector<std::string> coords, std::string domain_note) {
  auto c = std::make_shared<Chart>();
  c->name = std::move(name);
  c->vars = make_vars(coords);
  c->coords = std::move(coords);
  c->domain_note = std::move(domain_note);
  return c;
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) { return a == b || (a && b && a->name == b->name); }

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (!same_chart(a, b))
    throw Error(ErrorCode::ChartMismatch, "operands live on charts '" + (a ? a->name : "?") + "' and '" +
                                              (b ? b->name : "?") + "'");
}

namespace charts {

ChartPtr r4() {
  static const ChartPtr c = make_chart("r4", {"a", "b", "p", "q"}, "C^2 with u = a+ib, v = p+iq");
  return c;
}

ChartPtr w() {
  static const ChartPtr c = make_chart("w", {"x", "y"}, "w = x+iy, inhomogeneous chart w = v/u (covers the base point w=0)");
  return c;
}

ChartPtr z() {
  static const ChartPtr c = make_chart("z", {"X", "Y"}, "z = X+iY = u/v = 1/w, stereographic plane");
  return c;
}

ChartPtr xy() {
  static const ChartPtr c = make_chart("xy", {"x", "y"}, "real form of the w-chart, whole plane");
  return c;
}

ChartPtr sphere() {
  static const ChartPtr c = make_chart("sphere", {"x1", "x2", "x3"}, "unit sphere x1^2+x2^2+x3^2 = 1 in R^3");
  return c;
}

ChartPtr st() {
  static const ChartPtr c = make_chart("st", {"s", "t"}, "open unit disk s^2+t^2 < 1");
  return c;
}

ChartPtr st_rescaled() {
  static const ChartPtr c = make_chart("st_rescaled", {"s'", "t'"}, "rescaled disk s = alpha s', t = alpha t'");
  return c;
}

ChartPtr action_angle() {
  static const ChartPtr c = make_chart("action_angle", {"I", "theta"}, "annulus 0<|I|<1, theta periodic");
  return c;
}

ChartPtr fourier_mode(long n) {
  auto c = std::make_shared<Chart>();
  c->name = "mode_" + std::to_string(n);
  c->coords = {"I", "theta"};
  c->vars = make_vars({"I", "E"});
  c->domain_note = "formal neighborhood of I=0, Fourier mode e^{i n theta} represented by E";
  Poly zero(c->vars);
  Poly one = Poly::constant(c->vars, Scalar(1));
  Poly e = Poly::variable(c->vars, 1);
  c->frame = {{one, zero}, {zero, e.scaled(Scalar(0, n))}};
  return c;
}

std::vector<ChartPtr> all() { return {r4(), w(), z(), xy(), sphere(), st(), st_rescaled(), action_angle()}; }

ChartPtr by_name(const std::string& name) {
  for (const auto& c : all()) {
    if (c->name == name) return c;
  }
  throw Error(ErrorCode::UnknownChart, "no chart named '" + name + "'");
}

}  // namespace charts
}  // namespace necklace
