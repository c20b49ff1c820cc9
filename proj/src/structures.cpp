#include "necklace/structures.hpp"

#include <cmath>
#include <numbers>

#include "necklace/error.hpp"

namespace necklace {

namespace {

const Scalar kHalf = Scalar::rational(1, 2);
const Scalar kQuarter = Scalar::rational(1, 4);
const Scalar kI = Scalar::imaginary_unit();

RatFunc v(const ChartPtr& c, std::size_t i) { return RatFunc(c->var(i)); }

RatFunc r_squared(const ChartPtr& c) { return v(c, 0) * v(c, 0) + v(c, 1) * v(c, 1); }

Multivector field(const ChartPtr& c, std::vector<std::pair<std::size_t, Scalar>> parts) {
  Multivector out(c);
  for (const auto& [i, s] : parts) out.add(bit(i), c->constant(s));
  return out;
}

// d/du and d/dubar for the complex coordinate whose real and imaginary parts
// are coordinates re and im of the chart.
Multivector d_holo(const ChartPtr& c, std::size_t re, std::size_t im) {
  return field(c, {{re, kHalf}, {im, -kHalf * kI}});
}
Multivector d_antiholo(const ChartPtr& c, std::size_t re, std::size_t im) {
  return field(c, {{re, kHalf}, {im, kHalf * kI}});
}

ChartPtr plane_chart(const std::string& id) {
  if (id == "w" || id == "z" || id == "xy") return charts::by_name(id);
  throw Error(ErrorCode::UnknownChart, "'" + id + "' is not one of w, z, xy");
}

}  // namespace

Multivector wirtinger_bivector(const ChartPtr& chart, const RatFunc& g) {
  if (chart->dimension() != 2) throw Error(ErrorCode::InvalidArgument, "Wirtinger bivector needs a plane chart");
  return g * wedge(d_holo(chart, 0, 1), d_antiholo(chart, 0, 1));
}

PoissonStructure make_su2_bivector_r4() {
  const ChartPtr c = charts::r4();
  const RatFunc u = v(c, 0) + kI * v(c, 1);
  const RatFunc vv = v(c, 2) + kI * v(c, 3);
  const RatFunc ubar = u.conj();
  const RatFunc vbar = vv.conj();
  const Multivector du = d_holo(c, 0, 1), dubar = d_antiholo(c, 0, 1);
  const Multivector dv = d_holo(c, 2, 3), dvbar = d_antiholo(c, 2, 3);

  Multivector pi = (-kI * (vv * vbar)) * wedge(du, dubar);
  Multivector uv = (kI * (u * vv)) * wedge(du, dv);
  Multivector uvbar = (kI * (u * vbar)) * wedge(du, dvbar);
  pi += kHalf * (uv + uv.conj());
  pi += kHalf * (uvbar + uvbar.conj());
  return PoissonStructure(pi, "pi_SU2");
}

PoissonStructure make_bruhat(const std::string& chart_id) {
  const ChartPtr c = plane_chart(chart_id);
  const RatFunc one = c->constant(Scalar(1));
  const RatFunc r2 = r_squared(c);
  if (chart_id == "w") return PoissonStructure(wirtinger_bivector(c, -kI * r2 * (one + r2)), "pi_1");
  if (chart_id == "z") return PoissonStructure(wirtinger_bivector(c, -kI * (one + r2)), "pi_1");
  return PoissonStructure(Multivector::basis(c, 0b11, kHalf * r2 * (one + r2)), "pi_1");
}

PoissonStructure make_standard(const std::string& chart_id) {
  if (chart_id == "st") return PoissonStructure(Multivector::basis(charts::st(), 0b11, charts::st()->constant(kQuarter)), "pi");
  if (chart_id == "action_angle")
    return PoissonStructure(Multivector::basis(charts::action_angle(), 0b11, charts::action_angle()->constant(kHalf)),
                            "pi");
  const ChartPtr c = plane_chart(chart_id);
  const RatFunc one = c->constant(Scalar(1));
  const RatFunc q = (one + r_squared(c)).pow(2);
  if (chart_id == "w") return PoissonStructure(wirtinger_bivector(c, Scalar::rational(-1, 2) * kI * q), "pi");
  return PoissonStructure(Multivector::basis(c, 0b11, kQuarter * q), "pi");
}

PoissonStructure make_pi_family(const std::string& chart_id, const Scalar& c) {
  if (!c.is_real()) throw Error(ErrorCode::InvalidArgument, "the family parameter c must be real");
  const std::string label = "pi_c";
  if (chart_id == "action_angle") {
    const ChartPtr ch = charts::action_angle();
    return PoissonStructure(Multivector::basis(ch, 0b11, v(ch, 0)), label, c);
  }
  if (chart_id == "st") {
    const ChartPtr ch = charts::st();
    RatFunc coeff = kHalf * (r_squared(ch) - ch->constant((Scalar(1) - c) * kHalf));
    return PoissonStructure(Multivector::basis(ch, 0b11, coeff), label, c);
  }
  const ChartPtr ch = plane_chart(chart_id);
  const RatFunc one = ch->constant(Scalar(1));
  const RatFunc r2 = r_squared(ch);
  if (chart_id == "w") {
    RatFunc g = Scalar::rational(-1, 2) * kI * (one + r2) * (ch->constant(c + Scalar(1)) * r2 + ch->constant(c - Scalar(1)));
    return PoissonStructure(wirtinger_bivector(ch, g), label, c);
  }
  if (chart_id == "z") {
    RatFunc g = kQuarter * (one + r2) * (ch->constant(c - Scalar(1)) * r2 + ch->constant(c + Scalar(1)));
    return PoissonStructure(Multivector::basis(ch, 0b11, g), label, c);
  }
  RatFunc g = kQuarter * (one + r2) * (ch->constant(c + Scalar(1)) * r2 + ch->constant(c - Scalar(1)));
  return PoissonStructure(Multivector::basis(ch, 0b11, g), label, c);
}

bool casimir_check(const PoissonStructure& pi, const RatFunc& f) {
  if (f.num().vars() != pi.chart()->vars && !f.is_constant())
    throw Error(ErrorCode::ChartMismatch, "function is not expressed in the variables of chart '" + pi.chart()->name + "'");
  return schouten(pi.bivector(), Multivector::function(pi.chart(), f)).is_zero();
}

RatFunc omega_density(const std::string& chart_id) {
  const ChartPtr c = charts::by_name(chart_id);
  const PoissonStructure pi = make_standard(chart_id);
  const RatFunc g = pi.bivector().component(0b11);
  if (g.is_zero()) throw Error(ErrorCode::ZeroDensity, "standard structure vanishes on chart '" + chart_id + "'");
  return g.inverse();
}

RatFunc height_x3(const std::string& chart_id) {
  const ChartPtr c = plane_chart(chart_id);
  const RatFunc one = c->constant(Scalar(1));
  const RatFunc r2 = r_squared(c);
  // On z the stereographic formulas apply directly; w = 1/z flips the sign of x3.
  if (chart_id == "z") return (r2 - one) / (r2 + one);
  return (one - r2) / (one + r2);
}

bool bruhat_is_height_times_standard() {
  for (const std::string id : {"z", "xy", "w"}) {
    const ChartPtr c = charts::by_name(id);
    const RatFunc factor = c->constant(Scalar(1)) - height_x3(id);
    if (!(make_bruhat(id).bivector() == factor * make_standard(id).bivector())) return false;
  }
  return true;
}

NecklaceGeometry necklace_radius(const Scalar& c, const Scalar& delta) {
  if (!c.is_real() || abs(c.re()) >= 1)
    throw Error(ErrorCode::OutOfRange, "necklace structures need |c| < 1, got c = " + c.pretty());
  if (!delta.is_real() || sgn(delta.re()) <= 0 || delta.re() >= 1)
    throw Error(ErrorCode::InvalidArgument, "annulus width delta must lie in (0, 1)");
  NecklaceGeometry g;
  g.c = c;
  g.radius_squared = (Scalar(1) - c) * kHalf;
  g.radius = std::sqrt(g.radius_squared.real_value());
  g.delta = delta;
  g.annulus_inner = g.radius_squared * (Scalar(1) - delta);
  g.annulus_outer = g.radius_squared + delta * (Scalar(1) - g.radius_squared);

  const ChartPtr st = charts::st();
  const RatFunc coeff = make_pi_family("st", c).bivector().component(0b11);
  const Poly circle = (r_squared(st) - st->constant(g.radius_squared)).num();
  if (coeff.is_polynomial()) {
    Poly num = coeff.num().scaled(coeff.den().constant_term().inverse());
    if (auto q = divide_exact(num, circle)) g.zero_locus_verified = q->is_constant() && q->constant_term() == kHalf;
  }
  return g;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

double area_closed_form(const Scalar& c) {
  const double cv = c.real_value();
  return 2.0 * std::numbers::pi * std::log((cv + 1.0) / (cv - 1.0));
}

AreaResult symplectic_area(const Scalar& c, int quad_points) {
  if (!c.is_real() || abs(c.re()) <= 1)
    throw Error(ErrorCode::DegenerateFamily,
                "pi_c is not symplectic for |c| <= 1; the open leaves have infinite area (c = " + c.pretty() + ")");
  if (quad_points < 64) throw Error(ErrorCode::InvalidArgument, "quad_points must be at least 64");

  // Area = integral over the xy plane of 1/g_c, g_c the coefficient of pi_c.
  // With u = x^2+y^2 the angular integral contributes pi du (dx dy = du dphi / 2),
  // and u = tau/(1-tau) maps [0,1) onto [0,inf).
  const RatFunc gc = make_pi_family("xy", c).bivector().component(0b11);
  std::vector<double> nodes, weights;
  gauss_legendre(quad_points, nodes, weights);
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double tau = 0.5 * (nodes[k] + 1.0);
    const double u = tau / (1.0 - tau);
    const double du_dtau = 1.0 / ((1.0 - tau) * (1.0 - tau));
    const double point[2] = {std::sqrt(u), 0.0};
    const double g = gc.eval(std::span<const double>(point, 2)).real();
    sum += 0.5 * weights[k] * du_dtau / g;
  }
  return AreaResult{std::numbers::pi * sum, area_closed_form(c), quad_points};
}

}  // namespace necklace
