#include "necklace/calculus.hpp"

namespace necklace {

namespace {

int parity_sign(int k) { return (k & 1) ? -1 : 1; }

RatFunc signed_product(int sign, const RatFunc& a, const RatFunc& b) {
  RatFunc p = a * b;
  return sign > 0 ? p : -p;
}

// Adds sum_i (P <-d/dxi_i)(D_i Q) to `out`, P and Q single terms.
void half_bracket(const Chart& chart, Mask mp, const RatFunc& fp, Mask mq, const RatFunc& fq, int outer_sign,
                  Multivector& out) {
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    if (!(mp & bit(i))) continue;
    Mask rest = mp & ~bit(i);
    int sign = wedge_sign(rest, mq);
    if (sign == 0) continue;
    RatFunc dq = chart.derive(i, fq);
    if (dq.is_zero()) continue;
    out.add(rest | mq, signed_product(outer_sign * sign * right_derivative_sign(mp, i), fp, dq));
  }
}

}  // namespace

Multivector schouten(const Multivector& a, const Multivector& b) {
  require_same_chart(a.chart(), b.chart());
  const Chart& chart = *a.chart();
  Multivector out(a.chart());
  for (const auto& [ma, fa] : a.components()) {
    for (const auto& [mb, fb] : b.components()) {
      int p = mask_degree(ma), q = mask_degree(mb);
      half_bracket(chart, ma, fa, mb, fb, 1, out);
      half_bracket(chart, mb, fb, ma, fa, -parity_sign((p - 1) * (q - 1)), out);
    }
  }
  return out;
}

Multivector odd_laplacian(const Multivector& a) {
  const Chart& chart = *a.chart();
  Multivector out(a.chart());
  for (const auto& [m, f] : a.components()) {
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
      if (!(m & bit(i))) continue;
      RatFunc d = chart.derive(i, f);
      out.add(m & ~bit(i), left_derivative_sign(m, i) > 0 ? d : -d);
    }
  }
  return out;
}

Multivector schouten_bv(const Multivector& a, const Multivector& b) {
  require_same_chart(a.chart(), b.chart());
  Multivector out(a.chart());
  for (int k = 0; k <= static_cast<int>(a.chart()->dimension()); ++k) {
    Multivector ak = a.part(k);
    if (ak.is_zero()) continue;
    Multivector inner = odd_laplacian(wedge(ak, b)) - wedge(odd_laplacian(ak), b);
    Multivector last = wedge(ak, odd_laplacian(b));
    inner = parity_sign(k) > 0 ? inner - last : inner + last;
    out += parity_sign(k + 1) > 0 ? inner : -inner;
  }
  return out;
}

RatFunc apply(const Multivector& field, const RatFunc& f) {
  const Chart& chart = *field.chart();
  RatFunc out = chart.constant(Scalar(0));
  for (const auto& [m, c] : field.components()) {
    if (mask_degree(m) != 1) throw Error(ErrorCode::InvalidArgument, "apply: expected a vector field");
    out += c * chart.derive(static_cast<std::size_t>(std::countr_zero(m)), f);
  }
  return out;
}

DiffForm differential(const ChartPtr& chart, const RatFunc& f) {
  DiffForm out(chart);
  for (std::size_t i = 0; i < chart->dimension(); ++i) out.add(bit(i), chart->derive(i, f));
  return out;
}

DiffForm de_rham_d(const DiffForm& form) {
  const Chart& chart = *form.chart();
  DiffForm out(form.chart());
  for (const auto& [m, f] : form.components()) {
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
      int sign = wedge_sign(bit(i), m);
      if (sign == 0) continue;
      RatFunc d = chart.derive(i, f);
      out.add(m | bit(i), sign > 0 ? d : -d);
    }
  }
  return out;
}

DiffForm interior(const Multivector& field, const DiffForm& form) {
  require_same_chart(field.chart(), form.chart());
  DiffForm out(form.chart());
  for (const auto& [mx, x] : field.components()) {
    if (mask_degree(mx) != 1) throw Error(ErrorCode::InvalidArgument, "interior: expected a vector field");
    std::size_t i = static_cast<std::size_t>(std::countr_zero(mx));
    for (const auto& [m, f] : form.components()) {
      if (!(m & bit(i))) continue;
      out.add(m & ~bit(i), signed_product(left_derivative_sign(m, i), x, f));
    }
  }
  return out;
}

Multivector lie_derivative(const Multivector& field, const Multivector& tensor) { return schouten(field, tensor); }

DiffForm lie_derivative(const Multivector& field, const DiffForm& form) {
  return de_rham_d(interior(field, form)) + interior(field, de_rham_d(form));
}

Multivector d_pi(const PoissonStructure& pi, const Multivector& mv) {
  require_same_chart(pi.chart(), mv.chart());
  return schouten(pi.bivector(), mv);
}

namespace {

// pi^{ij} for i != j from the sorted-subset storage.
RatFunc pi_entry(const Multivector& pi, std::size_t i, std::size_t j) {
  if (i == j) return pi.chart()->constant(Scalar(0));
  RatFunc c = pi.component(bit(i) | bit(j));
  return i < j ? c : -c;
}

void require_bivector(const Multivector& pi) {
  for (const auto& [m, f] : pi.components()) {
    if (mask_degree(m) != 2) throw Error(ErrorCode::InvalidArgument, "expected a bivector");
  }
}

}  // namespace

RatFunc poisson_bracket(const Multivector& pi, const RatFunc& f, const RatFunc& g) {
  require_bivector(pi);
  const Chart& chart = *pi.chart();
  RatFunc out = chart.constant(Scalar(0));
  for (const auto& [m, c] : pi.components()) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    std::size_t j = static_cast<std::size_t>(std::bit_width(m) - 1);
    out += c * (chart.derive(i, f) * chart.derive(j, g) - chart.derive(j, f) * chart.derive(i, g));
  }
  return out;
}

RatFunc poisson_bracket(const PoissonStructure& pi, const RatFunc& f, const RatFunc& g) {
  return poisson_bracket(pi.bivector(), f, g);
}

Multivector pi_sharp(const Multivector& pi, const DiffForm& alpha) {
  require_same_chart(pi.chart(), alpha.chart());
  require_bivector(pi);
  const std::size_t n = pi.chart()->dimension();
  Multivector out(pi.chart());
  for (const auto& [m, a] : alpha.components()) {
    if (mask_degree(m) != 1) throw Error(ErrorCode::InvalidArgument, "pi_sharp: expected a 1-form");
    std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      RatFunc e = pi_entry(pi, i, j);
      if (!e.is_zero()) out.add(bit(j), e * a);
    }
  }
  return out;
}

Multivector pi_sharp(const PoissonStructure& pi, const DiffForm& alpha) { return pi_sharp(pi.bivector(), alpha); }

Multivector hamiltonian_vf(const PoissonStructure& pi, const RatFunc& h) {
  return d_pi(pi, Multivector::function(pi.chart(), h));
}

RatFunc divergence(const Multivector& field, const RatFunc& density) {
  if (density.is_zero()) throw Error(ErrorCode::ZeroDensity, "volume density is identically zero");
  const Chart& chart = *field.chart();
  RatFunc sum = chart.constant(Scalar(0));
  for (const auto& [m, c] : field.components()) {
    if (mask_degree(m) != 1) throw Error(ErrorCode::InvalidArgument, "divergence: expected a vector field");
    sum += chart.derive(static_cast<std::size_t>(std::countr_zero(m)), density * c);
  }
  return sum / density;
}

Multivector modular_field(const Multivector& pi, const RatFunc& density) {
  require_bivector(pi);
  if (density.is_zero()) throw Error(ErrorCode::ZeroDensity, "volume density is identically zero");
  const Chart& chart = *pi.chart();
  const std::size_t n = chart.dimension();
  Multivector out(pi.chart());
  for (std::size_t j = 0; j < n; ++j) {
    RatFunc sum = chart.constant(Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      RatFunc e = pi_entry(pi, i, j);
      if (!e.is_zero()) sum += chart.derive(i, density * e);
    }
    out.add(bit(j), sum / density);
  }
  return out;
}

Multivector modular_field(const PoissonStructure& pi, const RatFunc& density) {
  return modular_field(pi.bivector(), density);
}

DiffForm symplectic_form(const Multivector& pi) {
  if (pi.chart()->dimension() != 2) throw Error(ErrorCode::InvalidArgument, "symplectic_form: two-dimensional charts only");
  RatFunc g = pi.component(0b11);
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "symplectic_form: bivector is zero");
  return DiffForm::basis(pi.chart(), 0b11, g.inverse());
}

}  // namespace necklace
