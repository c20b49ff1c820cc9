#include "necklace/transform.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <optional>

namespace necklace {

std::string_view to_string(MapKind kind) {
  return kind == MapKind::rational_exact ? "rational_exact" : "algebraic_numeric";
}

namespace {

std::vector<std::size_t> indices(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i);
  }
  return out;
}

// det J[rows, cols] by Laplace expansion along the first row.
RatFunc jac_minor(const std::vector<std::vector<RatFunc>>& jac, std::span<const std::size_t> rows,
              std::span<const std::size_t> cols, const Chart& chart) {
  if (rows.empty()) return chart.constant(Scalar(1));
  if (rows.size() == 1) return jac[rows[0]][cols[0]];
  RatFunc det = chart.constant(Scalar(0));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const RatFunc& e = jac[rows[0]][cols[k]];
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub(cols.begin(), cols.end());
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
    RatFunc m = e * jac_minor(jac, rows.subspan(1), sub, chart);
    det += (k % 2 == 0) ? m : -m;
  }
  return det;
}

std::vector<double> box_sample(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> p(n);
  for (auto& x : p) x = u(rng);
  return p;
}

std::vector<std::string> formula_strings(const ChartPtr& target, const std::vector<RatFunc>& comps) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < comps.size(); ++i) out.push_back(target->coords[i] + " = " + comps[i].str());
  return out;
}

double det_numeric(const std::vector<double>& j, std::size_t n) {
  if (n == 1) return j[0];
  if (n == 2) return j[0] * j[3] - j[1] * j[2];
  if (n == 3)
    return j[0] * (j[4] * j[8] - j[5] * j[7]) - j[1] * (j[3] * j[8] - j[5] * j[6]) + j[2] * (j[3] * j[7] - j[4] * j[6]);
  // Gaussian elimination for the general case.
  std::vector<double> a = j;
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

}  // namespace

std::vector<std::vector<RatFunc>> jacobian(const ChartMap& map) {
  if (map.kind != MapKind::rational_exact)
    throw Error(ErrorCode::InvalidArgument, map.name + ": exact Jacobian needs a rational map");
  std::vector<std::vector<RatFunc>> jac;
  for (const auto& comp : map.components) {
    std::vector<RatFunc> row;
    for (std::size_t j = 0; j < map.source->dimension(); ++j) row.push_back(comp.derivative(j));
    jac.push_back(std::move(row));
  }
  return jac;
}

ChartMap rational_map(std::string name, ChartPtr source, ChartPtr target, std::vector<RatFunc> components,
                      std::vector<RatFunc> inverse) {
  if (components.size() != target->dimension())
    throw Error(ErrorCode::InvalidArgument, name + ": one component per target coordinate required");
  if (!inverse.empty() && inverse.size() != source->dimension())
    throw Error(ErrorCode::InvalidArgument, name + ": one inverse component per source coordinate required");
  ChartMap map;
  map.name = std::move(name);
  map.source = std::move(source);
  map.target = std::move(target);
  map.kind = MapKind::rational_exact;
  map.components = std::move(components);
  map.inverse = std::move(inverse);
  map.formulas = formula_strings(map.target, map.components);
  if (!map.inverse.empty()) map.inverse_formulas = formula_strings(map.source, map.inverse);
  auto jac = std::make_shared<const std::vector<std::vector<RatFunc>>>(jacobian(map));
  auto comps = map.components;
  map.numeric = [jac, comps](std::span<const double> p) {
    NumericJet out;
    for (const auto& c : comps) out.image.push_back(c.eval(p).real());
    for (const auto& row : *jac) {
      for (const auto& e : row) out.jacobian.push_back(e.eval(p).real());
    }
    return out;
  };
  const std::size_t n = map.source->dimension();
  map.sample = [n](std::mt19937_64& rng) { return box_sample(rng, n); };
  return map;
}

RatFunc pullback(const RatFunc& f, const ChartMap& map) {
  if (map.kind != MapKind::rational_exact)
    throw Error(ErrorCode::InvalidArgument, map.name + ": exact pullback needs a rational map");
  return f.compose(map.components);
}

ChartMap compose(const ChartMap& g, const ChartMap& f) {
  require_same_chart(f.target, g.source);
  std::vector<RatFunc> comps;
  for (const auto& c : g.components) comps.push_back(c.compose(f.components));
  std::vector<RatFunc> inv;
  if (f.has_inverse() && g.has_inverse()) {
    for (const auto& c : f.inverse) inv.push_back(c.compose(g.inverse));
  }
  return rational_map(g.name + "*" + f.name, f.source, g.target, std::move(comps), std::move(inv));
}

Multivector pushforward_rational(const Multivector& mv, const ChartMap& map) {
  if (!same_chart(mv.chart(), map.source))
    throw Error(ErrorCode::WrongChart, "multivector on '" + mv.chart()->name + "', map '" + map.name + "' starts at '" +
                                           map.source->name + "'");
  if (map.kind != MapKind::rational_exact || !map.has_inverse() ||
      map.source->dimension() != map.target->dimension())
    throw Error(ErrorCode::NotInvertible, map.name + " has no registered rational inverse");
  const Chart& src = *map.source;
  const std::size_t n = src.dimension();
  auto jac = jacobian(map);
  std::map<Mask, RatFunc> in_source_vars;
  for (const auto& [ms, f] : mv.components()) {
    auto cols = indices(ms);
    for (Mask mt = 0; mt < (Mask{1} << n); ++mt) {
      if (mask_degree(mt) != mask_degree(ms)) continue;
      auto rows = indices(mt);
      RatFunc m = jac_minor(jac, rows, cols, src);
      if (m.is_zero()) continue;
      RatFunc term = f * m;
      auto it = in_source_vars.find(mt);
      if (it == in_source_vars.end()) {
        in_source_vars.emplace(mt, term);
      } else {
        it->second += term;
      }
    }
  }
  Multivector out(map.target);
  for (const auto& [mt, f] : in_source_vars) {
    if (f.is_zero()) continue;
    out.add(mt, f.compose(map.inverse));
  }
  return out;
}

ValidationResult validate_pushforward_numeric(const Multivector& src, const Multivector& tgt, const ChartMap& map,
                                              int samples, double tol, std::uint64_t seed) {
  if (!same_chart(src.chart(), map.source) || !same_chart(tgt.chart(), map.target))
    throw Error(ErrorCode::WrongChart, "validate: multivectors do not sit on the map's charts");
  if (!map.numeric || !map.sample) throw Error(ErrorCode::InvalidArgument, map.name + " has no numeric sampler");
  const std::size_t n = map.source->dimension();
  const std::size_t m = map.target->dimension();
  std::optional<int> deg = src.is_zero() ? tgt.degree() : src.degree();
  if (!src.is_homogeneous() || !tgt.is_homogeneous() || (deg && *deg > 2))
    throw Error(ErrorCode::InvalidArgument, "validate: functions, vector fields or bivectors only");
  const int k = deg.value_or(0);

  ValidationResult result;
  result.seed = seed;
  std::mt19937_64 rng(seed);
  int attempts = 0;
  while (result.samples < samples) {
    if (++attempts > samples * 100)
      throw Error(ErrorCode::SamplePointOutsideDomain, map.name + ": could not draw enough admissible points");
    std::vector<double> p = map.sample(rng);
    NumericJet jet = map.numeric(p);
    bool finite = true;
    for (double v : jet.image) finite = finite && std::isfinite(v);
    for (double v : jet.jacobian) finite = finite && std::isfinite(v);
    if (!finite) continue;
    if (n == m && std::abs(det_numeric(jet.jacobian, n)) < 1e-12)
      throw Error(ErrorCode::DegenerateJacobian, map.name + ": singular Jacobian at a sample point");

    auto eval_at = [](const Multivector& mv, Mask mask, std::span<const double> at) {
      auto it = mv.components().find(mask);
      if (it == mv.components().end()) return std::complex<double>(0.0);
      return it->second.eval(at);
    };
    bool admissible = true;
    double err = 0.0;
    auto check = [&](std::complex<double> a, std::complex<double> b) {
      if (!std::isfinite(a.real()) || !std::isfinite(b.real()) || !std::isfinite(a.imag()) ||
          !std::isfinite(b.imag())) {
        admissible = false;
        return;
      }
      err = std::max(err, std::abs(a - b));
    };
    const auto& J = jet.jacobian;
    if (k == 0) {
      check(eval_at(src, 0, p), eval_at(tgt, 0, jet.image));
    } else if (k == 1) {
      std::vector<std::complex<double>> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = eval_at(src, bit(j), p);
      for (std::size_t i = 0; i < m; ++i) {
        std::complex<double> pushed = 0.0;
        for (std::size_t j = 0; j < n; ++j) pushed += J[i * n + j] * v[j];
        check(pushed, eval_at(tgt, bit(i), jet.image));
      }
    } else {
      std::vector<std::complex<double>> A(n * n, 0.0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          auto v = eval_at(src, bit(a) | bit(b), p);
          A[a * n + b] = v;
          A[b * n + a] = -v;
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          std::complex<double> pushed = 0.0;
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) pushed += J[i * n + a] * A[a * n + b] * J[j * n + b];
          }
          check(pushed, eval_at(tgt, bit(i) | bit(j), jet.image));
        }
      }
    }
    if (!admissible) continue;
    result.max_error = std::max(result.max_error, err);
    ++result.samples;
  }
  result.ok = result.max_error <= tol;
  return result;
}

namespace atlas {

namespace {

RatFunc var(const ChartPtr& c, std::size_t i) { return RatFunc(c->var(i)); }

// (a, b) -> (a, -b) / (a^2 + b^2), the real form of 1/w.
std::vector<RatFunc> inversion(const ChartPtr& c) {
  RatFunc a = var(c, 0), b = var(c, 1);
  RatFunc r2 = a * a + b * b;
  return {a / r2, -b / r2};
}

}  // namespace

ChartMap w_to_z() {
  ChartMap m = rational_map("w->z", charts::w(), charts::z(), inversion(charts::w()), inversion(charts::z()));
  m.sample = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> r(0.2, 3.0), a(0.0, 2 * std::numbers::pi);
    double rr = r(rng), aa = a(rng);
    return std::vector<double>{rr * std::cos(aa), rr * std::sin(aa)};
  };
  return m;
}

ChartMap z_to_w() {
  ChartMap m = rational_map("z->w", charts::z(), charts::w(), inversion(charts::z()), inversion(charts::w()));
  m.sample = w_to_z().sample;
  return m;
}

ChartMap w_to_xy() {
  return rational_map("w->xy", charts::w(), charts::xy(), {var(charts::w(), 0), var(charts::w(), 1)},
                      {var(charts::xy(), 0), var(charts::xy(), 1)});
}

ChartMap z_to_sphere() {
  const ChartPtr z = charts::z();
  const ChartPtr s = charts::sphere();
  RatFunc X = var(z, 0), Y = var(z, 1);
  RatFunc one = z->constant(Scalar(1));
  RatFunc d = one + X * X + Y * Y;
  std::vector<RatFunc> comps = {Scalar(2) * X / d, Scalar(2) * Y / d, (X * X + Y * Y - one) / d};
  RatFunc x1 = var(s, 0), x2 = var(s, 1), x3 = var(s, 2);
  RatFunc den = s->constant(Scalar(1)) - x3;
  ChartMap m;
  m.name = "z->sphere";
  m.source = z;
  m.target = s;
  m.kind = MapKind::rational_exact;
  m.components = comps;
  m.inverse = {x1 / den, x2 / den};
  m.formulas = formula_strings(s, m.components);
  m.inverse_formulas = formula_strings(z, m.inverse);
  auto jac = std::make_shared<const std::vector<std::vector<RatFunc>>>(jacobian(m));
  m.numeric = [jac, comps](std::span<const double> p) {
    NumericJet out;
    for (const auto& c : comps) out.image.push_back(c.eval(p).real());
    for (const auto& row : *jac) {
      for (const auto& e : row) out.jacobian.push_back(e.eval(p).real());
    }
    return out;
  };
  m.sample = [](std::mt19937_64& rng) { return box_sample(rng, 2); };
  return m;
}

ChartMap xy_to_st() {
  ChartMap m;
  m.name = "xy->st";
  m.source = charts::xy();
  m.target = charts::st();
  m.kind = MapKind::algebraic_numeric;
  m.formulas = {"s = x/sqrt(1+x^2+y^2)", "t = y/sqrt(1+x^2+y^2)"};
  m.inverse_formulas = {"x = s/sqrt(1-s^2-t^2)", "y = t/sqrt(1-s^2-t^2)"};
  m.numeric = [](std::span<const double> p) {
    const double x = p[0], y = p[1];
    const double q = 1.0 + x * x + y * y;
    const double root = std::sqrt(q);
    const double q32 = q * root;
    return NumericJet{{x / root, y / root}, {(1.0 + y * y) / q32, -x * y / q32, -x * y / q32, (1.0 + x * x) / q32}};
  };
  m.sample = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> r(0.0, 3.0), a(0.0, 2 * std::numbers::pi);
    double rr = r(rng), aa = a(rng);
    return std::vector<double>{rr * std::cos(aa), rr * std::sin(aa)};
  };
  return m;
}

ChartMap st_to_action_angle(const Scalar& radius_squared, const Scalar& delta) {
  ChartMap m;
  m.name = "st->action_angle";
  m.source = charts::st();
  m.target = charts::action_angle();
  m.kind = MapKind::algebraic_numeric;
  m.formulas = {"I = (s^2+t^2)/" + radius_squared.pretty() + " - 1", "theta = atan2(t, s)"};
  m.inverse_formulas = {"s = sqrt(" + radius_squared.pretty() + "*(1+I))*cos(theta)",
                        "t = sqrt(" + radius_squared.pretty() + "*(1+I))*sin(theta)"};
  const double r2 = radius_squared.real_value();
  m.numeric = [r2](std::span<const double> p) {
    const double s = p[0], t = p[1];
    const double rho2 = s * s + t * t;
    return NumericJet{{rho2 / r2 - 1.0, std::atan2(t, s)}, {2 * s / r2, 2 * t / r2, -t / rho2, s / rho2}};
  };
  const double lo = r2 * (1.0 - delta.real_value());
  const double hi = std::min(r2 * (1.0 + delta.real_value()), 1.0);
  m.sample = [lo, hi, r2](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(lo, hi), a(0.0, 2 * std::numbers::pi);
    double rho2 = u(rng);
    if (std::abs(rho2 - r2) < 1e-9 * r2) rho2 = 0.5 * (rho2 + hi);
    double rr = std::sqrt(rho2), aa = a(rng);
    return std::vector<double>{rr * std::cos(aa), rr * std::sin(aa)};
  };
  return m;
}

ChartMap rescale_st(const Scalar& alpha) {
  if (alpha.is_zero() || !alpha.is_real())
    throw Error(ErrorCode::InvalidArgument, "rescaling factor must be a nonzero real number");
  const ChartPtr a = charts::st();
  const ChartPtr b = charts::st_rescaled();
  Scalar inv = alpha.inverse();
  return rational_map("st->st_rescaled", a, b, {var(a, 0) * inv, var(a, 1) * inv}, {var(b, 0) * alpha, var(b, 1) * alpha});
}

}  // namespace atlas

std::vector<ChartMap> stereographic_atlas() {
  return {atlas::z_to_sphere(), atlas::w_to_z(), atlas::z_to_w(), atlas::w_to_xy(), atlas::xy_to_st(),
          atlas::st_to_action_angle(Scalar(1))};
}

}  // namespace necklace
