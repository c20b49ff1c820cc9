#include "necklace/formal.hpp"

#include "necklace/calculus.hpp"
#include "necklace/error.hpp"

namespace necklace {

namespace {

void require_cap(int M) {
  if (M < 2) throw Error(ErrorCode::CapTooSmall, "truncation cap M must be at least 2, got " + std::to_string(M));
}

Poly mode_monomial(const ChartPtr& chart, long n, int m, const Scalar& c) {
  Monomial e{};
  e[0] = static_cast<std::uint16_t>(m);
  e[1] = n == 0 ? 0 : 1;
  return Poly::monomial(chart->vars, e, c);
}

RatFunc series(const ChartPtr& chart, long n, const std::vector<Scalar>& coeffs) {
  std::vector<Poly::Term> terms;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m].is_zero()) continue;
    Monomial e{};
    e[0] = static_cast<std::uint16_t>(m);
    e[1] = n == 0 ? 0 : 1;
    terms.push_back({e, coeffs[m]});
  }
  return RatFunc(Poly::from_terms(chart->vars, std::move(terms)));
}

void append(std::vector<Scalar>& out, const std::vector<Scalar>& v) { out.insert(out.end(), v.begin(), v.end()); }

std::string series_str(const std::vector<Scalar>& c) {
  std::string out;
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c[m].pretty() + ")";
    if (m > 0) out += "*I" + (m > 1 ? "^" + std::to_string(m) : std::string());
  }
  return out;
}

// Column order for degree-2 primitives: a_0, b_0, a_2..a_{M+1}, then a_1, b_1..b_M.
std::vector<std::size_t> primitive_order(int M) {
  const std::size_t na = static_cast<std::size_t>(M) + 2;
  std::vector<std::size_t> order = {0, na};
  for (std::size_t m = 2; m < na; ++m) order.push_back(m);
  order.push_back(1);
  for (std::size_t m = 1; m <= static_cast<std::size_t>(M); ++m) order.push_back(na + m);
  return order;
}

const Matrix& differential_in_degree(const TruncatedModeComplex& cx, int degree) {
  if (degree == 0) return cx.d0;
  if (degree == 1) return cx.d1;
  throw Error(ErrorCode::InvalidArgument, "the degree-2 differential is zero");
}

struct DegreeData {
  std::size_t dim = 0;
  std::vector<std::vector<Scalar>> image;   // spanning set of im d_{k-1}
  std::vector<std::vector<Scalar>> kernel;  // basis of ker d_k
};

std::array<DegreeData, 3> analyze(const TruncatedModeComplex& cx) {
  std::array<DegreeData, 3> out;
  for (int k = 0; k < 3; ++k) out[k].dim = ModeElement::window(cx.M, k);
  out[0].kernel = nullspace(cx.d0);
  out[1].kernel = nullspace(cx.d1);
  for (std::size_t i = 0; i < out[2].dim; ++i) {
    std::vector<Scalar> e(out[2].dim);
    e[i] = Scalar(1);
    out[2].kernel.push_back(std::move(e));
  }
  for (std::size_t c = 0; c < cx.d0.cols(); ++c) out[1].image.push_back(cx.d0.column(c));
  for (std::size_t c = 0; c < cx.d1.cols(); ++c) out[2].image.push_back(cx.d1.column(c));
  return out;
}

std::array<int, 3> dims_of(const TruncatedModeComplex& cx) {
  const int r0 = static_cast<int>(rank(cx.d0));
  const int r1 = static_cast<int>(rank(cx.d1));
  const int n0 = static_cast<int>(ModeElement::window(cx.M, 0));
  const int n1 = static_cast<int>(ModeElement::window(cx.M, 1));
  const int n2 = static_cast<int>(ModeElement::window(cx.M, 2));
  return {n0 - r0, n1 - r1 - r0, n2 - r1};
}

}  // namespace

std::size_t ModeElement::window(int M, int degree) {
  const auto m = static_cast<std::size_t>(M);
  switch (degree) {
    case 0: return m + 1;
    case 1: return (m + 2) + (m + 1);
    case 2: return m + 2;
    default: throw Error(ErrorCode::InvalidArgument, "mode elements have degrees 0, 1, 2");
  }
}

ModeElement ModeElement::zero(long n, int M) {
  require_cap(M);
  ModeElement e;
  e.n = n;
  e.M = M;
  const auto m = static_cast<std::size_t>(M);
  e.f.resize(m + 1);
  e.a.resize(m + 2);
  e.b.resize(m + 1);
  e.h.resize(m + 2);
  return e;
}

std::vector<Scalar> ModeElement::part(int degree) const {
  std::vector<Scalar> out;
  switch (degree) {
    case 0: return f;
    case 1:
      append(out, a);
      append(out, b);
      return out;
    case 2: return h;
    default: throw Error(ErrorCode::InvalidArgument, "mode elements have degrees 0, 1, 2");
  }
}

ModeElement ModeElement::from_part(long n, int M, int degree, const std::vector<Scalar>& coords) {
  ModeElement e = zero(n, M);
  if (coords.size() != window(M, degree)) throw Error(ErrorCode::InvalidArgument, "coordinate vector does not match window");
  if (degree == 0) e.f = coords;
  if (degree == 2) e.h = coords;
  if (degree == 1) {
    std::copy(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(e.a.size()), e.a.begin());
    std::copy(coords.begin() + static_cast<std::ptrdiff_t>(e.a.size()), coords.end(), e.b.begin());
  }
  return e;
}

bool ModeElement::is_zero() const {
  for (const auto* v : {&f, &a, &b, &h}) {
    for (const auto& s : *v) {
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

std::optional<int> ModeElement::degree() const {
  std::optional<int> d;
  auto touch = [&](const std::vector<Scalar>& v, int k) -> bool {
    for (const auto& s : v) {
      if (s.is_zero()) continue;
      if (d && *d != k) return false;
      d = k;
      break;
    }
    return true;
  };
  if (!touch(f, 0) || !touch(a, 1) || !touch(b, 1) || !touch(h, 2)) return std::nullopt;
  return d;
}

Multivector ModeElement::to_multivector() const {
  const ChartPtr chart = charts::fourier_mode(n);
  Multivector out(chart);
  out.add(0, series(chart, n, f));
  out.add(0b01, series(chart, n, a));
  out.add(0b10, series(chart, n, b));
  out.add(0b11, series(chart, n, h));
  return out;
}

ModeElement ModeElement::from_multivector(const Multivector& mv, int M) {
  const ChartPtr& chart = mv.chart();
  if (chart->name.rfind("mode_", 0) != 0)
    throw Error(ErrorCode::WrongChart, "expected a Fourier-mode chart, got '" + chart->name + "'");
  const long n = std::stol(chart->name.substr(5));
  ModeElement e = zero(n, M);
  for (const auto& [mask, coeff] : mv.components()) {
    if (!coeff.is_polynomial())
      throw Error(ErrorCode::InvalidArgument, "mode coefficients must be polynomial in I");
    const Scalar scale = coeff.den().constant_term().inverse();
    std::vector<Scalar>& slot = mask == 0 ? e.f : mask == 0b01 ? e.a : mask == 0b10 ? e.b : e.h;
    for (const auto& t : coeff.num().terms()) {
      if (t.exp[1] != (n == 0 ? 0 : 1))
        throw Error(ErrorCode::InvalidArgument, "term is not in Fourier mode " + std::to_string(n));
      if (t.exp[0] >= slot.size())
        throw Error(ErrorCode::OutOfRange, "I-degree " + std::to_string(t.exp[0]) + " exceeds the window for M = " +
                                               std::to_string(M));
      slot[t.exp[0]] += t.coeff * scale;
    }
  }
  return e;
}

std::string ModeElement::str() const {
  std::string out;
  auto piece = [&](const std::vector<Scalar>& v, const std::string& odd) {
    std::string s = series_str(v);
    if (s.empty()) return;
    if (!out.empty()) out += " + ";
    out += "[" + s + "]" + odd;
  };
  piece(f, "");
  piece(a, "*xi");
  piece(b, "*eta");
  piece(h, "*xi*eta");
  if (out.empty()) out = "0";
  return out + " (mode " + std::to_string(n) + ")";
}

TruncatedModeComplex build_mode_complex(long n, int M) {
  require_cap(M);
  const ChartPtr chart = charts::fourier_mode(n);
  const PoissonStructure model(Multivector::basis(chart, 0b11, RatFunc(chart->var(0))), "I xi eta");
  TruncatedModeComplex cx;
  cx.n = n;
  cx.M = M;
  for (int k = 0; k < 2; ++k) {
    const std::size_t cols = ModeElement::window(M, k);
    Matrix d(ModeElement::window(M, k + 1), cols);
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<Scalar> e(cols);
      e[c] = Scalar(1);
      const Multivector image = d_pi(model, ModeElement::from_part(n, M, k, e).to_multivector());
      const std::vector<Scalar> col = ModeElement::from_multivector(image, M).part(k + 1);
      for (std::size_t r = 0; r < col.size(); ++r) d.at(r, c) = col[r];
    }
    (k == 0 ? cx.d0 : cx.d1) = std::move(d);
  }
  if (!(cx.d1 * cx.d0).is_zero())
    throw Error(ErrorCode::Inconsistent, "d1 d0 != 0 in mode " + std::to_string(n));
  return cx;
}

ModeElement mode_differential(const ModeElement& elem) {
  const auto deg = elem.degree();
  if (!deg) throw Error(ErrorCode::InvalidArgument, "mode_differential needs a homogeneous element");
  if (*deg == 2) return ModeElement::zero(elem.n, elem.M);
  const TruncatedModeComplex cx = build_mode_complex(elem.n, elem.M);
  return ModeElement::from_part(elem.n, elem.M, *deg + 1, differential_in_degree(cx, *deg).apply(elem.part(*deg)));
}

CohomologyReport mode_cohomology(long n, int M) {
  const TruncatedModeComplex cx = build_mode_complex(n, M);
  const auto data = analyze(cx);
  CohomologyReport rep;
  rep.scope = "mode";
  rep.mode = n;
  rep.M = M;
  rep.cocycles_verified = true;
  rep.independence_verified = true;
  for (int k = 0; k < 3; ++k) {
    const auto picked = extend_independent(data[k].image, data[k].kernel, data[k].dim);
    rep.dims[k] = static_cast<int>(picked.size());
    for (const auto& v : picked) {
      ModeElement e = ModeElement::from_part(n, M, k, v);
      if (k < 2 && !mode_differential(e).is_zero()) rep.cocycles_verified = false;
      rep.representatives[k].push_back(e);
      rep.chart_representatives[k].push_back(e.to_multivector());
    }
    // Independence modulo coboundaries: image plus representatives gain full rank.
    auto span = data[k].image;
    const std::size_t base = rank(from_columns(span, data[k].dim));
    span.insert(span.end(), picked.begin(), picked.end());
    if (rank(from_columns(span, data[k].dim)) != base + picked.size()) rep.independence_verified = false;
  }
  const auto check = dims_of(cx);
  const auto next = dims_of(build_mode_complex(n, M + 1));
  if (check != rep.dims)
    throw Error(ErrorCode::Inconsistent, "rank count and representative count disagree in mode " + std::to_string(n));
  rep.stable_M = {M};
  if (next == rep.dims) rep.stable_M.push_back(M + 1);
  return rep;
}

std::vector<ZeroModeBlock> zero_mode_split(int M) {
  const TruncatedModeComplex cx = build_mode_complex(0, M);
  const std::size_t na = static_cast<std::size_t>(M) + 2;
  std::vector<ZeroModeBlock> out;
  for (int m = 0; m <= M; ++m) {
    const auto mm = static_cast<std::size_t>(m);
    // Coordinates of this block inside the full windows.
    const std::vector<std::size_t> rows1 = {mm, na + mm};
    Matrix d0(2, 1), d1(1, 2);
    for (std::size_t r = 0; r < 2; ++r) d0.at(r, 0) = cx.d0.at(rows1[r], mm);
    for (std::size_t c = 0; c < 2; ++c) d1.at(0, c) = cx.d1.at(mm, rows1[c]);
    ZeroModeBlock block;
    block.m = m;
    const int r0 = static_cast<int>(rank(d0));
    const int r1 = static_cast<int>(rank(d1));
    block.dims = {1 - r0, 2 - r0 - r1, 1 - r1};

    auto lift = [&](int degree, const std::vector<Scalar>& local) {
      ModeElement e = ModeElement::zero(0, M);
      if (degree == 0) e.f[mm] = local[0];
      if (degree == 1) {
        e.a[mm] = local[0];
        e.b[mm] = local[1];
      }
      if (degree == 2) e.h[mm] = local[0];
      return e;
    };
    for (const auto& v : extend_independent({}, nullspace(d0), 1)) block.representatives[0].push_back(lift(0, v));
    std::vector<std::vector<Scalar>> im1;
    if (r0 > 0) im1.push_back(d0.column(0));
    for (const auto& v : extend_independent(im1, nullspace(d1), 2)) block.representatives[1].push_back(lift(1, v));
    if (r1 == 0) block.representatives[2].push_back(lift(2, {Scalar(1)}));
    out.push_back(std::move(block));
  }
  return out;
}

Multivector mode0_to_disk(const ModeElement& elem, const Scalar& radius_squared) {
  if (elem.n != 0) throw Error(ErrorCode::InvalidArgument, "only mode-0 elements are functions of I alone");
  const ChartPtr st = charts::st();
  const RatFunc s(st->var(0)), t(st->var(1));
  const RatFunc r2 = s * s + t * t;
  const RatFunc I_of = r2 * radius_squared.inverse() - st->constant(Scalar(1));
  Multivector xi(st), eta(st);
  const RatFunc scale = radius_squared * (Scalar(2) * r2).inverse();
  xi.add(0b01, scale * s);
  xi.add(0b10, scale * t);
  eta.add(0b01, -t);
  eta.add(0b10, s);
  auto poly_in_I = [&](const std::vector<Scalar>& c) {
    RatFunc acc = st->constant(Scalar(0));
    for (std::size_t m = c.size(); m-- > 0;) acc = acc * I_of + st->constant(c[m]);
    return acc;
  };
  Multivector out = Multivector::function(st, poly_in_I(elem.f));
  out += poly_in_I(elem.a) * xi;
  out += poly_in_I(elem.b) * eta;
  out += poly_in_I(elem.h) * wedge(xi, eta);
  return out;
}

CohomologyReport annulus_cohomology(int N, int M) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "need at least one nonzero mode (N >= 1)");
  require_cap(M);
  CohomologyReport rep = mode_cohomology(0, M);
  rep.scope = "annulus";
  rep.modes_N = N;
  for (long n = 1; n <= N; ++n) {
    for (long sgn : {n, -n}) {
      const CohomologyReport r = mode_cohomology(sgn, M);
      for (int k = 0; k < 3; ++k) rep.dims[k] += r.dims[k];
      rep.cocycles_verified = rep.cocycles_verified && r.cocycles_verified;
      rep.independence_verified = rep.independence_verified && r.independence_verified;
      for (int k = 0; k < 3; ++k) {
        for (const auto& e : r.representatives[k]) rep.representatives[k].push_back(e);
      }
      if (r.stable_M.size() < 2) rep.stable_M.resize(1);
    }
  }
  rep.stable_N = {N};
  for (int k = 0; k < 3; ++k) {
    rep.chart_representatives[k].clear();
    for (const auto& e : rep.representatives[k]) {
      rep.chart_representatives[k].push_back(e.n == 0 ? mode0_to_disk(e, Scalar(1)) : e.to_multivector());
    }
  }
  return rep;
}

std::optional<ModeElement> is_coboundary_in_mode(const ModeElement& elem) {
  if (elem.is_zero()) return ModeElement::zero(elem.n, elem.M);
  const auto deg = elem.degree();
  if (!deg) throw Error(ErrorCode::InvalidArgument, "is_coboundary_in_mode needs a homogeneous element");
  if (*deg == 0) {
    if (elem.is_zero()) return ModeElement::zero(elem.n, elem.M);
    return std::nullopt;
  }
  const TruncatedModeComplex cx = build_mode_complex(elem.n, elem.M);
  const Matrix& d = differential_in_degree(cx, *deg - 1);
  const auto x = solve(d, elem.part(*deg), *deg == 2 ? primitive_order(elem.M) : std::vector<std::size_t>{});
  if (!x) return std::nullopt;
  return ModeElement::from_part(elem.n, elem.M, *deg - 1, *x);
}

}  // namespace necklace
