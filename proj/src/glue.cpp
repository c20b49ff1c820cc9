#include "necklace/glue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "necklace/error.hpp"

namespace necklace {

ExactSequence solve_exact_sequence(const ExactSequence& seq) {
  const std::size_t n = seq.terms.size();
  if (n == 0) return seq;
  if (seq.ranks.size() + 1 != n)
    throw Error(ErrorCode::InvalidArgument, "an exact sequence with k terms needs k-1 map ranks");
  ExactSequence out = seq;
  // rank(i) is the map into term i; the maps out of 0 and into the end are zero.
  auto in_rank = [&](std::size_t i) { return i == 0 ? std::optional<int>(0) : out.ranks[i - 1]; };
  auto out_rank = [&](std::size_t i) { return i + 1 == n ? std::optional<int>(0) : out.ranks[i]; };
  auto settle = [&](std::optional<int>& slot, int value, const std::string& what) {
    if (value < 0) throw Error(ErrorCode::Inconsistent, what + " would be negative (" + std::to_string(value) + ")");
    slot = value;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      auto& d = out.terms[i].dim;
      const std::optional<int> a_val = in_rank(i);
      const std::optional<int> b_val = out_rank(i);
      const std::string where = "term " + out.terms[i].label;
      if (d && a_val && b_val) {
        if (*d != *a_val + *b_val)
          throw Error(ErrorCode::Inconsistent, where + ": dim " + std::to_string(*d) + " != " +
                                                   std::to_string(*a_val) + " + " + std::to_string(*b_val));
      } else if (!d && a_val && b_val) {
        settle(d, *a_val + *b_val, "dimension of " + out.terms[i].label);
        changed = true;
      } else if (d && a_val && !b_val && i + 1 < n) {
        settle(out.ranks[i], *d - *a_val, "rank out of " + out.terms[i].label);
        changed = true;
      } else if (d && !a_val && b_val && i > 0) {
        settle(out.ranks[i - 1], *d - *b_val, "rank into " + out.terms[i].label);
        changed = true;
      }
    }
  }

  std::vector<std::string> missing;
  for (std::size_t i = 0; i < out.ranks.size(); ++i) {
    if (!out.ranks[i]) missing.push_back(out.terms[i].label + " -> " + out.terms[i + 1].label);
  }
  bool dims_known = true;
  for (const auto& t : out.terms) dims_known = dims_known && t.dim.has_value();
  if (!dims_known || !missing.empty()) {
    std::string msg = "exactness does not determine the sequence; supply the rank of one of: ";
    for (std::size_t i = 0; i < missing.size(); ++i) msg += (i ? ", " : "") + missing[i];
    throw Error(ErrorCode::Underdetermined, msg);
  }
  int alternating = 0;
  for (std::size_t i = 0; i < n; ++i) alternating += (i % 2 == 0 ? 1 : -1) * *out.terms[i].dim;
  if (alternating != 0) throw Error(ErrorCode::Inconsistent, "alternating sum of dimensions is not zero");
  return out;
}

ExactSequence mayer_vietoris_sequence(const std::array<int, 3>& h_u, std::optional<int> middle_rank) {
  // V is two disjoint caps, U n V two disjoint annuli; on both pi_c is symplectic
  // so their Poisson cohomology is de Rham cohomology.
  constexpr std::array<int, 3> h_v = {2, 0, 0};
  constexpr std::array<int, 3> h_uv = {2, 2, 0};
  ExactSequence seq;
  for (int k = 0; k < 3; ++k) {
    const std::string deg = std::to_string(k);
    seq.terms.push_back({"H" + deg + "(S2)", k == 0 ? std::optional<int>(1) : std::nullopt});
    seq.terms.push_back({"H" + deg + "(U)+H" + deg + "(V)", h_u[static_cast<std::size_t>(k)] + h_v[static_cast<std::size_t>(k)]});
    seq.terms.push_back({"H" + deg + "(UnV)", h_uv[static_cast<std::size_t>(k)]});
  }
  seq.ranks.assign(seq.terms.size() - 1, std::nullopt);
  seq.ranks[4] = middle_rank;
  return seq;
}

double period_class(const PoissonStructure& pi, const Multivector& field, const Scalar& loop_radius_squared,
                    int samples) {
  if (pi.chart()->dimension() != 2) throw Error(ErrorCode::InvalidArgument, "periods need a two-dimensional chart");
  require_same_chart(pi.chart(), field.chart());
  if (!loop_radius_squared.is_real() || sgn(loop_radius_squared.re()) <= 0)
    throw Error(ErrorCode::InvalidArgument, "loop radius^2 must be a positive real number");
  const RatFunc g = pi.bivector().component(0b11);
  const RatFunc xs = field.component(0b01);
  const RatFunc xt = field.component(0b10);
  const double rho = std::sqrt(loop_radius_squared.real_value());
  const double step = 2.0 * std::numbers::pi / samples;
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double phi = k * step;
    const double p[2] = {rho * std::cos(phi), rho * std::sin(phi)};
    const std::span<const double> at(p, 2);
    const double gv = g.eval(at).real();
    if (!std::isfinite(gv) || std::abs(gv) < 1e-12)
      throw Error(ErrorCode::SingularOnLoop, "pi degenerates on the loop s^2+t^2 = " + loop_radius_squared.pretty());
    // i_X (ds^dt / g) = (X^s dt - X^t ds) / g along s = rho cos, t = rho sin.
    const double ds = -p[1], dt = p[0];
    sum += (xs.eval(at).real() * dt - xt.eval(at).real() * ds) / gv;
  }
  return sum * step;
}

std::vector<LoopData> annulus_loops(const NecklaceGeometry& geometry) {
  const Scalar half_delta = geometry.delta * Scalar::rational(1, 2);
  const Scalar& r2 = geometry.radius_squared;
  return {{"upper_cap_side", r2 * (Scalar(1) - half_delta)},
          {"lower_cap_side", r2 + half_delta * (Scalar(1) - r2)}};
}

int numeric_rank(std::vector<std::vector<double>> rows, double threshold) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (std::abs(rows[i][c]) > std::abs(rows[piv][c])) piv = i;
    }
    if (std::abs(rows[piv][c]) <= threshold) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const double f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
    ++rank;
  }
  return rank;
}

RestrictionMatrix restriction_rank(const std::vector<Multivector>& generators,
                                   const std::vector<std::string>& labels, const PoissonStructure& pi,
                                   const std::vector<LoopData>& loops) {
  if (labels.size() != generators.size()) throw Error(ErrorCode::InvalidArgument, "one label per generator required");
  RestrictionMatrix out;
  out.generator_labels = labels;
  out.loops = loops;
  for (const auto& x : generators) {
    std::vector<double> row;
    for (const auto& loop : loops) row.push_back(period_class(pi, x, loop.radius_squared));
    out.periods.push_back(std::move(row));
  }
  out.rank = numeric_rank(out.periods, out.threshold);
  return out;
}

Multivector euler_field(const Scalar& c) {
  if (c == Scalar(1)) throw Error(ErrorCode::InvalidArgument, "the Euler field needs c != 1");
  const ChartPtr st = charts::st();
  const Scalar k = (Scalar(2) * (c - Scalar(1))).inverse();
  Multivector e(st);
  e.add(0b01, k * RatFunc(st->var(0)));
  e.add(0b10, k * RatFunc(st->var(1)));
  return e;
}

namespace {

int necklace_cmp(const mpq_class& a, long b) {
  const int r = cmp(a, b);
  return (r > 0) - (r < 0);
}

std::vector<std::string> global_assumptions() {
  return {
      "formal-neighbourhood cohomology of the necklace equals the cohomology of a small annulus "
      "(Borel extension, acyclic flat complex, convergent Fourier series)",
      "pi_c is symplectic on the caps V and on U n V, so their Poisson cohomology is de Rham cohomology",
      "de Rham dimensions are topological constants: two disks (2,0,0), two annuli (2,2,0)",
      "the rotation term in the Euler-field argument is absorbed by the modular field; this step is covered by the "
      "rank of the restriction map rather than proven separately",
  };
}

}  // namespace

GlobalReport global_cohomology(const Scalar& c, const GlobalParams& params) {
  if (!c.is_real() || abs(c.re()) >= 1)
    throw Error(ErrorCode::OutOfRange, "the necklace computation needs |c| < 1, got c = " + c.pretty());
  const NecklaceGeometry geometry = necklace_radius(c, params.delta);
  GlobalReport rep;
  rep.c = c;
  rep.branch = "necklace";
  rep.assumptions = global_assumptions();

  const CohomologyReport annulus = annulus_cohomology(params.modes_N, params.degree_M);
  const PoissonStructure pi_st = make_pi_family("st", c);

  // H^1(U) generators on the disk of the true necklace radius, rotation first.
  std::vector<Multivector> gens;
  std::vector<std::string> labels;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : annulus.representatives[1]) {
      if (e.n != 0) continue;
      const bool dilation = std::any_of(e.a.begin(), e.a.end(), [](const Scalar& s) { return !s.is_zero(); });
      if (dilation != (pass == 1)) continue;
      gens.push_back(mode0_to_disk(e, geometry.radius_squared));
      labels.push_back(dilation ? "I*d_I" : "d_theta");
    }
  }
  const RestrictionMatrix restriction = restriction_rank(gens, labels, pi_st, annulus_loops(geometry));
  const ExactSequence solved = solve_exact_sequence(mayer_vietoris_sequence(annulus.dims, restriction.rank));
  rep.dims = {*solved.terms[0].dim, *solved.terms[3].dim, *solved.terms[6].dim};

  const PoissonStructure pi_xy = make_pi_family("xy", c);
  const Multivector modular = modular_field(pi_xy, omega_density("xy"));
  const ChartPtr xy = charts::xy();
  rep.generators.push_back({0, "1", Multivector::function(xy, xy->constant(Scalar(1)))});
  rep.generators.push_back({1, "Delta_omega", modular});
  rep.generators.push_back({2, "pi_c", pi_xy.bivector()});
  rep.generators.push_back({2, "pi", make_standard("xy").bivector()});

  rep.euler_primitive_ok = schouten(pi_st.bivector(), euler_field(c)) == make_standard("st").bivector();
  rep.modular_cocycle_ok = schouten(pi_xy.bivector(), modular).is_zero();
  ModeElement half_xi_eta = ModeElement::zero(0, params.degree_M);
  half_xi_eta.h[0] = Scalar::rational(1, 2);
  rep.local_primitive_of_pi = is_coboundary_in_mode(half_xi_eta).has_value();
  ModeElement liouville = ModeElement::zero(0, params.degree_M);
  liouville.h[1] = Scalar(1);
  rep.liouville_class_survives = !is_coboundary_in_mode(liouville).has_value();

  if (sgn(c.re()) < 0)
    rep.notes.push_back("pi_c and pi_{-c} are isomorphic via x3 -> -x3; the result matches c = " + (-c).pretty());
  if (!geometry.zero_locus_verified) rep.notes.push_back("necklace zero locus could not be confirmed exactly");
  rep.annulus = annulus;
  rep.restriction = restriction;
  rep.sequence = solved;
  return rep;
}

GlobalReport global_report(const Scalar& c, const GlobalParams& params) {
  if (!c.is_real()) throw Error(ErrorCode::InvalidArgument, "c must be real");
  const int cmp = necklace_cmp(abs(c.re()), 1);
  if (cmp < 0) return global_cohomology(c, params);
  GlobalReport rep;
  rep.c = c;
  const ChartPtr xy = charts::xy();
  if (cmp == 0) {
    rep.branch = "bruhat";
    rep.skipped = true;
    rep.notes.push_back("Bruhat case: computed by Ginzburg, not reproduced here");
    return rep;
  }
  rep.branch = "symplectic";
  rep.dims = {1, 0, 1};
  rep.generators.push_back({0, "1", Multivector::function(xy, xy->constant(Scalar(1)))});
  rep.generators.push_back({2, "pi_c", make_pi_family("xy", c).bivector()});
  rep.notes.push_back("pi_c is symplectic for |c| > 1; Poisson cohomology is the de Rham cohomology of S^2");
  rep.assumptions = {"Poisson cohomology of a symplectic manifold is its de Rham cohomology"};
  return rep;
}

DeformationReport deformation_check(const Scalar& c, const Scalar& c_prime) {
  DeformationReport rep{c, c_prime, make_pi_family("xy", c_prime).bivector() - make_pi_family("xy", c).bivector(),
                        c_prime - c};
  rep.identity_holds = rep.difference == rep.multiple * make_standard("xy").bivector();
  rep.trivial = rep.multiple.is_zero();
  return rep;
}

}  // namespace necklace
