#include "necklace/serialize.hpp"

#include "necklace/error.hpp"

namespace necklace {

namespace {

Json index_list(Mask m) {
  Json out = Json::array();
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i);
  }
  return out;
}

template <Variance V>
Json graded_json(const Graded<V>& g, const char* kind) {
  Json comps = Json::array();
  for (const auto& [mask, f] : g.components()) {
    comps.push_back({{"index", index_list(mask)}, {"basis", g.label(mask)}, {"coeff", to_json(f)}});
  }
  return {{"kind", kind}, {"chart", g.chart()->name}, {"components", comps}, {"text", g.str()}};
}

Json scalars(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Json dims_json(const std::array<int, 3>& d) { return Json::array({d[0], d[1], d[2]}); }

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) { return Scalar::parse(j.get<std::string>()); }

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exp.push_back(t.exp[i]);
    terms.push_back({{"exp", exp}, {"coeff", to_json(t.coeff)}});
  }
  return {{"vars", *p.vars()}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
  const VarsPtr vars = make_vars(j.at("vars").get<VarList>());
  std::vector<Poly::Term> terms;
  for (const auto& t : j.at("terms")) {
    Poly::Term term;
    const auto& exp = t.at("exp");
    if (exp.size() != vars->size()) throw Error(ErrorCode::ParseError, "exponent vector length differs from vars");
    for (std::size_t i = 0; i < exp.size(); ++i) term.exp[i] = exp[i].get<std::uint16_t>();
    term.coeff = scalar_from_json(t.at("coeff"));
    terms.push_back(term);
  }
  return Poly::from_terms(vars, std::move(terms));
}

Json to_json(const RatFunc& f) {
  Json out = {{"num", to_json(f.num())}, {"text", f.str()}};
  if (!f.is_polynomial() || !f.den().constant_term().is_one()) out["den"] = to_json(f.den());
  return out;
}

Json to_json(const Multivector& mv) { return graded_json(mv, "multivector"); }
Json to_json(const DiffForm& form) { return graded_json(form, "form"); }

Json to_json(const PoissonStructure& pi) {
  Json out = {{"label", pi.label()}, {"chart", pi.chart()->name}, {"bivector", to_json(pi.bivector())}};
  if (pi.family_param_c()) out["c"] = to_json(*pi.family_param_c());
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const ModeElement& e) {
  return {{"mode", e.n}, {"M", e.M}, {"f", scalars(e.f)}, {"a", scalars(e.a)},
          {"b", scalars(e.b)}, {"h", scalars(e.h)}, {"text", e.str()}};
}

Json to_json(const TruncatedModeComplex& cx) {
  return {{"mode", cx.n}, {"M", cx.M}, {"d0", to_json(cx.d0)}, {"d1", to_json(cx.d1)}};
}

Json to_json(const CohomologyReport& r) {
  Json reps = Json::array();
  Json chart_reps = Json::array();
  for (int k = 0; k < 3; ++k) {
    Json deg = Json::array();
    for (const auto& e : r.representatives[static_cast<std::size_t>(k)]) deg.push_back(to_json(e));
    reps.push_back(deg);
    Json cdeg = Json::array();
    for (const auto& m : r.chart_representatives[static_cast<std::size_t>(k)]) cdeg.push_back(to_json(m));
    chart_reps.push_back(cdeg);
  }
  Json out = {{"scope", r.scope},
              {"M", r.M},
              {"dims", dims_json(r.dims)},
              {"representatives", reps},
              {"chart_representatives", chart_reps},
              {"stable_range_certificate", {{"M", r.stable_M}, {"N", r.stable_N}}},
              {"cocycles_verified", r.cocycles_verified},
              {"independence_verified", r.independence_verified}};
  if (r.scope == "mode") out["mode"] = r.mode;
  if (r.scope == "annulus") out["N"] = r.modes_N;
  return out;
}

Json to_json(const ZeroModeBlock& b) {
  Json reps = Json::array();
  for (const auto& deg : b.representatives) {
    Json d = Json::array();
    for (const auto& e : deg) d.push_back(e.str());
    reps.push_back(d);
  }
  return {{"m", b.m}, {"dims", dims_json(b.dims)}, {"representatives", reps}};
}

Json to_json(const ExactSequence& seq) {
  Json terms = Json::array();
  for (const auto& t : seq.terms) terms.push_back({{"label", t.label}, {"dim", t.dim ? Json(*t.dim) : Json(nullptr)}});
  Json ranks = Json::array();
  for (const auto& r : seq.ranks) ranks.push_back(r ? Json(*r) : Json(nullptr));
  return {{"terms", terms}, {"ranks", ranks}};
}

Json to_json(const RestrictionMatrix& r) {
  Json loops = Json::array();
  for (const auto& l : r.loops) loops.push_back({{"component", l.component_id}, {"radius_squared", to_json(l.radius_squared)}});
  return {{"generators", r.generator_labels}, {"loops", loops}, {"periods", r.periods}, {"rank", r.rank},
          {"threshold", r.threshold}};
}

Json to_json(const GlobalReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back({{"degree", g.degree}, {"label", g.label}, {"field", to_json(g.field)}});
  Json out = {{"c", to_json(r.c)}, {"branch", r.branch}, {"skipped", r.skipped}, {"generators", gens}, {"notes", r.notes},
              {"assumptions", r.assumptions}};
  out["dims"] = r.skipped ? Json(nullptr) : dims_json(r.dims);
  if (r.branch == "necklace") {
    out["evidence"] = {{"annulus_report", to_json(*r.annulus)},
                       {"restriction_matrix", to_json(*r.restriction)},
                       {"solved_sequence", to_json(*r.sequence)},
                       {"euler_primitive_check", r.euler_primitive_ok},
                       {"modular_field_is_cocycle", r.modular_cocycle_ok},
                       {"pi_locally_exact", r.local_primitive_of_pi},
                       {"liouville_class_nonzero_locally", r.liouville_class_survives}};
  }
  return out;
}

Json to_json(const DeformationReport& r) {
  return {{"c", to_json(r.c)}, {"c_prime", to_json(r.c_prime)}, {"difference", to_json(r.difference)},
          {"multiple_of_pi", to_json(r.multiple)}, {"identity_holds", r.identity_holds}, {"trivial", r.trivial}};
}

Json to_json(const NecklaceGeometry& g) {
  return {{"c", to_json(g.c)},
          {"radius_squared", to_json(g.radius_squared)},
          {"radius", g.radius},
          {"delta", to_json(g.delta)},
          {"annulus", {to_json(g.annulus_inner), to_json(g.annulus_outer)}},
          {"zero_locus_verified", g.zero_locus_verified}};
}

Json to_json(const AreaResult& a) {
  return {{"value", a.value}, {"closed_form", a.closed_form}, {"abs_error", std::abs(a.value - a.closed_form)},
          {"quad_points", a.quad_points}};
}

Json to_json(const ValidationResult& v) {
  return {{"ok", v.ok}, {"max_error", v.max_error}, {"samples", v.samples}, {"seed", v.seed}};
}

Json to_json(const ChartMap& m) {
  return {{"name", m.name}, {"source", m.source->name}, {"target", m.target->name},
          {"kind", std::string(to_string(m.kind))}, {"formulas", m.formulas}, {"inverse_formulas", m.inverse_formulas}};
}

Json to_json(const Chart& c) {
  return {{"name", c.name}, {"coords", c.coords}, {"vars", *c.vars}, {"domain", c.domain_note}};
}

Json conventions_json() {
  Json out = Json::object();
  for (const auto& [k, v] : conventions()) out[k] = v;
  return out;
}

Json envelope(const std::string& command, Json result, const std::vector<std::string>& assumptions) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"conventions", conventions_json()},
          {"assumptions", assumptions},
          {"result", std::move(result)}};
}

}  // namespace necklace
