#include "necklace/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "necklace/error.hpp"
#include "necklace/serialize.hpp"

namespace necklace {

namespace {

Scalar parse_flag(const std::string& flag, const std::string& text) {
  try {
    return Scalar::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::UsageError, "--" + flag + " expects an exact number such as 1/2 or -9/10, got '" + text + "'");
  }
}

Scalar parse_real_flag(const std::string& flag, const std::string& text) {
  Scalar s = parse_flag(flag, text);
  if (!s.is_real()) throw Error(ErrorCode::UsageError, "--" + flag + " must be real");
  return s;
}

int compare_abs_one(const Scalar& c) {
  const int r = cmp(abs(c.re()), 1);
  return (r > 0) - (r < 0);
}

std::vector<std::string> formal_assumptions() {
  return {"formal power series in I are truncated to the windows f 0..M, a 0..M+1, b 0..M, h 0..M+1",
          "the local model is the necklace of radius 1, I d_I ^ d_theta in action-angle coordinates"};
}

PoissonStructure structure_by_name(const RunConfig& cfg) {
  const std::string& s = cfg.structure;
  if (s == "su2-r4") return make_su2_bivector_r4();
  if (s == "bruhat") return make_bruhat(cfg.chart);
  if (s == "standard") return make_standard(cfg.chart);
  if (s == "pi_c") return make_pi_family(cfg.chart, parse_real_flag("c", cfg.c));
  throw Error(ErrorCode::UsageError, "unknown --structure '" + s + "' (su2-r4, bruhat, standard, pi_c)");
}

// ---------------------------------------------------------------------------
// verify-paper

class ClaimRunner {
 public:
  void run(const std::string& id, const std::string& statement, const std::function<std::string(bool&)>& body) {
    Claim claim{id, statement, "PASS", ""};
    try {
      bool ok = true;
      claim.detail = body(ok);
      claim.status = ok ? "PASS" : "FAIL";
    } catch (const std::exception& e) {
      claim.status = "FAIL";
      claim.detail = std::string("exception: ") + e.what();
    }
    claims_.push_back(std::move(claim));
  }
  void skip(const std::string& id, const std::string& statement, const std::string& why) {
    claims_.push_back({id, statement, "SKIPPED", why});
  }
  const std::vector<Claim>& claims() const { return claims_; }

 private:
  std::vector<Claim> claims_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

int cmd_verify_paper(const RunConfig& cfg, nlohmann::json& report) {
  const Scalar c = parse_real_flag("c", cfg.c);
  if (cfg.degree < 2) throw Error(ErrorCode::UsageError, "--degree must be at least 2");
  if (cfg.modes < 1) throw Error(ErrorCode::UsageError, "--modes must be at least 1");
  if (cfg.quad_points < 64) throw Error(ErrorCode::UsageError, "--quad-points must be at least 64");
  const int branch = compare_abs_one(c);
  ClaimRunner run;

  run.run("su2.jacobi", "the real form of the SU(2) bivector on R^4 has vanishing Schouten square", [](bool& ok) {
    const auto pi = make_su2_bivector_r4();
    ok = schouten(pi.bivector(), pi.bivector()).is_zero();
    return std::string("[pi,pi] = 0");
  });
  run.run("su2.bracket_table", "{u,ubar} = -i v vbar, {u,v} = i u v/2, {u,vbar} = i u vbar/2, {v,vbar} = 0", [](bool& ok) {
    const auto pi = make_su2_bivector_r4();
    const ChartPtr ch = pi.chart();
    const Scalar i = Scalar::imaginary_unit();
    const RatFunc u = RatFunc(ch->var(0)) + i * RatFunc(ch->var(1));
    const RatFunc v = RatFunc(ch->var(2)) + i * RatFunc(ch->var(3));
    const Scalar half = Scalar::rational(1, 2);
    ok = poisson_bracket(pi, u, u.conj()) == -i * v * v.conj() && poisson_bracket(pi, u, v) == half * i * u * v &&
         poisson_bracket(pi, u, v.conj()) == half * i * u * v.conj() && poisson_bracket(pi, v, v.conj()).is_zero();
    return std::string("all four brackets exact");
  });
  run.run("su2.casimir", "a^2+b^2+p^2+q^2 = |u|^2+|v|^2 is a Casimir", [](bool& ok) {
    const auto pi = make_su2_bivector_r4();
    RatFunc r2 = pi.chart()->constant(Scalar(0));
    for (std::size_t k = 0; k < 4; ++k) r2 += RatFunc(pi.chart()->var(k)) * RatFunc(pi.chart()->var(k));
    ok = casimir_check(pi, r2) && !casimir_check(pi, RatFunc(pi.chart()->var(0)));
    return std::string("[pi, r^2] = 0, [pi, a] != 0");
  });
  run.run("bruhat.w_to_z", "pi_1 on the w chart transported by z = 1/w is pi_1 on the z chart", [](bool& ok) {
    ok = pushforward_rational(make_bruhat("w").bivector(), atlas::w_to_z()) == make_bruhat("z").bivector();
    return "pi_1(z) = " + make_bruhat("z").bivector().str();
  });
  run.run("bruhat.height_factor", "pi_1 = (1 - x3) pi under the stereographic parametrization", [](bool& ok) {
    ok = bruhat_is_height_times_standard();
    return std::string("exact on z, xy, w");
  });
  run.run("family.decomposition", "pi_c = pi_1 + (c-1) pi on w, z and xy", [&](bool& ok) {
    ok = true;
    for (const std::string id : {"w", "z", "xy"}) {
      const Multivector diff = make_pi_family(id, c).bivector() - make_bruhat(id).bivector() -
                               (c - Scalar(1)) * make_standard(id).bivector();
      ok = ok && diff.is_zero();
    }
    return "pi_c(xy) = " + make_pi_family("xy", c).bivector().str();
  });
  run.run("charts.w_matches_xy", "complex (Wirtinger) and real presentations of pi_c agree", [&](bool& ok) {
    ok = pushforward_rational(make_pi_family("w", c).bivector(), atlas::w_to_xy()) == make_pi_family("xy", c).bivector();
    return std::string("exact");
  });
  run.run("charts.xy_to_st", "pi_c and pi in (x,y) and (s,t) agree at random points", [&](bool& ok) {
    const auto r1 = validate_pushforward_numeric(make_pi_family("xy", c).bivector(), make_pi_family("st", c).bivector(),
                                                 atlas::xy_to_st(), 50, 1e-8, cfg.seed);
    const auto r2 = validate_pushforward_numeric(make_standard("xy").bivector(), make_standard("st").bivector(),
                                                 atlas::xy_to_st(), 50, 1e-8, cfg.seed);
    ok = r1.ok && r2.ok;
    return "max error " + fmt(std::max(r1.max_error, r2.max_error));
  });
  if (branch < 0) {
    run.run("charts.st_to_action_angle", "pi_c in (s,t) becomes I d_I ^ d_theta near the necklace", [&](bool& ok) {
      const auto g = necklace_radius(c);
      const auto r = validate_pushforward_numeric(make_pi_family("st", c).bivector(),
                                                  make_pi_family("action_angle", c).bivector(),
                                                  atlas::st_to_action_angle(g.radius_squared), 50, 1e-8, cfg.seed);
      ok = r.ok && g.zero_locus_verified;
      return "R^2 = " + g.radius_squared.pretty() + ", max error " + fmt(r.max_error);
    });
  } else {
    run.skip("charts.st_to_action_angle", "pi_c in (s,t) becomes I d_I ^ d_theta near the necklace", "no necklace for |c| >= 1");
  }

  run.run("area.closed_form", "symplectic area 2 pi ln((c+1)/(c-1)) for c in {3/2, 2, 3}", [&](bool& ok) {
    ok = true;
    std::string detail;
    std::vector<Scalar> cs = {Scalar::rational(3, 2), Scalar(2), Scalar(3)};
    if (branch > 0) cs.push_back(c);
    for (const auto& cv : cs) {
      const auto a = symplectic_area(cv, cfg.quad_points);
      ok = ok && std::abs(a.value - a.closed_form) <= 1e-6;
      detail += "c=" + cv.pretty() + ": " + fmt(a.value) + "; ";
    }
    return detail;
  });
  run.run("area.degenerate_rejected", "no finite area for |c| <= 1", [](bool& ok) {
    try {
      symplectic_area(Scalar::rational(1, 2), 64);
      ok = false;
      return std::string("no error raised");
    } catch (const Error& e) {
      ok = e.code() == ErrorCode::DegenerateFamily;
      return std::string(to_string(e.code()));
    }
  });
  run.run("area.distinguishes", "areas differ for different |c| > 1 and agree for c, -c", [&](bool& ok) {
    const double v15 = symplectic_area(Scalar::rational(3, 2), cfg.quad_points).value;
    const double v2 = symplectic_area(Scalar(2), cfg.quad_points).value;
    const double v3 = symplectic_area(Scalar(3), cfg.quad_points).value;
    const double vm3 = symplectic_area(Scalar(-3), cfg.quad_points).value;
    ok = v15 > v2 && v2 > v3 && std::abs(std::abs(vm3) - v3) < 1e-9;
    return "V(3/2) > V(2) > V(3), |V(-3)| = V(3)";
  });
  run.run("modular.rotation", "the modular field of pi_c with respect to omega is x d_y - y d_x", [&](bool& ok) {
    const Multivector m = modular_field(make_pi_family("xy", c), omega_density("xy"));
    const ChartPtr xy = charts::xy();
    Multivector expect(xy);
    expect.add(0b01, -RatFunc(xy->var(1)));
    expect.add(0b10, RatFunc(xy->var(0)));
    ok = m == expect;
    return m.str();
  });

  run.run("formal.zero_mode", "mode 0 has cohomology (1,2,1) spanned by 1; d_theta, I d_I; I d_I ^ d_theta", [&](bool& ok) {
    const auto r = mode_cohomology(0, cfg.degree);
    ok = r.dims == std::array<int, 3>{1, 2, 1} && r.cocycles_verified && r.independence_verified &&
         r.stable_M.size() == 2;
    std::string reps;
    for (const auto& deg : r.representatives) {
      for (const auto& e : deg) reps += e.str() + "; ";
    }
    return reps;
  });
  run.run("formal.nonzero_modes", "every mode n != 0 is acyclic", [&](bool& ok) {
    ok = true;
    for (long n = 1; n <= cfg.modes; ++n) {
      for (long m : {n, -n}) ok = ok && mode_cohomology(m, cfg.degree).dims == std::array<int, 3>{0, 0, 0};
    }
    return "checked |n| <= " + std::to_string(cfg.modes);
  });
  run.run("formal.zero_mode_split", "degree blocks: m=0 gives (1,1,0), m=1 gives (0,1,1), m>1 acyclic", [&](bool& ok) {
    ok = true;
    for (const auto& b : zero_mode_split(cfg.degree)) {
      const std::array<int, 3> expect = b.m == 0 ? std::array<int, 3>{1, 1, 0}
                                        : b.m == 1 ? std::array<int, 3>{0, 1, 1}
                                                   : std::array<int, 3>{0, 0, 0};
      ok = ok && b.dims == expect;
    }
    return std::string("blocks m = 0..") + std::to_string(cfg.degree);
  });
  run.run("formal.primitive", "xi eta in mode 2 with c_0 = c_1 = 1 has primitive -xi + eta/(2i)", [&](bool& ok) {
    ModeElement b = ModeElement::zero(2, cfg.degree);
    b.h[0] = Scalar(1);
    b.h[1] = Scalar(1);
    const auto p = is_coboundary_in_mode(b);
    ok = p && p->a[0] == Scalar(-1) && p->b[0] == (Scalar(2) * Scalar::imaginary_unit()).inverse() &&
         mode_differential(*p) == b;
    return p ? p->str() : std::string("none");
  });
  run.run("annulus.dims", "an annulus around the necklace has cohomology (1,2,1)", [&](bool& ok) {
    const auto r = annulus_cohomology(cfg.modes, cfg.degree);
    ok = r.dims == std::array<int, 3>{1, 2, 1};
    const Multivector pi_model = make_pi_family("st", Scalar(-1)).bivector();
    ok = ok && r.chart_representatives[2].size() == 1 && r.chart_representatives[2][0] == pi_model;
    return "H2 generator " + r.chart_representatives[2][0].str();
  });

  if (branch == 0) {
    run.skip("euler.primitive", "[pi_c, E] = pi for E = (s d_s + t d_t)/(2(c-1))", "E is undefined at c = 1");
  } else {
    run.run("euler.primitive", "[pi_c, E] = pi for E = (s d_s + t d_t)/(2(c-1))", [&](bool& ok) {
      ok = schouten(make_pi_family("st", c).bivector(), euler_field(c)) == make_standard("st").bivector();
      return std::string("exact on st");
    });
  }

  GlobalParams params;
  params.modes_N = cfg.modes;
  params.degree_M = cfg.degree;
  std::optional<GlobalReport> global;
  if (branch < 0) {
    run.run("mv.restriction_rank", "the restriction of H^1(U) to the two annuli has rank 1, rows (0,0), (2pi,2pi)",
            [&](bool& ok) {
              global = global_cohomology(c, params);
              const auto& p = global->restriction->periods;
              const double tp = 2 * std::numbers::pi;
              ok = global->restriction->rank == 1 && p.size() == 2 && std::abs(p[0][0]) < 1e-6 &&
                   std::abs(p[0][1]) < 1e-6 && std::abs(p[1][0] - tp) < 1e-6 && std::abs(p[1][1] - tp) < 1e-6;
              return "periods d_theta: (" + fmt(p[0][0]) + ", " + fmt(p[0][1]) + "), I d_I: (" + fmt(p[1][0]) + ", " +
                     fmt(p[1][1]) + ")";
            });
    run.run("mv.sequence", "the Mayer-Vietoris sequence forces H^1 = 1, H^2 = 2, and needs the middle rank", [&](bool& ok) {
      if (!global) global = global_cohomology(c, params);
      const auto seq = solve_exact_sequence(mayer_vietoris_sequence(global->annulus->dims, 1));
      bool under = false;
      try {
        solve_exact_sequence(mayer_vietoris_sequence(global->annulus->dims, std::nullopt));
      } catch (const Error& e) {
        under = e.code() == ErrorCode::Underdetermined;
      }
      ok = *seq.terms[3].dim == 1 && *seq.terms[6].dim == 2 && under;
      return std::string("withheld rank -> Underdetermined");
    });
    run.run("global.dims", "H^0 = span{1}, H^1 = span{Delta_omega}, H^2 = span{pi_c, pi}", [&](bool& ok) {
      if (!global) global = global_cohomology(c, params);
      ok = global->dims == std::array<int, 3>{1, 1, 2} && global->modular_cocycle_ok && global->euler_primitive_ok &&
           global->local_primitive_of_pi && global->liouville_class_survives;
      return "dims (" + std::to_string(global->dims[0]) + "," + std::to_string(global->dims[1]) + "," +
             std::to_string(global->dims[2]) + ")";
    });
    run.run("deformation.multiple_of_pi", "pi_c' - pi_c is (c'-c) pi, a nontrivial deformation", [&](bool& ok) {
      const Scalar cp = cfg.c_prime ? parse_real_flag("c-prime", *cfg.c_prime)
                                    : (c.is_zero() ? Scalar::rational(1, 2) : Scalar(0));
      const auto d = deformation_check(c, cp);
      ok = d.identity_holds && !d.trivial;
      return "c' = " + cp.pretty() + ", multiple " + d.multiple.pretty();
    });
  } else if (branch > 0) {
    run.run("global.dims", "symplectic case: Poisson cohomology is de Rham cohomology (1,0,1)", [&](bool& ok) {
      global = global_report(c, params);
      ok = global->dims == std::array<int, 3>{1, 0, 1};
      return std::string("dims (1,0,1)");
    });
  } else {
    global = global_report(c, params);
    run.skip("global.dims", "Poisson cohomology of pi_c", "Bruhat case: computed by Ginzburg, not reproduced here");
  }

  nlohmann::json claims = nlohmann::json::array();
  int passed = 0, failed = 0, skipped = 0;
  nlohmann::json first_failure = nullptr;
  for (const auto& cl : run.claims()) {
    claims.push_back({{"id", cl.id}, {"statement", cl.statement}, {"status", cl.status}, {"detail", cl.detail}});
    if (cl.status == "PASS") ++passed;
    if (cl.status == "SKIPPED") ++skipped;
    if (cl.status == "FAIL") {
      ++failed;
      if (first_failure.is_null()) first_failure = cl.id;
    }
  }
  report = {{"c", to_json(c)},
            {"modes_N", cfg.modes},
            {"degree_M", cfg.degree},
            {"quad_points", cfg.quad_points},
            {"seed", cfg.seed},
            {"claims", claims},
            {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
            {"first_failure", first_failure}};
  if (global) report["global"] = to_json(*global);
  return failed == 0 ? 0 : 1;
}

int cmd_dispatch(const RunConfig& cfg, nlohmann::json& report) {
  const std::string& cmd = cfg.command;
  if (cmd == "jacobi") {
    const PoissonStructure pi = structure_by_name(cfg);
    const Multivector sq = schouten(pi.bivector(), pi.bivector());
    report = {{"structure", cfg.structure}, {"chart", pi.chart()->name}, {"bivector", to_json(pi.bivector())},
              {"schouten_square", sq.is_zero() ? "0" : sq.str()}, {"is_poisson", sq.is_zero()}};
    return sq.is_zero() ? 0 : 1;
  }
  if (cmd == "bracket") {
    const PoissonStructure pi = structure_by_name(cfg);
    const ChartPtr ch = pi.chart();
    nlohmann::json table = nlohmann::json::array();
    if (ch->name == "r4") {
      const Scalar i = Scalar::imaginary_unit();
      const RatFunc u = RatFunc(ch->var(0)) + i * RatFunc(ch->var(1));
      const RatFunc v = RatFunc(ch->var(2)) + i * RatFunc(ch->var(3));
      const std::vector<std::pair<std::string, std::pair<RatFunc, RatFunc>>> pairs = {
          {"{u,ubar}", {u, u.conj()}}, {"{u,v}", {u, v}}, {"{u,vbar}", {u, v.conj()}}, {"{v,vbar}", {v, v.conj()}}};
      for (const auto& [name, fg] : pairs) {
        table.push_back({{"pair", name}, {"value", to_json(poisson_bracket(pi, fg.first, fg.second))}});
      }
    }
    for (std::size_t a = 0; a < ch->dimension(); ++a) {
      for (std::size_t b = a + 1; b < ch->dimension(); ++b) {
        table.push_back({{"pair", "{" + ch->coords[a] + "," + ch->coords[b] + "}"},
                         {"value", to_json(poisson_bracket(pi, RatFunc(ch->var(a)), RatFunc(ch->var(b))))}});
      }
    }
    report = {{"structure", cfg.structure}, {"chart", ch->name}, {"brackets", table}};
    return 0;
  }
  if (cmd == "transform") {
    const Scalar c = parse_real_flag("c", cfg.c);
    const ChartPtr focus = charts::by_name(cfg.chart);
    nlohmann::json steps = nlohmann::json::array();
    auto exact = [&](const std::string& from, const std::string& to, const ChartMap& m) {
      const Multivector pushed = pushforward_rational(make_pi_family(from, c).bivector(), m);
      steps.push_back({{"map", to_json(m)}, {"mode", "exact"}, {"pushed", to_json(pushed)},
                       {"agrees", pushed == make_pi_family(to, c).bivector()}});
    };
    auto numeric = [&](const std::string& from, const std::string& to, const ChartMap& m) {
      const auto r = validate_pushforward_numeric(make_pi_family(from, c).bivector(), make_pi_family(to, c).bivector(),
                                                  m, 50, 1e-8, cfg.seed);
      steps.push_back({{"map", to_json(m)}, {"mode", "numeric"}, {"validation", to_json(r)}, {"agrees", r.ok}});
    };
    exact("w", "xy", atlas::w_to_xy());
    exact("w", "z", atlas::w_to_z());
    exact("z", "w", atlas::z_to_w());
    numeric("xy", "st", atlas::xy_to_st());
    if (compare_abs_one(c) < 0) numeric("st", "action_angle", atlas::st_to_action_angle(necklace_radius(c).radius_squared));
    bool all = true;
    for (const auto& s : steps) all = all && s["agrees"].get<bool>();
    nlohmann::json presentations = nlohmann::json::object();
    for (const std::string id : {"w", "z", "xy", "st", "action_angle"}) presentations[id] = to_json(make_pi_family(id, c).bivector());
    report = {{"c", to_json(c)}, {"chart", focus->name}, {"presentations", presentations}, {"transitions", steps},
              {"all_agree", all}};
    return all ? 0 : 1;
  }
  if (cmd == "modular") {
    const Scalar c = parse_real_flag("c", cfg.c);
    const PoissonStructure pi = make_pi_family(cfg.chart, c);
    const RatFunc density = omega_density(cfg.chart);
    report = {{"c", to_json(c)}, {"chart", cfg.chart}, {"omega_density", to_json(density)},
              {"modular_field", to_json(modular_field(pi, density))}};
    return 0;
  }
  if (cmd == "area") {
    const Scalar c = parse_real_flag("c", cfg.c);
    report = {{"c", to_json(c)}, {"area", to_json(symplectic_area(c, cfg.quad_points))}};
    return 0;
  }
  if (cmd == "formal") {
    const auto r = mode_cohomology(cfg.mode, cfg.degree);
    report = to_json(r);
    report["complex"] = to_json(build_mode_complex(cfg.mode, cfg.degree));
    return 0;
  }
  if (cmd == "zero-mode-split") {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : zero_mode_split(cfg.degree)) blocks.push_back(to_json(b));
    report = {{"M", cfg.degree}, {"blocks", blocks}};
    return 0;
  }
  if (cmd == "annulus") {
    report = to_json(annulus_cohomology(cfg.modes, cfg.degree));
    return 0;
  }
  if (cmd == "global") {
    GlobalParams params;
    params.modes_N = cfg.modes;
    params.degree_M = cfg.degree;
    report = to_json(global_report(parse_real_flag("c", cfg.c), params));
    return 0;
  }
  if (cmd == "deformation") {
    const Scalar c = parse_real_flag("c", cfg.c);
    const Scalar cp = parse_real_flag("c-prime", cfg.c_prime.value_or("0"));
    const auto d = deformation_check(c, cp);
    report = to_json(d);
    return d.identity_holds ? 0 : 1;
  }
  if (cmd == "atlas") {
    nlohmann::json charts_json = nlohmann::json::array();
    for (const auto& ch : charts::all()) charts_json.push_back(to_json(*ch));
    nlohmann::json maps = nlohmann::json::array();
    for (const auto& m : stereographic_atlas()) maps.push_back(to_json(m));
    report = {{"charts", charts_json}, {"maps", maps}};
    return 0;
  }
  throw Error(ErrorCode::UsageError, "unknown command '" + cmd + "'");
}

namespace {

void render(const nlohmann::json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        out += indent + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      } else {
        out += indent + k + ":\n";
        render(v, indent + "  ", out);
      }
    }
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const nlohmann::json& e) { return e.is_primitive(); });
    if (flat) {
      out += indent + j.dump() + "\n";
      return;
    }
    for (const auto& e : j) {
      out += indent + "-\n";
      render(e, indent + "  ", out);
    }
  } else {
    out += indent + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

std::string render_claims(const nlohmann::json& result) {
  std::string out = "c = " + result["c"].get<std::string>() + "\n";
  for (const auto& cl : result["claims"]) {
    std::string status = cl["status"].get<std::string>();
    status.resize(8, ' ');
    out += status + cl["id"].get<std::string>() + "  " + cl["detail"].get<std::string>() + "\n";
  }
  const auto& s = result["summary"];
  out += "passed " + s["passed"].dump() + ", failed " + s["failed"].dump() + ", skipped " + s["skipped"].dump() + "\n";
  if (result.contains("global") && !result["global"]["dims"].is_null())
    out += "global dims " + result["global"]["dims"].dump() + "\n";
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UsageError:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownChart:
    case ErrorCode::InvalidArgument:
    case ErrorCode::OutOfRange:
    case ErrorCode::DegenerateFamily:
    case ErrorCode::CapTooSmall:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

std::string render_text(const nlohmann::json& report) {
  std::string out;
  render(report, "", out);
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poisson cohomology of the SU(2)-covariant necklace structures on S^2"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"verify-paper", "run every claim of the reproduction pipeline"},
      {"jacobi", "Schouten square of a structure"},
      {"bracket", "bracket table of a structure"},
      {"transform", "pi_c across the chart atlas"},
      {"modular", "modular vector field of pi_c with respect to omega"},
      {"area", "symplectic area of pi_c for |c| > 1"},
      {"formal", "cohomology of one Fourier mode"},
      {"zero-mode-split", "zero-mode complex split by I-degree"},
      {"annulus", "cohomology of an annulus around the necklace"},
      {"global", "global Poisson cohomology of pi_c"},
      {"deformation", "pi_c' - pi_c as a multiple of pi"},
      {"atlas", "charts and transition maps"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--c", cfg.c, "family parameter, exact (e.g. 1/2)");
    sub->add_option("--c-prime", cfg.c_prime, "second family parameter for deformation");
    sub->add_option("--mode", cfg.mode, "Fourier mode n");
    sub->add_option("--modes", cfg.modes, "modes |n| <= N")->check(CLI::PositiveNumber);
    sub->add_option("--degree", cfg.degree, "truncation cap M");
    sub->add_option("--chart", cfg.chart, "chart id (w, z, xy, st, action_angle, r4)");
    sub->add_option("--structure", cfg.structure, "su2-r4, bruhat, standard, pi_c");
    sub->add_option("--quad-points", cfg.quad_points, "Gauss-Legendre points");
    sub->add_option("--seed", cfg.seed, "seed for random sample points");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out, "write the report to this file");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int rc = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return rc == 0 ? 0 : 2;
  }
  if (cfg.command == "jacobi" && cfg.structure == "su2-r4") cfg.chart = "r4";

  nlohmann::json result;
  int code = 0;
  try {
    code = cfg.command == "verify-paper" ? cmd_verify_paper(cfg, result) : cmd_dispatch(cfg, result);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::vector<std::string> assumptions;
  if (cfg.command == "formal" || cfg.command == "annulus" || cfg.command == "zero-mode-split")
    assumptions = formal_assumptions();
  const nlohmann::json* global = cfg.command == "global" ? &result : result.contains("global") ? &result["global"] : nullptr;
  if (global && global->contains("assumptions")) {
    for (const auto& a : (*global)["assumptions"]) assumptions.push_back(a.get<std::string>());
  }
  const nlohmann::json doc = envelope(cfg.command, result, assumptions);
  std::string text;
  if (cfg.format == "json") {
    text = doc.dump(2) + "\n";
  } else if (cfg.command == "verify-paper") {
    text = render_claims(result);
  } else {
    text = render_text(doc);
  }
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *cfg.out << "\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  if (cfg.command == "verify-paper" && code != 0) err << "first failing claim: " << result["first_failure"].get<std::string>() << "\n";
  return code;
}

}  // namespace necklace
