#include <doctest.h>

#include "necklace/error.hpp"
#include "necklace/structures.hpp"
#include "support.hpp"

using namespace necklace;

TEST_SUITE("charts") {

TEST_CASE("registry") {
  CHECK(charts::by_name("xy")->coords == std::vector<std::string>{"x", "y"});
  CHECK(charts::by_name("r4")->dimension() == 4);
  CHECK_THROWS_AS(charts::by_name("polar"), Error);
  try {
    charts::by_name("polar");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownChart);
  }
  const ChartPtr m = charts::fourier_mode(3);
  const RatFunc e(m->var(1));
  // d/dtheta on e^{3 i theta} is 3 i e^{3 i theta}.
  CHECK(m->derive(1, e) == Scalar(0, 3) * e);
}

TEST_CASE("inversion z = 1/w is an involution") {
  const ChartMap f = atlas::w_to_z();
  const ChartMap g = atlas::z_to_w();
  const ChartMap id = compose(g, f);
  CHECK(id.components[0] == RatFunc(charts::w()->var(0)));
  CHECK(id.components[1] == RatFunc(charts::w()->var(1)));
  // Orientation preserving: det J = 1/r^4.
  const auto J = jacobian(f);
  const RatFunc r2 = RatFunc(charts::w()->var(0)).pow(2) + RatFunc(charts::w()->var(1)).pow(2);
  CHECK(J[0][0] * J[1][1] - J[0][1] * J[1][0] == r2.pow(-2));
}

TEST_CASE("pushforward errors") {
  const Multivector pi = make_pi_family("xy", Scalar(0)).bivector();
  CHECK_THROWS_AS(pushforward_rational(pi, atlas::w_to_z()), Error);
  try {
    pushforward_rational(pi, atlas::w_to_z());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongChart);
  }
  try {
    pushforward_rational(pi, atlas::xy_to_st());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
  try {
    pushforward_rational(make_standard("z").bivector(), atlas::z_to_sphere());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
}

TEST_CASE("z chart parametrizes the unit sphere") {
  const ChartMap s = atlas::z_to_sphere();
  const RatFunc norm = s.components[0].pow(2) + s.components[1].pow(2) + s.components[2].pow(2);
  CHECK(norm == charts::z()->constant(Scalar(1)));
  // Left inverse.
  std::vector<RatFunc> back;
  for (const auto& c : s.inverse) back.push_back(c.compose(s.components));
  CHECK(back[0] == RatFunc(charts::z()->var(0)));
  CHECK(back[1] == RatFunc(charts::z()->var(1)));
}

TEST_CASE("rescaling the disk moves the necklace radius") {
  // s = 2 s' takes pi_c with R^2 = 1/4 to (1/2)(r'^2 - 1/16): radius^2 1/16, same coefficient.
  const ChartMap m = atlas::rescale_st(Scalar(2));
  const Multivector pushed = pushforward_rational(make_pi_family("st", Scalar::rational(1, 2)).bivector(), m);
  const ChartPtr t = charts::st_rescaled();
  const RatFunc r2 = RatFunc(t->var(0)).pow(2) + RatFunc(t->var(1)).pow(2);
  CHECK(pushed.component(0b11) == Scalar::rational(1, 2) * (r2 - t->constant(Scalar::rational(1, 16))));
  CHECK_THROWS_AS(atlas::rescale_st(Scalar(0)), Error);
}

TEST_CASE("numeric validator") {
  const Scalar c = Scalar::rational(-1, 4);
  auto r = validate_pushforward_numeric(make_pi_family("xy", c).bivector(), make_pi_family("st", c).bivector(),
                                        atlas::xy_to_st(), 50, 1e-8, 42);
  CHECK(r.ok);
  CHECK(r.samples == 50);
  CHECK(r.seed == 42);
  // A wrong target is caught.
  r = validate_pushforward_numeric(make_pi_family("xy", c).bivector(), make_standard("st").bivector(), atlas::xy_to_st(),
                                   20, 1e-8, 42);
  CHECK_FALSE(r.ok);
  // Vector fields and functions go through the same path.
  const ChartPtr xy = charts::xy(), st = charts::st();
  Multivector rot_xy(xy), rot_st(st);
  rot_xy.add(0b01, -RatFunc(xy->var(1)));
  rot_xy.add(0b10, RatFunc(xy->var(0)));
  rot_st.add(0b01, -RatFunc(st->var(1)));
  rot_st.add(0b10, RatFunc(st->var(0)));
  CHECK(validate_pushforward_numeric(rot_xy, rot_st, atlas::xy_to_st(), 30, 1e-10).ok);
  // Same seed, same samples.
  const auto a = validate_pushforward_numeric(rot_xy, rot_st, atlas::xy_to_st(), 30, 1e-10, 9);
  const auto b = validate_pushforward_numeric(rot_xy, rot_st, atlas::xy_to_st(), 30, 1e-10, 9);
  CHECK(a.max_error == b.max_error);
}

TEST_CASE("pushforward is a bracket homomorphism on random affine and Moebius maps") {
  const ChartPtr src = make_chart("p", {"x", "y"}, "test plane");
  const ChartPtr tgt = make_chart("q", {"u", "v"}, "test plane");
  std::mt19937_64 rng(2024);
  int cases = 0;
  while (cases < 50) {
    ChartMap map;
    if (cases % 2 == 0) {
      std::array<Scalar, 6> k;
      for (auto& s : k) s = testkit::random_scalar(rng);
      if ((k[0] * k[3] - k[1] * k[2]).is_zero()) continue;
      map = testkit::affine_map(src, tgt, k);
    } else {
      const Scalar a = testkit::random_scalar(rng, true), b = testkit::random_scalar(rng, true);
      const Scalar c = testkit::random_scalar(rng, true), d = testkit::random_scalar(rng, true);
      if ((a * d - b * c).is_zero() || c.is_zero()) continue;
      map = testkit::moebius_map(src, tgt, a, b, c, d);
    }
    std::uniform_int_distribution<int> deg(0, 2);
    const int p = deg(rng), q = deg(rng);
    const Multivector P = testkit::random_multivector(rng, src, p, 2);
    const Multivector Q = testkit::random_multivector(rng, src, q, 2);
    const Multivector lhs = pushforward_rational(schouten(P, Q), map);
    const Multivector rhs = schouten(pushforward_rational(P, map), pushforward_rational(Q, map));
    CAPTURE(cases);
    CHECK(lhs == rhs);
    ++cases;
  }
}

}  // TEST_SUITE
