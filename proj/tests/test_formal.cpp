#include <doctest.h>

#include <algorithm>

#include "necklace/error.hpp"
#include "necklace/structures.hpp"
#include "support.hpp"

using namespace necklace;

namespace {

Matrix conj(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).conj();
  }
  return out;
}

}  // namespace

TEST_SUITE("formal") {

TEST_CASE("linear algebra over Q(i)") {
  Matrix m(2, 3);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar::imaginary_unit();
  m.at(1, 0) = Scalar(2);
  m.at(1, 1) = Scalar(0, 2);
  m.at(1, 2) = Scalar(1);
  CHECK(rank(m) == 2);
  const auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  for (const auto& s : m.apply(ker[0])) CHECK(s.is_zero());
  const auto x = solve(m, {Scalar(1), Scalar(3)});
  REQUIRE(x);
  CHECK(m.apply(*x) == std::vector<Scalar>{Scalar(1), Scalar(3)});
  Matrix sing(2, 2);
  sing.at(0, 0) = Scalar(1);
  sing.at(1, 0) = Scalar(2);
  CHECK_FALSE(solve(sing, {Scalar(1), Scalar(1)}).has_value());
}

TEST_CASE("mode complex matrices come from the Schouten engine and match the recursions") {
  for (long n : {0L, 1L, -1L, 2L, 3L, -3L, 5L}) {
    for (int M : {2, 3, 6}) {
      CAPTURE(n);
      CAPTURE(M);
      const TruncatedModeComplex cx = build_mode_complex(n, M);
      CHECK(cx.d0 == testkit::recursion_d0(n, M));
      CHECK(cx.d1 == testkit::recursion_d1(n, M));
      CHECK((cx.d1 * cx.d0).is_zero());
      // Conjugation symmetry between n and -n.
      const TruncatedModeComplex neg = build_mode_complex(-n, M);
      CHECK(neg.d0 == conj(cx.d0));
      CHECK(neg.d1 == conj(cx.d1));
    }
  }
  CHECK_THROWS_AS(build_mode_complex(0, 1), Error);
  try {
    build_mode_complex(0, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapTooSmall);
  }
}

TEST_CASE("zero-mode differential on basis elements") {
  const int M = 6;
  // d I^m = -m I^m eta.
  for (int m = 0; m <= M; ++m) {
    ModeElement f = ModeElement::zero(0, M);
    f.f[static_cast<std::size_t>(m)] = Scalar(1);
    const ModeElement d = mode_differential(f);
    ModeElement expect = ModeElement::zero(0, M);
    expect.b[static_cast<std::size_t>(m)] = Scalar(-m);
    CHECK(d == expect);
  }
  // d I^m xi = (m-1) I^m xi eta for m >= 1; I xi is a cocycle.
  for (int m = 1; m <= M + 1; ++m) {
    ModeElement x = ModeElement::zero(0, M);
    x.a[static_cast<std::size_t>(m)] = Scalar(1);
    ModeElement expect = ModeElement::zero(0, M);
    expect.h[static_cast<std::size_t>(m)] = Scalar(m - 1);
    CHECK(mode_differential(x) == expect);
  }
}

TEST_CASE("mode cohomology is independent of the cap") {
  for (int M = 2; M <= 10; ++M) {
    CAPTURE(M);
    const CohomologyReport r = mode_cohomology(0, M);
    CHECK(r.dims == std::array<int, 3>{1, 2, 1});
    CHECK(r.cocycles_verified);
    CHECK(r.independence_verified);
    CHECK(r.stable_M == std::vector<int>{M, M + 1});
    for (long n : {1L, -1L, 2L, -2L, 3L, -3L, 5L}) CHECK(mode_cohomology(n, M).dims == std::array<int, 3>{0, 0, 0});
  }
}

TEST_CASE("zero-mode representatives") {
  const CohomologyReport r = mode_cohomology(0, 6);
  ModeElement one = ModeElement::zero(0, 6);
  one.f[0] = Scalar(1);
  ModeElement i_xi = ModeElement::zero(0, 6);
  i_xi.a[1] = Scalar(1);
  ModeElement eta = ModeElement::zero(0, 6);
  eta.b[0] = Scalar(1);
  ModeElement i_xi_eta = ModeElement::zero(0, 6);
  i_xi_eta.h[1] = Scalar(1);
  CHECK(r.representatives[0] == std::vector<ModeElement>{one});
  REQUIRE(r.representatives[1].size() == 2);
  CHECK(std::find(r.representatives[1].begin(), r.representatives[1].end(), i_xi) != r.representatives[1].end());
  CHECK(std::find(r.representatives[1].begin(), r.representatives[1].end(), eta) != r.representatives[1].end());
  CHECK(r.representatives[2] == std::vector<ModeElement>{i_xi_eta});
  // As multivectors on the mode chart: I d_I ^ d_theta is the model structure itself.
  CHECK(r.chart_representatives[2][0] ==
        Multivector::basis(charts::fourier_mode(0), 0b11, RatFunc(charts::fourier_mode(0)->var(0))));
}

TEST_CASE("cocycle recursion for n != 0") {
  // X = (sum a_m I^m) xi + (sum b_m I^m) eta is closed iff a_0 = b_0 = 0 and b_m = -m a_{m+1}/(i n).
  const long n = 3;
  const int M = 5;
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    ModeElement x = ModeElement::zero(n, M);
    for (std::size_t m = 1; m < x.a.size(); ++m) x.a[m] = testkit::random_scalar(rng, true);
    for (std::size_t m = 1; m < x.b.size(); ++m) x.b[m] = Scalar(-static_cast<long>(m)) * x.a[m + 1] / Scalar(0, n);
    CHECK(mode_differential(x).is_zero());
    // Then X = d f with f_m = a_{m+1}/(i n).
    ModeElement f = ModeElement::zero(n, M);
    for (std::size_t m = 0; m < f.f.size(); ++m) f.f[m] = x.a[m + 1] / Scalar(0, n);
    CHECK(mode_differential(f) == x);
    x.b[1] += Scalar(1);
    CHECK_FALSE(mode_differential(x).is_zero());
  }
}

TEST_CASE("primitives") {
  ModeElement b = ModeElement::zero(2, 6);
  b.h[0] = Scalar(1);
  b.h[1] = Scalar(1);
  const auto p = is_coboundary_in_mode(b);
  REQUIRE(p);
  CHECK(p->a[0] == Scalar(-1));
  CHECK(p->b[0] == (Scalar(2) * Scalar::imaginary_unit()).inverse());
  CHECK(mode_differential(*p) == b);

  // Closed form: xi-coefficients c_m/(m-1) for m != 1 (with -c_0 at m = 0), eta-coefficient c_1/(i n).
  std::mt19937_64 rng(66);
  const long n = -2;
  ModeElement B = ModeElement::zero(n, 5);
  for (auto& c : B.h) c = testkit::random_scalar(rng, true);
  const auto P = is_coboundary_in_mode(B);
  REQUIRE(P);
  CHECK(P->a[0] == -B.h[0]);
  for (std::size_t m = 2; m < B.h.size(); ++m) CHECK(P->a[m] == B.h[m] / Scalar(static_cast<long>(m) - 1));
  CHECK(P->b[0] == B.h[1] / Scalar(0, n));
  CHECK(P->a[1].is_zero());

  ModeElement half_xi_eta = ModeElement::zero(0, 6);
  half_xi_eta.h[0] = Scalar::rational(1, 2);
  const auto q = is_coboundary_in_mode(half_xi_eta);
  REQUIRE(q);
  ModeElement minus_half_xi = ModeElement::zero(0, 6);
  minus_half_xi.a[0] = Scalar::rational(-1, 2);
  CHECK(*q == minus_half_xi);

  ModeElement liouville = ModeElement::zero(0, 6);
  liouville.h[1] = Scalar(1);
  CHECK_FALSE(is_coboundary_in_mode(liouville).has_value());
  ModeElement eta = ModeElement::zero(0, 6);
  eta.b[0] = Scalar(1);
  CHECK_FALSE(is_coboundary_in_mode(eta).has_value());
}

TEST_CASE("zero-mode split") {
  const auto blocks = zero_mode_split(6);
  REQUIRE(blocks.size() == 7);
  CHECK(blocks[0].dims == std::array<int, 3>{1, 1, 0});
  CHECK(blocks[1].dims == std::array<int, 3>{0, 1, 1});
  for (std::size_t m = 2; m < blocks.size(); ++m) CHECK(blocks[m].dims == std::array<int, 3>{0, 0, 0});
  CHECK(blocks[0].representatives[1][0].b[0] == Scalar(1));
  CHECK(blocks[1].representatives[1][0].a[1] == Scalar(1));
}

TEST_CASE("annulus cohomology and translation to the disk") {
  const CohomologyReport r = annulus_cohomology(3, 6);
  CHECK(r.dims == std::array<int, 3>{1, 2, 1});
  CHECK(annulus_cohomology(1, 2).dims == annulus_cohomology(5, 10).dims);
  const ChartPtr st = charts::st();
  const RatFunc s(st->var(0)), t(st->var(1));
  const RatFunc r2 = s * s + t * t;
  Multivector rot(st), dil(st);
  rot.add(0b01, -t);
  rot.add(0b10, s);
  const RatFunc k = (r2 - st->constant(Scalar(1))) / (Scalar(2) * r2);
  dil.add(0b01, k * s);
  dil.add(0b10, k * t);
  const auto& reps = r.chart_representatives[1];
  CHECK(std::find(reps.begin(), reps.end(), rot) != reps.end());
  CHECK(std::find(reps.begin(), reps.end(), dil) != reps.end());
  CHECK(r.chart_representatives[2][0] == make_pi_family("st", Scalar(-1)).bivector());
  // The disk translation is a chain map for a general necklace radius.
  const Scalar c = Scalar::rational(1, 3);
  const Scalar R2 = necklace_radius(c).radius_squared;
  const PoissonStructure pi = make_pi_family("st", c);
  const CohomologyReport small = mode_cohomology(0, 4);
  for (const auto& e : small.representatives[1]) {
    CHECK(d_pi(pi, mode0_to_disk(e, R2)).is_zero());
  }
  ModeElement f = ModeElement::zero(0, 4);
  f.f[2] = Scalar(1);
  CHECK(d_pi(pi, mode0_to_disk(f, R2)) == mode0_to_disk(mode_differential(f), R2));
}

TEST_CASE("mode element conversions") {
  ModeElement e = ModeElement::zero(4, 3);
  e.a[4] = Scalar(2);
  e.b[0] = Scalar::imaginary_unit();
  CHECK(ModeElement::from_multivector(e.to_multivector(), 3) == e);
  CHECK_THROWS_AS(ModeElement::from_multivector(e.to_multivector(), 2), Error);
  CHECK_THROWS_AS(ModeElement::from_multivector(make_standard("st").bivector(), 3), Error);
}

}  // TEST_SUITE
