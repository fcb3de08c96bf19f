#include <doctest.h>

#include "oracles.hpp"
#include "uml/error.hpp"
#include "uml/search.hpp"
#include "uml/umclass.hpp"

using uml::cplx;
using uml::PoleParams;
using uml::SchurFunction;

namespace {

std::vector<SchurFunction> family() {
  return {SchurFunction::constant(-1.0),       SchurFunction::constant(0.0),
          SchurFunction::constant({0.3, 0.4}), SchurFunction::negated_mobius(0.5),
          SchurFunction::negated_mobius(-0.5), uml::random_blaschke(3, 42),
          uml::random_blaschke(2, 8),          SchurFunction::taylor({0.1, 0.2, {0.0, -0.3}, 0.2})};
}

const double kPs[] = {0.3, 0.5, 0.7, 0.9};
const double kLambdas[] = {0.1, 0.5, 0.9};

}  // namespace

TEST_CASE("PoleParams validation") {
  CHECK_THROWS_AS(PoleParams(0.0, 0.5), uml::Error);
  CHECK_THROWS_AS(PoleParams(0.5, 1.0), uml::Error);
  CHECK_NOTHROW(PoleParams(0.999, 1e-9));
}

TEST_CASE("build") {
  SUBCASE("omega = -1 is the partial-fraction extremal") {
    const auto u = uml::build(PoleParams(0.5, 0.5), SchurFunction::constant(-1.0));
    CHECK(std::abs(u.f_series()[2] - 2.25) < 1e-13);
    CHECK(std::abs(u.f_series()[3] - 4.5625) < 1e-13);
  }
  SUBCASE("omega = 0 is geometric") {
    const auto u = uml::build(PoleParams(0.6, 0.4), SchurFunction::constant(0.0), 12);
    for (int n = 1; n <= 12; ++n) CHECK(std::abs(u.f_series()[n] - std::pow(0.6, 1 - n)) < 1e-9);
  }
  SUBCASE("a2 of a Mobius member against quadrature") {
    const PoleParams params(0.8, 0.05);
    const auto u = uml::build(params, SchurFunction::negated_mobius(0.5));
    const double integral = -oracle::integrate([](double t) { return (0.5 + t) / (1.0 + 0.5 * t); }, 0.0, 0.8);
    CHECK(std::abs(u.f_series()[2] - (1.0 / 0.8 - 0.05 * integral)) < 1e-10);
  }
  CHECK_THROWS_AS(uml::build(PoleParams(0.5, 0.5), SchurFunction::constant(0.0), 3), uml::Error);
}

TEST_CASE("invariants of every built member") {
  for (const double p : kPs) {
    for (const double lambda : kLambdas) {
      const PoleParams params(p, lambda);
      for (const auto& w : family()) {
        const auto u = uml::build(params, w);
        CHECK(u.f_series()[0] == cplx(0.0));
        CHECK(u.f_series()[1] == cplx(1.0));
        CHECK(u.denom()[0] == cplx(1.0));
        CHECK(std::abs(uml::denominator_at(u, p)) < 1e-10);
        CHECK(std::abs(u.f_series()[2] - uml::a2_closed(params, w)) < 1e-10);

        const auto uf = uml::uf_series(u);
        const auto expected = uml::taylor_series(w, u.order() - 2).shifted(2).scaled(lambda);
        for (int k = 0; k < u.order(); ++k) CHECK(std::abs(uf[k] - expected[k]) < 1e-10);

        CHECK(std::abs(uml::residue(params, w) - uml::laurent_numeric(u, -1)) < 1e-8);
        CHECK(std::abs(uml::laurent_b0(params, w) - uml::laurent_numeric(u, 0)) < 1e-8);
      }
    }
  }
}

TEST_CASE("eval_f") {
  const PoleParams params(0.5, 0.5);
  const auto u = uml::build(params, SchurFunction::constant(-1.0));
  CHECK(uml::eval_f(u, 0.0) == cplx(0.0));
  CHECK(std::abs(uml::eval_f(u, 0.25) - 0.125 / (0.25 * 0.9375)) < 1e-14);
  try {
    uml::eval_f(u, 0.5);
    FAIL("expected AtPole");
  } catch (const uml::Error& e) {
    CHECK(e.code() == uml::Errc::AtPole);
  }
  for (const auto& w : family()) {
    const auto v = uml::build(PoleParams(0.7, 0.3), w);
    const cplx z = 0.3 * 0.7;
    CHECK(std::abs(uml::eval_f(v, z) - uml::eval(v.f_series(), z)) < 1e-9);
    const cplx zc{0.168, 0.126};  // |z| = 0.3 p keeps the truncation tail below 1e-15
    CHECK(std::abs(uml::eval_f(v, zc) - uml::eval(v.f_series(), zc)) < 1e-9);
  }
}

TEST_CASE("uf_series closed cases") {
  const auto u = uml::build(PoleParams(0.4, 0.7), SchurFunction::constant(-1.0), 10);
  const auto uf = uml::uf_series(u);
  for (int k = 0; k <= 10; ++k) CHECK(std::abs(uf[k] - (k == 2 ? cplx(-0.7) : cplx(0.0))) < 1e-13);
  const auto zero = uml::uf_series(uml::build(PoleParams(0.4, 0.7), SchurFunction::constant(0.0), 10));
  for (int k = 0; k <= 10; ++k) CHECK(std::abs(zero[k]) < 1e-13);
}

TEST_CASE("membership_margin") {
  const PoleParams params(0.5, 0.4);
  const auto u = uml::build(params, SchurFunction::constant(-1.0));
  CHECK(uml::membership_margin(u, 0.99, 360) == doctest::Approx(0.4 * (1 - 0.99 * 0.99)).epsilon(1e-12));
  CHECK(uml::membership_margin(uml::build(params, SchurFunction::constant(0.0)), 0.99, 360) == doctest::Approx(0.4));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = uml::build(params, uml::random_blaschke(static_cast<int>(seed % 6), seed));
    CHECK(uml::membership_margin(b, 0.999, 720) > 0.0);
  }
  CHECK_THROWS_AS(uml::membership_margin(u, 1.0, 10), uml::Error);
}

TEST_CASE("a2_disk") {
  const auto d = uml::a2_disk(PoleParams(0.5, 0.5));
  CHECK(d.center == cplx(2.0));
  CHECK(d.radius == 0.25);
  CHECK(uml::a2_upper_bound(PoleParams(0.5, 0.5)) == doctest::Approx(2.25));
  CHECK(uml::a2_disk(PoleParams(0.5, 1e-15)).radius < 1e-15);
  for (const double p : kPs) {
    for (const double lambda : kLambdas) {
      const PoleParams params(p, lambda);
      const auto u = uml::build(params, SchurFunction::constant(-1.0));
      CHECK(std::abs(u.f_series()[2]) == doctest::Approx(uml::a2_upper_bound(params)).epsilon(1e-12));
    }
  }
}

TEST_CASE("residue and its range") {
  const PoleParams params(0.5, 0.5);
  const cplx r = uml::residue(params, SchurFunction::constant(-1.0));
  CHECK(std::abs(r - (-0.25 / 0.875)) < 1e-15);
  CHECK(std::abs(r) == doctest::Approx(uml::residue_modulus_range(params).hi).epsilon(1e-14));
  CHECK(uml::residue(PoleParams(0.3, 0.5), SchurFunction::constant(0.0)) == cplx(-0.09));

  const auto range = uml::residue_modulus_range(params);
  CHECK(range.lo == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
  CHECK(range.hi == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  CHECK(std::abs(uml::residue(params, SchurFunction::constant(1.0))) == doctest::Approx(range.lo).epsilon(1e-14));
  const auto tiny = uml::residue_modulus_range(PoleParams(0.5, 1e-15));
  CHECK(tiny.hi - tiny.lo < 1e-15);

  const PoleParams mc(0.6, 0.3);
  const auto mc_range = uml::residue_modulus_range(mc);
  for (int i = 0; i < 10000; ++i) {
    const auto w = uml::search::pool_member(123, static_cast<std::uint64_t>(i));
    CHECK(mc_range.contains(std::abs(uml::residue(mc, w)), 1e-12));
  }
}

TEST_CASE("laurent_b0 closed forms") {
  const PoleParams params(0.5, 0.5);
  const cplx b0 = uml::laurent_b0(params, SchurFunction::constant(-1.0));
  CHECK(std::abs(b0 - (-0.5 / (0.875 * 0.875))) < 1e-15);
  CHECK(std::abs(b0) == doctest::Approx(uml::b0_bound(params).bound).epsilon(1e-14));
  CHECK(uml::laurent_b0(PoleParams(0.7, 0.2), SchurFunction::constant(0.0)) == cplx(-0.7));
}

TEST_CASE("laurent_numeric") {
  const PoleParams params(0.5, 0.5);
  const auto u = uml::build(params, SchurFunction::constant(-1.0));
  CHECK(std::abs(uml::laurent_numeric(u, -1, 0.2, 256) - (-0.25 / 0.875)) < 1e-10);
  CHECK(std::abs(uml::laurent_numeric(u, 0, 0.2, 256) - (-0.5 / (0.875 * 0.875))) < 1e-9);
  const auto g = uml::build(params, SchurFunction::constant(0.0));
  CHECK(std::abs(uml::laurent_numeric(g, 5, 0.2, 256)) < 1e-10);
  CHECK(std::abs(uml::laurent_numeric(g, 0, 0.2, 256) - (-0.5)) < 1e-12);
  CHECK_THROWS_AS(uml::laurent_numeric(u, -2, 0.2, 256), uml::Error);
  CHECK_THROWS_AS(uml::laurent_numeric(u, 0, 0.6, 256), uml::Error);
  CHECK_THROWS_AS(uml::laurent_numeric(u, 0, 0.2, 32), uml::Error);
}

TEST_CASE("phi") {
  CHECK(std::abs(uml::phi(uml::b0_p_threshold())) < 1e-15);
  CHECK(uml::phi(0.9) == doctest::Approx(0.7133058984910837).epsilon(1e-14));
  CHECK(uml::phi(1.0) == 1.0);
  // phi maps (threshold, 1) into (0, 1)
  const double t = uml::b0_p_threshold();
  for (int i = 1; i < 1000; ++i) {
    const double p = t + (1.0 - t) * i / 1000.0;
    CHECK(uml::phi(p) > 0.0);
    CHECK(uml::phi(p) < 1.0);
  }
}

TEST_CASE("b0_bound cases") {
  auto b = uml::b0_bound(PoleParams(0.5, 0.5));
  CHECK(b.which == uml::B0Case::I);
  CHECK(b.bound == doctest::Approx(0.6530612244897959).epsilon(1e-14));
  b = uml::b0_bound(PoleParams(0.9, 0.8));
  CHECK(b.which == uml::B0Case::II);
  CHECK(b.bound == doctest::Approx(7.263688016528926).epsilon(1e-14));
  b = uml::b0_bound(PoleParams(0.9, 0.1));
  CHECK(b.which == uml::B0Case::III);
  CHECK(b.bound == doctest::Approx(1.1182384105909394).epsilon(1e-14));
  // ties go to case II
  CHECK(uml::b0_bound(PoleParams(0.9, uml::phi(0.9))).which == uml::B0Case::II);
}

TEST_CASE("d_profile and d_argmax") {
  const PoleParams params(0.9, 0.1);
  const double a = 2.0 - 2.0 * 0.81 + 0.1 * 0.729;
  CHECK(uml::d_profile(params, 0.0) == doctest::Approx(a).epsilon(1e-15));
  CHECK(uml::d_profile(params, 1.0) == doctest::Approx((2.0 - 2.0 * 0.81) / std::pow(1 - 0.081, 2)).epsilon(1e-14));
  CHECK(uml::d_argmax(PoleParams(0.5, 0.5)) == 1.0);
  CHECK(uml::d_argmax(params) == doctest::Approx(0.4529 / 0.9).epsilon(1e-14));
  CHECK_THROWS_AS(uml::d_profile(params, 1.5), uml::Error);

  // brute-force argmax, step 1e-6
  double best_x = 0.0, best = -1.0;
  for (int i = 0; i <= 1000000; ++i) {
    const double x = i * 1e-6;
    const double d = uml::d_profile(params, x);
    if (d > best) {
      best = d;
      best_x = x;
    }
  }
  CHECK(std::abs(best_x - 0.503222) < 1e-5);
  CHECK(std::abs(best_x - uml::d_argmax(params)) < 1e-5);
}

TEST_CASE("case III extremal") {
  const PoleParams params(0.9, 0.1);
  const double a = uml::b0_case_iii_extremal_a(params);
  CHECK(a == doctest::Approx(-0.7252381242511018).epsilon(1e-13));
  CHECK(a > -0.9);
  const auto w = SchurFunction::negated_mobius(a);
  const double attained = std::abs(uml::laurent_b0(params, w));
  CHECK(std::abs(attained - uml::b0_bound(params).bound) < 1e-9);
  // the Mobius equation it solves
  CHECK((a + 0.9) / (1 + a * 0.9) == doctest::Approx(0.4529 / 0.9).epsilon(1e-13));
  for (int i = 0; i < 1000; ++i) {
    CHECK(attained >= std::abs(uml::laurent_b0(params, uml::search::pool_member(5, static_cast<std::uint64_t>(i)))));
  }
  // x* = p exactly gives the Mobius fixed point a = 0: lambda p^3 = 3p^2 - 2 at p = 0.9
  const PoleParams fixed(0.9, (3 * 0.81 - 2) / 0.729);
  CHECK(std::abs(uml::b0_case_iii_extremal_a(fixed)) < 1e-14);
  try {
    uml::b0_case_iii_extremal_a(PoleParams(0.5, 0.5));
    FAIL("expected InfeasibleExtremal");
  } catch (const uml::Error& e) {
    CHECK(e.code() == uml::Errc::InfeasibleExtremal);
  }
}

TEST_CASE("bhowmik_parveen_bound") {
  const PoleParams params(0.5, 0.5);
  CHECK(uml::bhowmik_parveen_bound(params, 0) == doctest::Approx(uml::b0_bound(params).bound).epsilon(1e-15));
  CHECK(uml::bhowmik_parveen_bound(params, 1) == doctest::Approx(0.18658892128279883).epsilon(1e-14));
  const PoleParams iii(0.9, 0.1);
  CHECK(uml::bhowmik_parveen_bound(iii, 0) == doctest::Approx(1.065642386991585).epsilon(1e-14));
  CHECK(uml::bhowmik_parveen_bound(iii, 0) < uml::b0_bound(iii).bound);
  CHECK_THROWS_AS(uml::bhowmik_parveen_bound(params, -1), uml::Error);
}
