#include <cmath>

#include "doctest.h"
#include "monosys/errors.hpp"
#include "monosys/nonlinearity.hpp"
#include "monosys/rng.hpp"

using namespace monosys;

namespace {

ParameterSpace unit_box(std::size_t m, double lo, double hi) {
  return ParameterSpace(Vector(m, lo), Vector(m, hi));
}

}  // namespace

TEST_CASE("cubic family evaluation") {
  const CertifiedNonlinearity cubic = make_cubic_family(2, unit_box(2, 0.5, 2.0));
  const ParameterPoint u({1.0, 1.0});
  CHECK(cubic.h.evaluate({1.0, 1.0}, u) == Vector{3.0, 3.0});

  const CertifiedNonlinearity c1 = make_cubic_family(1, unit_box(1, 0.5, 2.0));
  CHECK(c1.h.evaluate({2.0}, ParameterPoint({1.0})) == Vector{11.0});
  CHECK(c1.h.evaluate({0.0}, ParameterPoint({1.0})) == Vector{1.0});
  CHECK(c1.constants.require_a() == 1.0);
}

TEST_CASE("cubic certificate constants follow the box") {
  const CertifiedNonlinearity c = make_cubic_family(2, unit_box(2, 0.5, 2.0));
  REQUIRE(c.growth.has_value());
  CHECK(c.growth->kind == GrowthCertificate::Kind::Superquadratic);
  CHECK(c.growth->exponent == 3.0);
  CHECK(c.growth->coefficient == doctest::Approx(0.5 / 4.0));          // min(u_lo,1)/(2n)
  CHECK(c.growth->radius == doctest::Approx(2.0 * std::sqrt(2.0)));    // max(1, |u_hi|)

  // u_lo > 1 caps the numerator at 1
  const CertifiedNonlinearity c2 = make_cubic_family(1, unit_box(1, 1.5, 2.0));
  CHECK(c2.growth->coefficient == doctest::Approx(0.5));
}

TEST_CASE("arctan family evaluation and certificates") {
  const CertifiedNonlinearity a4 = make_arctan_family(4, unit_box(4, 0.5, 2.0));
  const ParameterPoint ones({1.0, 1.0, 1.0, 1.0});
  CHECK(a4.h.evaluate({0, 0, 0, 0}, ones) == Vector{1.0, 1.0, 1.0, 1.0});
  CHECK(a4.constants.require_b() == 1.0);
  REQUIRE(a4.growth.has_value());
  CHECK(a4.growth->kind == GrowthCertificate::Kind::Subquadratic);
  CHECK(a4.growth->exponent == 1.0);
  CHECK(a4.growth->coefficient == doctest::Approx(2.0 * (M_PI / 2.0 + 2.0)));
  CHECK(a4.growth->radius == 1.0);

  const CertifiedNonlinearity a1 = make_arctan_family(1, unit_box(1, 0.5, 2.0));
  CHECK(a1.h.evaluate({1.0}, ParameterPoint({0.5}))[0] ==
        doctest::Approx(M_PI / 4.0 + 0.5).epsilon(1e-15));
}

TEST_CASE("families reject degenerate boxes") {
  CHECK_THROWS_AS(make_cubic_family(1, unit_box(1, 0.0, 1.0)), ValidationError);
  CHECK_THROWS_AS(make_arctan_family(1, unit_box(1, 0.0, 1.0)), ValidationError);
  CHECK_THROWS_AS(make_emden_fowler_family(1, 3.0, unit_box(1, 0.0, 1.0)), ValidationError);
  CHECK_THROWS_AS(make_cubic_family(3, unit_box(2, 0.5, 1.0)), DimensionError);
}

TEST_CASE("emden-fowler family") {
  const CertifiedNonlinearity ef = make_emden_fowler_family(1, 3.0, unit_box(1, 0.5, 2.0));
  CHECK(ef.h.evaluate({1.0}, ParameterPoint({1.0})) == Vector{3.0});
  CHECK(ef.h.evaluate({0.0}, ParameterPoint({1.0})) == Vector{1.0});
  CHECK(ef.constants.require_a() == 1.0);
  CHECK(ef.growth->exponent == 3.0);  // min(p+1, 3)

  const CertifiedNonlinearity ef15 = make_emden_fowler_family(4, 1.5, unit_box(4, 0.5, 2.0));
  CHECK(ef15.growth->exponent == doctest::Approx(2.5));

  CHECK_THROWS_AS(make_emden_fowler_family(1, 1.0, unit_box(1, 0.5, 2.0)), ValidationError);
  CHECK_THROWS_AS(make_emden_fowler_family(1, 0.5, unit_box(1, 0.5, 2.0)), ValidationError);
}

TEST_CASE("emden-fowler with p=3 at u=1 matches the cubic family with offset 1") {
  const std::size_t n = 3;
  const auto box = unit_box(n, 0.5, 2.0);
  const CertifiedNonlinearity ef = make_emden_fowler_family(n, 3.0, box);
  const CertifiedNonlinearity cubic = make_cubic_family(n, box);
  const ParameterPoint ones(Vector(n, 1.0));  // offset adjusted: u_i = 1 on both sides
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Vector x(n);
    for (double& v : x) v = rng.uniform(-5.0, 5.0);
    const Vector a = ef.h.evaluate(x, ones);
    const Vector b = cubic.h.evaluate(x, ones);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-15));
    }
  }
}

TEST_CASE("linear and zero families") {
  const CertifiedNonlinearity lin = make_linear_family(2, unit_box(2, -1.0, 1.0));
  CHECK(lin.h.evaluate({2.0, 3.0}, ParameterPoint({-1.0, 1.0})) == Vector{1.0, 4.0});
  CHECK(lin.constants.require_a() == 1.0);
  CHECK(lin.constants.require_b() == 1.0);
  CHECK_FALSE(lin.growth.has_value());

  const CertifiedNonlinearity zero = make_zero_family(2, unit_box(2, 0.0, 1.0));
  CHECK(zero.h.evaluate({5.0, -5.0}, ParameterPoint({0.5, 0.5})) == Vector{0.0, 0.0});
  CHECK(zero.constants.require_b() == 1.0);
}

TEST_CASE("evaluate validates dimensions and the parameter box") {
  const CertifiedNonlinearity c = make_cubic_family(2, unit_box(2, 0.5, 2.0));
  CHECK_THROWS_AS(c.h.evaluate({1.0}, ParameterPoint({1.0, 1.0})), DimensionError);
  CHECK_THROWS_AS(c.h.evaluate({1.0, 1.0}, ParameterPoint({3.0, 1.0})), ValidationError);
  CHECK_THROWS_AS(c.h.evaluate({1.0, 1.0}, ParameterPoint({1.0})), DimensionError);
}

TEST_CASE("componentwise structure: component i ignores x_j for j != i") {
  const std::size_t n = 4;
  const CertifiedNonlinearity c = make_cubic_family(n, unit_box(n, 0.5, 2.0));
  const ParameterPoint u(Vector(n, 1.25));
  SplitMix64 rng(5);
  Vector x(n);
  for (double& v : x) v = rng.uniform(-2.0, 2.0);
  const Vector base = c.h.evaluate(x, u);
  for (std::size_t j = 0; j < n; ++j) {
    Vector perturbed = x;
    perturbed[j] += rng.uniform(0.1, 1.0);
    const Vector after = c.h.evaluate(perturbed, u);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) CHECK(after[i] == base[i]);  // exact equality
    }
  }
}

TEST_CASE("nontriviality checker") {
  const auto box = unit_box(1, 0.5, 2.0);
  const CertifiedNonlinearity cubic = make_cubic_family(1, box);
  CHECK(check_nontriviality(cubic.h, box).pass);

  // h(0,u) = 0 identically: every sample is a counterexample.
  const ComponentwiseNonlinearity identity(
      1, [](std::size_t, double z, const ParameterPoint&) { return z; });
  const NontrivialityResult r = check_nontriviality(identity, box);
  CHECK_FALSE(r.pass);
  CHECK(r.counterexample.has_value());
  CHECK(r.samples_used == 1);

  // arctan(z) + u on a box touching zero: h(0, 0) = 0 sits on the lattice.
  const auto touching = unit_box(1, 0.0, 1.0);
  const ComponentwiseNonlinearity arctan_manual(
      1, [](std::size_t, double z, const ParameterPoint& u) { return std::atan(z) + u[0]; });
  const NontrivialityResult r2 = check_nontriviality(arctan_manual, touching);
  CHECK_FALSE(r2.pass);
  REQUIRE(r2.counterexample.has_value());
  CHECK(std::abs((*r2.counterexample)[0]) <= 1e-12);
}

TEST_CASE("parameter space validation") {
  CHECK_THROWS_AS(ParameterSpace({1.0}, {0.5}), ValidationError);
  CHECK_THROWS_AS(ParameterSpace({}, {}), DimensionError);
  const ParameterSpace box({0.0, 0.0}, {1.0, 2.0});
  CHECK(box.distance(ParameterPoint({0.0, 0.0}), ParameterPoint({1.0, 2.0})) ==
        doctest::Approx(std::sqrt(5.0)));
  CHECK(box.contains(ParameterPoint({0.5, 1.0})));
  CHECK_FALSE(box.contains(ParameterPoint({0.5, 2.5})));
  CHECK(box.max_norm() == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("certificate constructors enforce ranges") {
  CHECK_THROWS_AS(GrowthCertificate::superquadratic(2.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(GrowthCertificate::superquadratic(3.0, 0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(GrowthCertificate::subquadratic(2.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(MonotonicityConstants::lower(0.0), ValidationError);
  CHECK_THROWS_AS(MonotonicityConstants::upper(-1.0), ValidationError);
  CHECK_THROWS_AS(MonotonicityConstants{}.require_a(), ValidationError);
}
