#include <doctest.h>

#include <cmath>

#include "bgumbel/errors.hpp"
#include "bgumbel/quadrature.hpp"

using namespace bgumbel;

TEST_CASE("finite interval integrals") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI).value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return x * x; }, -1.0, 2.0).value == doctest::Approx(3.0).epsilon(1e-13));
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.subdivisions > 0);
}

TEST_CASE("half-line integrals") {
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, kInfinity).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, 1.0, kInfinity).value ==
          doctest::Approx(M_PI / 4.0).epsilon(1e-10));
}

TEST_CASE("error estimate is reported") {
    const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(r.error_estimate >= 0.0);
    CHECK(r.error_estimate < 1e-10);
}

TEST_CASE("subdivision budget is enforced") {
    QuadratureSpec spec;
    spec.max_subdivisions = 3;
    auto wild = [](double x) { return std::sin(1.0 / x) / x; };
    CHECK_THROWS_AS(integrate(wild, 1e-4, 1.0, spec), QuadratureError);
    try {
        integrate(wild, 1e-4, 1.0, spec);
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error_estimate() > 0.0);
    }
}

TEST_CASE("invalid specs are rejected") {
    QuadratureSpec spec;
    spec.abs_tol = 0.0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec = {};
    spec.max_subdivisions = 0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
}
