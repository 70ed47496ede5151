#include <doctest.h>

#include <cmath>

#include "entrate/quadrature.hpp"

using namespace entrate;

TEST_CASE("adaptive quadrature reproduces known integrals") {
    QuadratureSettings qs;
    qs.rel_tol = 1e-12;
    const auto gauss = integrate_adaptive([](double x) { return std::exp(-x * x); }, -12.0, 12.0, qs);
    CHECK(gauss.converged);
    CHECK(gauss.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

    const auto poly = integrate_adaptive([](double x) { return x * x * x - 2.0 * x + 1.0; }, -1.0,
                                         3.0, qs);
    CHECK(poly.value == doctest::Approx(16.0).epsilon(1e-13));
}

TEST_CASE("tan substitution handles quadratic tails exactly where needed") {
    QuadratureSettings qs;
    qs.rel_tol = 1e-12;
    // Cauchy density integrates to 1.
    const auto unit = integrate_real_line_tan(
        [](double z) { return (1.0 / M_PI) * 2.0 / (z * z + 4.0); }, 0.0, 2.0, qs);
    CHECK(unit.converged);
    CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("expanding truncations certify decaying tails") {
    const auto gauss = integrate_expanding([](double z) { return std::exp(-0.5 * z * z); });
    CHECK(gauss.converged);
    CHECK_FALSE(gauss.divergent);
    CHECK(gauss.value == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-6));

    const auto cauchy_like = integrate_expanding([](double z) { return 1.0 / (1.0 + z * z); });
    CHECK(cauchy_like.converged);
    CHECK(cauchy_like.value == doctest::Approx(M_PI).epsilon(1e-5));
}

TEST_CASE("expanding truncations flag tails that refuse to decay geometrically") {
    // 1/(|z| log |z|) tails: the octave increments approach a constant ratio
    // near 1 and the accumulated value keeps creeping; must be flagged.
    const auto bad = integrate_expanding([](double z) {
        const double t = 2.0 + std::abs(z);
        return 1.0 / (t * std::log(t));
    });
    CHECK_FALSE(bad.converged);
    CHECK(bad.divergent);
}
