#include <doctest.h>

#include <cmath>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "cltb/errors.hpp"
#include "cltb/special.hpp"

using namespace cltb;

TEST_CASE("normal cdf and quantile agree with boost and each other") {
  const boost::math::normal z;
  for (double x = -8.0; x <= 8.0; x += 0.25) {
    CHECK(normal_cdf(x) == doctest::Approx(boost::math::cdf(z, x)).epsilon(1e-13));
    CHECK(normal_pdf(x) == doctest::Approx(boost::math::pdf(z, x)).epsilon(1e-13));
  }
  for (double u : {1e-12, 1e-6, 0.01, 0.3, 0.5, 0.77, 0.999999})
    CHECK(normal_cdf(normal_quantile(u)) == doctest::Approx(u).epsilon(1e-12));
  CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(1.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(-0.2), DomainError);
}

TEST_CASE("I0 series matches boost cyl_bessel_i") {
  for (double x = 0.0; x <= 60.0; x += 0.37)
    CHECK(bessel_i0(x) == doctest::Approx(boost::math::cyl_bessel_i(0, x)).epsilon(1e-12));
  CHECK(bessel_i0(1.0) == doctest::Approx(1.266066).epsilon(1e-6));
}

TEST_CASE("E1 against its power series") {
  constexpr double euler = 0.57721566490153286061;
  for (double x : {0.01, 0.1, 0.5, 1.0, 2.0}) {
    double s = 0.0, term = 1.0;
    for (int k = 1; k < 80; ++k) {
      term *= -x / k;
      s += term / k;
    }
    CHECK(expint_e1(x) == doctest::Approx(-euler - std::log(x) - s).epsilon(1e-12));
  }
  CHECK(expint_e1(50.0) > 0.0);
}

TEST_CASE("gamma ratio and the Wendel bracket") {
  CHECK(gamma_ratio(3.5, 4.0) == doctest::Approx(std::tgamma(3.5) / std::tgamma(4.0)).epsilon(1e-13));
  CHECK(gamma_ratio(200.5, 200.0) == doctest::Approx(std::exp(std::lgamma(200.5) - std::lgamma(200.0))).epsilon(1e-12));
  for (double x : {0.05, 0.5, 1.0, 3.0, 40.0})
    for (double s : {0.0, 0.1, 0.5, 0.9, 1.0}) {
      const auto w = wendel_bounds(x, s);
      CHECK(w.ratio == doctest::Approx(std::tgamma(x + s) / (std::pow(x, s) * std::tgamma(x))).epsilon(1e-12));
      CHECK(w.lower <= w.ratio + 1e-14);
      CHECK(w.ratio <= w.upper + 1e-14);
    }
  CHECK(wendel_bounds(2.0, 0.0).ratio == doctest::Approx(1.0));
  CHECK(wendel_bounds(2.0, 1.0).ratio == doctest::Approx(1.0));
}

TEST_CASE("shift distance between normals") {
  for (double q : {0.1, 0.5, 2.0, 5.0}) {
    double grid = 0.0;
    for (double x = -12.0; x <= 12.0; x += 1e-4) grid = std::max(grid, std::fabs(normal_cdf(x + q) - normal_cdf(x)));
    const auto d = normal_shift_distance(q);
    CHECK(d.exact == doctest::Approx(grid).epsilon(1e-8));
    CHECK(d.exact <= d.bound);
  }
  CHECK(normal_shift_distance(2.0).bound == doctest::Approx(0.797885).epsilon(1e-6));
}

TEST_CASE("scale distance sits at the true maximizer") {
  for (double p : {0.3, 0.5, 1.5, 2.0, 4.0}) {
    double grid = 0.0;
    for (double x = -12.0; x <= 12.0; x += 1e-4) grid = std::max(grid, std::fabs(normal_cdf(p * x) - normal_cdf(x)));
    const auto d = normal_scale_distance(p);
    CHECK(d.exact == doctest::Approx(grid).epsilon(1e-8));
    CHECK(d.exact <= d.bound + 1e-15);
    CHECK(d.exact <= d.bound_alt + 1e-15);
  }
  CHECK(normal_scale_distance(1.0).exact == 0.0);
  CHECK(normal_scale_distance(2.0).exact == doctest::Approx(normal_scale_distance(0.5).exact));
  CHECK(normal_scale_distance(2.0).exact == doctest::Approx(0.161337).epsilon(1e-6));
}
