#include <doctest.h>

#include <cmath>

#include "cltb/cf.hpp"
#include "cltb/errors.hpp"
#include "cltb/harness.hpp"
#include "cltb/special.hpp"

using namespace cltb;

TEST_CASE("catalog: values, symmetry and second moments") {
  const std::vector<std::pair<CharFn, double>> cfs{{normal_cf(), 1.0},         {laplace_cf(2.0), 0.5},
                                                    {gamma_cf(2.0, 3.0), 2.0 / 9.0 + 4.0 / 9.0},
                                                    {uniform_cf(-1.0, 1.0), 1.0 / 3.0},
                                                    {triangular_cf(1.0), 1.0 / 6.0},
                                                    {poisson_cf(1.5), 1.5 + 2.25}};
  for (const auto& [f, m2] : cfs) {
    CHECK(std::abs(f(0.0) - cplx(1.0, 0.0)) < 1e-15);
    for (double t : {0.3, 1.7, 4.0}) CHECK(std::abs(f(-t) - std::conj(f(t))) < 1e-14);
    // E X^2 = -f''(0)
    const double h = 1e-4;
    CHECK(-(f(h) + f(-h) - 2.0 * f(0.0)).real() / (h * h) == doctest::Approx(m2).epsilon(1e-5));
  }
  CHECK(std::abs(normal_cf(1.0, 2.0)(0.5) - std::exp(cplx(-0.5, 0.5))) < 1e-15);
  CHECK(std::abs(compound_poisson_cf(1.5, lattice_cf(point_mass(1.0)))(0.7) - poisson_cf(1.5)(0.7)) < 1e-14);
}

TEST_CASE("standardized sum cf is the cf of the standardized sum") {
  const auto d = explicit_dist(0.0, 1.0, {0.2, 0.5, 0.0, 0.3});
  const auto f = standardized_sum_cf(d, 7), g = lattice_cf(standardized_sum(d, 7));
  for (double t = -5.0; t <= 5.0; t += 0.37) CHECK(std::abs(f(t) - g(t)) < 1e-12);
}

TEST_CASE("Taylor remainders") {
  CHECK(taylor_constant(0, 0.5) == doctest::Approx(std::pow(2.0, 0.5)));
  CHECK(taylor_constant(2, 1.0) == doctest::Approx(1.0 / 6.0));
  for (int n = 0; n <= 5; ++n)
    for (double delta : {0.1, 0.5, 1.0})
      for (double x = -40.0; x <= 40.0; x += 0.013) {
        const auto c = taylor_remainder(x, n, delta);
        CHECK(c.remainder <= c.bound + 1e-12);
      }
  for (double x = -20.0; x <= 20.0; x += 0.01) {
    const auto c = taylor_remainder_prawitz(x, 1);
    CHECK(c.remainder == doctest::Approx(std::abs(std::exp(cplx(0.0, x)) - 1.0 - cplx(0.0, x / 4.0))).epsilon(1e-10));
    CHECK(c.bound == doctest::Approx(0.75 * std::fabs(x)));
    CHECK(c.remainder <= c.bound + 1e-12);
  }
  CHECK_THROWS_AS(taylor_remainder_prawitz(1.0, 0), DomainError);
}

TEST_CASE("inversion recovers known distribution functions") {
  for (double x : {-2.0, -0.3, 0.0, 1.0, 2.5}) {
    CHECK(invert_cdf(normal_cf(), x) == doctest::Approx(normal_cdf(x)).epsilon(1e-8));
    const double lap = x < 0 ? 0.5 * std::exp(2.0 * x) : 1.0 - 0.5 * std::exp(-2.0 * x);
    CHECK(invert_cdf(laplace_cf(2.0), x) == doctest::Approx(lap).epsilon(1e-6));
  }
  CHECK(invert_cdf(uniform_cf(-1.0, 1.0), 0.4) == doctest::Approx(0.7).epsilon(1e-5));
}

TEST_CASE("inversion of lattice laws gives the atom average") {
  UniformStream u(7);
  for (int k = 0; k < 20; ++k) {
    const auto d = random_lattice(u, 5);
    const double x = u.integer(0, 1) ? d.atom(std::size_t(u.integer(0, int(d.size()) - 1))) : u.range(-4.0, 8.0);
    const double want = 0.5 * (cdf_left(d, x) + cdf_right(d, x));
    CHECK(invert_cdf(lattice_cf(d), x) == doctest::Approx(want).epsilon(1e-5));
  }
}

TEST_CASE("Feller smoothing bound") {
  const double closed = 4.0 * 2.0 * 3.0 * kInvSqrt2Pi / (kPi * 10.0);
  CHECK(feller_bound(normal_cf(), normal_cf(), 2.0, kInvSqrt2Pi, 10.0) == doctest::Approx(closed).epsilon(1e-12));
  for (int n : {1, 4, 16}) {
    const auto s = standardized_sum(bernoulli(0.3), n);
    CHECK(feller_bound(lattice_cf(s), normal_cf(), 2.0, kInvSqrt2Pi, 5.0) >= kolmogorov_distance(s).value);
  }
  CHECK_THROWS_AS(feller_bound(normal_cf(), normal_cf(), 1.0, 0.4, 1.0), DomainError);
}

TEST_CASE("Prawitz kernel and bound") {
  CHECK_THROWS_AS(prawitz_kernel(0.0), DomainError);
  CHECK_THROWS_AS(prawitz_kernel(1.5), DomainError);
  for (double t = 0.01; t < 1.0; t += 0.01) {
    CHECK(std::abs(prawitz_kernel(-t) - std::conj(prawitz_kernel(t))) < 1e-15);
    CHECK(std::abs(prawitz_kernel(t)) <= 1.0253 / (2.0 * kPi * t));
  }
  CHECK(prawitz_optimize(normal_cf()).bound < 0.01);
  for (int n : {2, 9, 25}) {
    const auto s = standardized_sum(symmetric_pm1(), n);
    const auto b = prawitz_optimize(lattice_cf(s));
    CHECK(b.bound >= kolmogorov_distance(s).value);
    CHECK(b.bound == doctest::Approx(b.terms[0] + b.terms[1] + b.terms[2] + b.terms[3]).epsilon(1e-6));
  }
}

TEST_CASE("cf bounds near the origin") {
  CHECK_THROWS_AS(clt_cf_bounds(3.0, 0.5, 1.0), DomainError);
  const auto b = clt_cf_bounds(1.0, 0.5, 1.0);
  CHECK(b.modulus == doctest::Approx(std::exp(-0.5 + 0.5 / 3.0)));
  CHECK(b.difference == doctest::Approx(1.0 * std::exp(-0.5 / 3.0)));
}

TEST_CASE("symmetrized uniform has the triangular cf") {
  const auto f = uniform_cf(0.0, 1.0), tri = triangular_cf(1.0);
  for (double t = -30.0; t <= 30.0; t += 0.011) {
    const double half = t / 2.0;
    const double want = half == 0.0 ? 1.0 : std::pow(std::sin(half) / half, 2);
    CHECK(std::norm(f(t)) == doctest::Approx(want).epsilon(1e-12));
    CHECK(tri(t).real() == doctest::Approx(want).epsilon(1e-12));
  }
}
