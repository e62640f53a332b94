#include <doctest.h>

#include <cmath>

#include "cltb/bounds_rs.hpp"
#include "cltb/errors.hpp"
#include "cltb/harness.hpp"
#include "cltb/special.hpp"

using namespace cltb;

namespace {

SummandMoments unit_summand() { return SummandMoments{}; }

SummandMoments moments_of(const LatticeDist& x) {
  SummandMoments m;
  m.a = mean(x);
  m.beta2 = moment(x, 2.0);
  m.beta = moment(x, 3.0, MomentKind::absolute);
  return m;
}

}  // namespace

TEST_CASE("Poisson coupling") {
  CHECK(poisson_coupling_tv({0.1, 0.2}) == doctest::Approx(0.05));
  CHECK(poisson_coupling_tv(std::vector<double>(50, 0.04)) == doctest::Approx(2.0 * 2.0 / 50.0));
  CHECK_THROWS_AS(poisson_coupling_tv({}), DomainError);
  UniformStream u(5);
  for (int k = 0; k < 20; ++k) {
    std::vector<double> p(std::size_t(u.integer(1, 8)));
    double lam = 0.0;
    for (double& x : p) lam += (x = u.range(0.01, 0.9));
    CHECK(poisson_coupling_tv(p) >= tv_distance(poisson_binomial(p), poisson(lam)).value);
  }
}

TEST_CASE("Poisson-binomial index") {
  auto pb = PBParams::from(std::vector<double>(1000, 0.1));
  CHECK(pb.lambda == doctest::Approx(100.0));
  CHECK(pb.theta == doctest::Approx(0.1));
  CHECK(pb.equal);
  pb.equal = false;
  CHECK(pb_sum_bound(pb, unit_summand(), {}, PbForm::published_display).value == doctest::Approx(0.05583));
  pb.equal = true;
  CHECK(pb_sum_bound(pb, unit_summand(), {}, PbForm::published_display).value ==
        doctest::Approx(std::min(0.469, 0.3031 + 0.646 * std::sqrt(0.1)) / 10.0));
  SummandMoments shifted;
  shifted.a = 0.5;
  shifted.beta2 = 1.0;
  shifted.beta = 1.2;
  CHECK_THROWS_AS(pb_sum_bound(PBParams::from({1.0, 1.0}), shifted), DomainError);
  CHECK_NOTHROW(pb_sum_bound(PBParams::from({1.0, 1.0}), unit_summand()));
  const std::vector<double> p(6, 0.3);
  const double exact = kolmogorov_distance(standardize(compound(poisson_binomial(p), symmetric_pm1()))).value;
  CHECK(pb_sum_bound(PBParams::from(p), unit_summand()).value >= exact);
}

TEST_CASE("Poisson random sums") {
  CHECK(poisson_sum_bound(100.0, unit_summand()).value == doctest::Approx(0.03031));
  CHECK(poisson_sum_bound(100.0, unit_summand()).constant_name == "M(1)=0.3031");
  for (double lam : {1.0, 4.0, 9.0}) {
    const auto law = standardize(compound(poisson(lam), symmetric_pm1()));
    CHECK(poisson_sum_bound(lam, unit_summand()).value >= kolmogorov_distance(law).value);
    const auto x = explicit_dist(0.0, 1.0, {0.3, 0.3, 0.4});
    CHECK(poisson_sum_bound(lam, moments_of(x)).value >= kolmogorov_distance(standardize(compound(poisson(lam), x))).value);
  }
  // equal p = lambda/n tends to the Poisson bound from above
  SummandMoments m;
  m.a = 0.5;
  m.beta2 = 1.0;
  m.beta = 1.2;
  const double target = poisson_sum_bound(5.0, m).value;
  double prev = 1e9;
  for (int n : {100, 1000, 10000}) {
    const double gap = pb_sum_bound(PBParams::from(std::vector<double>(std::size_t(n), 5.0 / n)), m).value - target;
    CHECK(gap >= 0.0);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 5e-3);
}

TEST_CASE("Poisson lower bound") {
  const auto floor = poisson_sum_lower(1.0, 1.0);
  CHECK(floor.value == doctest::Approx(bessel_i0(1.0) / (2.0 * std::exp(1.0))));
  CHECK(floor.value == doctest::Approx(0.232879).epsilon(1e-5));
  CHECK(floor.value > kPoissonLowerFloor / std::exp(1.0));
  const auto opt = poisson_sum_lower(1.0);
  CHECK(opt.value == doctest::Approx(0.2344).epsilon(5e-4));
  CHECK(opt.gamma_star == doctest::Approx(0.7899).epsilon(5e-4));
  CHECK(poisson_sum_lower(1e-9).value == doctest::Approx(0.5).epsilon(5e-4));
  for (double d : {1.0, 0.7, 0.4, 0.1}) CHECK(poisson_sum_lower(d).value < ConstantTable::builtin().m(d));
  CHECK_THROWS_AS(poisson_sum_lower(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(poisson_sum_lower(0.0), DomainError);
}

TEST_CASE("mixed Poisson and its limits") {
  CHECK(mixed_poisson_bound(unit_summand(), 0.1, 0.0).value == doctest::Approx(0.03031));
  CHECK_THROWS_AS(mixed_poisson_bound(unit_summand(), -0.1, 0.0), DomainError);
  CHECK(pinelis_constant() == doctest::Approx(0.158230).epsilon(1e-6));
  const auto cauchy = student_limit_bounds(1.0, 1.0, unit_summand(), StudentMode::student);
  CHECK(cauchy.value == doctest::Approx(0.3031 * std::sqrt(2.0 / kPi)));
  CHECK(cauchy.value < 0.2419);
  CHECK(student_limit_bounds(1.0, 1e6, unit_summand(), StudentMode::optimal_r).value ==
        doctest::Approx((0.3031 + pinelis_constant()) / 100.0));
  CHECK(nb_normal_constant(1.0) == 0.8593);
  CHECK(nb_normal_constant(3.0) == doctest::Approx(0.159155).epsilon(1e-6));
  CHECK(nb_limit_bounds(1.0, 0.5, unit_summand(), NbMode::laplace).value == doctest::Approx(0.3031 * std::sqrt(kPi)));
  const auto sg = nb_limit_bounds(4.0, 0.2, unit_summand(), NbMode::sym_gamma);
  CHECK(sg.value == doctest::Approx(0.3031 * std::tgamma(3.5) / std::tgamma(4.0) * 0.5));
  CHECK(sg.value <= sg.alternatives.front().second);
  CHECK(nb_limit_bounds(4.0, 0.2, unit_summand(), NbMode::normal).value ==
        doctest::Approx(sg.value + nb_normal_constant(4.0) / 4.0));
  SummandMoments shifted;
  shifted.a = 0.1;
  shifted.beta2 = 1.0;
  shifted.beta = 1.0;
  CHECK_THROWS_AS(student_limit_bounds(1.0, 1.0, shifted, StudentMode::student), DomainError);
}

TEST_CASE("compound-Poisson index bounds") {
  IndexMoments one{1.0, 1.0, 1.0, 1.0};
  for (double a : {0.0, 0.7}) {
    SummandMoments m;
    m.a = a;
    m.beta2 = 1.0;
    m.beta = 1.5;
    CHECK(bdnc_sum_bound(30.0, one, m, BdncMode::general).value == poisson_sum_bound(30.0, m).value);
  }
  CHECK(bdnc_sum_bound(1.0, IndexMoments{1.0, std::nullopt, 1.0, std::nullopt}, unit_summand(), BdncMode::centered)
            .constant_value == 0.3031);
  CHECK(bdnc_sum_bound(1.0, IndexMoments{1.0, std::nullopt, 1.0, std::nullopt}, unit_summand(), BdncMode::centered).value ==
        doctest::Approx(1.5155));
  CHECK_THROWS_AS(bdnc_sum_bound(1.0, IndexMoments{1.0, std::nullopt, std::nullopt, std::nullopt}, unit_summand(),
                                 BdncMode::general),
                  DomainError);
  const auto nb = nb_index_moments(3.0, 0.4, 1.0);
  const IndexMoments y{nb.ey, std::nullopt, nb.ey_1pd2_upper, std::nullopt};
  CHECK(bdnc_sum_bound(nb.lambda, y, unit_summand(), BdncMode::centered).value ==
        doctest::Approx(1.5155 / std::sqrt(3.0 * 0.6)));
  const auto half = nb_index_moments(1.0, 0.5, 1.0);
  CHECK(half.ey == doctest::Approx(1.442695).epsilon(1e-6));
  CHECK(half.ey == doctest::Approx(mean(logarithmic(0.5))).epsilon(1e-10));
  CHECK(half.ratio_upper == doctest::Approx(std::sqrt(std::log(2.0) / 0.5)));
  CHECK(moment(logarithmic(0.5), 1.5) <= half.ey_1pd2_upper);
  // against the exact compound law
  const auto law = negative_binomial(2.0, 0.5);
  const auto dec = bdnc_decompose(law);
  const IndexMoments ym{mean(dec.summand), moment(dec.summand, 2.0), moment(dec.summand, 1.5), moment(dec.summand, 3.0)};
  for (const auto& x : {symmetric_pm1(), bernoulli(0.3)}) {
    const double exact = kolmogorov_distance(standardize(compound(law, x))).value;
    CHECK(bdnc_sum_bound(dec.lambda, ym, moments_of(x), BdncMode::general).value >= exact);
    CHECK(bdnc_sum_bound(dec.lambda, ym, moments_of(x), BdncMode::combined).value >= exact);
  }
}

TEST_CASE("insurance example") {
  auto rate = [](int k) { return std::ldexp(1.0, -k); };
  const auto e = insurance_tail_estimate(365.0, 2.0, 1.0, 12.0, rate, 1600.0);
  CHECK(e.lambda == doctest::Approx(365.0));
  CHECK(e.ey == doctest::Approx(2.0));
  CHECK(e.ey2 == doctest::Approx(6.0));
  CHECK(e.ey3 == doctest::Approx(26.0));
  CHECK(e.mean == doctest::Approx(1460.0));
  CHECK(e.variance == doctest::Approx(2.0 * 365.0 * 13.0));
  CHECK(e.estimate == doctest::Approx(0.0753).epsilon(5e-3));
  CHECK(std::fabs(e.estimate - 0.0753) < 5e-4);
  CHECK(std::fabs(e.error_bound - 0.0373) < 5e-4);
  CHECK(e.ceiling <= 0.1128);
  CHECK_THROWS_AS(insurance_tail_estimate(365.0, 2.0, 1.0, 12.0, [](int k) { return 1.0 / k; }, 1600.0), DomainError);
  CHECK_THROWS_AS(insurance_tail_estimate(365.0, 2.0, 0.0, 12.0, rate, 1600.0), DomainError);
}
