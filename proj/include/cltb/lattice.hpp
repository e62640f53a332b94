#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

namespace cltb {

inline constexpr double kDefaultTailEpsilon = 1e-12;

// Distribution on offset + k*step, k = 0..weights.size()-1.  Infinite
// families are cut where the remaining mass drops below epsilon; the
// dropped mass is kept in tail_mass_bound.
struct LatticeDist {
  double offset = 0.0;
  double step = 1.0;
  std::vector<double> weights;
  double tail_mass_bound = 0.0;

  std::size_t size() const { return weights.size(); }
  double atom(std::size_t k) const { return offset + double(k) * step; }
  double mass() const;
};

LatticeDist explicit_dist(double offset, double step, std::vector<double> weights);
LatticeDist point_mass(double x);
LatticeDist symmetric_pm1();
LatticeDist bernoulli(double p);
LatticeDist binomial(int n, double p);
LatticeDist poisson_binomial(const std::vector<double>& ps);
LatticeDist poisson(double lambda, double eps = kDefaultTailEpsilon);
LatticeDist negative_binomial(double r, double p, double eps = kDefaultTailEpsilon);
LatticeDist geometric(double p, double eps = kDefaultTailEpsilon);
// P(Y=k) = q^k / (k ln(1/(1-q))), k >= 1
LatticeDist logarithmic(double q, double eps = kDefaultTailEpsilon);
// -sqrt(p/q) with prob q, sqrt(q/p) with prob p
LatticeDist two_point_standardized(double p);

// Descriptor form, e.g. {"family":"poisson","lambda":2} or
// {"offset":0,"step":1,"weights":[...]}.  An optional "tail_epsilon"
// overrides the truncation level.
LatticeDist from_spec(const nlohmann::json& spec, double eps = kDefaultTailEpsilon);

enum class MomentKind { raw, absolute, central_absolute };
double moment(const LatticeDist& d, double r, MomentKind kind = MomentKind::raw);
double mean(const LatticeDist& d);
double variance(const LatticeDist& d);

// a + b*X
LatticeDist affine(const LatticeDist& d, double a, double b);
LatticeDist standardize(const LatticeDist& d);

LatticeDist convolve(const LatticeDist& a, const LatticeDist& b);
LatticeDist self_convolve(const LatticeDist& d, int n);
// Law of Y_1 + ... + Y_N for N ~ index independent of the iid Y's.
LatticeDist compound(const LatticeDist& index, const LatticeDist& summand);

// P(X < x) and P(X <= x)
double cdf_left(const LatticeDist& d, double x);
double cdf_right(const LatticeDist& d, double x);

struct Distance {
  double value;
  double error_bar;  // from truncated tails
};
Distance kolmogorov_distance(const LatticeDist& d, double mu = 0.0, double sigma = 1.0);
Distance kolmogorov_distance(const LatticeDist& a, const LatticeDist& b);
Distance tv_distance(const LatticeDist& a, const LatticeDist& b);
// integral of |F - Phi| after standardizing d
Distance zeta1_distance(const LatticeDist& d);

struct LindebergOsipov {
  double lindeberg;  // sum E X^2 1(|X| > eps B) / B^2
  double osipov;     // sum E|X|^3 1(|X| <= eps B) / B^3
  double b;          // sqrt of the total variance
};
LindebergOsipov lindeberg_osipov_fractions(const std::vector<LatticeDist>& dists, double eps);

struct BdncDecomposition {
  double lambda;
  LatticeDist summand;            // law of Y on 1,2,...
  std::vector<double> coefficients;  // gamma_k, k >= 1
  bool is_bdnc;
  double min_coefficient;
};
BdncDecomposition bdnc_decompose(const LatticeDist& index, double tol = 1e-12);

}  // namespace cltb
