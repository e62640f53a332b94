#include "cltb/special.hpp"

#include <cmath>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/expint.hpp>

#include "cltb/errors.hpp"

namespace cltb {

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("normal_quantile: u must lie in (0,1)");
  return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * u);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: x must be positive");
  return std::lgamma(x);
}

double gamma_ratio(double a, double b) { return std::exp(log_gamma(a) - log_gamma(b)); }

WendelBounds wendel_bounds(double x, double s) {
  require(x > 0.0, "wendel_bounds: x must be positive");
  require(s >= 0.0 && s <= 1.0, "wendel_bounds: s must lie in [0,1]");
  WendelBounds w;
  w.ratio = std::exp(log_gamma(x + s) - log_gamma(x) - s * std::log(x));
  w.lower = std::pow(x / (x + s), 1.0 - s);
  w.upper = 1.0;
  return w;
}

double bessel_i0(double x) {
  // sum (x^2/4)^k / (k!)^2; stop once a term is negligible against the sum
  const double y = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 100000; ++k) {
    term *= y / (double(k) * double(k));
    sum += term;
    if (term < 1e-16 * sum) return sum;
  }
  throw NumericError("bessel_i0: series did not converge");
}

double expint_e1(double x) {
  require(x > 0.0, "expint_e1: x must be positive");
  return boost::math::expint(1, x);
}

ExtremalDistance normal_shift_distance(double q) {
  ExtremalDistance d;
  d.exact = 2.0 * normal_cdf(std::fabs(q) / 2.0) - 1.0;
  d.bound = std::fabs(q) * kInvSqrt2Pi;
  d.bound_alt = d.bound;
  return d;
}

ExtremalDistance normal_scale_distance(double p) {
  require(p > 0.0, "normal_scale_distance: p must be positive");
  ExtremalDistance d;
  d.bound = std::sqrt((p - 1.0) * std::log(p) / kPi);
  d.bound_alt = (std::max(p, 1.0 / p) - 1.0) / std::sqrt(2.0 * kPi * std::exp(1.0));
  if (p == 1.0) {
    d.exact = 0.0;
    return d;
  }
  // stationary point of Phi(px) - Phi(x): p*phi(px) = phi(x)
  const double x = std::sqrt(2.0 * std::log(p) / (p * p - 1.0));
  d.exact = std::fabs(normal_cdf(p * x) - normal_cdf(x));
  return d;
}

}  // namespace cltb
