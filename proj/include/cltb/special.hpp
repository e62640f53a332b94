#pragma once

#include <utility>

namespace cltb {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

double normal_pdf(double x);
double normal_cdf(double x);
// Throws DomainError outside (0,1).
double normal_quantile(double u);

double log_gamma(double x);
// Gamma(a)/Gamma(b), through log_gamma.
double gamma_ratio(double a, double b);

struct WendelBounds {
  double ratio;  // Gamma(x+s)/(x^s Gamma(x))
  double lower;
  double upper;
};
// Two-sided bracket on Gamma(x+s)/(x^s Gamma(x)) for x > 0, 0 <= s <= 1.
WendelBounds wendel_bounds(double x, double s);

// Power series for the modified Bessel function I0.
double bessel_i0(double x);

// Exponential integral E1(x), x > 0.
double expint_e1(double x);

// Distance between N(0,1) and a shifted or rescaled normal.
struct ExtremalDistance {
  double exact;
  double bound;
  double bound_alt;  // only meaningful for scale
};
ExtremalDistance normal_shift_distance(double q);
ExtremalDistance normal_scale_distance(double p);

}  // namespace cltb
