#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cltb/bounds_clt.hpp"

namespace cltb {

// Moments of a single summand X of a random sum.
struct SummandMoments {
  double a = 0.0;      // EX
  double beta2 = 1.0;  // EX^2
  double beta = 1.0;   // E|X|^{2+delta}
  double delta = 1.0;
  std::optional<double> central_beta;  // E|X - a|^{2+delta}, if known

  double sigma2() const { return beta2 - a * a; }
  // beta / beta2^{1+delta/2}
  double ratio() const;
  void validate() const;
};

struct PBParams {
  std::vector<double> p;
  double lambda = 0.0;
  double lambda2 = 0.0;
  double theta = 0.0;
  bool equal = false;

  static PBParams from(std::vector<double> p);
};

// Moments of the summand Y in the compound-Poisson form of the index.
struct IndexMoments {
  double ey = 1.0;
  std::optional<double> ey2;
  std::optional<double> ey_1pd2;  // E Y^{1+delta/2}
  std::optional<double> ey_2pd;   // E Y^{2+delta}
};

double poisson_coupling_tv(const std::vector<double>& p);

enum class PbForm { s_form, published_display };
BoundResult pb_sum_bound(const PBParams& pb, const SummandMoments& m, const std::vector<double>& s_list = {},
                         PbForm form = PbForm::s_form);

BoundResult poisson_sum_bound(double lambda, const SummandMoments& m);

struct PoissonLower {
  double value;
  double gamma_star;
};
// With no gamma, maximizes over gamma.
PoissonLower poisson_sum_lower(double delta, std::optional<double> gamma = std::nullopt);
inline constexpr double kPoissonLowerFloor = 81.0 / 128.0;  // times 1/e

BoundResult mixed_poisson_bound(const SummandMoments& m, double e_lambda_inv_pow, double delta_t);

double pinelis_constant();
enum class StudentMode { student, normal, optimal_r };
BoundResult student_limit_bounds(double r, double t, const SummandMoments& m, StudentMode mode);

double nb_normal_constant(double r);
enum class NbMode { sym_gamma, normal, laplace };
BoundResult nb_limit_bounds(double r, double p, const SummandMoments& m, NbMode mode);

enum class BdncMode { general, centered, combined };
BoundResult bdnc_sum_bound(double lambda, const IndexMoments& y, const SummandMoments& m, BdncMode mode);

struct NbIndexMoments {
  double lambda;
  double ey;
  double ey_1pd2_upper;
  double ratio_upper;  // bound on E Y^{1+d/2} / (EY)^{1+d/2}
};
NbIndexMoments nb_index_moments(double r, double p, double delta);

struct InsuranceEstimate {
  double estimate;
  double error_bound;
  double ceiling;
  double lambda, ey, ey2, ey3, mean, variance;
};
// rate(k), k = 1, 2, ..., gives the intensity of events with k claims.
InsuranceEstimate insurance_tail_estimate(double days, double a, double sigma2, double beta3,
                                          const std::function<double(int)>& rate, double threshold);

}  // namespace cltb
