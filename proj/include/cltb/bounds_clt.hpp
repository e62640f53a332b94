#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cltb/constants.hpp"
#include "cltb/lattice.hpp"

namespace cltb {

struct BoundResult {
  double value = 0.0;
  std::string constant_name;
  double constant_value = 0.0;
  std::string variant;
  std::vector<std::string> assumptions;
  std::optional<double> error_bar;
  // other forms of the same bound, e.g. a relaxed closed form
  std::vector<std::pair<std::string, double>> alternatives;
};

struct Summand {
  double sigma2;
  double beta;  // E|X|^{2+delta}
};

// Second and (2+delta)-th absolute moments of independent centered summands.
struct MomentProfile {
  double delta = 1.0;
  bool iid = true;
  int n = 1;
  double sigma2 = 1.0;  // iid only
  double beta = 1.0;    // iid only
  std::vector<Summand> summands;  // general only

  static MomentProfile make_iid(double delta, double sigma2, double beta, int n);
  static MomentProfile make_general(double delta, std::vector<Summand> summands);
  // Exact moments of centered lattice summands.
  static MomentProfile from_dists(const std::vector<LatticeDist>& dists, double delta, bool iid);

  Regime regime() const { return iid ? Regime::iid : Regime::general; }
  void validate() const;
};

struct Fractions {
  double lyapunov;  // L
  double t;         // sum sigma_k^{2+delta} / B^{2+delta}
  double b;
};
Fractions fractions(const MomentProfile& p);

enum class BeVariant { classical, structured, best };
// structured with an empty s-list uses every tabulated s
BoundResult berry_esseen_uniform(const MomentProfile& p, BeVariant v, const std::vector<double>& s_list = {});

// Constant of the smoothing-inequality proof as a function of (b, d).
double be_cf_constant(double b, double d);
struct CfConstantOptimum {
  double value, b, d;
};
CfConstantOptimum be_cf_constant_optimal();

struct OsipovConstant {
  double c, b;
};
// Truncation constant built from a Berry-Esseen constant c0.
OsipovConstant osipov_constant(double c0);
inline constexpr double kOsipovLiterature = 1.87;

BoundResult osipov_bound(const std::vector<LatticeDist>& dists, double eps, double c);

struct GClassFunction {
  std::string name;
  std::function<double(double)> g;
  double domain_max = 1e6;
};
// Sampled check of evenness, positivity and the two monotonicity
// conditions; throws StructuralError when a sample fails.
void validate_g_class(const GClassFunction& g);
GClassFunction g_power(double delta);
GClassFunction g_log1p();
GClassFunction g_one();
GClassFunction g_min_envelope(double a);  // min{1, |x|/a}
GClassFunction g_max_envelope(double a);  // max{1, |x|/a}

BoundResult katz_petrov(const std::vector<LatticeDist>& dists, const GClassFunction& g, double a);

BoundResult nagaev_bikelis(const MomentProfile& p, double x, const std::vector<double>& s_list = {});
// a <= 0 selects the tabulated default for the regime and |x|
BoundResult bikelis(const std::vector<LatticeDist>& dists, double x, double a = 0.0, bool iid = false);
BoundResult petrov(const std::vector<LatticeDist>& dists, double x, const GClassFunction& g, double a = 0.0,
                   bool iid = false);

double lower_clt_sqrt2pi();
double lower_esseen();
double hipp_mattner(int n);
double lower_inf_cs(int m, double gamma);
double nonuniform_minorant(double delta, double p);

BoundResult erickson(const std::vector<LatticeDist>& dists, double c = 36.0);
double mean_metric_constant(double delta);
BoundResult mean_metric_bound(const MomentProfile& p);
// integral distance between the standardized two-point law and Phi
double psi(double p);
double psi_minorant(double delta, double p);

enum class ZetaOrder { two, two_plus_delta, three_refined };
BoundResult zeta_high_bounds(const MomentProfile& p, ZetaOrder order);

struct TwoPoint {
  double p;
  double a;
};
// A(rho) = sup |EX^3| / E|X|^3 over standardized laws with E|X|^3 = rho
TwoPoint extremal_two_point(double rho);

}  // namespace cltb
