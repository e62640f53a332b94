#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "cltb/lattice.hpp"

namespace cltb {

using cplx = std::complex<double>;

struct CharFn {
  std::string name;
  std::function<cplx(double)> eval;
  bool integrable = true;  // |f| decays fast enough to stop early

  cplx operator()(double t) const { return eval(t); }
};

CharFn normal_cf(double mu = 0.0, double sigma = 1.0);
CharFn laplace_cf(double lambda);  // lambda^2 / (lambda^2 + t^2)
CharFn gamma_cf(double shape, double rate);
CharFn uniform_cf(double a, double b);
CharFn triangular_cf(double a);  // symmetric on [-a, a]
CharFn poisson_cf(double lambda);
CharFn compound_poisson_cf(double lambda, const CharFn& summand);
CharFn lattice_cf(const LatticeDist& d);
// cf of (X_1 + ... + X_n - n EX) / sqrt(n DX), X ~ d
CharFn standardized_sum_cf(const LatticeDist& d, int n);

// Remainders of the Taylor expansion of e^{ix}.
struct TaylorCheck {
  double remainder;
  double bound;
};
// coefficient in |r_{n+1}(x)| <= C |x|^{n+delta}
double taylor_constant(int n, double delta);
// |e^{ix} - sum_{k<=n} (ix)^k/k!| against taylor_constant(n,delta) |x|^{n+delta}
TaylorCheck taylor_remainder(double x, int n, double delta);
// sharper two-sided form with a shifted leading term
TaylorCheck taylor_remainder_prawitz(double x, int n);

struct InversionOptions {
  double t_max = 2e4;  // cf is tapered to zero over [t_max/2, t_max]
  double panel = 0.5;
};
// (F(x-0) + F(x+0)) / 2
double invert_cdf(const CharFn& f, double x, const InversionOptions& opt = {});

// Smoothing inequality with a Lipschitz reference g' <= A, b > 1, T > 0.
double feller_bound(const CharFn& f, const CharFn& g, double b, double a, double t);

cplx prawitz_kernel(double t);

struct PrawitzBound {
  double bound;
  double t;
  double t0;
  double terms[4];
};
PrawitzBound prawitz_rho_bound(const CharFn& f, double t, double t0);
// Smallest bound over a grid of (T, t0); empty lists pick the default grid.
PrawitzBound prawitz_optimize(const CharFn& f, std::vector<double> ts = {},
                              std::vector<double> t0s = {});

struct CltCfBounds {
  double modulus;
  double difference;
};
// l3 is the Lyapunov fraction; needs |t| <= d / l3 for the difference.
CltCfBounds clt_cf_bounds(double t, double l3, double d);

}  // namespace cltb
