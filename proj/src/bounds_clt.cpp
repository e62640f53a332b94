#include "cltb/bounds_clt.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <boost/math/tools/minima.hpp>

#include "cltb/errors.hpp"
#include "cltb/special.hpp"

namespace cltb {

namespace {

void check_delta(double delta) { require(delta > 0.0 && delta <= 1.0, "delta must lie in (0,1]"); }

double variance_sum(const std::vector<LatticeDist>& dists) {
  require(!dists.empty(), "no summands");
  double b2 = 0.0;
  for (const auto& d : dists) {
    const double v = variance(d);
    require(std::fabs(mean(d)) <= 1e-9 * std::max(1.0, std::sqrt(v)), "summands must be centered");
    b2 += v;
  }
  require(b2 > 0.0, "zero total variance");
  return b2;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

MomentProfile MomentProfile::make_iid(double delta, double sigma2, double beta, int n) {
  MomentProfile p;
  p.delta = delta;
  p.iid = true;
  p.sigma2 = sigma2;
  p.beta = beta;
  p.n = n;
  p.validate();
  return p;
}

MomentProfile MomentProfile::make_general(double delta, std::vector<Summand> summands) {
  MomentProfile p;
  p.delta = delta;
  p.iid = false;
  p.summands = std::move(summands);
  p.n = int(p.summands.size());
  p.validate();
  return p;
}

MomentProfile MomentProfile::from_dists(const std::vector<LatticeDist>& dists, double delta, bool iid) {
  require(!dists.empty(), "from_dists: no summands");
  if (iid) {
    const auto& d = dists.front();
    return make_iid(delta, variance(d), moment(d, 2.0 + delta, MomentKind::central_absolute), int(dists.size()));
  }
  std::vector<Summand> s;
  for (const auto& d : dists) s.push_back({variance(d), moment(d, 2.0 + delta, MomentKind::central_absolute)});
  return make_general(delta, std::move(s));
}

void MomentProfile::validate() const {
  check_delta(delta);
  auto lyapunov_ok = [&](double s2, double b) {
    return s2 >= 0.0 && b >= std::pow(s2, 1.0 + delta / 2.0) * (1.0 - 1e-12);
  };
  if (iid) {
    require(n >= 1, "MomentProfile: n must be positive");
    require(sigma2 > 0.0, "MomentProfile: variance must be positive");
    require(lyapunov_ok(sigma2, beta), "MomentProfile: beta violates the Lyapunov inequality");
    return;
  }
  require(!summands.empty(), "MomentProfile: no summands");
  double total = 0.0;
  for (const auto& s : summands) {
    require(lyapunov_ok(s.sigma2, s.beta), "MomentProfile: beta violates the Lyapunov inequality");
    total += s.sigma2;
  }
  require(total > 0.0, "MomentProfile: zero total variance");
}

Fractions fractions(const MomentProfile& p) {
  p.validate();
  const double e = 1.0 + p.delta / 2.0;
  if (p.iid) {
    const double b2 = p.n * p.sigma2, denom = std::pow(b2, e);
    return {p.n * p.beta / denom, p.n * std::pow(p.sigma2, e) / denom, std::sqrt(b2)};
  }
  double b2 = 0.0, sb = 0.0, ss = 0.0;
  for (const auto& s : p.summands) {
    b2 += s.sigma2;
    sb += s.beta;
    ss += std::pow(s.sigma2, e);
  }
  const double denom = std::pow(b2, e);
  return {sb / denom, ss / denom, std::sqrt(b2)};
}

BoundResult berry_esseen_uniform(const MomentProfile& p, BeVariant v, const std::vector<double>& s_list) {
  const auto f = fractions(p);
  const auto& tab = active_constants();
  BoundResult r;
  r.assumptions.push_back(std::string("regime ") + regime_name(p.regime()));
  if (v == BeVariant::classical) {
    r.constant_value = tab.c0(p.delta, p.regime());
    r.constant_name = "C0(" + num(p.delta) + ")";
    r.value = r.constant_value * f.lyapunov;
    r.variant = "classical";
    return r;
  }
  std::vector<SConstant> cands;
  if (v == BeVariant::structured && !s_list.empty())
    for (double s : s_list) cands.push_back({s, tab.cs(p.delta, s, p.regime())});
  else
    cands = tab.structured(p.delta, p.regime());
  r.variant = v == BeVariant::best ? "best" : "structured";
  r.value = std::numeric_limits<double>::infinity();
  for (const auto& c : cands) {
    const double val = c.c * (f.lyapunov + c.s * f.t);
    if (val < r.value) {
      r.value = val;
      r.constant_value = c.c;
      r.constant_name = "C_" + num(c.s) + "(" + num(p.delta) + ")";
    }
  }
  return r;
}

double be_cf_constant(double b, double d) {
  require(b > 1.0, "be_cf_constant: b must exceed 1");
  require(d > 0.0 && d < 1.5, "be_cf_constant: d must lie in (0, 3/2)");
  return 2.0 * kInvSqrt2Pi *
         (b / std::pow(1.0 - 2.0 * d / 3.0, 1.5) + 2.0 * b * (b + 1.0) / (kPi * d * (b - 1.0)));
}

CfConstantOptimum be_cf_constant_optimal() {
  using boost::math::tools::brent_find_minima;
  auto inner = [](double b) {
    return brent_find_minima([b](double d) { return be_cf_constant(b, d); }, 1e-6, 1.5 - 1e-9, 52);
  };
  auto outer = brent_find_minima([&](double b) { return inner(b).second; }, 1.0 + 1e-9, 20.0, 52);
  const auto in = inner(outer.first);
  return {in.second, outer.first, in.first};
}

OsipovConstant osipov_constant(double c0) {
  require(c0 > 0.0, "osipov_constant: c0 must be positive");
  auto left = [](double b) { return 2.0 / (1.0 - b * b); };
  auto right = [c0](double b) {
    return 1.0 + 4.25 * c0 / (b * b * b) + kInvSqrt2Pi / b * (1.0 + 2.0 * std::exp(-0.5) / (1.0 + b));
  };
  // left increases, right decreases: the max is smallest at the crossing
  double lo = 1e-9, hi = 1.0 - 1e-12;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (left(mid) < right(mid) ? lo : hi) = mid;
  }
  const double b = 0.5 * (lo + hi);
  return {std::max(left(b), right(b)), b};
}

BoundResult osipov_bound(const std::vector<LatticeDist>& dists, double eps, double c) {
  require(eps > 0.0, "osipov: eps must be positive");
  require(c > 0.0, "osipov: constant must be positive");
  const auto f = lindeberg_osipov_fractions(dists, eps);
  BoundResult r;
  r.value = c * (f.lindeberg + f.osipov);
  r.constant_name = "C";
  r.constant_value = c;
  r.variant = "eps=" + num(eps);
  // eps = 1 picks the smaller of x^2 and |x|^3 pointwise
  const auto one = lindeberg_osipov_fractions(dists, 1.0);
  double grid_min = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 200; ++k) {
    const auto g = lindeberg_osipov_fractions(dists, 0.025 * k);
    grid_min = std::min(grid_min, g.lindeberg + g.osipov);
  }
  const bool eps_one_min = one.lindeberg + one.osipov <= grid_min + 1e-12;
  r.assumptions.push_back(eps_one_min ? "eps=1 minimizes L(eps)+M(eps) on the scan grid"
                                      : "eps=1 is NOT the grid minimizer");
  return r;
}

void validate_g_class(const GClassFunction& g) {
  require(g.domain_max > 1e-6, "g: domain too small");
  const int n = 400;
  const double l0 = std::log(1e-6), l1 = std::log(g.domain_max);
  double prev_g = 0.0, prev_ratio = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = std::exp(l0 + (l1 - l0) * i / (n - 1));
    const double gx = g.g(x);
    auto fail = [&](const char* what) {
      throw StructuralError("g '" + g.name + "' is not admissible: " + what + " at x=" + num(x));
    };
    if (!(gx > 0.0)) fail("not positive");
    if (std::fabs(g.g(-x) - gx) > 1e-12 * gx) fail("not even");
    const double ratio = x / gx;
    if (i > 0) {
      if (gx < prev_g * (1.0 - 1e-12)) fail("decreasing");
      if (ratio < prev_ratio * (1.0 - 1e-12)) fail("x/g(x) decreasing");
    }
    prev_g = gx;
    prev_ratio = ratio;
  }
}

GClassFunction g_power(double delta) {
  require(delta >= 0.0 && delta <= 1.0, "g_power: delta must lie in [0,1]");
  return {"|x|^" + num(delta), [delta](double x) { return std::pow(std::fabs(x), delta); }, 1e6};
}
GClassFunction g_log1p() {
  return {"ln(1+|x|)", [](double x) { return std::log1p(std::fabs(x)); }, 1e6};
}
GClassFunction g_one() {
  return {"1", [](double) { return 1.0; }, 1e6};
}
GClassFunction g_min_envelope(double a) {
  require(a > 0.0, "envelope scale must be positive");
  return {"min{1,|x|/a}", [a](double x) { return std::min(1.0, std::fabs(x) / a); }, 1e6};
}
GClassFunction g_max_envelope(double a) {
  require(a > 0.0, "envelope scale must be positive");
  return {"max{1,|x|/a}", [a](double x) { return std::max(1.0, std::fabs(x) / a); }, 1e6};
}

BoundResult katz_petrov(const std::vector<LatticeDist>& dists, const GClassFunction& g, double a) {
  validate_g_class(g);
  require(a > 0.0, "katz_petrov: constant must be positive");
  const double b2 = variance_sum(dists), b = std::sqrt(b2);
  double s = 0.0;
  for (const auto& d : dists)
    for (std::size_t i = 0; i < d.size(); ++i) s += d.weights[i] * d.atom(i) * d.atom(i) * g.g(d.atom(i));
  BoundResult r;
  r.value = a * s / (b2 * g.g(b));
  r.constant_name = "A";
  r.constant_value = a;
  r.variant = "g=" + g.name;
  return r;
}

BoundResult nagaev_bikelis(const MomentProfile& p, double x, const std::vector<double>& s_list) {
  const auto f = fractions(p);
  auto ks = active_constants().nonuniform(p.delta, p.regime());
  if (!s_list.empty()) {
    std::vector<SConstant> pick;
    for (double s : s_list) {
      auto it = std::find_if(ks.begin(), ks.end(), [s](auto k) { return std::fabs(k.s - s) <= 1e-12; });
      if (it == ks.end()) throw LookupError("no K_s constant for s=" + num(s));
      pick.push_back(*it);
    }
    ks = pick;
  }
  BoundResult r;
  r.variant = "nagaev_bikelis";
  r.value = std::numeric_limits<double>::infinity();
  const double denom = 1.0 + std::pow(std::fabs(x), 2.0 + p.delta);
  for (const auto& k : ks) {
    const double v = k.c * (f.lyapunov + k.s * f.t) / denom;
    if (v < r.value) {
      r.value = v;
      r.constant_value = k.c;
      r.constant_name = "K_" + num(k.s) + "(" + num(p.delta) + ")";
    }
  }
  return r;
}

namespace {

double default_a(double a, double x, bool iid) {
  if (a > 0.0) return a;
  return active_constants().bikelis_constant(iid ? Regime::iid : Regime::general, std::fabs(x) >= 10.0);
}

}  // namespace

BoundResult bikelis(const std::vector<LatticeDist>& dists, double x, double a, bool iid) {
  a = default_a(a, x, iid);
  const double b = std::sqrt(variance_sum(dists)), scale = (1.0 + std::fabs(x)) * b;
  double s = 0.0;
  for (const auto& d : dists)
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double y = std::fabs(d.atom(i)) / scale;
      s += d.weights[i] * (y > 1.0 ? y * y : y * y * y);
    }
  BoundResult r;
  r.value = a * s;
  r.constant_name = "A";
  r.constant_value = a;
  r.variant = "bikelis";
  return r;
}

BoundResult petrov(const std::vector<LatticeDist>& dists, double x, const GClassFunction& g, double a, bool iid) {
  validate_g_class(g);
  a = default_a(a, x, iid);
  const double b2 = variance_sum(dists), scale = (1.0 + std::fabs(x)) * std::sqrt(b2);
  double s = 0.0;
  for (const auto& d : dists)
    for (std::size_t i = 0; i < d.size(); ++i) s += d.weights[i] * d.atom(i) * d.atom(i) * g.g(d.atom(i));
  BoundResult r;
  r.value = a * s / (scale * scale * g.g(scale));
  r.constant_name = "A";
  r.constant_value = a;
  r.variant = "petrov g=" + g.name;
  return r;
}

double lower_clt_sqrt2pi() { return kInvSqrt2Pi; }

double lower_esseen() { return (std::sqrt(10.0) + 3.0) / (6.0 * kSqrt2Pi); }

double hipp_mattner(int n) {
  require(n >= 1, "hipp_mattner: n must be positive");
  if (n % 2 == 1) return normal_cdf(1.0 / std::sqrt(double(n))) - 0.5;
  const int m = n / 2;
  return std::exp(std::lgamma(n + 1.0) - 2.0 * std::lgamma(m + 1.0) - (n + 1) * std::log(2.0));
}

double lower_inf_cs(int m, double gamma) {
  require(m >= 0, "lower_inf_cs: m must be non-negative");
  require(gamma > 0.0, "lower_inf_cs: gamma must be positive");
  double term = std::exp(-gamma), s = 0.0;
  for (int k = 0; k <= m; ++k) {
    s += term;
    term *= gamma / (k + 1);
  }
  return std::sqrt(gamma) * (s - normal_cdf((m - gamma) / std::sqrt(gamma)));
}

double nonuniform_minorant(double delta, double p) {
  require(delta >= 0.0 && delta <= 1.0, "nonuniform_minorant: delta must lie in [0,1]");
  require(p > 0.0 && p < 1.0, "nonuniform_minorant: p must lie in (0,1)");
  const double q = 1.0 - p;
  return std::pow(q, delta / 2.0) * (std::pow(p, 1.0 + delta / 2.0) + std::pow(q, 1.0 + delta / 2.0)) /
         (std::pow(p, 1.0 + delta) + std::pow(q, 1.0 + delta)) *
         std::fabs(1.0 - normal_cdf(-std::sqrt(q / p)) / p);
}

BoundResult erickson(const std::vector<LatticeDist>& dists, double c) {
  require(c > 0.0, "erickson: constant must be positive");
  const double b2 = variance_sum(dists), b = std::sqrt(b2);
  double s = 0.0;
  for (const auto& d : dists)
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double x = d.atom(i);
      s += d.weights[i] * x * x * std::min(std::fabs(x), b);
    }
  BoundResult r;
  r.value = c * s / (b2 * b);
  r.constant_name = "C";
  r.constant_value = c;
  r.variant = "erickson";
  return r;
}

double mean_metric_constant(double delta) {
  require(delta >= 0.0 && delta <= 1.0, "mean_metric_constant: delta must lie in [0,1]");
  return 2.0 / (1.0 + delta) * std::pow(kPi / 2.0, (1.0 - delta) / 2.0);
}

BoundResult mean_metric_bound(const MomentProfile& p) {
  BoundResult r;
  r.constant_value = mean_metric_constant(p.delta);
  r.constant_name = "C(" + num(p.delta) + ")";
  r.value = r.constant_value * fractions(p).lyapunov;
  r.variant = "mean_metric";
  return r;
}

double psi(double p) {
  require(p > 0.0 && p < 1.0, "psi: p must lie in (0,1)");
  if (p > 0.5) p = 1.0 - p;
  const double q = 1.0 - p, u = std::sqrt(q / p), v = std::sqrt(p / q);
  return 2.0 * u * normal_cdf(u) + 2.0 * v * normal_cdf(v) + 2.0 * normal_pdf(u) + 2.0 * normal_pdf(v) -
         2.0 * normal_pdf(normal_quantile(q)) - 2.0 * (1.0 - p * q) / std::sqrt(p * q);
}

double psi_minorant(double delta, double p) {
  require(delta >= 0.0 && delta <= 1.0, "psi_minorant: delta must lie in [0,1]");
  const double q = 1.0 - p;
  return std::pow(p * q, delta / 2.0) * psi(p) / (std::pow(p, 1.0 + delta) + std::pow(q, 1.0 + delta));
}

BoundResult zeta_high_bounds(const MomentProfile& p, ZetaOrder order) {
  const auto f = fractions(p);
  BoundResult r;
  switch (order) {
    case ZetaOrder::two:
      require(p.delta == 1.0, "zeta order two needs third moments (delta = 1)");
      r.constant_value = kSqrt2Pi / 8.0;
      r.constant_name = "sqrt(2pi)/8";
      r.value = r.constant_value * f.lyapunov;
      r.variant = "two";
      return r;
    case ZetaOrder::two_plus_delta:
      r.constant_value = 1.0 / ((1.0 + p.delta) * (2.0 + p.delta));
      r.constant_name = "1/((1+d)(2+d))";
      r.value = r.constant_value * f.lyapunov;
      r.variant = "two_plus_delta";
      return r;
    case ZetaOrder::three_refined:
      break;
  }
  require(p.delta == 1.0, "refined zeta_3 bound needs third moments (delta = 1)");
  r.variant = "three_refined";
  if (p.iid) {
    const double rho = p.beta / std::pow(p.sigma2, 1.5);
    r.value = rho * extremal_two_point(rho).a / (6.0 * std::sqrt(double(p.n))) + 0.1352 / p.n;
    r.constant_name = "0.1352";
    r.constant_value = 0.1352;
    return r;
  }
  auto s = p.summands;
  std::sort(s.begin(), s.end(), [](auto a, auto b) { return a.sigma2 > b.sigma2; });
  double b2 = 0.0;
  for (const auto& k : s) b2 += k.sigma2;
  const double b3 = std::pow(b2, 1.5);
  double main = 0.0, tail = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double rho = s[k].beta / std::pow(s[k].sigma2, 1.5);
    main += s[k].beta / b3 * extremal_two_point(rho).a;
    if (k + 1 < s.size()) tail += std::pow(s[k + 1].sigma2, 1.5) / std::sqrt(double(k + 1));
  }
  r.value = main / 6.0 + 0.0993 * std::pow(s[0].sigma2, 1.5) / b3 + 0.0665 / b3 * tail;
  r.constant_name = "0.0993, 0.0665";
  return r;
}

TwoPoint extremal_two_point(double rho) {
  require(rho >= 1.0, "extremal_two_point: rho must be at least 1");
  // with u = |EX^3| = (q-p)/sqrt(pq): rho = (u^2+2)/sqrt(u^2+4), solved for u^2
  // in a form free of cancellation near rho = 1
  const double v = 8.0 * (rho * rho - 1.0) / (4.0 + 8.0 * rho / (rho + std::sqrt(rho * rho + 8.0)));
  const double u = std::sqrt(v);
  return {0.5 * (1.0 - u / std::sqrt(v + 4.0)), u / rho};
}

}  // namespace cltb
