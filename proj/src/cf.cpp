#include "cltb/cf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cltb/errors.hpp"
#include "cltb/quadrature.hpp"
#include "cltb/special.hpp"

namespace cltb {

namespace {

const cplx I(0.0, 1.0);

cplx ipow(cplx z, int n) {
  cplx r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

// sum_{k>=from} (ix)^k / k!, for moderate |x|
cplx exp_tail(double x, int from) {
  cplx term = 1.0;
  for (int k = 1; k <= from; ++k) term *= I * x / double(k);
  cplx s = 0.0;
  for (int k = from; k < from + 400; ++k) {
    s += term;
    if (std::abs(term) <= 1e-18 * std::max(1e-300, std::abs(s))) break;
    term *= I * x / double(k + 1);
  }
  return s;
}

cplx exp_partial(double x, int upto) {
  cplx term = 1.0, s = 0.0;
  for (int k = 0; k <= upto; ++k) {
    s += term;
    term *= I * x / double(k + 1);
  }
  return s;
}

}  // namespace

CharFn normal_cf(double mu, double sigma) {
  require(sigma > 0.0, "normal_cf: sigma must be positive");
  return {"normal", [=](double t) { return std::exp(cplx(-0.5 * sigma * sigma * t * t, mu * t)); }, true};
}

CharFn laplace_cf(double lambda) {
  require(lambda > 0.0, "laplace_cf: lambda must be positive");
  return {"laplace", [=](double t) { return cplx(lambda * lambda / (lambda * lambda + t * t), 0.0); },
          true};
}

CharFn gamma_cf(double shape, double rate) {
  require(shape > 0.0 && rate > 0.0, "gamma_cf: parameters must be positive");
  return {"gamma", [=](double t) { return std::pow(cplx(1.0, -t / rate), -shape); }, true};
}

CharFn uniform_cf(double a, double b) {
  require(b > a, "uniform_cf: need a < b");
  return {"uniform",
          [=](double t) {
            if (std::fabs(t * (b - a)) < 1e-8) return std::exp(I * (0.5 * (a + b) * t));
            return (std::exp(I * (b * t)) - std::exp(I * (a * t))) / (I * t * (b - a));
          },
          true};
}

CharFn triangular_cf(double a) {
  require(a > 0.0, "triangular_cf: a must be positive");
  return {"triangular",
          [=](double t) {
            const double u = a * t;
            // 1 - cos u cancels badly for small u
            if (std::fabs(u) < 1e-2) return cplx(1.0 - u * u / 12.0 + u * u * u * u / 360.0, 0.0);
            return cplx(2.0 * (1.0 - std::cos(u)) / (u * u), 0.0);
          },
          true};
}

CharFn poisson_cf(double lambda) {
  require(lambda >= 0.0, "poisson_cf: lambda must be non-negative");
  return {"poisson", [=](double t) { return std::exp(lambda * (std::exp(I * t) - 1.0)); }, false};
}

CharFn compound_poisson_cf(double lambda, const CharFn& summand) {
  require(lambda >= 0.0, "compound_poisson_cf: lambda must be non-negative");
  return {"compound_poisson(" + summand.name + ")",
          [=](double t) { return std::exp(lambda * (summand(t) - 1.0)); }, false};
}

CharFn lattice_cf(const LatticeDist& d) {
  return {"lattice",
          [d](double t) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < d.size(); ++k) s += d.weights[k] * std::exp(I * (t * d.atom(k)));
            return s;
          },
          false};
}

CharFn standardized_sum_cf(const LatticeDist& d, int n) {
  require(n >= 1, "standardized_sum_cf: n must be positive");
  const double m = mean(d), s = std::sqrt(variance(d));
  require(s > 0.0, "standardized_sum_cf: degenerate summand");
  const double scale = 1.0 / (s * std::sqrt(double(n)));
  std::vector<double> xs(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) xs[k] = (d.atom(k) - m) * scale;
  return {"standardized_sum",
          [xs, w = d.weights, n](double t) {
            cplx s1 = 0.0;
            for (std::size_t k = 0; k < xs.size(); ++k) s1 += w[k] * std::exp(I * (t * xs[k]));
            return ipow(s1, n);
          },
          false};
}

double taylor_constant(int n, double delta) {
  require(n >= 0, "taylor_constant: n must be non-negative");
  require(delta >= 0.0 && delta <= 1.0, "taylor_constant: delta must lie in [0,1]");
  double c = std::pow(2.0, 1.0 - delta);
  for (int k = 1; k <= n; ++k) c /= (k + delta);
  return c;
}

TaylorCheck taylor_remainder(double x, int n, double delta) {
  const double c = taylor_constant(n, delta);
  const cplx r = std::fabs(x) <= 4.0 ? exp_tail(x, n + 1) : std::exp(I * x) - exp_partial(x, n);
  return {std::abs(r), c * std::pow(std::fabs(x), n + delta)};
}

TaylorCheck taylor_remainder_prawitz(double x, int n) {
  require(n >= 1, "taylor_remainder_prawitz: n must be positive");
  const cplx r = std::fabs(x) <= 4.0 ? exp_tail(x, n) : std::exp(I * x) - exp_partial(x, n - 1);
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  const cplx lead = ipow(I * x, n) / fact;
  const double a = std::pow(std::fabs(x), n) / fact;
  return {std::abs(r - (double(n) / (2.0 * (n + 1))) * lead), (n + 2.0) / (2.0 * (n + 1)) * a};
}

double invert_cdf(const CharFn& f, double x, const InversionOptions& opt) {
  require(opt.t_max > 0.0 && opt.panel > 0.0, "invert_cdf: bad options");
  const double t1 = 0.5 * opt.t_max, t2 = opt.t_max;
  auto taper = [&](double t) {
    if (t <= t1) return 1.0;
    const double u = (t - t1) / (t2 - t1);
    return 1.0 - u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
  };
  auto g = [&](double t) { return std::imag(std::exp(-I * (t * x)) * f(t)) / t * taper(t); };
  double total = 0.0, err = 0.0;
  for (double lo = 0.0; lo < t2; lo += opt.panel) {
    const double hi = std::min(t2, lo + opt.panel);
    const auto q = integrate(g, lo, hi, opt.panel, 1e-11);
    total += q.value;
    err += q.error;
    if (f.integrable && hi > 1.0 && std::abs(f(hi)) < 1e-17) break;
  }
  if (!std::isfinite(total) || err > 1e-6)
    throw NumericError("invert_cdf: quadrature error estimate " + std::to_string(err));
  return 0.5 - total / kPi;
}

double feller_bound(const CharFn& f, const CharFn& g, double b, double a, double t) {
  require(b > 1.0, "feller_bound: b must exceed 1");
  require(t > 0.0, "feller_bound: T must be positive");
  require(a > 0.0, "feller_bound: A must be positive");
  constexpr double h = 1e-4;
  // |f-g|/t stays bounded at the origin; freeze it below h
  const double near0 = std::abs(f(h) - g(h)) / h;
  auto integrand = [&](double s) { return s < h ? near0 : std::abs(f(s) - g(s)) / s; };
  const auto q = integrate(integrand, 0.0, t, 0.25, 1e-10);
  return b / kPi * (q.value + q.error) + 4.0 * b * (b + 1.0) * a / (kPi * (b - 1.0) * t);
}

cplx prawitz_kernel(double t) {
  const double at = std::fabs(t);
  require(at > 0.0 && at <= 1.0, "prawitz_kernel: need 0 < |t| <= 1");
  const double sg = t > 0 ? 1.0 : -1.0;
  // (1-|t|) cot(pi t), written to stay finite as |t| -> 1
  const double c = at == 1.0 ? -sg / kPi : (1.0 - at) * std::cos(kPi * t) / std::sin(kPi * t);
  return cplx(0.5 * (1.0 - at), 0.5 * (c + sg / kPi));
}

PrawitzBound prawitz_rho_bound(const CharFn& f, double t, double t0) {
  require(t > 0.0, "prawitz_rho_bound: T must be positive");
  require(t0 > 0.0 && t0 <= 1.0, "prawitz_rho_bound: t0 must lie in (0,1]");
  const double panel = std::min(0.02, 0.25 / t);
  const double tt = t * t;
  auto d1 = [&](double s) { return std::abs(prawitz_kernel(s)) * std::abs(f(t * s) - std::exp(-0.5 * tt * s * s)); };
  auto d2 = [&](double s) { return std::abs(prawitz_kernel(s)) * std::abs(f(t * s)); };
  auto d3 = [&](double s) {
    return std::abs(prawitz_kernel(s) - cplx(0.0, 1.0 / (2.0 * kPi * s))) * std::exp(-0.5 * tt * s * s);
  };
  PrawitzBound r{};
  r.t = t;
  r.t0 = t0;
  // |.| makes kinks, so a loose tolerance plus the error estimate keeps
  // the bound conservative without deep recursion
  double err = 0.0;
  auto part = [&](const std::function<double(double)>& g, double lo, double hi) {
    const auto q = integrate(g, lo, hi, panel, 1e-9);
    err += 2.0 * q.error;
    return 2.0 * q.value;
  };
  r.terms[0] = part(d1, 0.0, t0);
  r.terms[1] = t0 < 1.0 ? part(d2, t0, 1.0) : 0.0;
  r.terms[2] = part(d3, 0.0, t0);
  const double z = 0.5 * tt * t0 * t0;
  r.terms[3] = z > 700.0 ? 0.0 : expint_e1(z) / (2.0 * kPi);
  r.bound = r.terms[0] + r.terms[1] + r.terms[2] + r.terms[3] + err;
  return r;
}

PrawitzBound prawitz_optimize(const CharFn& f, std::vector<double> ts, std::vector<double> t0s) {
  if (ts.empty())
    for (int k = -1; k <= 10; ++k) ts.push_back(std::ldexp(1.0, k));
  if (t0s.empty())
    for (int k = 1; k <= 10; ++k) t0s.push_back(0.1 * k);
  PrawitzBound best{};
  best.bound = std::numeric_limits<double>::infinity();
  for (double t : ts)
    for (double t0 : t0s) {
      const auto r = prawitz_rho_bound(f, t, t0);
      if (r.bound < best.bound) best = r;
    }
  return best;
}

CltCfBounds clt_cf_bounds(double t, double l3, double d) {
  require(l3 > 0.0, "clt_cf_bounds: Lyapunov fraction must be positive");
  require(d > 0.0, "clt_cf_bounds: d must be positive");
  const double at = std::fabs(t);
  if (at > d / l3) throw DomainError("clt_cf_bounds: |t| exceeds d / L");
  const double t3 = at * at * at;
  return {std::exp(-0.5 * t * t + l3 * t3 / 3.0),
          2.0 * l3 * t3 * std::exp(-0.5 * t * t * (1.0 - 2.0 * d / 3.0))};
}

}  // namespace cltb
