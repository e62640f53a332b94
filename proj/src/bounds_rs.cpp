#include "cltb/bounds_rs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <boost/math/tools/minima.hpp>

#include "cltb/errors.hpp"
#include "cltb/special.hpp"

namespace cltb {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// shared by the Poisson and compound-Poisson bounds so that Y = 1
// reproduces the Poisson value exactly
double poisson_type(double m, double beta, double ey_2pd, double lambda, double eu2, double delta) {
  return m * beta * ey_2pd / (std::pow(lambda, delta / 2.0) * std::pow(eu2, 1.0 + delta / 2.0));
}

BoundResult with_m(double delta) {
  BoundResult r;
  r.constant_value = active_constants().m(delta);
  r.constant_name = "M(" + num(delta) + ")=" + num(r.constant_value);
  return r;
}

void centered_unit(const SummandMoments& m, const char* who) {
  m.validate();
  require(m.a == 0.0 && m.beta2 == 1.0, std::string(who) + ": summands must have a = 0 and beta2 = 1");
}

}  // namespace

double SummandMoments::ratio() const { return beta / std::pow(beta2, 1.0 + delta / 2.0); }

void SummandMoments::validate() const {
  require(delta > 0.0 && delta <= 1.0, "delta must lie in (0,1]");
  require(beta2 > 0.0, "beta2 must be positive");
  require(a * a <= beta2 * (1.0 + 1e-12), "a^2 cannot exceed beta2");
  require(beta >= std::pow(beta2, 1.0 + delta / 2.0) * (1.0 - 1e-12), "beta violates the Lyapunov inequality");
}

PBParams PBParams::from(std::vector<double> p) {
  require(!p.empty(), "Poisson-binomial: empty probability vector");
  PBParams pb;
  for (double x : p) {
    require(x > 0.0 && x <= 1.0, "Poisson-binomial: probabilities must lie in (0,1]");
    pb.lambda += x;
    pb.lambda2 += x * x;
  }
  pb.theta = pb.lambda2 / pb.lambda;
  pb.equal = std::all_of(p.begin(), p.end(), [&](double x) { return x == p.front(); });
  pb.p = std::move(p);
  return pb;
}

double poisson_coupling_tv(const std::vector<double>& p) {
  require(!p.empty(), "poisson_coupling_tv: empty sequence");
  double s = 0.0;
  for (double x : p) {
    require(x > 0.0 && x <= 1.0, "poisson_coupling_tv: probabilities must lie in (0,1]");
    s += x * x;
  }
  return s;
}

BoundResult pb_sum_bound(const PBParams& pb, const SummandMoments& m, const std::vector<double>& s_list,
                         PbForm form) {
  m.validate();
  const double d = m.delta, rho = m.ratio(), th = pb.theta;
  const bool centered = m.a == 0.0;
  if (!centered) require(th < 1.0, "pb_sum_bound: non-centered summands need theta < 1");
  const Regime regime = pb.equal ? Regime::iid : Regime::general;
  BoundResult r;
  r.assumptions.push_back(std::string("constants for ") + (pb.equal ? "equal" : "unequal") + " p");
  if (form == PbForm::published_display) {
    require(centered && d == 1.0, "published display form covers centered summands with delta = 1");
    const double st = std::sqrt(th);
    r.value = pb.equal ? std::min(0.469 * rho, 0.3031 * rho + 0.646 * st) : std::min(0.5583 * rho, 0.3057 * rho + st);
    r.value /= std::sqrt(pb.lambda);
    r.variant = "published_display";
    r.constant_name = pb.equal ? "0.469, 0.3031" : "0.5583, 0.3057";
    return r;
  }
  std::vector<SConstant> cands;
  for (const auto& c : active_constants().structured(d, regime))
    if (c.s <= 1.0) cands.push_back(c);
  if (!s_list.empty()) {
    std::vector<SConstant> pick;
    for (double s : s_list) pick.push_back({s, active_constants().cs(d, s, regime)});
    cands = pick;
  }
  r.variant = centered ? "centered" : "general";
  r.value = std::numeric_limits<double>::infinity();
  for (const auto& c : cands) {
    double v;
    if (centered)
      v = c.c / std::pow(pb.lambda, d / 2.0) * (rho + c.s * std::pow(th, d / 2.0));
    else
      v = c.c / (std::pow(pb.lambda, d / 2.0) * std::pow(1.0 - th, d / 2.0)) *
          (rho * (1.0 + 3.25 * std::pow(th, d)) / (1.0 - th) + c.s * std::pow(th, d / 2.0));
    if (v < r.value) {
      r.value = v;
      r.constant_value = c.c;
      r.constant_name = "C_" + num(c.s) + "(" + num(d) + ")";
    }
  }
  return r;
}

BoundResult poisson_sum_bound(double lambda, const SummandMoments& m) {
  m.validate();
  require(lambda > 0.0, "poisson_sum_bound: lambda must be positive");
  BoundResult r = with_m(m.delta);
  r.value = poisson_type(r.constant_value, m.beta, 1.0, lambda, m.beta2, m.delta);
  r.variant = "poisson";
  if (r.constant_value < kInvSqrt2Pi)
    r.assumptions.push_back("M(delta) is below the classical lower bound 1/sqrt(2 pi)");
  return r;
}

PoissonLower poisson_sum_lower(double delta, std::optional<double> gamma) {
  require(delta > 0.0 && delta <= 1.0, "poisson_sum_lower: delta must lie in (0,1]");
  auto h = [delta](double g) { return 0.5 * std::pow(g, delta / 2.0) * std::exp(-g) * bessel_i0(g); };
  if (gamma) {
    require(*gamma > 0.0, "poisson_sum_lower: gamma must be positive");
    return {h(*gamma), *gamma};
  }
  auto best = boost::math::tools::brent_find_minima([&](double g) { return -h(g); }, 1e-4, 20.0, 40);
  return {-best.second, best.first};
}

BoundResult mixed_poisson_bound(const SummandMoments& m, double e_lambda_inv_pow, double delta_t) {
  centered_unit(m, "mixed_poisson_bound");
  require(e_lambda_inv_pow >= 0.0 && delta_t >= 0.0, "mixed_poisson_bound: inputs must be non-negative");
  BoundResult r = with_m(m.delta);
  r.value = r.constant_value * m.beta * e_lambda_inv_pow + delta_t;
  r.variant = "mixed_poisson";
  return r;
}

double pinelis_constant() {
  const double s2 = std::sqrt(2.0);
  return 0.25 * std::sqrt((7.0 + 5.0 * s2) / (kPi * std::exp(1.0 + s2)));
}

BoundResult student_limit_bounds(double r, double t, const SummandMoments& m, StudentMode mode) {
  centered_unit(m, "student_limit_bounds");
  require(r > 0.0 && t > 0.0, "student_limit_bounds: r and t must be positive");
  const double d = m.delta;
  BoundResult res = with_m(d);
  const double mm = res.constant_value;
  const double exact = std::pow(2.0, d / 2.0) * mm * gamma_ratio((r + d) / 2.0, r / 2.0) * m.beta / std::pow(t, d / 2.0);
  const double relaxed = mm * m.beta * std::pow(r / t, d / 2.0);
  switch (mode) {
    case StudentMode::student:
      res.value = exact;
      res.alternatives.push_back({"relaxed", relaxed});
      res.variant = "student";
      break;
    case StudentMode::normal:
      res.value = relaxed + pinelis_constant() / r;
      res.alternatives.push_back({"exact_gamma_ratio", exact + pinelis_constant() / r});
      res.variant = "normal";
      break;
    case StudentMode::optimal_r: {
      const double ropt = std::pow(t, d / (2.0 + d));
      res.value = (mm * m.beta + pinelis_constant()) * std::pow(t, -d / (2.0 + d));
      res.alternatives.push_back({"r", ropt});
      res.variant = "optimal_r";
      break;
    }
  }
  return res;
}

double nb_normal_constant(double r) {
  require(r > 0.0, "nb_normal_constant: r must be positive");
  if (r <= 1.59) return 0.8593;
  return std::min(0.8593, 1.0 / (kPi * (r - 1.0)));
}

BoundResult nb_limit_bounds(double r, double p, const SummandMoments& m, NbMode mode) {
  centered_unit(m, "nb_limit_bounds");
  require(p > 0.0 && p < 1.0, "nb_limit_bounds: p must lie in (0,1)");
  require(r > 0.0, "nb_limit_bounds: r must be positive");
  const double d = m.delta;
  BoundResult res = with_m(d);
  const double mm = res.constant_value, odds = std::pow(p / (1.0 - p), d / 2.0);
  if (mode == NbMode::laplace) {
    res.value = mm * std::exp(log_gamma(1.0 - d / 2.0)) * m.beta * odds;
    res.alternatives.push_back({"relaxed", std::sqrt(kPi) * mm * m.beta * odds});
    res.variant = "laplace";
    return res;
  }
  require(r > d / 2.0, "nb_limit_bounds: r must exceed delta/2");
  const double exact = mm * m.beta * gamma_ratio(r - d / 2.0, r) * odds;
  const double relaxed =
      mm * m.beta * (1.0 + d / (2.0 * r - d)) * std::pow(p / r, d / 2.0) / std::pow(1.0 - p, d / 2.0);
  if (mode == NbMode::sym_gamma) {
    res.value = exact;
    res.alternatives.push_back({"relaxed", relaxed});
    res.variant = "sym_gamma";
  } else {
    const double ar = nb_normal_constant(r);
    res.value = exact + ar / r;
    res.alternatives.push_back({"relaxed", relaxed + ar / r});
    res.alternatives.push_back({"A_r", ar});
    res.variant = "normal";
  }
  return res;
}

BoundResult bdnc_sum_bound(double lambda, const IndexMoments& y, const SummandMoments& m, BdncMode mode) {
  m.validate();
  require(lambda > 0.0, "bdnc_sum_bound: lambda must be positive");
  require(y.ey > 0.0, "bdnc_sum_bound: EY must be positive");
  const double d = m.delta;
  BoundResult r = with_m(d);
  const double mm = r.constant_value;
  auto need = [](const std::optional<double>& v, const char* what) {
    if (!v) throw DomainError(std::string("bdnc_sum_bound: missing ") + what);
    return *v;
  };
  switch (mode) {
    case BdncMode::general: {
      const double ey2 = need(y.ey2, "EY^2"), ey2d = need(y.ey_2pd, "EY^{2+delta}");
      const double eu2 = m.beta2 * y.ey + m.a * m.a * (ey2 - y.ey);
      r.value = poisson_type(mm, m.beta, ey2d, lambda, eu2, d);
      r.variant = "general";
      break;
    }
    case BdncMode::centered: {
      require(m.a == 0.0, "bdnc_sum_bound: centered mode needs a = 0");
      const double e1 = need(y.ey_1pd2, "EY^{1+delta/2}");
      const double k = (1.0 + d) * (4.0 + d) / 2.0;
      r.value = k * mm / std::pow(lambda, d / 2.0) * m.ratio() * e1 / std::pow(y.ey, 1.0 + d / 2.0);
      r.alternatives.push_back({"K", k});
      r.variant = "centered";
      break;
    }
    case BdncMode::combined: {
      const double ey2 = need(y.ey2, "EY^2"), e1 = need(y.ey_1pd2, "EY^{1+delta/2}"),
                   ey2d = need(y.ey_2pd, "EY^{2+delta}");
      const double aa = std::fabs(m.a);
      const double central = m.central_beta ? *m.central_beta : m.beta + 3.25 * m.beta2 * std::pow(aa, d);
      const double eu2 = m.beta2 * y.ey + m.a * m.a * (ey2 - y.ey);
      r.value = std::pow(2.0, d) * mm *
                ((1.0 + d) * (4.0 + d) * central * e1 + 2.0 * std::pow(aa, 2.0 + d) * ey2d) /
                (std::pow(lambda, d / 2.0) * std::pow(eu2, 1.0 + d / 2.0));
      if (!m.central_beta) r.assumptions.push_back("E|X-a|^{2+d} replaced by beta + 3.25 beta2 |a|^d");
      r.variant = "combined";
      break;
    }
  }
  return r;
}

NbIndexMoments nb_index_moments(double r, double p, double delta) {
  require(r > 0.0, "nb_index_moments: r must be positive");
  require(p > 0.0 && p < 1.0, "nb_index_moments: p must lie in (0,1)");
  require(delta > 0.0 && delta <= 1.0, "nb_index_moments: delta must lie in (0,1]");
  const double q = 1.0 - p, l = -std::log(p);
  NbIndexMoments m;
  m.lambda = r * l;
  m.ey = q / (p * l);
  m.ey_1pd2_upper = q / (std::pow(p, 1.0 + delta / 2.0) * l);
  m.ratio_upper = std::pow(m.lambda / (r * q), delta / 2.0);
  return m;
}

InsuranceEstimate insurance_tail_estimate(double days, double a, double sigma2, double beta3,
                                          const std::function<double(int)>& rate, double threshold) {
  require(days > 0.0 && sigma2 > 0.0, "insurance_tail_estimate: days and sigma2 must be positive");
  // partial sums of k^j rate(k), j = 0..3
  double s[4] = {0, 0, 0, 0}, window_start[4] = {0, 0, 0, 0};
  bool converged = false;
  for (int k = 1; k <= 1'000'000; ++k) {
    const double v = rate(k);
    require(v >= 0.0, "insurance_tail_estimate: rates must be non-negative");
    double kp = 1.0;
    for (double& x : s) {
      x += kp * v;
      kp *= k;
    }
    if (k % 64 == 0) {
      bool settled = true;
      for (int j = 0; j < 4; ++j) settled = settled && std::fabs(s[j] - window_start[j]) < 1e-14 * std::max(1.0, s[j]);
      if (settled && s[0] > 0.0) {
        converged = true;
        break;
      }
      std::copy(std::begin(s), std::end(s), std::begin(window_start));
    }
  }
  if (!converged) throw DomainError("insurance_tail_estimate: rate series does not converge");
  InsuranceEstimate e;
  e.lambda = days * s[0];
  e.ey = s[1] / s[0];
  e.ey2 = s[2] / s[0];
  e.ey3 = s[3] / s[0];
  e.mean = a * e.lambda * e.ey;
  e.variance = sigma2 * e.lambda * e.ey + a * a * e.lambda * e.ey2;
  e.estimate = normal_cdf(-(threshold - e.mean) / std::sqrt(e.variance));
  SummandMoments m;
  m.a = a;
  m.beta2 = sigma2 + a * a;
  m.beta = beta3;
  m.delta = 1.0;
  IndexMoments y{e.ey, e.ey2, std::nullopt, e.ey3};
  e.error_bound = bdnc_sum_bound(e.lambda, y, m, BdncMode::general).value;
  e.ceiling = e.estimate + e.error_bound;
  return e;
}

}  // namespace cltb
