#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cltb/bounds_clt.hpp"
#include "cltb/bounds_rs.hpp"
#include "cltb/cf.hpp"
#include "cltb/constants.hpp"
#include "cltb/harness.hpp"
#include "cltb/special.hpp"

namespace cltb {

namespace {

constexpr double kMargin = 1e-9;  // bounds may touch the exact value
constexpr double kPrinted = 5e-4;

void approx(Report& r, const std::string& sc, const std::string& name, double got, double want, double tol,
            const std::string& prov, const std::string& note = "") {
  r.add({sc, name, got, want, tol, Relation::approx, prov, false, 0.0, note});
}
void at_most(Report& r, const std::string& sc, const std::string& name, double got, double limit, double tol,
             const std::string& prov, const std::string& note = "") {
  r.add({sc, name, got, limit, tol, Relation::le, prov, false, 0.0, note});
}
void at_least(Report& r, const std::string& sc, const std::string& name, double got, double limit, double tol,
              const std::string& prov, const std::string& note = "") {
  r.add({sc, name, got, limit, tol, Relation::ge, prov, false, 0.0, note});
}

// Tracks the worst (bound - truth) gap over a family of cases.
struct Worst {
  double gap = std::numeric_limits<double>::infinity();
  std::string where;
  void see(double bound, double truth, const std::string& w) {
    if (bound - truth < gap) {
      gap = bound - truth;
      where = w;
    }
  }
};

std::vector<LatticeDist> centered_copies(const LatticeDist& d, int n) {
  return std::vector<LatticeDist>(std::size_t(n), affine(d, -mean(d), 1.0));
}

}  // namespace

void verify_lemmas(Report& r, std::uint64_t seed) {
  UniformStream u(seed);
  for (int n = 0; n <= 6; ++n) {
    double worst = -std::numeric_limits<double>::infinity();
    for (double delta : {0.0, 0.25, 0.5, 0.75, 1.0})
      for (int i = -3000; i <= 3000; ++i) {
        const auto c = taylor_remainder(i * 0.01, n, delta);
        worst = std::max(worst, c.remainder - c.bound);
      }
    at_most(r, "lemmas", "taylor_plain n=" + std::to_string(n), worst, 0.0, 1e-12, "derived",
            "max of remainder - bound over |x| <= 30");
  }
  for (int n = 1; n <= 6; ++n) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = -3000; i <= 3000; ++i) {
      const auto c = taylor_remainder_prawitz(i * 0.01, n);
      worst = std::max(worst, c.remainder - c.bound);
    }
    at_most(r, "lemmas", "taylor_prawitz n=" + std::to_string(n), worst, 0.0, 1e-12, "derived");
  }
  {
    double worst = -std::numeric_limits<double>::infinity(), ratio = 0.0;
    for (int i = -50000; i <= 50000; ++i) {
      const double x = i * 1e-3;
      worst = std::max(worst, std::cos(x) - (1.0 - x * x / 2.0 + std::fabs(x * x * x) / 6.0));
      if (x > 0.05) ratio = std::max(ratio, (std::cos(x) - 1.0 + x * x / 2.0) / (x * x * x));
    }
    at_most(r, "lemmas", "cosine cubic bound", worst, 0.0, 1e-12, "derived");
    approx(r, "lemmas", "cosine sharp ratio", ratio, 0.09915, 6e-5, "published", "printed as 0.0991...");
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 1000; ++k) {
      const int n = u.integer(1, 8);
      const double p = u.range(1.0, 4.0);
      double s = 0.0, sp = 0.0;
      for (int i = 0; i < n; ++i) {
        const double x = u.range(0.0, 3.0);
        s += x;
        sp += std::pow(x, p);
      }
      worst = std::max(worst, sp - std::pow(s, p));
    }
    at_most(r, "lemmas", "power sum superadditivity", worst, 0.0, 1e-9, "derived");
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 80; ++i)
      for (int j = 0; j <= 20; ++j) {
        const double x = std::pow(10.0, -2.0 + i * 0.05), s = j / 20.0;
        const auto w = wendel_bounds(x, s);
        worst = std::max({worst, w.lower - w.ratio, w.ratio - w.upper});
      }
    at_most(r, "lemmas", "wendel bracket", worst, 0.0, 1e-12, "derived");
  }
  {
    double worst1 = -std::numeric_limits<double>::infinity(), worst2 = worst1;
    for (int k = 0; k < 1000; ++k) {
      const auto d = random_lattice(u);
      const double delta = u.range(0.0, 1.0), a = mean(d);
      const double beta = moment(d, 2.0 + delta, MomentKind::absolute), beta2 = moment(d, 2.0);
      const double central = moment(d, 2.0 + delta, MomentKind::central_absolute);
      const double mid = beta + 3.25 * beta2 * std::pow(std::fabs(a), delta);
      worst1 = std::max(worst1, (central - mid) / beta);
      worst2 = std::max(worst2, (mid - 4.25 * beta) / beta);
    }
    at_most(r, "lemmas", "shifted moment bound", worst1, 0.0, 1e-12, "derived", "relative, 1000 random laws");
    at_most(r, "lemmas", "shifted moment bound, Lyapunov step", worst2, 0.0, 1e-12, "derived");
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    std::vector<GClassFunction> gs{g_power(0.25), g_power(0.5), g_power(1.0), g_log1p()};
    for (const auto& g : gs)
      for (double a : {0.1, 1.0, 10.0})
        for (int i = -400; i <= 400; ++i) {
          const double x = std::pow(10.0, i / 100.0), ratio = g.g(x) / g.g(a);
          worst = std::max({worst, g_min_envelope(a).g(x) - ratio, ratio - g_max_envelope(a).g(x)});
        }
    at_most(r, "lemmas", "g-class envelopes", worst, 0.0, 1e-12, "derived");
  }
  {
    double worst1 = -std::numeric_limits<double>::infinity(), worst2 = worst1;
    for (int i = 1; i < 2000; ++i) {
      const double t = i / 2000.0;
      const cplx k = prawitz_kernel(t);
      worst1 = std::max(worst1, std::abs(k) - 1.0253 / (2.0 * kPi * t));
      worst2 = std::max(worst2, std::abs(k - cplx(0.0, 1.0 / (2.0 * kPi * t))) -
                                    0.5 * (1.0 - t + kPi * kPi * t * t / 18.0));
      if (std::abs(prawitz_kernel(-t) - std::conj(k)) > 1e-15) worst1 = 1.0;
    }
    at_most(r, "lemmas", "prawitz kernel modulus", worst1, 0.0, 1e-12, "derived");
    at_most(r, "lemmas", "prawitz kernel near origin", worst2, 0.0, 1e-12, "derived");
  }
  {
    // symmetric Bernoulli, n = 4: L = 1/2
    double worst1 = -std::numeric_limits<double>::infinity(), worst2 = worst1;
    for (int i = -400; i <= 400; ++i) {
      const double t = i * 0.005;
      const double f = std::pow(std::cos(t / 2.0), 4);
      worst1 = std::max(worst1, std::fabs(f) - clt_cf_bounds(t, 0.5, 0.7 * 2.0).modulus);
      if (std::fabs(t) <= 1.4)
        worst2 = std::max(worst2, std::fabs(f - std::exp(-t * t / 2.0)) - clt_cf_bounds(t, 0.5, 0.7).difference);
    }
    at_most(r, "lemmas", "cf modulus bound, symmetric Bernoulli n=4", worst1, 0.0, 1e-12, "derived");
    at_most(r, "lemmas", "cf difference bound, symmetric Bernoulli n=4", worst2, 0.0, 1e-12, "derived");
  }
  {
    double worst1 = -std::numeric_limits<double>::infinity(), worst2 = worst1;
    for (int k = 0; k < 30; ++k) {
      const auto d = random_lattice(u);
      const int n = u.integer(1, 12);
      const double s2 = variance(d), b3 = moment(d, 3.0, MomentKind::central_absolute);
      const double l = n * b3 / std::pow(n * s2, 1.5);
      const auto f = standardized_sum_cf(d, n);
      const double dd = u.range(0.1, 1.4);
      for (int i = -200; i <= 200; ++i) {
        const double t = i * 0.025;
        worst1 = std::max(worst1, std::abs(f(t)) - clt_cf_bounds(t, l, 100.0 * std::max(1.0, l)).modulus);
        if (std::fabs(t) <= dd / l)
          worst2 = std::max(worst2, std::abs(f(t) - std::exp(-t * t / 2.0)) - clt_cf_bounds(t, l, dd).difference);
      }
    }
    at_most(r, "lemmas", "cf modulus bound, random laws", worst1, 0.0, 1e-12, "derived");
    at_most(r, "lemmas", "cf difference bound, random laws", worst2, 0.0, 1e-12, "derived");
  }
}

void verify_uniform_dominance(Report& r) {
  const double c_osipov = osipov_constant(active_constants().c0(1.0, Regime::general)).c;
  const std::vector<double> feller_t{2.0, 5.0, 10.0};
  const std::vector<double> prawitz_t{2.0, 4.0, 8.0}, prawitz_t0{0.5, 1.0};
  for (const auto& [name, d] : standard_laws()) {
    Worst be_classical, be_best, be_general, be_half, osipov, kp_env, kp_abs, feller, prawitz, nb, bik, zeta_mm,
        zeta_er;
    for (int n = 1; n <= 30; ++n) {
      const auto s = standardized_sum(d, n);
      const double delta_n = kolmogorov_distance(s).value;
      const auto copies = centered_copies(d, n);
      const std::string at = "n=" + std::to_string(n);
      const auto p1 = MomentProfile::from_dists(copies, 1.0, true);
      be_classical.see(berry_esseen_uniform(p1, BeVariant::classical).value, delta_n, at);
      be_best.see(berry_esseen_uniform(p1, BeVariant::best).value, delta_n, at);
      be_general.see(berry_esseen_uniform(MomentProfile::from_dists(copies, 1.0, false), BeVariant::best).value,
                     delta_n, at);
      be_half.see(berry_esseen_uniform(MomentProfile::from_dists(copies, 0.5, true), BeVariant::best).value, delta_n,
                  at);
      osipov.see(osipov_bound(copies, 1.0, c_osipov).value, delta_n, at);
      const double b = std::sqrt(n * variance(d));
      kp_env.see(katz_petrov(copies, g_min_envelope(b), c_osipov).value, delta_n, at);
      kp_abs.see(katz_petrov(copies, g_power(1.0), c_osipov).value, delta_n, at);
      const auto f = standardized_sum_cf(d, n);
      double fb = std::numeric_limits<double>::infinity();
      for (double t : feller_t) fb = std::min(fb, feller_bound(f, normal_cf(), 2.0, kInvSqrt2Pi, t));
      feller.see(fb, delta_n, at);
      prawitz.see(prawitz_optimize(f, prawitz_t, prawitz_t0).bound, delta_n, at);
      for (double x : {0.0, 1.0, 2.0, 5.0}) {
        const double gap = pointwise_gap(s, x);
        const std::string ax = at + " x=" + format_number(x);
        nb.see(nagaev_bikelis(p1, x).value, gap, ax);
        bik.see(bikelis(copies, x, 0.0, true).value, gap, ax);
      }
      const double z = zeta1_distance(s).value;
      zeta_mm.see(mean_metric_bound(p1).value, z, at);
      zeta_er.see(erickson(copies).value, z, at);
    }
    const std::string sc = "dominance " + name;
    auto put = [&](const char* what, const Worst& w) {
      at_least(r, sc, what, w.gap, 0.0, kMargin, "derived", "smallest bound - exact gap at " + w.where);
    };
    put("berry_esseen classical", be_classical);
    put("berry_esseen best iid", be_best);
    put("berry_esseen best general", be_general);
    put("berry_esseen best iid delta=0.5", be_half);
    put("osipov eps=1", osipov);
    put("katz_petrov min envelope", kp_env);
    put("katz_petrov |x|", kp_abs);
    put("feller smoothing", feller);
    put("prawitz smoothing", prawitz);
    put("nagaev_bikelis pointwise", nb);
    put("bikelis pointwise", bik);
    put("zeta1 mean metric", zeta_mm);
    put("zeta1 erickson", zeta_er);
  }
  // exact value for symmetric Bernoulli sums
  double worst_eq = 0.0, worst_rate = -std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 200; ++n) {
    const double exact = kolmogorov_distance(standardized_sum(symmetric_pm1(), n)).value;
    if (n <= 60) worst_eq = std::max(worst_eq, std::fabs(exact - hipp_mattner(n)));
    worst_rate = std::max(worst_rate, exact - 1.0 / std::sqrt(2.0 * kPi * n));
  }
  approx(r, "dominance symmetric_pm1", "closed form equals oracle, n<=60", worst_eq, 0.0, 1e-10, "derived");
  at_most(r, "dominance symmetric_pm1", "oracle below 1/sqrt(2 pi n), n<=200", worst_rate, 0.0, 0.0, "derived");
}

void verify_random_sum_dominance(Report& r, std::uint64_t seed) {
  UniformStream u(seed ^ 0x5eedULL);
  {
    Worst k_le_tv, tv_le_coupling;
    for (int k = 0; k < 20; ++k) {
      std::vector<double> p(std::size_t(u.integer(1, 8)));
      for (double& x : p) x = u.range(0.01, 0.9);
      const auto pb = poisson_binomial(p);
      double lam = 0.0;
      for (double x : p) lam += x;
      const auto po = poisson(lam);
      const double tv = tv_distance(pb, po).value, kd = kolmogorov_distance(pb, po).value;
      k_le_tv.see(tv, kd, "case " + std::to_string(k));
      tv_le_coupling.see(poisson_coupling_tv(p), tv, "case " + std::to_string(k));
    }
    at_least(r, "coupling", "kolmogorov <= total variation", k_le_tv.gap, 0.0, kMargin, "derived", k_le_tv.where);
    at_least(r, "coupling", "total variation <= sum p^2", tv_le_coupling.gap, 0.0, kMargin, "derived",
             tv_le_coupling.where);
  }
  {
    Worst w;
    for (int k = 0; k < 10; ++k) {
      auto index = [&] {
        std::vector<double> wts(std::size_t(u.integer(2, 5)));
        double s = 0.0;
        for (double& x : wts) s += (x = 0.05 + u.next());
        for (double& x : wts) x /= s;
        return LatticeDist{0.0, 1.0, wts, 0.0};
      };
      const auto n1 = index(), n2 = index();
      auto y = random_lattice(u, 4);
      y.step = 1.0;
      const double lhs = tv_distance(compound(n1, y), compound(n2, y)).value;
      w.see(tv_distance(n1, n2).value, lhs, "case " + std::to_string(k));
    }
    at_least(r, "coupling", "compound TV <= index TV", w.gap, 0.0, kMargin, "derived", w.where);
  }
  auto summand = [](const LatticeDist& x) {
    SummandMoments m;
    m.a = mean(x);
    m.beta2 = moment(x, 2.0);
    m.beta = moment(x, 3.0, MomentKind::absolute);
    return m;
  };
  const std::vector<std::pair<std::string, LatticeDist>> summands{
      {"symmetric_pm1", symmetric_pm1()},
      {"bernoulli(0.3)", bernoulli(0.3)},
      {"uniform{1,2}", explicit_dist(1.0, 1.0, {0.5, 0.5})},
      {"three_point{-1,0,2}", explicit_dist(-1.0, 1.0, {0.2, 0.5, 0.0, 0.3})}};
  for (const auto& [name, x] : summands) {
    const auto m = summand(x);
    Worst wp;
    for (double lam : {0.5, 1.0, 4.0, 10.0}) {
      const auto law = compound(poisson(lam), x);
      wp.see(poisson_sum_bound(lam, m).value, kolmogorov_distance(standardize(law)).value,
             "lambda=" + format_number(lam));
    }
    at_least(r, "random sums " + name, "poisson sum bound", wp.gap, 0.0, kMargin, "derived", wp.where);
    Worst wb;
    for (const auto& p : std::vector<std::vector<double>>{{0.3, 0.3, 0.3, 0.3, 0.3, 0.3},
                                                          {0.1, 0.2, 0.3, 0.4},
                                                          std::vector<double>(20, 0.05)}) {
      const auto pb = PBParams::from(p);
      const double truth = kolmogorov_distance(standardize(compound(poisson_binomial(p), x))).value;
      wb.see(pb_sum_bound(pb, m).value, truth, "n=" + std::to_string(p.size()));
      if (m.a == 0.0) wb.see(pb_sum_bound(pb, m, {}, PbForm::published_display).value, truth, "display form");
    }
    at_least(r, "random sums " + name, "poisson-binomial sum bound", wb.gap, 0.0, kMargin, "derived", wb.where);
    Worst wn;
    for (auto [rr, pp] : std::vector<std::pair<double, double>>{{2.0, 0.5}, {1.0, 0.3}, {4.0, 0.6}}) {
      const auto nbl = negative_binomial(rr, pp);
      const auto dec = bdnc_decompose(nbl);
      IndexMoments y{mean(dec.summand), moment(dec.summand, 2.0), moment(dec.summand, 1.5),
                     moment(dec.summand, 3.0)};
      const double truth = kolmogorov_distance(standardize(compound(nbl, x))).value;
      const std::string at = "NB(" + format_number(rr) + "," + format_number(pp) + ")";
      wn.see(bdnc_sum_bound(dec.lambda, y, m, BdncMode::general).value, truth, at + " general");
      wn.see(bdnc_sum_bound(dec.lambda, y, m, BdncMode::combined).value, truth, at + " combined");
      if (m.a == 0.0) wn.see(bdnc_sum_bound(dec.lambda, y, m, BdncMode::centered).value, truth, at + " centered");
    }
    at_least(r, "random sums " + name, "compound-Poisson index bound", wn.gap, 0.0, kMargin, "derived", wn.where);
  }
  for (double delta : {1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1})
    at_most(r, "random sums", "poisson lower bound below M(" + format_number(delta) + ")",
            poisson_sum_lower(delta).value, active_constants().m(delta), 0.0, "derived");
  {
    // equal p = lambda/n approaches the Poisson bound
    SummandMoments m;
    m.a = 0.5;
    m.beta2 = 1.0;
    m.beta = 1.2;
    const double target = poisson_sum_bound(5.0, m).value;
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double last = 0.0;
    for (int n : {100, 1000, 10000}) {
      last = pb_sum_bound(PBParams::from(std::vector<double>(std::size_t(n), 5.0 / n)), m).value - target;
      monotone = monotone && last < prev && last >= 0.0;
      prev = last;
    }
    at_most(r, "random sums", "equal-p bound tends to Poisson bound", last, 0.0, 5e-3, "derived",
            monotone ? "gap decreasing" : "gap NOT monotone");
  }
}

void verify_tables(Report& r) {
  const auto& tab = active_constants();
  for (Regime reg : {Regime::iid, Regime::general})
    for (double delta : {0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1}) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto* e : tab.select("Cs", "t2_2"))
        if (e->regime == regime_name(reg) && std::fabs(std::stod(e->delta) - delta) < 1e-12)
          best = std::min(best, (1.0 + e->s_number()) * e->number());
      const double c0 = tab.c0(delta, reg);
      approx(r, "tables", std::string("C0 equals rounded-up (1+s)C_s, ") + regime_name(reg) + " delta=" +
                              format_number(delta),
             c0 - best, 5e-5, 5e-5 + 1e-12, "published");
      for (const auto& sc : tab.structured(delta, reg))
        at_least(r, "tables", std::string("C_s above its lower bound, ") + regime_name(reg) + " delta=" +
                                  format_number(delta) + " s=" + format_number(sc.s),
                 sc.c, tab.cs_lower(delta), 0.0, "published");
    }
  for (Regime reg : {Regime::iid, Regime::general})
    at_most(r, "tables", std::string("1/sqrt(2pi) below C0(1), ") + regime_name(reg), lower_clt_sqrt2pi(),
            tab.c0(1.0, reg), 0.0, "published");
  for (const auto* e : tab.select("zeta_lower", "t2_5")) {
    const double d = e->delta == "0.5-1" ? 0.5 : std::stod(e->delta);
    const double p = std::stod(e->p);
    const double v = psi_minorant(d, p);
    approx(r, "t2_5", "lower bound recomputed, delta=" + e->delta, v, e->number(), kPrinted, "published");
    at_most(r, "t2_5", "lower below upper, delta=" + e->delta, v, mean_metric_constant(d), 0.0, "derived");
  }
  for (const auto* e : tab.select("zeta_upper", "t2_5")) {
    const double d = e->delta == "0.5-1" ? 0.5 : std::stod(e->delta);
    approx(r, "t2_5", "upper bound recomputed, delta=" + e->delta, mean_metric_constant(d), e->number(), kPrinted,
           "published");
  }
  for (const auto* e : tab.select("K0_lower", "t2_4")) {
    const double p = e->p == "0+" ? 1e-9 : std::stod(e->p);
    approx(r, "t2_4", "minorant at printed p, delta=" + e->delta, nonuniform_minorant(std::stod(e->delta), p),
           e->number(), kPrinted, "published");
  }
  for (const auto* e : tab.select("M_lower", "t3_gamma")) {
    const bool zero = e->delta == "0+";
    const auto low = poisson_sum_lower(zero ? 1e-9 : std::stod(e->delta));
    if (e->delta == "1") {
      approx(r, "t3_gamma", "sup value, delta=1 (in-text 0.2344)", low.value, 0.2344, kPrinted, "published",
             "printed table entry " + e->value + " flagged as a typo");
    } else {
      approx(r, "t3_gamma", "sup value, delta=" + e->delta, low.value, e->number(), kPrinted, "published");
    }
    if (!zero)
      approx(r, "t3_gamma", "maximizing gamma, delta=" + e->delta, low.gamma_star, std::stod(e->gamma), kPrinted,
             "published");
  }
  approx(r, "constants", "smoothing constant at b=2, d=0.75", be_cf_constant(2.0, 0.75), 8.577, 1e-3, "published");
  const auto opt = be_cf_constant_optimal();
  approx(r, "constants", "smoothing constant optimum", opt.value, 8.23, 1e-2, "published");
  approx(r, "constants", "smoothing constant optimal b", opt.b, 1.72, 1e-2, "published");
  approx(r, "constants", "smoothing constant optimal d", opt.d, 0.703, 1e-3, "published");
  approx(r, "constants", "truncation constant from 0.5583", osipov_constant(0.5583).c, 6.11, 1e-2, "published");
  approx(r, "constants", "truncation constant from 9", osipov_constant(9.0).c, 42.75, 1e-2, "published");
}

void verify_examples(Report& r) {
  const auto ins = insurance_tail_estimate(365.0, 2.0, 1.0, 12.0, [](int k) { return std::ldexp(1.0, -k); }, 1600.0);
  approx(r, "insurance", "estimate", ins.estimate, 0.0753, kPrinted, "published");
  approx(r, "insurance", "error bound", ins.error_bound, 0.0373, kPrinted, "published");
  at_most(r, "insurance", "ceiling", ins.ceiling, 0.1128, kPrinted, "published");
  approx(r, "insurance", "EY", ins.ey, 2.0, 1e-12, "published");
  approx(r, "insurance", "EY^2", ins.ey2, 6.0, 1e-12, "published");
  approx(r, "insurance", "EY^3", ins.ey3, 26.0, 1e-12, "published");
  const auto mid = insurance_tail_estimate(365.0, 2.0, 1.0, 12.0, [](int k) { return std::ldexp(1.0, -k); }, 1460.0);
  approx(r, "insurance", "threshold at the mean", mid.estimate, 0.5, 1e-12, "trivial");

  SummandMoments unit;
  approx(r, "random sums", "poisson sum bound lambda=100", poisson_sum_bound(100.0, unit).value, 0.03031, 1e-12,
         "trivial");
  auto pb = PBParams::from(std::vector<double>(1000, 0.1));
  pb.equal = false;
  approx(r, "random sums", "poisson-binomial display form", pb_sum_bound(pb, unit, {}, PbForm::published_display).value,
         0.05583, 1e-9, "published");
  at_most(r, "random sums", "poisson-binomial s-form within display form", pb_sum_bound(pb, unit).value, 0.05583,
          1e-12, "derived");
  approx(r, "random sums", "cauchy limit coefficient", student_limit_bounds(1.0, 1.0, unit, StudentMode::student).value,
         0.3031 * std::sqrt(2.0 / kPi), 1e-12, "published");
  at_most(r, "random sums", "cauchy limit below 0.2419",
          student_limit_bounds(1.0, 1.0, unit, StudentMode::student).value, 0.2419, 0.0, "published");
  approx(r, "random sums", "normal limit at optimal r, t=1e6",
         student_limit_bounds(1.0, 1e6, unit, StudentMode::optimal_r).value, 0.004614, 1e-6, "trivial");
  approx(r, "random sums", "laplace limit coefficient", nb_limit_bounds(1.0, 0.5, unit, NbMode::laplace).value,
         0.53723, 1e-5, "published");
  // lgamma oracle; the printed 0.083886 carries a slip in Gamma(3.5)/Gamma(4)
  approx(r, "random sums", "symmetrized gamma limit r=4 p=0.2",
         nb_limit_bounds(4.0, 0.2, unit, NbMode::sym_gamma).value,
         0.3031 * std::exp(std::lgamma(3.5) - std::lgamma(4.0)) * 0.5, 1e-12, "derived",
         "printed value 0.083886 uses a ratio of 0.553539; the ratio is 0.553892");
  approx(r, "random sums", "A_r at r=3", nb_normal_constant(3.0), 0.159155, 1e-6, "published");
  {
    const auto nb = nb_index_moments(3.0, 0.4, 1.0);
    IndexMoments y{nb.ey, std::nullopt, nb.ey_1pd2_upper, std::nullopt};
    approx(r, "random sums", "negative binomial index, centered",
           bdnc_sum_bound(nb.lambda, y, unit, BdncMode::centered).value, 1.5155 / std::sqrt(3.0 * 0.6), 1e-9,
           "published");
  }
  approx(r, "random sums", "logarithmic mean", mean(logarithmic(0.5)), nb_index_moments(1.0, 0.5, 1.0).ey, 1e-10,
         "derived");
  approx(r, "random sums", "NB decomposition lambda", bdnc_decompose(negative_binomial(2.0, 0.5)).lambda, 1.386294,
         1e-6, "published");
  approx(r, "random sums", "poisson lower floor", poisson_sum_lower(1.0, 1.0).value, bessel_i0(1.0) / (2 * std::exp(1.0)),
         1e-15, "published");
  at_least(r, "random sums", "poisson lower floor above 81/(128e)", poisson_sum_lower(1.0, 1.0).value,
           kPoissonLowerFloor / std::exp(1.0), 0.0, "published");

  {
    // dense p-scan for the root of (p^2+q^2)/sqrt(pq) = 2
    double best_p = 0.0, best_err = 1e300;
    for (int i = 1; i <= 500000; ++i) {
      const double p = i * 1e-6, q = 1.0 - p, e = std::fabs((p * p + q * q) / std::sqrt(p * q) - 2.0);
      if (e < best_err) best_err = e, best_p = p;
    }
    const double q = 1.0 - best_p, a = (q - best_p) / std::sqrt(best_p * q) / 2.0;
    const auto t = extremal_two_point(2.0);
    approx(r, "clt", "two-point extremal p at rho=2", t.p, best_p, 2e-6, "derived");
    approx(r, "clt", "two-point extremal A at rho=2", t.a, a, 1e-5, "derived", "printed approximation 0.93057");
  }
  approx(r, "clt", "psi(1/2)", psi(0.5), 0.535377, 1e-6, "published");
  for (double p : {0.1, 0.2, 0.3, 0.5})
    approx(r, "clt", "psi equals two-point integral distance, p=" + format_number(p), psi(p),
           zeta1_distance(two_point_standardized(p)).value, 1e-7, "derived");
  approx(r, "clt", "closed form for n=1", hipp_mattner(1), 0.341345, 1e-6, "published");
  approx(r, "clt", "1/sqrt(2pi)", lower_clt_sqrt2pi(), 0.398942, 1e-6, "published");
  approx(r, "clt", "Esseen lower bound", lower_esseen(), 0.409732, 1e-6, "published");
  at_least(r, "clt", "structured constant lower bound", lower_inf_cs(6, 6.42), 0.266012, 0.0, "published");
  approx(r, "clt", "mean metric constant at 0", mean_metric_constant(0.0), 2.5066, 1e-4, "published");
  approx(r, "clt", "mean metric constant at 1", mean_metric_constant(1.0), 1.0, 1e-15, "published");
  {
    const auto p = MomentProfile::make_iid(1.0, 1.0, 1.0, 100);
    at_most(r, "clt", "best iid bound rho=1 n=100", berry_esseen_uniform(p, BeVariant::best).value, 0.0469, 1e-12,
            "published");
    approx(r, "clt", "refined zeta_3 rho=1 n=10",
           zeta_high_bounds(MomentProfile::make_iid(1.0, 1.0, 1.0, 10), ZetaOrder::three_refined).value, 0.01352, 1e-12,
           "published");
  }
  approx(r, "special", "shift distance q=2", normal_shift_distance(2.0).exact, 0.682689, 1e-6, "derived");
  approx(r, "special", "shift bound q=2", normal_shift_distance(2.0).bound, 0.797885, 1e-6, "published");
  {
    double grid = 0.0;
    for (int i = -200000; i <= 200000; ++i) {
      const double x = i * 5e-5;
      grid = std::max(grid, std::fabs(normal_cdf(2.0 * x) - normal_cdf(x)));
    }
    approx(r, "special", "scale distance p=2 against grid maximum", normal_scale_distance(2.0).exact, grid, 1e-9,
           "derived", "published maximizer gives 0.110243, which is not the maximum");
  }
  approx(r, "special", "I0(1)", bessel_i0(1.0), 1.266066, 1e-6, "published");
  approx(r, "cf", "smoothing bound with f=g", feller_bound(normal_cf(), normal_cf(), 2.0, kInvSqrt2Pi, 10.0),
         24.0 / (kPi * kSqrt2Pi * 10.0), 1e-12, "trivial", "the printed 0.304755 is off in the fifth digit");
  at_most(r, "cf", "prawitz bound for the normal law", prawitz_optimize(normal_cf()).bound, 0.01, 0.0, "derived");
  approx(r, "cf", "inversion of the normal cf at 1", invert_cdf(normal_cf(), 1.0), normal_cdf(1.0), 1e-8, "derived");
  approx(r, "cf", "inversion of symmetric Bernoulli at 1", invert_cdf(lattice_cf(symmetric_pm1()), 1.0), 0.75, 1e-5,
         "derived");
  approx(r, "lattice", "symmetric Bernoulli n=2 distance",
         kolmogorov_distance(standardized_sum(symmetric_pm1(), 2)).value, 0.25, 1e-12, "published");
}

}  // namespace cltb
