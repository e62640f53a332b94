#include "cltb/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "cltb/errors.hpp"
#include "cltb/special.hpp"

namespace cltb {

namespace {

bool near_integer(double v, long long& k) {
  const double r = std::round(v);
  if (std::fabs(v - r) <= 1e-9 * std::max(1.0, std::fabs(v))) {
    k = static_cast<long long>(r);
    return true;
  }
  return false;
}

// Cut an infinite pmf on k0, k0+1, ...  `log_pmf(k)` gives the mass,
// `ratio_sup(k)` bounds p_{j+1}/p_j for all j > k.
LatticeDist truncated_series(const std::function<double(long long)>& log_pmf,
                             const std::function<double(long long)>& ratio_sup, long long k0,
                             double eps) {
  require(eps > 0.0 && eps < 1.0, "tail epsilon must lie in (0,1)");
  LatticeDist d;
  d.offset = double(k0);
  d.step = 1.0;
  for (long long k = k0;; ++k) {
    d.weights.push_back(std::exp(log_pmf(k)));
    const double rho = ratio_sup(k);
    if (rho < 1.0) {
      const double next = std::exp(log_pmf(k + 1));
      if (next / (1.0 - rho) <= eps) break;
    }
    if (d.weights.size() > 50'000'000) throw NumericError("truncation did not terminate");
  }
  const double total = std::accumulate(d.weights.begin(), d.weights.end(), 0.0);
  d.tail_mass_bound = std::max(0.0, 1.0 - total);
  return d;
}

struct Grid {
  double origin;
  double step;
};

// Finest grid that contains the atoms of both a and b.
Grid common_grid(const LatticeDist& a, const LatticeDist& b) {
  std::vector<double> gaps;
  if (a.size() > 1) gaps.push_back(a.step);
  if (b.size() > 1) gaps.push_back(b.step);
  const double diff = b.offset - a.offset;
  double base = a.step;
  if (!gaps.empty())
    base = *std::min_element(gaps.begin(), gaps.end());
  else if (diff != 0.0)
    base = std::fabs(diff);
  long long k;
  for (int div = 1; div <= 4096; ++div) {
    const double g = base / div;
    bool ok = true;
    for (double h : gaps) ok = ok && near_integer(h / g, k);
    ok = ok && near_integer(diff / g, k);
    if (ok) return {std::min(a.offset, b.offset), g};
  }
  throw StructuralError("lattices are not commensurable");
}

std::vector<double> regrid(const LatticeDist& d, const Grid& g, std::size_t n) {
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    long long k = 0;
    if (!near_integer((d.atom(i) - g.origin) / g.step, k) || k < 0 || std::size_t(k) >= n)
      throw StructuralError("atom does not fit the common grid");
    w[std::size_t(k)] += d.weights[i];
  }
  return w;
}

std::size_t grid_extent(const LatticeDist& d, const Grid& g) {
  long long k = 0;
  if (!near_integer((d.atom(d.size() - 1) - g.origin) / g.step, k))
    throw StructuralError("atom does not fit the common grid");
  return std::size_t(std::max(0LL, k)) + 1;
}

// both laws on one grid, padded to equal length
std::pair<std::vector<double>, std::vector<double>> aligned(const LatticeDist& a,
                                                            const LatticeDist& b, Grid& g) {
  g = common_grid(a, b);
  const std::size_t n = std::max(grid_extent(a, g), grid_extent(b, g));
  return {regrid(a, g, n), regrid(b, g, n)};
}

void add_scaled(LatticeDist& acc, const LatticeDist& d, double w) {
  if (w == 0.0) return;
  if (acc.weights.empty()) {
    acc = d;
    for (double& x : acc.weights) x *= w;
    acc.tail_mass_bound = w * d.tail_mass_bound;
    return;
  }
  Grid g;
  auto [wa, wb] = aligned(acc, d, g);
  for (std::size_t i = 0; i < wa.size(); ++i) wa[i] += w * wb[i];
  acc.offset = g.origin;
  acc.step = g.step;
  acc.weights = std::move(wa);
  acc.tail_mass_bound += w * d.tail_mass_bound;
}

double prob(double p, const char* who) {
  require(p >= 0.0 && p <= 1.0, std::string(who) + ": probability must lie in [0,1]");
  return p;
}

double open_prob(double p, const char* who) {
  require(p > 0.0 && p < 1.0, std::string(who) + ": parameter must lie in (0,1)");
  return p;
}

}  // namespace

double LatticeDist::mass() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

LatticeDist explicit_dist(double offset, double step, std::vector<double> weights) {
  require(!weights.empty(), "explicit_dist: empty weight vector");
  require(step > 0.0, "explicit_dist: step must be positive");
  double total = 0.0;
  for (double w : weights) {
    require(w >= 0.0 && std::isfinite(w), "explicit_dist: weights must be non-negative");
    total += w;
  }
  require(std::fabs(total - 1.0) <= 1e-9, "explicit_dist: weights must sum to 1");
  return LatticeDist{offset, step, std::move(weights), 0.0};
}

LatticeDist point_mass(double x) { return LatticeDist{x, 1.0, {1.0}, 0.0}; }

LatticeDist symmetric_pm1() { return LatticeDist{-1.0, 2.0, {0.5, 0.5}, 0.0}; }

LatticeDist bernoulli(double p) {
  prob(p, "bernoulli");
  return LatticeDist{0.0, 1.0, {1.0 - p, p}, 0.0};
}

LatticeDist binomial(int n, double p) {
  require(n >= 0, "binomial: n must be non-negative");
  prob(p, "binomial");
  if (p == 0.0 || p == 1.0 || n == 0) return point_mass(p * n);
  LatticeDist d{0.0, 1.0, std::vector<double>(std::size_t(n) + 1), 0.0};
  for (int k = 0; k <= n; ++k)
    d.weights[std::size_t(k)] = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                         std::lgamma(n - k + 1.0) + k * std::log(p) +
                                         (n - k) * std::log1p(-p));
  return d;
}

LatticeDist poisson_binomial(const std::vector<double>& ps) {
  LatticeDist d = point_mass(0.0);
  for (double p : ps) d = convolve(d, bernoulli(p));
  return d;
}

LatticeDist poisson(double lambda, double eps) {
  require(lambda >= 0.0 && std::isfinite(lambda), "poisson: lambda must be non-negative");
  if (lambda == 0.0) return point_mass(0.0);
  const double ll = std::log(lambda);
  return truncated_series([=](long long k) { return k * ll - lambda - std::lgamma(k + 1.0); },
                          [=](long long k) { return lambda / double(k + 2); }, 0, eps);
}

LatticeDist negative_binomial(double r, double p, double eps) {
  require(r > 0.0, "negative_binomial: r must be positive");
  open_prob(p, "negative_binomial");
  const double q = 1.0 - p, lp = std::log(p), lq = std::log(q), lgr = std::lgamma(r);
  return truncated_series(
      [=](long long k) { return std::lgamma(r + k) - std::lgamma(k + 1.0) - lgr + r * lp + k * lq; },
      [=](long long k) { return std::max(q * (r + k + 1.0) / (k + 2.0), q); }, 0, eps);
}

LatticeDist geometric(double p, double eps) {
  open_prob(p, "geometric");
  const double lp = std::log(p), lq = std::log1p(-p), q = 1.0 - p;
  return truncated_series([=](long long k) { return lp + k * lq; },
                          [=](long long) { return q; }, 0, eps);
}

LatticeDist logarithmic(double q, double eps) {
  open_prob(q, "logarithmic");
  const double lq = std::log(q), norm = std::log(-std::log1p(-q));
  return truncated_series([=](long long k) { return k * lq - std::log(double(k)) - norm; },
                          [=](long long) { return q; }, 1, eps);
}

LatticeDist two_point_standardized(double p) {
  open_prob(p, "two_point_standardized");
  const double q = 1.0 - p;
  return LatticeDist{-std::sqrt(p / q), 1.0 / std::sqrt(p * q), {q, p}, 0.0};
}

LatticeDist from_spec(const nlohmann::json& in, double eps) {
  if (!in.is_object()) throw DomainError("distribution spec must be an object");
  // parameters may sit at top level or under "params"
  nlohmann::json spec = in;
  if (in.contains("params")) {
    if (!in.at("params").is_object()) throw DomainError("distribution spec: params must be an object");
    for (const auto& [k, v] : in.at("params").items()) spec[k] = v;
  }
  if (spec.contains("tail_epsilon")) eps = spec.at("tail_epsilon").get<double>();
  if (!spec.contains("family")) {
    if (!spec.contains("weights")) throw DomainError("distribution spec needs family or weights");
    return explicit_dist(spec.value("offset", 0.0), spec.value("step", 1.0),
                         spec.at("weights").get<std::vector<double>>());
  }
  const auto fam = spec.at("family").get<std::string>();
  auto num = [&](const char* key) {
    if (!spec.contains(key)) throw DomainError(fam + ": missing parameter '" + key + "'");
    return spec.at(key).get<double>();
  };
  if (fam == "explicit")
    return explicit_dist(spec.value("offset", 0.0), spec.value("step", 1.0),
                         spec.at("weights").get<std::vector<double>>());
  if (fam == "point_mass") return point_mass(num("x"));
  if (fam == "symmetric_pm1") return symmetric_pm1();
  if (fam == "bernoulli") return bernoulli(num("p"));
  if (fam == "binomial") return binomial(int(num("n")), num("p"));
  if (fam == "poisson_binomial") return poisson_binomial(spec.at("ps").get<std::vector<double>>());
  if (fam == "poisson") return poisson(num("lambda"), eps);
  if (fam == "negative_binomial") return negative_binomial(num("r"), num("p"), eps);
  if (fam == "geometric") return geometric(num("p"), eps);
  if (fam == "logarithmic") return logarithmic(num("q"), eps);
  if (fam == "two_point_standardized") return two_point_standardized(num("p"));
  throw DomainError("unknown family '" + fam + "'");
}

double moment(const LatticeDist& d, double r, MomentKind kind) {
  const double c = kind == MomentKind::central_absolute ? mean(d) : 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = d.atom(i) - c;
    const double v = kind == MomentKind::raw ? std::pow(x, r) : std::pow(std::fabs(x), r);
    s += d.weights[i] * v;
  }
  return s;
}

double mean(const LatticeDist& d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d.weights[i] * d.atom(i);
  return s;
}

double variance(const LatticeDist& d) {
  const double m = mean(d);
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d.weights[i] * (d.atom(i) - m) * (d.atom(i) - m);
  return s;
}

LatticeDist affine(const LatticeDist& d, double a, double b) {
  require(b != 0.0, "affine: zero scale");
  LatticeDist out = d;
  if (b > 0.0) {
    out.offset = a + b * d.offset;
    out.step = b * d.step;
  } else {
    out.offset = a + b * d.atom(d.size() - 1);
    out.step = -b * d.step;
    std::reverse(out.weights.begin(), out.weights.end());
  }
  return out;
}

LatticeDist standardize(const LatticeDist& d) {
  const double v = variance(d);
  if (!(v > 0.0)) throw DomainError("standardize: degenerate distribution");
  const double s = std::sqrt(v);
  return affine(d, -mean(d) / s, 1.0 / s);
}

LatticeDist convolve(const LatticeDist& a, const LatticeDist& b) {
  if (a.size() == 1 || b.size() == 1) {
    const LatticeDist& one = a.size() == 1 ? a : b;
    LatticeDist out = a.size() == 1 ? b : a;
    out.offset += one.offset;
    for (double& w : out.weights) w *= one.weights[0];
    out.tail_mass_bound = a.tail_mass_bound + b.tail_mass_bound;
    return out;
  }
  long long m;
  const LatticeDist* fine = &a;
  const LatticeDist* coarse = &b;
  if (!near_integer(b.step / a.step, m) || m < 1) {
    if (!near_integer(a.step / b.step, m) || m < 1)
      throw StructuralError("convolve: incommensurable lattice steps");
    std::swap(fine, coarse);
  }
  LatticeDist out;
  out.offset = a.offset + b.offset;
  out.step = fine->step;
  out.weights.assign(fine->size() + std::size_t(m) * (coarse->size() - 1), 0.0);
  for (std::size_t j = 0; j < coarse->size(); ++j) {
    const double wj = coarse->weights[j];
    if (wj == 0.0) continue;
    double* dst = out.weights.data() + std::size_t(m) * j;
    for (std::size_t i = 0; i < fine->size(); ++i) dst[i] += wj * fine->weights[i];
  }
  out.tail_mass_bound = a.tail_mass_bound + b.tail_mass_bound;
  return out;
}

LatticeDist self_convolve(const LatticeDist& d, int n) {
  require(n >= 0, "self_convolve: n must be non-negative");
  LatticeDist result = point_mass(0.0);
  LatticeDist base = d;
  while (n > 0) {
    if (n & 1) result = convolve(result, base);
    n >>= 1;
    if (n > 0) base = convolve(base, base);
  }
  return result;
}

LatticeDist compound(const LatticeDist& index, const LatticeDist& summand) {
  long long k0, st;
  if (!near_integer(index.offset, k0) || k0 < 0 || !near_integer(index.step, st) || st < 1)
    throw DomainError("compound: index must live on non-negative integers");
  LatticeDist acc;
  acc.weights.clear();
  LatticeDist power = self_convolve(summand, int(k0));
  const LatticeDist stride = self_convolve(summand, int(st));
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i > 0) power = convolve(power, stride);
    add_scaled(acc, power, index.weights[i]);
  }
  acc.tail_mass_bound += index.tail_mass_bound;
  return acc;
}

namespace {

// splits d into (mass strictly below x, mass at x)
std::pair<double, double> mass_split(const LatticeDist& d, double x) {
  const double t = (x - d.offset) / d.step;
  const double r = std::round(t);
  const bool on_atom = std::fabs(t - r) <= 1e-10 * std::max(1.0, std::fabs(t));
  long long below = on_atom ? static_cast<long long>(r) : static_cast<long long>(std::floor(t)) + 1;
  below = std::clamp<long long>(below, 0, static_cast<long long>(d.size()));
  double left = 0.0;
  for (long long i = 0; i < below; ++i) left += d.weights[std::size_t(i)];
  double at = 0.0;
  if (on_atom && r >= 0 && r < double(d.size())) at = d.weights[std::size_t(r)];
  return {left, at};
}

}  // namespace

double cdf_left(const LatticeDist& d, double x) { return mass_split(d, x).first; }

double cdf_right(const LatticeDist& d, double x) {
  auto [l, a] = mass_split(d, x);
  return l + a;
}

Distance kolmogorov_distance(const LatticeDist& d, double mu, double sigma) {
  require(sigma > 0.0, "kolmogorov_distance: sigma must be positive");
  double cum = 0.0, best = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double g = normal_cdf((d.atom(i) - mu) / sigma);
    best = std::max(best, std::fabs(cum - g));
    cum += d.weights[i];
    best = std::max(best, std::fabs(cum - g));
  }
  return {best, d.tail_mass_bound};
}

Distance kolmogorov_distance(const LatticeDist& a, const LatticeDist& b) {
  struct Atom {
    double x, wa, wb;
  };
  std::vector<Atom> atoms;
  atoms.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) atoms.push_back({a.atom(i), a.weights[i], 0.0});
  for (std::size_t i = 0; i < b.size(); ++i) atoms.push_back({b.atom(i), 0.0, b.weights[i]});
  std::sort(atoms.begin(), atoms.end(), [](const Atom& l, const Atom& r) { return l.x < r.x; });
  double fa = 0.0, fb = 0.0, best = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    fa += atoms[i].wa;
    fb += atoms[i].wb;
    const bool last_at_x = i + 1 == atoms.size() ||
                           atoms[i + 1].x - atoms[i].x > 1e-12 * std::max(1.0, std::fabs(atoms[i].x));
    if (last_at_x) best = std::max(best, std::fabs(fa - fb));
  }
  return {best, a.tail_mass_bound + b.tail_mass_bound};
}

Distance tv_distance(const LatticeDist& a, const LatticeDist& b) {
  Grid g;
  auto [wa, wb] = aligned(a, b, g);
  double s = 0.0;
  for (std::size_t i = 0; i < wa.size(); ++i) s += std::fabs(wa[i] - wb[i]);
  return {0.5 * s, a.tail_mass_bound + b.tail_mass_bound};
}

namespace {

// antiderivative of Phi
double phi_integral(double x) { return x * normal_cdf(x) + normal_pdf(x); }

// integral over (a,b) of |c - Phi(x)|, a and b finite
double gap_integral(double c, double a, double b) {
  const double fa = normal_cdf(a), fb = normal_cdf(b);
  if (c <= fa) return phi_integral(b) - phi_integral(a) - c * (b - a);
  if (c >= fb) return c * (b - a) - (phi_integral(b) - phi_integral(a));
  const double root = normal_quantile(c);
  return c * (root - a) - (phi_integral(root) - phi_integral(a)) +
         (phi_integral(b) - phi_integral(root)) - c * (b - root);
}

}  // namespace

Distance zeta1_distance(const LatticeDist& d0) {
  const LatticeDist d = standardize(d0);
  const std::size_t n = d.size();
  // left of the first atom F = 0, right of the last atom F = 1
  double total = phi_integral(d.atom(0)) + phi_integral(-d.atom(n - 1));
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cum += d.weights[i];
    total += gap_integral(cum, d.atom(i), d.atom(i + 1));
  }
  return {total, d.tail_mass_bound * (std::fabs(d.atom(0)) + std::fabs(d.atom(n - 1)) + 1.0)};
}

LindebergOsipov lindeberg_osipov_fractions(const std::vector<LatticeDist>& dists, double eps) {
  require(!dists.empty(), "lindeberg_osipov_fractions: no summands");
  require(eps > 0.0, "lindeberg_osipov_fractions: eps must be positive");
  double b2 = 0.0;
  for (const auto& d : dists) {
    const double v = variance(d);
    require(std::fabs(mean(d)) <= 1e-9 * std::max(1.0, std::sqrt(v)),
            "lindeberg_osipov_fractions: summands must be centered");
    b2 += v;
  }
  require(b2 > 0.0, "lindeberg_osipov_fractions: zero total variance");
  const double b = std::sqrt(b2), cut = eps * b;
  double l = 0.0, m = 0.0;
  for (const auto& d : dists)
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double x = std::fabs(d.atom(i));
      if (x > cut)
        l += d.weights[i] * x * x;
      else
        m += d.weights[i] * x * x * x;
    }
  return {l / b2, m / (b2 * b), b};
}

BdncDecomposition bdnc_decompose(const LatticeDist& index, double tol) {
  long long k0, st;
  if (!near_integer(index.offset, k0) || k0 != 0 || !near_integer(index.step, st) || st != 1)
    throw DomainError("bdnc_decompose: index must live on 0,1,2,...");
  const double p0 = index.weights[0];
  if (!(p0 > 0.0)) throw DomainError("bdnc_decompose: P(N=0) must be positive");
  // finite supports have infinite log series, look a bit further
  const std::size_t n = index.tail_mass_bound > 0.0 ? index.size() - 1
                                                    : std::max<std::size_t>(index.size() - 1, 64);
  auto pmf = [&](std::size_t k) { return k < index.size() ? index.weights[k] : 0.0; };
  // log psi = L  =>  psi' = L' psi, coefficientwise
  std::vector<double> g(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    double s = double(k) * pmf(k);
    for (std::size_t j = 1; j < k; ++j) s -= double(j) * g[j] * pmf(k - j);
    g[k] = s / (double(k) * p0);
  }
  BdncDecomposition r;
  r.lambda = -std::log(p0);
  if (r.lambda == 0.0) {
    r.summand = point_mass(1.0);
    r.is_bdnc = true;
    r.min_coefficient = 0.0;
    return r;
  }
  r.coefficients.assign(g.begin() + 1, g.end());
  r.min_coefficient = r.coefficients.empty()
                          ? 0.0
                          : *std::min_element(r.coefficients.begin(), r.coefficients.end());
  r.is_bdnc = r.min_coefficient >= -tol;
  std::vector<double> w = r.coefficients;
  while (w.size() > 1 && std::fabs(w.back()) <= 1e-15 * r.lambda) w.pop_back();
  for (double& x : w) x /= r.lambda;
  r.summand = LatticeDist{1.0, 1.0, w, 0.0};
  if (r.is_bdnc)
    r.summand.tail_mass_bound = std::max(0.0, 1.0 - r.summand.mass()) + index.tail_mass_bound;
  return r;
}

}  // namespace cltb
