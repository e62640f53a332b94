#include "cltb/quadrature.hpp"

#include <cmath>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cltb/errors.hpp"

namespace cltb {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

QuadResult adapt(const std::function<double(double)>& f, double lo, double hi, double tol, int depth) {
  double err = 0.0;
  const double v = GK::integrate(f, lo, hi, 0, 0.0, &err);
  if (err <= tol || depth >= 15) return {v, err};
  const double mid = 0.5 * (lo + hi);
  const auto l = adapt(f, lo, mid, tol / 2.0, depth + 1), r = adapt(f, mid, hi, tol / 2.0, depth + 1);
  return {l.value + r.value, l.error + r.error};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double panel, double abs_tol) {
  if (!(b >= a)) throw DomainError("integrate: empty interval");
  if (a == b) return {0.0, 0.0};
  const int pieces = std::max(1, int(std::ceil((b - a) / panel)));
  const double h = (b - a) / pieces;
  QuadResult r{0.0, 0.0};
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * h, hi = i + 1 == pieces ? b : a + (i + 1) * h;
    const auto q = adapt(f, lo, hi, abs_tol / pieces, 0);
    r.value += q.value;
    r.error += q.error;
  }
  if (!std::isfinite(r.value)) throw NumericError("integrate: non-finite result");
  return r;
}

}  // namespace cltb
