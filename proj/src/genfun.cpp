#include "pwsum/genfun.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include "pwsum/blaschke.hpp"

namespace pwsum {

TailModel default_tail(const Spectrum& s) {
  return s.family().lattice() ? TailModel::lattice_analytic : TailModel::none;
}

GeneratingFunction::GeneratingFunction(Spectrum s) : GeneratingFunction(s, default_tail(s)) {}

GeneratingFunction::GeneratingFunction(Spectrum s, TailModel tail, double radius, cplx normalization)
    : s_(std::move(s)), model_(tail), radius_(radius), norm_(normalization) {
  if (normalization == cplx(0.0)) throw std::invalid_argument("normalization must be nonzero");
  if (!(radius > 0)) throw std::invalid_argument("product radius must be positive");
  while (used_ < s_.size() && std::abs(s_[used_]) < radius_) ++used_;
  warning_ = used_ < s_.size();
  if (tail == TailModel::lattice_analytic) {
    if (!s_.family().lattice()) throw std::invalid_argument("lattice tail on a custom list");
    if (!warning_) tail_.emplace(s_.family());
  }
}

ScaledProduct GeneratingFunction::product(cplx z) const {
  ScaledProduct p;
  p.mul(norm_);
  for (std::size_t k = 0; k < used_; ++k) {
    const cplx lam = s_[k];
    if (std::abs(z - lam) < 1e-12 * std::max(1.0, std::abs(lam)))
      throw std::invalid_argument("eval_G at a spectrum point");
    p.mul(1.0 - z / lam);
  }
  if (tail_) p.mul_exp(tail_->log_G(z));
  return p;
}

cplx GeneratingFunction::operator()(cplx z) const { return product(z).value(); }

double GeneratingFunction::log_abs(cplx z) const { return product(z).log_abs(); }

cplx GeneratingFunction::derivative_at(std::size_t k) const {
  if (k >= s_.size()) throw std::out_of_range("spectrum index");
  const cplx lam = s_[k];
  ScaledProduct p;
  p.mul(norm_ * (-1.0 / lam));
  for (std::size_t j = 0; j < used_; ++j)
    if (j != k) p.mul(1.0 - lam / s_[j]);
  if (tail_) p.mul_exp(tail_->log_G(lam));
  return p.value();
}

double GeneratingFunction::tail_error_estimate(cplx z) const {
  double e = 0.0;
  for (std::size_t k = used_; k < s_.size(); ++k) {
    double r = std::abs(z / s_[k]);
    e += r + r * r;
  }
  return e;
}

namespace {

// a + b log t by least squares over t in [X/2, X] (t > 0 side)
std::pair<double, double> fit_log_model(std::span<const double> u, double X, double h, bool right) {
  const std::size_t n = u.size();
  double s0 = 0, s1 = 0, s2 = 0, r0 = 0, r1 = 0;
  for (std::size_t j = 0; j < n; ++j) {
    double t = -X + j * h;
    double at = right ? t : -t;
    if (at < 0.5 * X) continue;
    double l = std::log(at);
    s0 += 1;
    s1 += l;
    s2 += l * l;
    r0 += u[j];
    r1 += l * u[j];
  }
  double det = s0 * s2 - s1 * s1;
  if (s0 < 2 || std::abs(det) < 1e-300) return {s0 > 0 ? r0 / s0 : 0.0, 0.0};
  return {(s2 * r0 - s1 * r1) / det, (s0 * r1 - s1 * r0) / det};
}

// kernel 1/(t - z) - t/(1 + t^2) in a cancellation-free form
cplx outer_kernel(double t, cplx z) { return (1.0 + t * z) / ((t - z) * (1.0 + t * t)); }

}  // namespace

OuterFunction::OuterFunction(double X, double h, std::vector<double> log_modulus)
    : X_(X), h_(h), u_(std::move(log_modulus)) {
  if (u_.size() != grid_intervals(X, h) + 1) throw std::invalid_argument("outer: sample count mismatch");
  for (double v : u_)
    if (!std::isfinite(v)) throw std::invalid_argument("outer: non-finite log-modulus sample");
  std::tie(ar_, br_) = fit_log_model(u_, X_, h_, true);
  std::tie(al_, bl_) = fit_log_model(u_, X_, h_, false);
}

OuterFunction OuterFunction::from(const GeneratingFunction& g, double X, double h) {
  std::vector<double> u(grid_intervals(X, h) + 1);
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = g.log_abs(-X + j * h);
  return OuterFunction(X, h, std::move(u));
}

double OuterFunction::model(double t) const {
  return t > 0 ? ar_ + br_ * std::log(t) : al_ + bl_ * std::log(-t);
}

// integral of the kernel times the far model over |t| > X, with t = X/q^2
cplx OuterFunction::tail_integral(cplx z) const {
  using gl = boost::math::quadrature::gauss<double, 20>;
  static const double edges[] = {0.0, 1.0 / 64, 1.0 / 16, 0.25, 1.0};
  cplx acc = 0.0;
  for (int p = 0; p < 4; ++p) {
    const double a = edges[p], b = edges[p + 1], c = 0.5 * (a + b), r = 0.5 * (b - a);
    const auto& xs = gl::abscissa();
    const auto& ws = gl::weights();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (int sgn : {-1, 1}) {
        const double q = c + sgn * r * xs[i];
        const double jac = 2.0 * X_ / (q * q * q) * r * ws[i];
        const double t = X_ / (q * q);
        acc += jac * (outer_kernel(t, z) * model(t) + outer_kernel(-t, z) * model(-t));
      }
    }
  }
  return acc;
}

cplx OuterFunction::operator()(cplx z) const {
  if (z.imag() < h_ * (1.0 - 1e-12)) throw std::invalid_argument("outer: Im z below grid spacing");
  if (std::abs(z.real()) > 0.5 * X_) throw std::invalid_argument("outer: Re z outside grid core");
  const std::size_t n = u_.size();
  double pos = (z.real() + X_) / h_;
  std::size_t j0 = std::min(static_cast<std::size_t>(pos), n - 2);
  double fr = pos - j0;
  const double us = (1 - fr) * u_[j0] + fr * u_[j0 + 1];
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += trapezoid_weight(j, n, h_) * outer_kernel(x(j), z) * (u_[j] - us);
  acc += us * (std::log(X_ - z) - std::log(-X_ - z));
  acc += tail_integral(z);
  return std::exp(acc / cplx(0, pi));
}

cplx OuterFunction::reflected(cplx z) const { return std::conj((*this)(std::conj(z))); }

std::vector<cplx> OuterFunction::boundary() const {
  const std::size_t n = u_.size();
  std::vector<cplx> uc(u_.begin(), u_.end());
  std::vector<cplx> pv = cauchy_pv(uc, h_);
  double c0 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double t = x(j);
    c0 += trapezoid_weight(j, n, h_) * t * u_[j] / (1 + t * t);
  }
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double xr = x(j);
    cplx tail = std::abs(xr) < X_ * (1 - 1e-12) ? tail_integral(xr) : cplx(0.0);
    cplx arg = pv[j] - c0 + tail;
    out[j] = std::exp(u_[j] - cplx(0, 1.0 / pi) * arg);
  }
  return out;
}

double exponential_type(const Spectrum& s) { return s.family().lattice() ? pi : 0.0; }

FactorizationReport check_factorization(const GeneratingFunction& g, const OuterFunction& o,
                                        const BlaschkeProduct& bu, const BlaschkeProduct& bl,
                                        std::span<const cplx> points, double tau) {
  FactorizationReport r;
  for (cplx z : points) {
    double lg = g.log_abs(z);
    if (z.imag() > 0) {
      double lm = std::log(std::abs(o(z))) + bu.log_abs(z) + tau * z.imag();
      r.max_rel_error_upper = std::max(r.max_rel_error_upper, std::abs(std::expm1(lm - lg)));
    } else if (z.imag() < 0) {
      double lm = std::log(std::abs(o.reflected(z))) + bl.log_abs(z) - tau * z.imag();
      r.max_rel_error_lower = std::max(r.max_rel_error_lower, std::abs(std::expm1(lm - lg)));
    } else {
      throw std::invalid_argument("factorization check point on the real line");
    }
  }
  return r;
}

}  // namespace pwsum
