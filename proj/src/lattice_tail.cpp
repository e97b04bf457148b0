#include "pwsum/lattice_tail.hpp"

#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/polygamma.hpp>

namespace pwsum {

namespace {
constexpr int max_terms = 40;
constexpr int local_extra = 64;
}  // namespace

cplx blaschke_factor(cplx mu, cplx z) {
  cplx den = z - std::conj(mu);
  if (std::abs(den) < 1e-14 * (1.0 + std::abs(mu)))
    throw std::invalid_argument("Blaschke factor evaluated at its pole");
  return std::conj(mu) / mu * ((z - mu) / den);
}

LatticeTail::LatticeTail(FamilyInfo family) : fam_(family) {
  if (!fam_.lattice()) throw std::invalid_argument("lattice tail needs a lattice family");
}

// K such that the series past K converges with ratio <= 1/4; rounded up to a
// multiple of 32 so zeta tables are shared between nearby points.
int LatticeTail::series_start(cplx z) const {
  double need = 4.0 * (std::abs(z) + std::abs(fam_.delta) + std::abs(fam_.amp) + 1.0);
  int k = std::max(fam_.count, std::max(64, static_cast<int>(std::ceil(need))));
  return (k + 31) / 32 * 32;
}

int LatticeTail::local_start(double x) const {
  int k = static_cast<int>(std::ceil(std::abs(x) + std::abs(fam_.amp))) + local_extra;
  return std::max(fam_.count, k);
}

// zeta(2m, a) for m = 1..max_terms
const std::vector<double>& LatticeTail::zeta_table(double a) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->zeta.find(a);
  if (it != cache_->zeta.end()) return it->second;
  std::vector<double> t(max_terms + 1, 0.0);
  for (int m = 1; m <= max_terms; ++m) {
    int order = 2 * m - 1;
    t[m] = boost::math::polygamma(order, a) / boost::math::factorial<double>(order);
  }
  return cache_->zeta.emplace(a, std::move(t)).first->second;
}

cplx LatticeTail::log_G(cplx z) const {
  const int kz = series_start(z);
  cplx acc = 0.0;
  for (int k = fam_.count + 1; k <= kz; ++k)
    for (cplx mu : fam_.points_at(k)) acc += std::log(1.0 - z / mu);
  const double a0 = kz + 1 + fam_.offset();
  const auto& zt = zeta_table(a0);
  const cplx w2 = (z - cplx(0, fam_.delta)) * (z - cplx(0, fam_.delta));
  const double d2 = -fam_.delta * fam_.delta;
  cplx s = 0.0, wp = 1.0;
  double dp = 1.0;
  for (int m = 1; m <= max_terms; ++m) {
    wp *= w2;
    dp *= d2;
    cplx term = (wp - dp) / static_cast<double>(m) * zt[m];
    s += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(s))) break;
  }
  acc -= static_cast<double>(fam_.multiplicity()) * s;
  if (fam_.family == Family::clustered_pairs) {
    // first-order effect of the eps/k shift of the second pair member
    double kh = kz + 0.5;
    acc += z * fam_.amp / (kh * kh);
  }
  return acc;
}

cplx LatticeTail::log_B(cplx z) const {
  if (!(fam_.delta > 0)) throw std::invalid_argument("Blaschke tail needs an upper family");
  const int kz = series_start(z);
  cplx acc = 0.0;
  for (int k = fam_.count + 1; k <= kz; ++k)
    for (cplx mu : fam_.points_at(k)) acc += std::log(blaschke_factor(mu, z));
  const double a0 = kz + 1 + fam_.offset();
  const auto& zt = zeta_table(a0);
  const cplx w = z - cplx(0, fam_.delta), v = z + cplx(0, fam_.delta);
  const cplx w2 = w * w, v2 = v * v;
  cplx s = 0.0, wp = 1.0, vp = 1.0;
  for (int m = 1; m <= max_terms; ++m) {
    wp *= w2;
    vp *= v2;
    cplx term = (wp - vp) / static_cast<double>(m) * zt[m];
    s += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(s))) break;
  }
  acc -= static_cast<double>(fam_.multiplicity()) * s;
  return acc;
}

cplx LatticeTail::log_B_below(cplx z, double cutoff) const {
  cplx acc = 0.0;
  for (int k = fam_.count + 1; k - std::abs(fam_.amp) - 1.0 < cutoff; ++k)
    for (cplx mu : fam_.points_at(k))
      if (std::abs(mu) < cutoff) acc += std::log(blaschke_factor(mu, z));
  return acc;
}

double LatticeTail::arg_derivative(double t) const {
  const int kt = local_start(t);
  double acc = 0.0;
  for (int k = fam_.count + 1; k <= kt; ++k)
    for (cplx mu : fam_.points_at(k)) acc += 2.0 * mu.imag() / std::norm(t - mu);
  const double d = std::abs(fam_.delta);
  const double a = kt + 0.5 + fam_.offset();
  double integral = (pi / 2 - std::atan((a - t) / d)) + (pi / 2 - std::atan((a + t) / d));
  acc += 2.0 * fam_.multiplicity() * (fam_.delta > 0 ? 1.0 : -1.0) * integral;
  return acc;
}

double LatticeTail::carleson_row(cplx lam) const {
  const int kt = local_start(lam.real());
  const double wl = 1.0 + std::abs(lam.imag());
  double acc = 0.0;
  for (int k = fam_.count + 1; k <= kt; ++k)
    for (cplx mu : fam_.points_at(k)) acc += wl * (1.0 + std::abs(mu.imag())) / std::norm(lam - mu);
  const double eta = std::abs(lam.imag() - fam_.delta);
  const double a = kt + 0.5 + fam_.offset();
  auto side = [&](double x) {
    double u = a - x;
    return eta < 1e-12 ? 1.0 / u : (pi / 2 - std::atan(u / eta)) / eta;
  };
  acc += fam_.multiplicity() * wl * (1.0 + std::abs(fam_.delta)) * (side(lam.real()) + side(-lam.real()));
  return acc;
}

}  // namespace pwsum
