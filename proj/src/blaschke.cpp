#include "pwsum/blaschke.hpp"

#include <cstdio>
#include <ostream>

namespace pwsum {

BlaschkeProduct::BlaschkeProduct(const Spectrum& half, Halfplane orientation)
    : BlaschkeProduct(half, orientation, default_tail(half)) {}

BlaschkeProduct::BlaschkeProduct(const Spectrum& half, Halfplane orientation, TailModel tail)
    : orient_(orientation) {
  for (cplx z : half.points()) {
    bool ok = orientation == Halfplane::upper ? z.imag() > 0 : z.imag() < 0;
    if (!ok) throw std::invalid_argument("Blaschke evaluator: point in the wrong halfplane");
    pts_.push_back(to_up(z));
  }
  if (half.family().lattice()) window_radius_ = half.radius();
  else window_radius_ = INFINITY;
  if (tail == TailModel::lattice_analytic && !half.empty()) {
    if (!half.family().lattice()) throw std::invalid_argument("lattice tail on a custom list");
    FamilyInfo f = orientation == Halfplane::upper ? half.family() : half.family().conjugated();
    if (!(f.delta > 0)) throw std::invalid_argument("lattice family on the wrong side");
    tail_.emplace(f);
  }
}

double BlaschkeProduct::data_radius() const { return window_radius_; }

cplx BlaschkeProduct::up_product(cplx z, double cutoff) const {
  ScaledProduct p;
  for (cplx mu : pts_)
    if (std::abs(mu) < cutoff) p.mul(blaschke_factor(mu, z));
  if (tail_) p.mul_exp(std::isinf(cutoff) ? tail_->log_B(z) : tail_->log_B_below(z, cutoff));
  return p.value();
}

double BlaschkeProduct::up_log_abs(cplx z, double cutoff) const {
  double s = 0.0;
  for (cplx mu : pts_)
    if (std::abs(mu) < cutoff) s += std::log(std::abs(blaschke_factor(mu, z)));
  if (tail_) s += (std::isinf(cutoff) ? tail_->log_B(z) : tail_->log_B_below(z, cutoff)).real();
  return s;
}

cplx BlaschkeProduct::up_tail(cplx z, double n) const {
  ScaledProduct p;
  for (cplx mu : pts_)
    if (std::abs(mu) >= n) p.mul(blaschke_factor(mu, z));
  if (tail_) p.mul_exp(tail_->log_B(z) - tail_->log_B_below(z, n));
  return p.value();
}

cplx BlaschkeProduct::operator()(cplx z, double cutoff) const {
  return from_up(up_product(to_up(z), cutoff));
}

double BlaschkeProduct::log_abs(cplx z, double cutoff) const { return up_log_abs(to_up(z), cutoff); }

cplx BlaschkeProduct::beta(std::size_t k, double n) const {
  if (k >= pts_.size()) throw std::out_of_range("Blaschke index");
  if (std::abs(pts_[k]) >= n) return 0.0;
  return from_up(up_tail(pts_[k], n));
}

cplx BlaschkeProduct::tail(cplx z, double n) const { return from_up(up_tail(to_up(z), n)); }

cplx BlaschkeProduct::derivative_at_zero(std::size_t k, double n) const {
  if (k >= pts_.size()) throw std::out_of_range("Blaschke index");
  const cplx lam = pts_[k];
  if (std::abs(lam) >= n) throw std::invalid_argument("derivative_at_zero: zero outside cutoff");
  ScaledProduct p;
  p.mul(std::conj(lam) / lam / (lam - std::conj(lam)));
  for (std::size_t j = 0; j < pts_.size(); ++j)
    if (j != k && std::abs(pts_[j]) < n) p.mul(blaschke_factor(pts_[j], lam));
  if (tail_) p.mul_exp(tail_->log_B_below(lam, n));
  return from_up(p.value());
}

double BlaschkeProduct::arg_derivative(double t) const {
  double s = 0.0;
  for (cplx mu : pts_) s += 2.0 * mu.imag() / std::norm(t - mu);
  if (tail_) s += tail_->arg_derivative(t);
  return s;
}

double EpsProfile::operator()(double t) const {
  if (samples.empty()) throw std::invalid_argument("empty eps profile");
  if (t <= samples.front().first) return samples.front().second;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    auto [t0, e0] = samples[i - 1];
    auto [t1, e1] = samples[i];
    if (t <= t1) return e0 + (e1 - e0) * (t - t0) / (t1 - t0);
  }
  return samples.back().second;
}

DiskFamily hayman_scan(const BlaschkeProduct& b, double region_radius, const EpsProfile& profile,
                       const HaymanOptions& opt) {
  if (!(region_radius > 0)) throw std::invalid_argument("hayman_scan: region radius must be positive");
  if (region_radius > b.data_radius()) throw std::invalid_argument("hayman_scan: region exceeds data radius");
  if (opt.radial * opt.angular < 10000) throw std::invalid_argument("hayman_scan: fewer than 1e4 samples");
  DiskFamily fam;
  const auto& zs = b.oriented_zeros();
  if (zs.empty()) {
    for (auto [t, e] : profile.samples) fam.achieved.emplace_back(t, 0.0);
    return fam;
  }
  std::vector<double> scale(zs.size());
  double S = 0.0;
  for (std::size_t k = 0; k < zs.size(); ++k) {
    double a = std::abs(zs[k]);
    scale[k] = a / ((1 + a) * (1 + a));
    S += scale[k] / a;
  }

  struct Sample {
    double r, nl, ratio;
  };
  std::vector<Sample> pts;
  pts.reserve(static_cast<std::size_t>(opt.radial) * opt.angular);
  double need = 0.0;
  for (int i = 0; i < opt.radial; ++i) {
    double r = region_radius * (i + 0.5) / opt.radial;
    for (int j = 0; j < opt.angular; ++j) {
      double th = pi * (j + 0.5) / opt.angular;
      cplx z = std::polar(r, th);
      double ratio = INFINITY;
      for (std::size_t k = 0; k < zs.size(); ++k) ratio = std::min(ratio, std::abs(z - zs[k]) / scale[k]);
      double nl = -b.log_abs(b.orientation() == Halfplane::upper ? z : std::conj(z));
      pts.push_back({r, nl, ratio});
      if (nl > profile(r) * r) need = std::max(need, ratio);
    }
  }
  // disks are open, so the violating point needs rho strictly above its ratio
  double rho = need > 0 ? need * (1 + 1e-12) + 1e-300 : 1e-9 * opt.view_budget / S;
  if (rho * S > opt.view_budget) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "hayman_scan: view budget %.3g infeasible, smallest achievable %.6g",
                  opt.view_budget, rho * S);
    throw HaymanInfeasible(buf, rho * S);
  }
  fam.rho = rho;
  fam.view_sum = rho * S;
  for (std::size_t k = 0; k < zs.size(); ++k) fam.disks.push_back({b.zero(k), rho * scale[k]});

  for (auto [t, e] : profile.samples) fam.achieved.emplace_back(t, 0.0);
  for (const Sample& s : pts) {
    if (s.ratio < rho || fam.achieved.empty()) continue;
    std::size_t bin = 0;
    while (bin + 1 < fam.achieved.size() && s.r > fam.achieved[bin].first) ++bin;
    fam.achieved[bin].second = std::max(fam.achieved[bin].second, s.nl / s.r);
  }
  return fam;
}

void write_disks_csv(std::ostream& os, const DiskFamily& f) {
  os << "center_re,center_im,radius\n";
  char buf[96];
  for (const Disk& d : f.disks) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", d.center.real(), d.center.imag(), d.radius);
    os << buf;
  }
}

}  // namespace pwsum
