#include "pwsum/weights.hpp"

#include <cstdio>
#include <ostream>

namespace pwsum {

cplx outer_weight_phi(cplx s) {
  if (s.imag() == 0.0) s = cplx(s.real(), +0.0);
  return cplx(0, -pi) + std::log(s - 0.5) - std::log(s + 0.5);
}

cplx outer_weight(double l, double alpha, cplx z) {
  if (!(l > 0)) throw std::invalid_argument("outer_weight: l must be positive");
  if (z.imag() < 0) throw std::invalid_argument("outer_weight: Im z < 0");
  const cplx s = z / l;
  if (std::abs(s - 0.5) < 1e-14 || std::abs(s + 0.5) < 1e-14)
    throw std::invalid_argument("outer_weight: branch point z = +-l/2");
  return std::exp(cplx(0, -alpha * l) * outer_weight_phi(s));
}

std::string_view scheme_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::naive: return "naive";
    case SchemeKind::projection: return "projection";
    case SchemeKind::universal: return "universal";
  }
  return "naive";
}

SchemeKind parse_scheme(std::string_view name) {
  for (SchemeKind k : {SchemeKind::naive, SchemeKind::projection, SchemeKind::universal})
    if (scheme_name(k) == name) return k;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

namespace {
void check_radii(const std::vector<double>& r) {
  if (r.empty()) throw std::invalid_argument("empty radius schedule");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0)) throw std::invalid_argument("schedule radii must be positive");
    if (i > 0 && !(r[i] > r[i - 1])) throw std::invalid_argument("schedule radii must increase");
  }
}
}  // namespace

void WeightScheme::init_halves(TailModel tail) {
  auto [iu, il] = split_indices(s_);
  auto [su, sl] = split_halfplanes(s_);
  local_.assign(s_.size(), 0);
  for (std::size_t i = 0; i < iu.size(); ++i) local_[iu[i]] = i;
  for (std::size_t i = 0; i < il.size(); ++i) local_[il[i]] = i;
  TailModel tu = su.family().lattice() ? tail : TailModel::none;
  TailModel tl = sl.family().lattice() ? tail : TailModel::none;
  b_up_ = BlaschkeProduct(su, Halfplane::upper, tu);
  b_lo_ = BlaschkeProduct(sl, Halfplane::lower, tl);
}

WeightScheme WeightScheme::naive(Spectrum s, std::vector<double> radii) {
  check_radii(radii);
  WeightScheme w;
  w.kind_ = SchemeKind::naive;
  w.s_ = std::move(s);
  w.steps_ = radii.size();
  w.radii_ = std::move(radii);
  return w;
}

WeightScheme WeightScheme::projection(Spectrum s, std::vector<double> radii) {
  TailModel t = default_tail(s);
  return projection(std::move(s), std::move(radii), t);
}

WeightScheme WeightScheme::projection(Spectrum s, std::vector<double> radii, TailModel tail) {
  check_radii(radii);
  WeightScheme w;
  w.kind_ = SchemeKind::projection;
  w.s_ = std::move(s);
  w.steps_ = radii.size();
  w.radii_ = std::move(radii);
  w.init_halves(tail);
  return w;
}

WeightScheme WeightScheme::universal(Spectrum s, ContourSchedule upper, ContourSchedule lower) {
  WeightScheme w;
  w.kind_ = SchemeKind::universal;
  w.s_ = std::move(s);
  w.init_halves(default_tail(w.s_));
  const bool has_up = !w.b_up_.empty(), has_lo = !w.b_lo_.empty();
  if (has_up && has_lo && upper.steps.size() != lower.steps.size())
    throw std::invalid_argument("universal: upper and lower schedules differ in length");
  w.steps_ = has_up ? upper.steps.size() : lower.steps.size();
  if (w.steps_ == 0 && !w.s_.empty()) throw std::invalid_argument("universal: empty schedule");
  w.sched_up_ = std::move(upper);
  w.sched_lo_ = std::move(lower);
  return w;
}

WeightScheme WeightScheme::universal(Spectrum s, std::span<const double> candidates, int count,
                                     const ScheduleOptions& opt) {
  auto [su, sl] = split_halfplanes(s);
  ContourSchedule cu, cl;
  if (!su.empty()) cu = build_schedule(BlaschkeProduct(su, Halfplane::upper), candidates, count, opt);
  if (!sl.empty()) cl = build_schedule(BlaschkeProduct(sl, Halfplane::lower), candidates, count, opt);
  return universal(std::move(s), std::move(cu), std::move(cl));
}

cplx WeightScheme::weight(std::size_t k, std::size_t step) const {
  if (k >= s_.size() || step >= steps_) throw std::out_of_range("weight index");
  const cplx lam = s_[k];
  switch (kind_) {
    case SchemeKind::naive: return std::abs(lam) < radii_[step] ? 1.0 : 0.0;
    case SchemeKind::projection:
      return lam.imag() > 0 ? b_up_.beta(local_[k], radii_[step]) : b_lo_.beta(local_[k], radii_[step]);
    case SchemeKind::universal: {
      if (lam.imag() > 0) {
        const ContourStep& st = sched_up_.steps[step];
        return st.contour.contains(lam) ? outer_weight(st.contour.l, st.alpha, lam) : 0.0;
      }
      const ContourStep& st = sched_lo_.steps[step];
      const cplx z = std::conj(lam);
      return st.contour.contains(z) ? std::conj(outer_weight(st.contour.l, st.alpha, z)) : 0.0;
    }
  }
  return 0.0;
}

std::vector<std::pair<std::size_t, cplx>> WeightScheme::row(std::size_t step) const {
  std::vector<std::pair<std::size_t, cplx>> out;
  for (std::size_t k = 0; k < s_.size(); ++k) {
    cplx w = weight(k, step);
    if (w != cplx(0.0)) out.emplace_back(k, w);
  }
  return out;
}

double WeightScheme::step_size(std::size_t step) const {
  if (step >= steps_) throw std::out_of_range("schedule step");
  if (kind_ != SchemeKind::universal) return radii_[step];
  return (!sched_up_.steps.empty() ? sched_up_ : sched_lo_).steps[step].contour.l;
}

void write_weights_csv(std::ostream& os, const WeightScheme& ws) {
  os << "n,k,lambda_re,lambda_im,w_re,w_im\n";
  char buf[192];
  for (std::size_t n = 0; n < ws.steps(); ++n)
    for (auto [k, w] : ws.row(n)) {
      cplx lam = ws.spectrum()[k];
      std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g,%.17g,%.17g\n", n + 1, k, lam.real(), lam.imag(),
                    w.real(), w.imag());
      os << buf;
    }
}

}  // namespace pwsum
