#include "pwsum/contours.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace pwsum {

namespace {

double oriented_log_abs(const BlaschkeProduct& b, cplx z) {
  return b.log_abs(b.orientation() == Halfplane::upper ? z : std::conj(z));
}

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double segment_distance(cplx p, cplx a, cplx b) {
  cplx d = b - a;
  double t = std::clamp(((p - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

}  // namespace

std::vector<cplx> TriangleContour::side_samples(int m) const {
  std::vector<cplx> out;
  out.reserve(2 * m);
  const cplx top = apex();
  for (int s = 0; s < m; ++s) out.push_back(cplx(l) + (top - l) * ((s + 0.5) / m));
  for (int s = 0; s < m; ++s) out.push_back(cplx(-l) + (top + l) * ((s + 0.5) / m));
  return out;
}

bool TriangleContour::contains(cplx z) const {
  const cplx g(0.0, c * l / 3.0);
  const double f = 1.0 - 1e-9;
  const cplx v[3] = {g + f * (cplx(-l) - g), g + f * (cplx(l) - g), g + f * (apex() - g)};
  for (int i = 0; i < 3; ++i)
    if (!(cross(v[(i + 1) % 3] - v[i], z - v[i]) > 0)) return false;
  return true;
}

double contour_objective(const BlaschkeProduct& b, double l) {
  return std::max(b.arg_derivative(l), b.arg_derivative(-l));
}

std::vector<double> select_l(const BlaschkeProduct& b, std::span<const double> candidates, int count,
                             const ScheduleOptions& opt) {
  if (count < 1) throw std::invalid_argument("select_l: count must be >= 1");
  if (!(opt.ratio > 1)) throw std::invalid_argument("select_l: ratio must exceed 1");
  std::vector<double> cand(candidates.begin(), candidates.end());
  std::sort(cand.begin(), cand.end());
  std::vector<std::pair<double, double>> adm;  // (l, objective)
  for (double l : cand) {
    if (!(l > 0)) continue;
    if (l > b.data_radius()) throw std::invalid_argument("select_l: candidate beyond data radius");
    bool ok = true;
    for (cplx mu : b.oriented_zeros())
      if (std::abs(std::abs(l) - std::abs(mu.real())) <= 1e-9 * (1 + l)) ok = false;
    if (ok) adm.emplace_back(l, contour_objective(b, l));
  }
  std::vector<double> out;
  std::size_t pos = 0;
  double lo = adm.empty() ? 0.0 : adm.front().first;
  while (static_cast<int>(out.size()) < count) {
    while (pos < adm.size() && adm[pos].first < lo) ++pos;
    if (pos >= adm.size()) throw NumericalError("select_l: not enough admissible candidates");
    const double band_lo = adm[pos].first, band_hi = opt.ratio * band_lo;
    double dmin = INFINITY;
    for (std::size_t i = pos; i < adm.size() && adm[i].first < band_hi; ++i) dmin = std::min(dmin, adm[i].second);
    const double tie = std::max(dmin * (1 + 1e-9), opt.tie_floor);
    double pick = 0;
    for (std::size_t i = pos; i < adm.size() && adm[i].first < band_hi; ++i)
      if (adm[i].second <= tie) {
        pick = adm[i].first;
        break;
      }
    out.push_back(pick);
    lo = opt.ratio * pick;
  }
  return out;
}

CSelection select_c(const BlaschkeProduct& b, double l, int grid_size, int samples_per_side) {
  if (grid_size < 16) throw std::invalid_argument("select_c: grid_size must be >= 16");
  if (samples_per_side < 512) throw std::invalid_argument("select_c: need >= 512 samples per side");
  CSelection best;
  best.eps_hat = INFINITY;
  bool found = false;
  for (int j = 0; j < grid_size; ++j) {
    const double c = 1.0 + 9.0 * j / (grid_size - 1);
    TriangleContour t{l, c};
    bool hit = false;
    for (cplx mu : b.oriented_zeros()) {
      if (segment_distance(mu, cplx(l), t.apex()) < 1e-9 * std::max(1.0, l) ||
          segment_distance(mu, cplx(-l), t.apex()) < 1e-9 * std::max(1.0, l)) {
        hit = true;
        break;
      }
    }
    if (hit) continue;
    double eh = 0.0, sup = 0.0;
    for (cplx z : t.side_samples(samples_per_side)) {
      eh = std::max(eh, -oriented_log_abs(b, z) / std::abs(z));
      sup = std::max(sup, std::abs(z));
    }
    if (!std::isfinite(eh)) continue;
    if (!found || eh < best.eps_hat) {
      best = {c, eh, sup};
      found = true;
    }
  }
  if (!found) throw NumericalError("select_c: every apex candidate meets a zero of B");
  return best;
}

double select_alpha(double l, double eps_hat, double sup_abs_zeta, double safety) {
  if (!std::isfinite(eps_hat) || eps_hat < 0) throw std::invalid_argument("select_alpha: bad eps_hat");
  if (!(l > 0)) throw std::invalid_argument("select_alpha: l must be positive");
  return std::max(1e-9, safety * 5.0 * eps_hat * sup_abs_zeta / l);
}

double domination_margin(const BlaschkeProduct& b, const TriangleContour& t, double alpha, int samples) {
  double m = INFINITY;
  for (cplx z : t.side_samples(samples)) m = std::min(m, alpha * t.l / 5.0 + oriented_log_abs(b, z));
  return m;
}

TruncationIndex lambda_inside(const Spectrum& s, const TriangleContour& t) {
  TruncationIndex r;
  r.n = t.l;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (t.contains(s[k])) r.included.push_back(k);
  return r;
}

ContourSchedule build_schedule(const BlaschkeProduct& b, std::span<const double> candidates, int count,
                               const ScheduleOptions& opt) {
  ContourSchedule sched;
  for (double l : select_l(b, candidates, count, opt)) {
    CSelection cs = select_c(b, l, opt.c_grid, opt.side_samples);
    ContourStep st;
    st.contour = {l, cs.c};
    st.eps_hat = cs.eps_hat;
    st.alpha = select_alpha(l, cs.eps_hat, cs.sup_abs_zeta, opt.safety);
    st.margin = domination_margin(b, st.contour, st.alpha, opt.certify_samples);
    sched.steps.push_back(st);
  }
  return sched;
}

std::vector<double> default_candidates(double l_min, double l_max) {
  std::vector<double> out;
  for (long k = static_cast<long>(std::ceil(l_min * 20)); k / 20.0 <= l_max; ++k) out.push_back(k / 20.0);
  return out;
}

void write_schedule_csv(std::ostream& os, const ContourSchedule& s) {
  os << "n,l,c,alpha,eps_hat,margin\n";
  char buf[192];
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", i + 1, st.contour.l, st.contour.c,
                  st.alpha, st.eps_hat, st.margin);
    os << buf;
  }
}

}  // namespace pwsum
