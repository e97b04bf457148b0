#include "pwsum/diagnostics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>
#include <ostream>

namespace pwsum {

double a2_from_samples(std::span<const double> w, double h) {
  const std::size_t n = w.size();
  if (n < 5) throw std::invalid_argument("a2: need at least 5 samples");
  std::vector<long double> P(n, 0.0L), Q(n, 0.0L);
  for (std::size_t i = 1; i < n; ++i) {
    if (!(w[i] > 0) || !(w[i - 1] > 0)) throw std::invalid_argument("a2: weight vanishes on the line");
    P[i] = P[i - 1] + 0.5L * h * (static_cast<long double>(w[i - 1]) + w[i]);
    Q[i] = Q[i - 1] + 0.5L * h * (1.0L / w[i - 1] + 1.0L / w[i]);
  }
  long double best = 1.0L;
  for (std::size_t len = 4; len <= n - 1; len *= 2) {
    const long double L = static_cast<long double>(len) * h;
    for (std::size_t s = 0; s + len < n; ++s) {
      long double v = (P[s + len] - P[s]) * (Q[s + len] - Q[s]) / (L * L);
      best = std::max(best, v);
    }
  }
  // the discrete averages obey Cauchy-Schwarz, so values below 1 are rounding
  return static_cast<double>(best);
}

double a2_estimate(const GeneratingFunction& g, double X, double a, double h) {
  for (cplx lam : g.spectrum().points())
    if (std::abs(lam.imag() - a) < 1e-12) throw std::invalid_argument("a2_estimate: line meets a zero of G");
  std::vector<double> w(grid_intervals(X, h) + 1);
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::norm(g(cplx(-X + j * h, a)));
  return a2_from_samples(w, h);
}

double carleson_sup(const Spectrum& s) {
  const std::size_t n = s.size();
  if (n < 2) return 0.0;
  std::vector<std::size_t> ord(n);
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
    if (s[a].real() != s[b].real()) return s[a].real() < s[b].real();
    return s[a].imag() < s[b].imag();
  });
  std::vector<double> re(n), im(n), wt(n);
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = s[ord[i]].real();
    im[i] = s[ord[i]].imag();
    wt[i] = 1.0 + std::abs(im[i]);
  }
  std::optional<LatticeTail> tail;
  if (s.family().lattice()) tail.emplace(s.family());
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double dx = re[i] - re[j], dy = im[i] - im[j];
      acc += wt[j] / (dx * dx + dy * dy);
    }
    acc *= wt[i];
    if (tail) acc += tail->carleson_row(cplx(re[i], im[i]));
    best = std::max(best, acc);
  }
  return best;
}

namespace {
std::pair<double, double> intg_window(std::span<const double> m, std::size_t lo, std::size_t hi, double x0,
                                      double h) {
  double p = 0, q = 0;
  for (std::size_t j = lo; j <= hi; ++j) {
    double w = (j == lo || j == hi) ? 0.5 * h : h;
    double x = x0 + j * h, d = 1 + x * x;
    p += w * m[j] / d;
    q += w / (m[j] * d);
  }
  return {p, q};
}
}  // namespace

IntGReport intG_from_samples(std::span<const double> m, double X, double h) {
  const std::size_t n = grid_intervals(2 * X, h) + 1;
  if (m.size() != n) throw std::invalid_argument("intG: sample count mismatch");
  if ((n - 1) % 4 != 0) throw std::invalid_argument("intG: X/h must be an integer");
  const std::size_t quarter = (n - 1) / 4;
  IntGReport r;
  r.X = X;
  std::tie(r.pos, r.neg) = intg_window(m, quarter, n - 1 - quarter, -2 * X, h);
  std::tie(r.pos_2x, r.neg_2x) = intg_window(m, 0, n - 1, -2 * X, h);
  return r;
}

IntGReport intG_check(const GeneratingFunction& g, double X, double h) {
  std::vector<double> m(grid_intervals(2 * X, h) + 1);
  for (std::size_t j = 0; j < m.size(); ++j) m[j] = std::norm(g(-2 * X + j * h));
  return intG_from_samples(m, X, h);
}

void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "condition,window_X,value,trend_ratio\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g\n", r.condition.c_str(), r.window_X, r.value,
                  r.trend_ratio);
    os << buf;
  }
}

}  // namespace pwsum
