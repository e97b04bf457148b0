#include "pwsum/grid.hpp"

#include <Eigen/Dense>
#include <fftw3.h>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace pwsum {

std::size_t grid_intervals(double X, double h) {
  if (!(X > 0) || !(h > 0)) throw std::invalid_argument("grid needs X > 0 and h > 0");
  double m = 2.0 * X / h;
  double r = std::round(m);
  if (std::abs(m - r) > 1e-9 * std::max(1.0, m)) throw std::invalid_argument("2X/h is not an integer");
  return static_cast<std::size_t>(r);
}

GridFunction::GridFunction(double X_, double h_) : X(X_), h(h_), v(grid_intervals(X_, h_) + 1) {}

bool GridFunction::same_grid(const GridFunction& o) const {
  return v.size() == o.v.size() && std::abs(X - o.X) <= 1e-12 * X && std::abs(h - o.h) <= 1e-12 * h;
}

double l2_norm(const GridFunction& a) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += trapezoid_weight(j, a.size(), a.h) * std::norm(a.v[j]);
  return std::sqrt(s);
}

double l2_error(const GridFunction& a, const GridFunction& b) {
  if (!a.same_grid(b)) throw std::invalid_argument("l2_error: grid mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    s += trapezoid_weight(j, a.size(), a.h) * std::norm(a.v[j] - b.v[j]);
  return std::sqrt(s);
}

void write_grid_csv(std::ostream& os, const GridFunction& g) {
  os << "x,re,im\n";
  char buf[96];
  for (std::size_t j = 0; j < g.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", g.x(j), g.v[j].real(), g.v[j].imag());
    os << buf;
  }
}

std::vector<cplx> cauchy_pv(std::span<const cplx> f, double h) {
  const std::size_t n = f.size();
  std::vector<cplx> out(n, 0.0);
  if (n < 2) return out;
  std::size_t len = 1;
  while (len < 2 * n) len <<= 1;

  auto* a = fftw_alloc_complex(len);
  auto* k = fftw_alloc_complex(len);
  fftw_plan pa = fftw_plan_dft_1d(static_cast<int>(len), a, a, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan pk = fftw_plan_dft_1d(static_cast<int>(len), k, k, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan pb = fftw_plan_dft_1d(static_cast<int>(len), a, a, FFTW_BACKWARD, FFTW_ESTIMATE);

  for (std::size_t i = 0; i < len; ++i) a[i][0] = a[i][1] = k[i][0] = k[i][1] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double w = (i == 0 || i + 1 == n) ? 1.0 : 2.0;
    a[i][0] = w * f[i].real();
    a[i][1] = w * f[i].imag();
  }
  // out_j = sum_i a_i / (i - j) over odd i - j, a convolution with -1/m
  for (std::size_t m = 1; m < n; m += 2) {
    k[m][0] = -1.0 / static_cast<double>(m);
    k[len - m][0] = 1.0 / static_cast<double>(m);
  }
  fftw_execute(pa);
  fftw_execute(pk);
  for (std::size_t i = 0; i < len; ++i) {
    double re = a[i][0] * k[i][0] - a[i][1] * k[i][1];
    double im = a[i][0] * k[i][1] + a[i][1] * k[i][0];
    a[i][0] = re;
    a[i][1] = im;
  }
  fftw_execute(pb);
  for (std::size_t j = 0; j < n; ++j) out[j] = cplx(a[j][0], a[j][1]) / static_cast<double>(len);

  fftw_destroy_plan(pa);
  fftw_destroy_plan(pk);
  fftw_destroy_plan(pb);
  fftw_free(a);
  fftw_free(k);
  (void)h;  // the rule is scale free: weight 2h against spacing (i - j) h
  return out;
}

namespace {

struct FarModel {
  cplx a = 0.0, b = 0.0, c = 0.0;
  double rms = 0.0;
  cplx operator()(double t) const { return a / t + b / (t * t) + c / (t * t * t); }
};

// least squares sum_k c_k / t^k, k = 1..terms, over the samples with t in the
// outer half of one side
FarModel fit_far(std::span<const cplx> f, double x0, double h, bool right, int terms) {
  const std::size_t n = f.size();
  const double edge = right ? x0 + (n - 1) * h : x0;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    double t = x0 + i * h;
    if (right ? (t >= 0.5 * edge && edge > 0) : (t <= 0.5 * edge && edge < 0)) idx.push_back(i);
  }
  FarModel m;
  if (idx.size() < static_cast<std::size_t>(terms)) return m;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(terms, terms);
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(terms);
  for (auto i : idx) {
    const double p = 1.0 / (x0 + i * h);
    double pk[3] = {p, p * p, p * p * p};
    for (int u = 0; u < terms; ++u) {
      r(u) += pk[u] * f[i];
      for (int v = 0; v < terms; ++v) A(u, v) += pk[u] * pk[v];
    }
  }
  Eigen::VectorXcd sol = A.cast<cplx>().ldlt().solve(r);
  m.a = sol(0);
  m.b = sol(1);
  if (terms > 2) m.c = sol(2);
  double res = 0;
  for (auto i : idx) res += std::norm(f[i] - m(x0 + i * h));
  m.rms = std::sqrt(res / idx.size());
  return m;
}

struct PvResult {
  std::vector<cplx> pv;
  std::vector<double> tail_bar;  // pointwise bound on the PV tail error
};

PvResult pv_with_tails(std::span<const cplx> f, double x0, double h) {
  const std::size_t n = f.size();
  const double xmin = x0, xmax = x0 + (n - 1) * h;
  FarModel mr = fit_far(f, x0, h, true, 2), ml = fit_far(f, x0, h, false, 2);
  // the next order of the expansion, used only for the error bar
  FarModel mr3 = fit_far(f, x0, h, true, 3), ml3 = fit_far(f, x0, h, false, 3);
  const double dr = xmax > 0 ? std::abs(mr3(xmax) - mr(xmax)) : 0.0;
  const double dl = xmin < 0 ? std::abs(ml3(xmin) - ml(xmin)) : 0.0;

  const std::size_t pad = n / 2 + 1;
  std::vector<cplx> ext(n + 2 * pad);
  for (std::size_t p = 0; p < pad; ++p) {
    double tl = xmin - static_cast<double>(pad - p) * h;
    double tr = xmax + static_cast<double>(p + 1) * h;
    ext[p] = xmin < 0 ? ml(tl) : 0.0;
    ext[pad + n + p] = xmax > 0 ? mr(tr) : 0.0;
  }
  for (std::size_t i = 0; i < n; ++i) ext[pad + i] = f[i];
  std::vector<cplx> full = cauchy_pv(ext, h);

  const double lr = xmax + pad * h, ll = -(xmin - pad * h);
  PvResult out;
  out.pv.resize(n);
  out.tail_bar.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x0 + i * h;
    cplx s = full[pad + i];
    if (xmax > 0) {
      cplx acc = 0.0;
      double r = 1.0;
      for (int k = 0; k < 200; ++k) {
        cplx term = r * (mr.a / ((k + 1) * lr) + mr.b / ((k + 2) * lr * lr));
        acc += term;
        r *= x / lr;
        if (std::abs(r) < 1e-18) break;
      }
      s += acc;
    }
    if (xmin < 0) {
      cplx acc = 0.0;
      double r = 1.0;
      for (int k = 0; k < 200; ++k) {
        cplx term = r * (ml.a / ((k + 1) * ll) - ml.b / ((k + 2) * ll * ll));
        acc += term;
        r *= -x / ll;
        if (std::abs(r) < 1e-18) break;
      }
      s += acc;
    }
    out.pv[i] = s;
    // fit residual and model-order change beyond the grid, treated as C edge / |t|
    auto ell = [h](double edge, double y) {
      double gap = std::max(edge - y, h);
      if (std::abs(y) < 1e-9 * edge) return 1.0 / edge;
      return std::abs(std::log(edge / gap) / y);
    };
    double bar = 0.0;
    if (xmax > 0) bar += (mr.rms + dr) * xmax * ell(xmax, x);
    if (xmin < 0) bar += (ml.rms + dl) * (-xmin) * ell(-xmin, -x);
    out.tail_bar[i] = bar;
  }
  return out;
}

}  // namespace

RieszResult riesz_project(const GridFunction& g, Side side) {
  const std::size_t n = g.size();
  if (n < 8) throw std::invalid_argument("riesz_project: grid too small");
  const cplx c = 1.0 / (2.0 * pi * cplx(0, 1));
  PvResult fine = pv_with_tails(g.v, -g.X, g.h);

  std::vector<cplx> coarse_in;
  for (std::size_t j = 0; j < n; j += 2) coarse_in.push_back(g.v[j]);
  PvResult coarse = pv_with_tails(coarse_in, -g.X, 2 * g.h);

  RieszResult r;
  r.value = GridFunction(g.X, g.h);
  for (std::size_t j = 0; j < n; ++j) {
    cplx p = 0.5 * g.v[j] + c * fine.pv[j];
    r.value.v[j] = side == Side::plus ? p : g.v[j] - p;
  }
  double d = 0.0, t = 0.0;
  for (std::size_t j = 0; j < n; j += 2)
    d += trapezoid_weight(j / 2, coarse_in.size(), 2 * g.h) * std::norm(fine.pv[j] - coarse.pv[j / 2]);
  for (std::size_t j = 0; j < n; ++j)
    t += trapezoid_weight(j, n, g.h) * fine.tail_bar[j] * fine.tail_bar[j];
  r.discretization_error = std::sqrt(d) / (2 * pi);
  r.tail_error = std::sqrt(t) / (2 * pi);
  return r;
}

}  // namespace pwsum
