#include "pwsum/engine.hpp"

#include <Eigen/Dense>

#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace pwsum {

cplx sinc(cplx u) {
  if (std::abs(u) < 1e-8) {
    cplx p2 = pi * pi * u * u;
    return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
  }
  return std::sin(pi * u) / (pi * u);
}

PWFunction::PWFunction(std::vector<Atom> a) : atoms(std::move(a)) {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (atoms[i].center == atoms[j].center) throw std::invalid_argument("repeated atom centre");
}

cplx PWFunction::operator()(cplx z) const {
  cplx s = 0.0;
  for (const Atom& a : atoms) s += a.coeff * sinc(z - std::conj(a.center));
  return s;
}

GridFunction PWFunction::sample(const GridFunction& grid) const {
  GridFunction out(grid.X, grid.h);
  for (std::size_t j = 0; j < out.size(); ++j) out.v[j] = (*this)(out.x(j));
  return out;
}

PWFunction PWFunction::conjugated() const {
  PWFunction f;
  for (const Atom& a : atoms) f.atoms.push_back({std::conj(a.center), std::conj(a.coeff)});
  return f;
}

void write_pw_csv(std::ostream& os, const PWFunction& f) {
  os << "mu_re,mu_im,c_re,c_im\n";
  char buf[128];
  for (const auto& a : f.atoms) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", a.center.real(), a.center.imag(),
                  a.coeff.real(), a.coeff.imag());
    os << buf;
  }
}

PWFunction read_pw_csv(std::istream& is) {
  std::string line;
  std::vector<PWFunction::Atom> atoms;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("mu_re", 0) == 0) continue;
    }
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    double a, b, c, d;
    if (!(ls >> a >> b >> c >> d)) throw std::invalid_argument("bad PWFunction row: " + line);
    atoms.push_back({{a, b}, {c, d}});
  }
  return PWFunction(std::move(atoms));
}

LagrangeEngine::LagrangeEngine(const GeneratingFunction& g, const GridFunction& grid)
    : g_(g), grid_(grid.X, grid.h), gx_(grid_.size()), gp_(g.spectrum().size()),
      have_gp_(g.spectrum().size(), 0) {
  for (std::size_t j = 0; j < gx_.size(); ++j) gx_[j] = g_(grid_.x(j));
}

cplx LagrangeEngine::g_prime(std::size_t k) const {
  if (!have_gp_.at(k)) {
    gp_[k] = g_.derivative_at(k);
    have_gp_[k] = 1;
  }
  return gp_[k];
}

std::vector<std::pair<std::size_t, cplx>> LagrangeEngine::coefficients(const PWFunction& F,
                                                                       const WeightScheme& ws,
                                                                       std::size_t step) const {
  if (ws.spectrum().size() != g_.spectrum().size())
    throw std::invalid_argument("weight scheme and generating function use different spectra");
  auto row = ws.row(step);
  for (auto& [k, w] : row) w = w * F(ws.spectrum()[k]) / g_prime(k);
  return row;
}

GridFunction LagrangeEngine::partial_sum(const PWFunction& F, const WeightScheme& ws, std::size_t step) const {
  auto coef = coefficients(F, ws, step);
  GridFunction out(grid_.X, grid_.h);
  const auto& s = g_.spectrum();
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double x = out.x(j);
    cplx acc = 0.0;
    for (auto [k, a] : coef) acc += a / (x - s[k]);
    out.v[j] = gx_[j] * acc;
  }
  return out;
}

cplx LagrangeEngine::partial_sum_at(const PWFunction& F, const WeightScheme& ws, std::size_t step, cplx z) const {
  auto coef = coefficients(F, ws, step);
  const auto& s = g_.spectrum();
  for (auto [k, a] : coef)
    if (std::abs(z - s[k]) < 1e-9 * (1 + std::abs(s[k]))) {
      // at a node the sum collapses to the single coefficient
      return a * g_prime(k);
    }
  cplx acc = 0.0;
  for (auto [k, a] : coef) acc += a / (z - s[k]);
  return g_(z) * acc;
}

double LagrangeEngine::tail_bound(const PWFunction& F, const WeightScheme& ws, std::size_t step) const {
  const double X = grid_.X;
  double tf = 0.0;
  for (const auto& a : F.atoms) {
    double gap = X - std::abs(a.center.real());
    if (gap <= 0) return INFINITY;
    tf += std::abs(a.coeff) * std::cosh(pi * std::abs(a.center.imag())) / pi * std::sqrt(2.0 / gap);
  }
  double supg = 0.0;
  const std::size_t n = gx_.size();
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(grid_.x(j)) >= 0.9 * X) supg = std::max(supg, std::abs(gx_[j]));
  double ts = 0.0;
  const auto& s = g_.spectrum();
  for (auto [k, a] : coefficients(F, ws, step)) {
    double gap = X - std::abs(s[k].real());
    double l2 = gap > 1.0 ? std::sqrt(2.0 / gap) : std::sqrt(pi / std::abs(s[k].imag()));
    ts += std::abs(a) * supg * l2;
  }
  return tf + ts;
}

GridFunction partial_sum(const PWFunction& F, const GeneratingFunction& g, const WeightScheme& ws,
                         std::size_t step, const GridFunction& grid) {
  return LagrangeEngine(g, grid).partial_sum(F, ws, step);
}

double operator_norm_probe(const LagrangeEngine& eng, const WeightScheme& ws, std::size_t step, int trials,
                           std::uint64_t seed, const ProbeOptions& opt) {
  if (trials < 1) throw std::invalid_argument("operator_norm_probe: trials must be >= 1");
  using Mat = Eigen::MatrixXcd;
  using Vec = Eigen::VectorXcd;
  const auto row = ws.row(step);
  if (row.empty()) return 0.0;
  const auto& s = ws.spectrum();
  const GridFunction& grid = eng.grid();
  const int m = 2 * opt.atoms + 1;
  const auto ns = static_cast<Eigen::Index>(row.size());
  const auto ng = static_cast<Eigen::Index>(grid.size());

  Mat C(ns, m);
  for (Eigen::Index r = 0; r < ns; ++r) {
    auto [k, w] = row[r];
    cplx f = w / eng.g_prime(k);
    for (int j = 0; j < m; ++j) C(r, j) = f * sinc(s[k] - static_cast<double>(j - opt.atoms));
  }
  Mat K(ng, ns);
  for (Eigen::Index i = 0; i < ng; ++i) {
    const double x = grid.x(i);
    const double sw = std::sqrt(trapezoid_weight(i, grid.size(), grid.h));
    const cplx gx = eng.g_on_grid()[i];
    for (Eigen::Index r = 0; r < ns; ++r) K(i, r) = sw * gx / (x - s[row[r].first]);
  }
  Mat A = K * C;
  Mat M = A.adjoint() * A;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    Vec v(m);
    for (int j = 0; j < m; ++j) v(j) = cplx(nd(rng), nd(rng));
    v.normalize();
    double ray = 0.0;
    for (int it = 0; it < opt.iterations; ++it) {
      Vec u = M * v;
      ray = std::real(v.dot(u));
      double nu = u.norm();
      if (nu == 0.0) break;
      v = u / nu;
    }
    best = std::max(best, ray);
  }
  return std::sqrt(std::max(best, 0.0));
}

double compactwise_error(const LagrangeEngine& eng, const PWFunction& F, const WeightScheme& ws,
                         std::size_t step, cplx center, double radius, int radial, int angular) {
  const auto coef = eng.coefficients(F, ws, step);
  const auto& s = ws.spectrum();
  const auto& g = eng.generating();
  auto eval = [&](cplx z) {
    cplx acc = 0.0;
    for (auto [k, a] : coef) acc += a / (z - s[k]);
    return g(z) * acc;
  };
  auto near_node = [&](cplx z) {
    for (cplx lam : s.points())
      if (std::abs(z - lam) < 1e-6) return true;
    return false;
  };
  double e = 0.0;
  if (!near_node(center)) e = std::abs(eval(center) - F(center));
  for (int i = 1; i <= radial; ++i) {
    double r = radius * i / radial;
    for (int j = 0; j < angular; ++j) {
      cplx z = center + std::polar(r, 2 * pi * (j + 0.5) / angular);
      if (near_node(z)) continue;
      e = std::max(e, std::abs(eval(z) - F(z)));
    }
  }
  return e;
}

namespace {

struct ProjectorSides {
  GridFunction lhs, rhs;
  RieszResult riesz;
};

ProjectorSides projector_sides(const PWFunction& F, const BlaschkeProduct& b, double n, const GridFunction& grid,
                               const OuterFunction& om, const std::vector<cplx>& omb, std::size_t offset) {
  ProjectorSides r;
  const std::size_t m = grid.size();
  GridFunction phi(grid.X, grid.h), psi(grid.X, grid.h);
  std::vector<cplx> bn(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double x = grid.x(j);
    phi.v[j] = F(x) * std::exp(cplx(0, pi * x)) / omb[offset + j];
    bn[j] = b(x, n);
    psi.v[j] = phi.v[j] * std::conj(bn[j]);
  }
  r.riesz = riesz_project(psi, Side::plus);
  r.lhs = GridFunction(grid.X, grid.h);
  for (std::size_t j = 0; j < m; ++j) r.lhs.v[j] = phi.v[j] - bn[j] * r.riesz.value.v[j];

  std::vector<std::pair<cplx, cplx>> terms;  // (lam, Phi(lam)/B_n'(lam))
  for (std::size_t k = 0; k < b.size(); ++k) {
    cplx lam = b.zero(k);
    if (std::abs(lam) >= n) continue;
    cplx ph = F(lam) * std::exp(cplx(0, pi) * lam) / om(lam);
    terms.emplace_back(lam, ph / b.derivative_at_zero(k, n));
  }
  r.rhs = GridFunction(grid.X, grid.h);
  for (std::size_t j = 0; j < m; ++j) {
    const double x = grid.x(j);
    cplx acc = 0.0;
    for (auto [lam, c] : terms) acc += c / (x - lam);
    r.rhs.v[j] = bn[j] * acc;
  }
  return r;
}

}  // namespace

ProjectorCheck weighted_projector_check(const PWFunction& F, const GeneratingFunction& g,
                                        const BlaschkeProduct& b, double n, const GridFunction& grid) {
  for (cplx lam : g.spectrum().points())
    if (lam.imag() < 0) throw std::invalid_argument("weighted_projector_check needs an upper spectrum");
  if (b.orientation() != Halfplane::upper) throw std::invalid_argument("weighted_projector_check: lower evaluator");
  const double h = grid.h, X = grid.X;
  const std::size_t extra = static_cast<std::size_t>(std::ceil((std::max(200.0, 2 * X) - X) / h - 1e-9));
  const double Xo = X + extra * h;
  OuterFunction om = OuterFunction::from(g, Xo, h);
  ProjectorSides fine = projector_sides(F, b, n, grid, om, om.boundary(), extra);

  ProjectorCheck out;
  out.mismatch = l2_error(fine.lhs, fine.rhs);
  out.rhs_norm = l2_norm(fine.rhs);
  out.error_bar = fine.riesz.tail_error + fine.riesz.discretization_error;

  // outer-function quadrature bar: repeat both sides with the 2h outer grid
  const std::size_t ho = grid_intervals(Xo, h);
  if (ho % 2 == 0 && extra % 2 == 0) {
    std::vector<double> u2;
    auto u = om.log_modulus();
    for (std::size_t j = 0; j < u.size(); j += 2) u2.push_back(u[j]);
    OuterFunction om2(Xo, 2 * h, std::move(u2));
    std::vector<cplx> b2 = om2.boundary(), bfull(om.log_modulus().size());
    for (std::size_t j = 0; j < b2.size(); ++j) bfull[2 * j] = b2[j];
    for (std::size_t j = 1; j + 1 < bfull.size(); j += 2) bfull[j] = 0.5 * (bfull[j - 1] + bfull[j + 1]);
    ProjectorSides coarse = projector_sides(F, b, n, grid, om2, bfull, extra);
    double d = 0.0;
    for (std::size_t j = 0; j < grid.size(); j += 2) {
      cplx df = (fine.lhs.v[j] - fine.rhs.v[j]) - (coarse.lhs.v[j] - coarse.rhs.v[j]);
      d += 2 * h * std::norm(df);
    }
    out.error_bar += std::sqrt(d);
  }
  return out;
}

}  // namespace pwsum
