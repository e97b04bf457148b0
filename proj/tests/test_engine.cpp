#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "pwsum/engine.hpp"
#include "pwsum/genfun.hpp"
#include "pwsum/grid.hpp"

using namespace pwsum;

namespace {

Spectrum custom(std::vector<cplx> pts) {
  FamilyParams p;
  p.points = std::move(pts);
  return make_family(Family::custom_list, p, 1);
}

Spectrum lattice(int count, double delta = 0.3) {
  FamilyParams p;
  p.delta = delta;
  return make_family(Family::shifted_integers, p, count);
}

cplx sine_G(cplx z, double d) { return std::sin(pi * (z - cplx(0, d))) / std::sin(cplx(0, -pi * d)); }
cplx sine_Gp(cplx lam, double d) {
  return pi * std::cos(pi * (lam - cplx(0, d))) / std::sin(cplx(0, -pi * d));
}

PWFunction two_atoms() { return PWFunction({{{0, 0.3}, 1.0}, {{2.7, 0.3}, 0.5}}); }

}  // namespace

TEST_CASE("sinc atoms") {
  PWFunction one({{0.0, 1.0}});
  CHECK(one(0.0) == cplx(1.0));
  CHECK(std::abs(one(1.0)) < 1e-16);
  PWFunction f({{{0, 1}, 2.0}});
  const cplx z(3, 0.5), u = z - cplx(0, -1);
  CHECK(std::abs(f(z) - 2.0 * std::sin(pi * u) / (pi * u)) < 1e-14);
  // removable point
  CHECK(std::abs(f(cplx(0, -1) + 1e-10) - 2.0) < 1e-12);
  CHECK(std::abs(sinc(cplx(1e-9, 0)) - 1.0) < 1e-15);
}

TEST_CASE("partial sum against the sine-type oracle") {
  const double d = 0.3;
  Spectrum s = lattice(40, d);
  GeneratingFunction g(s);
  GridFunction grid(10, 0.05);
  WeightScheme ws = WeightScheme::projection(s, {8.5});
  PWFunction F = two_atoms();
  GridFunction got = partial_sum(F, g, ws, 0, grid);
  double worst = 0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    cplx want = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      const cplx w = ws.weight(k, 0);
      if (w == cplx(0.0)) continue;
      want += w * F(s[k]) * sine_G(x, d) / (sine_Gp(s[k], d) * (x - s[k]));
    }
    worst = std::max(worst, std::abs(got.v[j] - want));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("shifted Shannon oracle: naive sums approach F") {
  Spectrum s = lattice(120);
  GeneratingFunction g(s);
  GridFunction grid(30, 0.02);
  LagrangeEngine eng(g, grid);
  PWFunction F({{{0, 0.3}, 1.0}});
  GridFunction truth = F.sample(grid);
  WeightScheme ws = WeightScheme::naive(s, {5.5, 10.5, 20.5, 40.5, 80.5});
  double prev = INFINITY;
  for (std::size_t n = 0; n < ws.steps(); ++n) {
    const double e = l2_error(eng.partial_sum(F, ws, n), truth);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev < 0.1);
}

TEST_CASE("empty support gives zero") {
  Spectrum s = lattice(20);
  GeneratingFunction g(s);
  GridFunction grid(5, 0.1);
  WeightScheme ws = WeightScheme::naive(s, {0.1});
  GridFunction out = partial_sum(two_atoms(), g, ws, 0, grid);
  for (cplx v : out.v) CHECK(v == cplx(0.0));
  LagrangeEngine eng(g, grid);
  // compactwise error is then sup |F| on K
  PWFunction F = two_atoms();
  double sup = std::abs(F(0.0));
  for (int i = 1; i <= 12; ++i)
    for (int j = 0; j < 48; ++j) sup = std::max(sup, std::abs(F(std::polar(3.0 * i / 12, 2 * pi * (j + 0.5) / 48))));
  CHECK(std::abs(compactwise_error(eng, F, ws, 0, 0.0, 3.0) - sup) < 1e-12 * sup);
}

TEST_CASE("finite spectrum reproduces a polynomial-type interpolant exactly") {
  // with all weights 1 on a finite list, S(lam_k) = F(lam_k)
  Spectrum s = custom({{0.5, 1}, {-1.5, 0.4}, {2.2, 0.7}});
  GeneratingFunction g(s);
  GridFunction grid(5, 0.1);
  LagrangeEngine eng(g, grid);
  WeightScheme ws = WeightScheme::naive(s, {10});
  PWFunction F = two_atoms();
  for (std::size_t k = 0; k < s.size(); ++k)
    CHECK(std::abs(eng.partial_sum_at(F, ws, 0, s[k] + 1e-9) - F(s[k])) < 1e-6);
}

TEST_CASE("linearity and conjugation symmetry") {
  Spectrum s = custom({{0.5, 1}, {-1.5, 0.4}, {2.2, -0.7}, {-3.1, -1.2}, {4.4, 2.0}});
  GeneratingFunction g(s);
  GridFunction grid(10, 0.1);
  LagrangeEngine eng(g, grid);
  WeightScheme ws = WeightScheme::projection(s, {3, 100});
  PWFunction F = two_atoms(), H({{{1, -0.5}, cplx(0, 1)}});
  const cplx a(0.7, -1.1), b(-2.0, 0.25);
  PWFunction sum = F;
  for (auto& at : sum.atoms) at.coeff *= a;
  for (auto at : H.atoms) sum.atoms.push_back({at.center, at.coeff * b});
  for (std::size_t n = 0; n < 2; ++n) {
    GridFunction l = eng.partial_sum(sum, ws, n), r1 = eng.partial_sum(F, ws, n), r2 = eng.partial_sum(H, ws, n);
    for (std::size_t j = 0; j < grid.size(); ++j) CHECK(std::abs(l.v[j] - (a * r1.v[j] + b * r2.v[j])) < 1e-12);
  }

  std::vector<cplx> cp;
  for (cplx z : s.points()) cp.push_back(std::conj(z));
  Spectrum sc = custom(cp);
  GeneratingFunction gc(sc);
  LagrangeEngine ec(gc, grid);
  WeightScheme wc = WeightScheme::projection(sc, {3, 100});
  for (std::size_t n = 0; n < 2; ++n) {
    GridFunction p = eng.partial_sum(F, ws, n), q = ec.partial_sum(F.conjugated(), wc, n);
    for (std::size_t j = 0; j < grid.size(); ++j) CHECK(std::abs(q.v[j] - std::conj(p.v[j])) < 1e-12);
  }
}

TEST_CASE("grid norms") {
  GridFunction a(1, 0.25), b(1, 0.25);
  for (std::size_t j = 0; j < a.size(); ++j) a.v[j] = b.v[j] = cplx(j, -1.0 * j);
  CHECK(l2_error(a, b) == 0.0);
  // shift the first sample and two interior ones by phi
  const cplx phi(0.3, 0.4);
  for (std::size_t j : {0, 2, 3}) b.v[j] += phi;
  CHECK(std::abs(l2_error(a, b) - std::abs(phi) * std::sqrt(0.125 + 0.25 + 0.25)) < 1e-15);
  GridFunction c = a;
  for (cplx& v : c.v) v = std::conj(v);
  CHECK(std::abs(l2_norm(c) - l2_norm(a)) < 1e-15);
  CHECK_THROWS(l2_error(a, GridFunction(2, 0.25)));
  CHECK_THROWS(GridFunction(1, 0.3));
  std::ostringstream os;
  write_grid_csv(os, a);
  CHECK(os.str().rfind("x,re,im\n-1,0,-0\n-0.75,1,-1\n", 0) == 0);
}

TEST_CASE("principal value of a Lorentzian") {
  // PV int dt / ((1 + t^2)(t - x)) = -pi x / (1 + x^2)
  const double X = 200, h = 0.01;
  GridFunction g(X, h);
  for (std::size_t j = 0; j < g.size(); ++j) g.v[j] = 1.0 / (1 + g.x(j) * g.x(j));
  auto pv = cauchy_pv(g.v, h);
  for (std::size_t j = 0; j < g.size(); j += 997) {
    const double x = g.x(j);
    if (std::abs(x) > 20) continue;
    CHECK(std::abs(pv[j] - (-pi * x / (1 + x * x))) < 1e-4);
  }
}

TEST_CASE("Riesz projections of Cauchy kernels") {
  GridFunction up(100, 0.01), lo(100, 0.01), both(100, 0.01);
  for (std::size_t j = 0; j < up.size(); ++j) {
    up.v[j] = 1.0 / cplx(up.x(j), 1.0);
    lo.v[j] = 1.0 / cplx(up.x(j), -1.0);
    both.v[j] = up.v[j] + lo.v[j];
  }
  CHECK(l2_error(riesz_project(up, Side::plus).value, up) < 1e-3);
  CHECK(l2_norm(riesz_project(up, Side::minus).value) < 1e-3);
  CHECK(l2_norm(riesz_project(lo, Side::plus).value) < 1e-3);
  RieszResult p = riesz_project(both, Side::plus), m = riesz_project(both, Side::minus);
  CHECK(l2_error(p.value, up) < 2e-3);
  CHECK(l2_error(m.value, lo) < 2e-3);
  // P+ + P- = I exactly
  for (std::size_t j = 0; j < both.size(); ++j) CHECK(p.value.v[j] + m.value.v[j] == both.v[j]);
  // idempotence within the reported bars
  RieszResult pp = riesz_project(p.value, Side::plus);
  CHECK(l2_error(pp.value, p.value) < 2e-3);
  CHECK(p.tail_error >= 0);
  CHECK(p.discretization_error >= 0);
}

TEST_CASE("weighted projector identity") {
  GridFunction grid(30, 0.01);
  {
    Spectrum s = custom({{0, 1}});
    GeneratingFunction g(s);
    BlaschkeProduct b(s, Halfplane::upper);
    ProjectorCheck r = weighted_projector_check(PWFunction({{{0, 1}, 1.0}}), g, b, 2, grid);
    CHECK(r.mismatch <= 5 * r.error_bar);
    ProjectorCheck e = weighted_projector_check(PWFunction({{{0, 1}, 1.0}}), g, b, 0.5, grid);
    CHECK(e.rhs_norm == 0.0);
    CHECK(e.mismatch <= 5 * e.error_bar);
  }
  Spectrum s = lattice(50);
  GeneratingFunction g(s);
  BlaschkeProduct b(s, Halfplane::upper);
  ProjectorCheck r = weighted_projector_check(two_atoms(), g, b, 10.5, grid);
  CHECK(r.mismatch <= 5 * r.error_bar);
  CHECK(r.rhs_norm > 0.1);
  Spectrum mixed = custom({{0, 1}, {1, -1}});
  CHECK_THROWS_AS(weighted_projector_check(two_atoms(), GeneratingFunction(mixed), b, 2, grid), std::invalid_argument);
}

TEST_CASE("operator norm probe") {
  Spectrum s = lattice(60);
  GeneratingFunction g(s);
  GridFunction grid(40, 0.02);
  LagrangeEngine eng(g, grid);
  ProbeOptions opt;
  opt.atoms = 10;
  WeightScheme zero = WeightScheme::naive(s, {0.1});
  CHECK(operator_norm_probe(eng, zero, 0, 2, 1, opt) == 0.0);
  WeightScheme full = WeightScheme::naive(s, {59.5});
  const double v = operator_norm_probe(eng, full, 0, 2, 1, opt);
  CHECK(v >= 0.99);
  CHECK(v == operator_norm_probe(eng, full, 0, 2, 1, opt));

  FamilyParams p;
  p.delta = 1;
  p.eps = 0.5;
  Spectrum c = make_family(Family::clustered_pairs, p, 40);
  GeneratingFunction gc(c);
  LagrangeEngine ec(gc, grid);
  std::vector<double> r = {20.5};
  CHECK(operator_norm_probe(ec, WeightScheme::naive(c, r), 0, 2, 1, opt) >
        operator_norm_probe(ec, WeightScheme::projection(c, r), 0, 2, 1, opt));
}

TEST_CASE("pw csv round trip") {
  PWFunction f = two_atoms();
  std::stringstream ss;
  write_pw_csv(ss, f);
  PWFunction r = read_pw_csv(ss);
  REQUIRE(r.atoms.size() == 2);
  CHECK(r.atoms[1].center == f.atoms[1].center);
  CHECK(r.atoms[1].coeff == f.atoms[1].coeff);
}
