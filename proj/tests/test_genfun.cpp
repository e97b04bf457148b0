#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pwsum/blaschke.hpp"
#include "pwsum/genfun.hpp"

using namespace pwsum;

namespace {

Spectrum custom(std::vector<cplx> pts) {
  FamilyParams p;
  p.points = std::move(pts);
  return make_family(Family::custom_list, p, 1);
}

Spectrum lattice(int count) {
  FamilyParams p;
  p.delta = 0.3;
  return make_family(Family::shifted_integers, p, count);
}

// sine-type closed form for the zero set Z + i delta, G(0) = 1
cplx sine_G(cplx z, double d) { return std::sin(pi * (z - cplx(0, d))) / std::sin(cplx(0, -pi * d)); }

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("single factor") {
  GeneratingFunction g(custom({{0, 1}}));
  CHECK(std::abs(g({0, 2}) - cplx(-1, 0)) < 1e-15);
  CHECK(g(0.0) == cplx(1.0));
  GeneratingFunction g2(custom({{0, 1}}), TailModel::none, INFINITY, cplx(2, -1));
  CHECK(g2(0.0) == cplx(2, -1));
}

TEST_CASE("lattice against the sine closed form") {
  GeneratingFunction plain(lattice(5000), TailModel::none);
  GeneratingFunction tailed(lattice(5000));
  CHECK(rel(plain(0.5), sine_G(0.5, 0.3)) < 1e-3);
  CHECK(rel(tailed(0.5), sine_G(0.5, 0.3)) < 1e-10);
  // tail model on a short window
  GeneratingFunction shortw(lattice(40));
  for (cplx z : {cplx(0.5, 0), cplx(3.2, -1.5), cplx(-7.7, 2.0), cplx(25.1, 0.4)})
    CHECK(rel(shortw(z), sine_G(z, 0.3)) < 1e-9);
  for (double x = -30; x <= 30; x += 0.37)
    CHECK(std::abs(shortw.log_abs(x) - std::log(std::abs(sine_G(x, 0.3)))) < 1e-9);
}

TEST_CASE("derivative at the zeros") {
  GeneratingFunction g(custom({{0, 1}}));
  CHECK(std::abs(g.derivative_at(0) - cplx(0, 1)) < 1e-15);
  GeneratingFunction g2(custom({{0, 1}, {0, -1}}));
  const Spectrum& s2 = g2.spectrum();
  for (std::size_t k = 0; k < 2; ++k) CHECK(std::abs(g2.derivative_at(k) - 2.0 * s2[k]) < 1e-14);

  GeneratingFunction gl(lattice(5000), TailModel::none);
  const cplx want = pi / std::sin(cplx(0, -0.3 * pi));
  CHECK(rel(gl.derivative_at(0), want) < 1e-3);
}

TEST_CASE("property: derivative matches a central difference") {
  for (Spectrum s : {lattice(30), custom({{0.5, 1}, {-1.2, 0.7}, {2, -0.4}, {3.3, 1.1}})}) {
    GeneratingFunction g(s);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (std::abs(s[k]) >= s.radius() / 2) continue;
      const double h = 1e-5 * (1 + std::abs(s[k]));
      const cplx fd = (g(s[k] + h) - g(s[k] - h)) / (2 * h);
      CHECK(rel(g.derivative_at(k), fd) < 1e-4);
    }
  }
}

TEST_CASE("evaluation is deterministic") {
  GeneratingFunction g(lattice(100));
  const cplx z(1.234, -0.56);
  CHECK(g(z) == g(z));
  CHECK(g.log_abs(z) == g.log_abs(z));
}

TEST_CASE("tail warning and estimate") {
  Spectrum s = custom({{0, 1}, {0, 2}, {0, 4}});
  GeneratingFunction cut(s, TailModel::none, 3.0);
  CHECK(cut.tail_warning());
  CHECK(std::abs(cut.tail_error_estimate({0.5, 0}) - (0.125 + 0.125 * 0.125)) < 1e-15);
  GeneratingFunction full(s);
  CHECK_FALSE(full.tail_warning());
  CHECK(full.tail_error_estimate({0.5, 0}) == 0.0);
}

TEST_CASE("outer function of a constant modulus") {
  std::vector<double> u(2 * 50 * 10 + 1, 0.0);
  OuterFunction o(50, 0.1, u);
  for (cplx z : {cplx(0, 1), cplx(3, 0.2), cplx(-20, 7)}) CHECK(std::abs(std::abs(o(z)) - 1) < 1e-12);
  for (double& v : u) v = std::log(2.0);
  OuterFunction o2(50, 0.1, u);
  for (cplx z : {cplx(0, 1), cplx(3, 0.2), cplx(-20, 7)}) CHECK(std::abs(std::abs(o2(z)) - 2) < 1e-10);
  CHECK_THROWS(o2(cplx(0, 0.01)));
  CHECK_THROWS(o2(cplx(30, 1)));
}

TEST_CASE("outer modulus ignores unimodular constants") {
  Spectrum s = lattice(60);
  GeneratingFunction a(s, TailModel::lattice_analytic), b(s, TailModel::lattice_analytic, INFINITY, std::polar(1.0, 0.7));
  OuterFunction oa = OuterFunction::from(a, 40, 0.02), ob = OuterFunction::from(b, 40, 0.02);
  for (cplx z : {cplx(1, 1), cplx(-4, 0.5)}) CHECK(std::abs(std::abs(oa(z)) - std::abs(ob(z))) < 1e-12 * std::abs(oa(z)));
}

TEST_CASE("factorization: single point") {
  Spectrum s = custom({{0, 1}});
  GeneratingFunction g(s);
  auto [up, lo] = split_halfplanes(s);
  BlaschkeProduct bu(up, Halfplane::upper), bl(lo, Halfplane::lower);
  OuterFunction o = OuterFunction::from(g);
  // |omega| = |z + i| here
  CHECK(std::abs(std::abs(o({0, 2})) - 3.0) / 3.0 < 1e-3);
  std::vector<cplx> pts = {{0, 2}, {1.5, 0.5}, {-3, -1}};
  FactorizationReport r = check_factorization(g, o, bu, bl, pts, exponential_type(s));
  CHECK(r.max_rel_error() < 1e-3);
}

TEST_CASE("factorization: lattice") {
  Spectrum s = lattice(400);
  GeneratingFunction g(s);
  auto [up, lo] = split_halfplanes(s);
  BlaschkeProduct bu(up, Halfplane::upper), bl(lo, Halfplane::lower);
  OuterFunction o = OuterFunction::from(g);
  std::vector<cplx> pts = {{1, 1}, {0.5, 3}, {-2.5, 0.7}, {1, -1}, {-4, -2}};
  FactorizationReport r = check_factorization(g, o, bu, bl, pts, exponential_type(s));
  CHECK(r.max_rel_error_upper < 1e-3);
  CHECK(r.max_rel_error_lower < 1e-3);
}

TEST_CASE("factorization: symmetric pair") {
  Spectrum s = custom({{0, 1}, {0, -1}});
  GeneratingFunction g(s);
  auto [up, lo] = split_halfplanes(s);
  BlaschkeProduct bu(up, Halfplane::upper), bl(lo, Halfplane::lower);
  OuterFunction o = OuterFunction::from(g);
  std::vector<cplx> a = {{0, 2}}, b = {{0, -2}};
  FactorizationReport ra = check_factorization(g, o, bu, bl, a, 0.0);
  FactorizationReport rb = check_factorization(g, o, bu, bl, b, 0.0);
  CHECK(ra.max_rel_error_upper < 1e-3);
  CHECK(std::abs(ra.max_rel_error_upper - rb.max_rel_error_lower) < 1e-9);
}
