#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "pwsum/common.hpp"

namespace pwsum {

// Samples on x_j = -X + j h, j = 0..2X/h.
struct GridFunction {
  double X = 0.0;
  double h = 0.0;
  std::vector<cplx> v;

  GridFunction() = default;
  GridFunction(double X, double h);  // zero samples
  std::size_t size() const { return v.size(); }
  double x(std::size_t j) const { return -X + static_cast<double>(j) * h; }
  bool same_grid(const GridFunction& o) const;
};

// number of intervals 2X/h, validated to be integral
std::size_t grid_intervals(double X, double h);

// trapezoid weight of node j out of n
inline double trapezoid_weight(std::size_t j, std::size_t n, double h) {
  return (j == 0 || j + 1 == n) ? 0.5 * h : h;
}

double l2_norm(const GridFunction& a);
double l2_error(const GridFunction& a, const GridFunction& b);

void write_grid_csv(std::ostream& os, const GridFunction& g);

// PV integral of f(t)/(t - x_j) over the sampled interval, at every node x_j,
// by the alternate-point rule: only nodes of opposite parity to j enter, with
// weight 2h (h for an end node). f is sampled at x0 + i h.
std::vector<cplx> cauchy_pv(std::span<const cplx> f, double h);

enum class Side { plus, minus };

struct RieszResult {
  GridFunction value;
  double tail_error = 0.0;            // L2 bar from the far-field model
  double discretization_error = 0.0;  // L2 difference against the 2h rule
};

// P(+/-) g = g/2 +/- (1/(2 pi i)) PV int g(t)/(t - x) dt. Beyond the grid, g is
// continued by a fitted a/t + b/t^2 model on each side.
RieszResult riesz_project(const GridFunction& g, Side side);

}  // namespace pwsum
