#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "pwsum/blaschke.hpp"
#include "pwsum/spectrum.hpp"

namespace pwsum {

// Triangle with vertices -l, l and i c l.
struct TriangleContour {
  double l = 1.0;
  double c = 1.0;

  cplx apex() const { return {0.0, c * l}; }
  // m midpoint samples on each slanted side: right side first, then left
  std::vector<cplx> side_samples(int m) const;
  // strict containment after shrinking toward the centroid by a relative 1e-9
  bool contains(cplx z) const;
};

struct ScheduleOptions {
  double ratio = 2.0;        // l_{n+1} >= ratio l_n
  double tie_floor = 0.1;    // arg-derivative values below this count as ties
  int c_grid = 46;           // uniform grid on [1, 10]
  int side_samples = 512;    // per side, used for selection
  int certify_samples = 2048;  // per side, used for the reported margin
  double safety = 1.2;
};

struct CSelection {
  double c = 1.0;
  double eps_hat = 0.0;
  double sup_abs_zeta = 0.0;
};

struct ContourStep {
  TriangleContour contour;
  double alpha = 0.0;
  double eps_hat = 0.0;
  double margin = 0.0;  // min over certificate samples of alpha l/5 + log|B|
};

struct ContourSchedule {
  std::vector<ContourStep> steps;
};

// arg-derivative objective max((arg B)'(l), (arg B)'(-l))
double contour_objective(const BlaschkeProduct& b, double l);

std::vector<double> select_l(const BlaschkeProduct& b, std::span<const double> candidates, int count,
                             const ScheduleOptions& opt = {});
CSelection select_c(const BlaschkeProduct& b, double l, int grid_size, int samples_per_side = 512);
double select_alpha(double l, double eps_hat, double sup_abs_zeta, double safety = 1.2);
// min over side samples of alpha l/5 + log|B(zeta)|
double domination_margin(const BlaschkeProduct& b, const TriangleContour& t, double alpha, int samples);
TruncationIndex lambda_inside(const Spectrum& s, const TriangleContour& t);

ContourSchedule build_schedule(const BlaschkeProduct& b, std::span<const double> candidates, int count,
                               const ScheduleOptions& opt = {});

// k/20 for l_min <= k/20 <= l_max
std::vector<double> default_candidates(double l_min, double l_max);

void write_schedule_csv(std::ostream& os, const ContourSchedule& s);

}  // namespace pwsum
