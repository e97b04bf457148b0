#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pwsum/genfun.hpp"
#include "pwsum/spectrum.hpp"

namespace pwsum {

// Max over intervals of lengths 2^j h (j >= 2) at every grid offset of the
// product of the trapezoid averages of w and 1/w; w sampled with spacing h.
double a2_from_samples(std::span<const double> w, double h);

// a2 lower bound for |G(x + i a)|^2 on [-X, X]
double a2_estimate(const GeneratingFunction& g, double X, double a, double h = 0.01);

// sup over lam of sum_{mu != lam} (1 + |Im lam|)(1 + |Im mu|)/|lam - mu|^2,
// with the family remainder added for lattice families
double carleson_sup(const Spectrum& s);

struct IntGReport {
  double X = 0.0;
  double pos = 0.0, neg = 0.0;      // on [-X, X]
  double pos_2x = 0.0, neg_2x = 0.0;  // on [-2X, 2X]
  double pos_trend() const { return pos_2x / pos; }
  double neg_trend() const { return neg_2x / neg; }
  bool pos_growing() const { return pos_trend() > 1.25; }
  bool neg_growing() const { return neg_trend() > 1.25; }
};

// |G|^2 sampled on [-2X, 2X] with spacing h
IntGReport intG_from_samples(std::span<const double> modsq_2x, double X, double h);
IntGReport intG_check(const GeneratingFunction& g, double X, double h = 0.01);

struct ReportRow {
  std::string condition;
  double window_X;
  double value;
  double trend_ratio;
};

void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows);

}  // namespace pwsum
