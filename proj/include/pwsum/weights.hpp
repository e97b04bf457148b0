#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "pwsum/blaschke.hpp"
#include "pwsum/contours.hpp"
#include "pwsum/spectrum.hpp"

namespace pwsum {

// w(z) = exp(-i alpha l Phi(z/l)), the outer function with boundary modulus 1
// on (-l/2, l/2) and exp(-pi alpha l) outside, w(0) = 1.
// Phi(s) = -i pi + Log(s - 1/2) - Log(s + 1/2); real z is taken as z + i0.
cplx outer_weight(double l, double alpha, cplx z);
cplx outer_weight_phi(cplx s);

enum class SchemeKind { naive, projection, universal };

std::string_view scheme_name(SchemeKind k);
SchemeKind parse_scheme(std::string_view name);

class WeightScheme {
 public:
  static WeightScheme naive(Spectrum s, std::vector<double> radii);
  static WeightScheme projection(Spectrum s, std::vector<double> radii);
  static WeightScheme projection(Spectrum s, std::vector<double> radii, TailModel tail);
  // schedules for the upper part and for the conjugated lower part; an empty
  // half takes an empty schedule
  static WeightScheme universal(Spectrum s, ContourSchedule upper, ContourSchedule lower);
  static WeightScheme universal(Spectrum s, std::span<const double> candidates, int count,
                                const ScheduleOptions& opt = {});

  SchemeKind kind() const { return kind_; }
  const Spectrum& spectrum() const { return s_; }
  std::size_t steps() const { return steps_; }

  cplx weight(std::size_t k, std::size_t step) const;
  // nonzero weights of one step, ordered by k
  std::vector<std::pair<std::size_t, cplx>> row(std::size_t step) const;

  // cutoff radius (naive, projection) or contour half-width (universal)
  double step_size(std::size_t step) const;
  const ContourSchedule& upper_schedule() const { return sched_up_; }
  const ContourSchedule& lower_schedule() const { return sched_lo_; }
  const BlaschkeProduct& upper_blaschke() const { return b_up_; }
  const BlaschkeProduct& lower_blaschke() const { return b_lo_; }

 private:
  WeightScheme() = default;
  void init_halves(TailModel tail);

  SchemeKind kind_ = SchemeKind::naive;
  Spectrum s_;
  std::size_t steps_ = 0;
  std::vector<double> radii_;
  std::vector<std::size_t> local_;  // index of each point inside its half
  BlaschkeProduct b_up_, b_lo_;
  ContourSchedule sched_up_, sched_lo_;
};

void write_weights_csv(std::ostream& os, const WeightScheme& ws);

}  // namespace pwsum
