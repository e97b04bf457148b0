#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pwsum/spectrum.hpp"

namespace pwsum {

// Remainder of products and sums over the family points beyond a stored window
// (indices k > count). Points up to an evaluation-dependent index K are handled
// one by one; past K the family is replaced by its lattice model
// {±(k + offset) + i delta} with the family multiplicity, summed in closed form
// through Hurwitz zeta values.
class LatticeTail {
 public:
  explicit LatticeTail(FamilyInfo family);

  const FamilyInfo& family() const { return fam_; }

  // sum of log(1 - z/mu) over the tail
  cplx log_G(cplx z) const;
  // sum of log of (conj mu/mu)(z - mu)/(z - conj mu) over the tail; needs delta > 0
  cplx log_B(cplx z) const;
  // same sum restricted to tail points with |mu| < cutoff (finite)
  cplx log_B_below(cplx z, double cutoff) const;
  // 2 sum Im mu / |t - mu|^2 over the tail
  double arg_derivative(double t) const;
  // sum (1 + |Im lam|)(1 + |Im mu|) / |lam - mu|^2 over the tail
  double carleson_row(cplx lam) const;

 private:
  int series_start(cplx z) const;
  int local_start(double x) const;
  const std::vector<double>& zeta_table(double a) const;

  FamilyInfo fam_;
  struct Cache {
    std::mutex mu;
    std::map<double, std::vector<double>> zeta;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Normalized Blaschke factor (conj mu/mu)(z - mu)/(z - conj mu).
cplx blaschke_factor(cplx mu, cplx z);

}  // namespace pwsum
