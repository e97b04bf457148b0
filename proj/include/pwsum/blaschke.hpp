#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "pwsum/genfun.hpp"
#include "pwsum/lattice_tail.hpp"
#include "pwsum/spectrum.hpp"

namespace pwsum {

enum class Halfplane { upper, lower };

// Blaschke product of one halfplane. A lower evaluator stores the conjugated
// points and acts by conjugating inputs and outputs: B-(z) = conj(B(conj z)).
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  BlaschkeProduct(const Spectrum& half, Halfplane orientation);
  BlaschkeProduct(const Spectrum& half, Halfplane orientation, TailModel tail);

  // B(z), or B_n(z) with a finite cutoff (points |lam| < cutoff)
  cplx operator()(cplx z, double cutoff = INFINITY) const;
  double log_abs(cplx z, double cutoff = INFINITY) const;
  // beta_n(lam_k) = prod_{|mu| >= n} factor_mu(lam_k); 0 when |lam_k| >= n
  cplx beta(std::size_t k, double n) const;
  // the same tail product at an arbitrary point
  cplx tail(cplx z, double n) const;
  // B_n'(lam_k) for |lam_k| < n
  cplx derivative_at_zero(std::size_t k, double n) const;
  // 2 sum Im mu / |t - mu|^2 over the oriented points
  double arg_derivative(double t) const;

  Halfplane orientation() const { return orient_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  // zeros in the user's halfplane
  cplx zero(std::size_t k) const { return orient_ == Halfplane::upper ? pts_[k] : std::conj(pts_[k]); }
  // zeros mapped to the upper halfplane
  const std::vector<cplx>& oriented_zeros() const { return pts_; }
  bool tail_active() const { return tail_.has_value(); }
  // radius inside which stored zeros describe the product (infinite for finite lists)
  double data_radius() const;

 private:
  cplx up_product(cplx z, double cutoff) const;  // z in oriented coordinates
  double up_log_abs(cplx z, double cutoff) const;
  cplx up_tail(cplx z, double n) const;
  cplx to_up(cplx z) const { return orient_ == Halfplane::upper ? z : std::conj(z); }
  cplx from_up(cplx w) const { return orient_ == Halfplane::upper ? w : std::conj(w); }

  std::vector<cplx> pts_;  // oriented, Im > 0, in spectrum order
  Halfplane orient_ = Halfplane::upper;
  std::optional<LatticeTail> tail_;
  double window_radius_ = INFINITY;
};

struct Disk {
  cplx center;
  double radius;
};

// piecewise-linear profile eps(t) from (t, eps) samples, constant past the ends
struct EpsProfile {
  std::vector<std::pair<double, double>> samples;
  double operator()(double t) const;
};

struct DiskFamily {
  std::vector<Disk> disks;
  double view_sum = 0.0;
  double rho = 0.0;  // radius scale: r = rho |lam| / (1 + |lam|)^2
  // max of -log|B(z)|/|z| outside the disks, per profile bin
  std::vector<std::pair<double, double>> achieved;
};

class HaymanInfeasible : public NumericalError {
 public:
  HaymanInfeasible(const std::string& what, double min_budget)
      : NumericalError(what), min_budget(min_budget) {}
  double min_budget;
};

struct HaymanOptions {
  double view_budget = 1e-3;
  int radial = 100;
  int angular = 100;
};

DiskFamily hayman_scan(const BlaschkeProduct& b, double region_radius, const EpsProfile& profile,
                       const HaymanOptions& opt = {});

void write_disks_csv(std::ostream& os, const DiskFamily& f);

}  // namespace pwsum
