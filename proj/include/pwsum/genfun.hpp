#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pwsum/grid.hpp"
#include "pwsum/lattice_tail.hpp"
#include "pwsum/spectrum.hpp"

namespace pwsum {

enum class TailModel { none, lattice_analytic };

// lattice_analytic for lattice families, none for custom lists
TailModel default_tail(const Spectrum& s);

class BlaschkeProduct;

// G(z) = G(0) prod_{|lam| < R} (1 - z/lam), factors in spectrum order, times
// the analytic remainder when the tail model is active.
class GeneratingFunction {
 public:
  explicit GeneratingFunction(Spectrum s);
  GeneratingFunction(Spectrum s, TailModel tail, double radius = INFINITY, cplx normalization = 1.0);

  cplx operator()(cplx z) const;
  double log_abs(cplx z) const;
  cplx derivative_at(std::size_t k) const;

  // sum over stored |lam| >= R of |z/lam| + |z/lam|^2
  double tail_error_estimate(cplx z) const;
  // set when part of the stored window is cut off by R
  bool tail_warning() const { return warning_; }
  bool tail_active() const { return tail_.has_value(); }

  const Spectrum& spectrum() const { return s_; }
  cplx normalization() const { return norm_; }
  double radius() const { return radius_; }
  TailModel tail_model() const { return model_; }

 private:
  ScaledProduct product(cplx z) const;

  Spectrum s_;
  TailModel model_;
  double radius_;
  cplx norm_;
  std::size_t used_ = 0;  // stored points with |lam| < R
  bool warning_ = false;
  std::optional<LatticeTail> tail_;
};

// omega(z) = exp((1/(i pi)) int [1/(t - z) - t/(1 + t^2)] u(t) dt), u = log|G|,
// from samples of u on [-X, X]. Past the grid u is continued by a fitted
// a + b log|t| on each side.
class OuterFunction {
 public:
  OuterFunction(double X, double h, std::vector<double> log_modulus);
  static OuterFunction from(const GeneratingFunction& g, double X = 200.0, double h = 0.01);

  // Im z >= h, |Re z| <= X/2
  cplx operator()(cplx z) const;
  // omega^#(z) = conj(omega(conj z)), Im z <= -h
  cplx reflected(cplx z) const;
  // boundary values at every grid node (principal value limit)
  std::vector<cplx> boundary() const;

  double X() const { return X_; }
  double h() const { return h_; }
  double x(std::size_t j) const { return -X_ + static_cast<double>(j) * h_; }
  std::span<const double> log_modulus() const { return u_; }

 private:
  cplx tail_integral(cplx z) const;
  double model(double t) const;

  double X_, h_;
  std::vector<double> u_;
  double ar_ = 0, br_ = 0, al_ = 0, bl_ = 0;
};

struct FactorizationReport {
  double max_rel_error_upper = 0.0;
  double max_rel_error_lower = 0.0;
  double max_rel_error() const { return std::max(max_rel_error_upper, max_rel_error_lower); }
};

// Compares |G| with |omega B+ e^{-i tau z}| above and |omega^# B- e^{i tau z}| below.
// tau is the exponential type: pi for the lattice-type families, 0 for
// finite (polynomial) generating functions.
FactorizationReport check_factorization(const GeneratingFunction& g, const OuterFunction& o,
                                        const BlaschkeProduct& b_upper, const BlaschkeProduct& b_lower,
                                        std::span<const cplx> points, double tau);

// pi for lattice families, 0 otherwise
double exponential_type(const Spectrum& s);

}  // namespace pwsum
